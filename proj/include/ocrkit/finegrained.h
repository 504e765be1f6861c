// Copyright 2026 The ocrkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Region-guided OCR tasks: box coordinates quantized to a 0..1000 grid,
// colored frame instructions, reading-order serialization and crop
// bookkeeping.

#ifndef OCRKIT_FINEGRAINED_H_
#define OCRKIT_FINEGRAINED_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ocrkit/corpus.h"
#include "ocrkit/tiling.h"

namespace ocrkit {

inline constexpr int kNormScale = 1000;

// Source-pixel box. Valid when x1 < x2, y1 < y2 and it lies inside the image.
struct BBox {
  double x1 = 0;
  double y1 = 0;
  double x2 = 0;
  double y2 = 0;

  friend bool operator==(const BBox&, const BBox&) = default;
};

// Throws Error for inverted/empty boxes or boxes that leave the image.
void CheckBox(const BBox& box, const ImageDims& dims);

struct NormBox {
  int x1 = 0;
  int y1 = 0;
  int x2 = 0;
  int y2 = 0;

  friend bool operator==(const NormBox&, const NormBox&) = default;
};

// round_half_up(coord / dim * 1000), clamped to [0, 1000].
NormBox NormalizeBox(const BBox& box, const ImageDims& dims);
BBox DenormalizeBox(const NormBox& box, const ImageDims& dims);

// "[x1,y1,x2,y2]", the form embedded in box-guided prompts.
std::string FormatNormBox(const NormBox& box);
NormBox ParseNormBox(std::string_view text);

enum class FrameColor { kRed, kGreen, kBlue };

std::string_view FrameColorName(FrameColor color);
FrameColor ParseFrameColor(std::string_view name);

struct Rgb {
  uint8_t r = 0;
  uint8_t g = 0;
  uint8_t b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

Rgb FrameRgb(FrameColor color);

struct ColorPrompt {
  FrameColor color = FrameColor::kRed;
  int frame_thickness = 2;
};

// Rectangle outline for an external rasterizer.
struct FrameInstruction {
  BBox box;
  Rgb rgb;
  int thickness = 0;

  friend bool operator==(const FrameInstruction&, const FrameInstruction&) = default;
};

FrameInstruction ColorFrameSpec(const BBox& box, const ColorPrompt& prompt);
std::string FormatFrameInstruction(const FrameInstruction& frame);

struct TextItem {
  BBox box;
  std::string text;
};

// Two boxes belong to the same row when their vertical overlap is at least
// half the smaller height; rows are the connected components of that
// relation. Rows go top to bottom, items within a row left to right, joined
// with spaces; rows are joined with newlines. Ties are broken on the item
// contents so the output does not depend on input order.
std::string ReadingOrderSerialize(std::span<const TextItem> items);

// Integer pixel rect covering a box: floor of the min edges, ceil of the max.
struct CropInstruction {
  size_t index = 0;
  int64_t x1 = 0;
  int64_t y1 = 0;
  int64_t x2 = 0;
  int64_t y2 = 0;

  friend bool operator==(const CropInstruction&, const CropInstruction&) = default;
};

std::vector<CropInstruction> CropRegions(const ImageDims& dims, std::span<const BBox> boxes);

// Prompt templates (version "fg-v1", recorded in meta "prompt_template").
inline constexpr std::string_view kPromptTemplateVersion = "fg-v1";
std::string BoxGuidedPrompt(const NormBox& box);
std::string ColorGuidedPrompt(FrameColor color);

// One page with annotated regions, the input of the fine-grained engine.
struct RegionPage {
  std::string id;
  std::string image_ref;
  ImageDims dims;
  std::vector<TextItem> regions;
  Lang lang = Lang::kOther;
};

enum class FineGrainedMode { kBox, kColor, kBoth };

FineGrainedMode ParseFineGrainedMode(std::string_view name);

// Emits, per region, a box-guided and/or color-guided sample whose ground
// truth is the region text. With kColor/kBoth the frame color is drawn from
// {red, green, blue} under seed. Ids are "<page id>/box/<i>" and
// "<page id>/color/<i>".
std::vector<Sample> MakeFineGrainedSamples(const RegionPage& page, FineGrainedMode mode,
                                           uint64_t seed, int frame_thickness = 2);

}  // namespace ocrkit

#endif  // OCRKIT_FINEGRAINED_H_
