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

#include "ocrkit/finegrained.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <tuple>

#include "ocrkit/error.h"
#include "ocrkit/random.h"

namespace ocrkit {
namespace {

int Quantize(double coord, int64_t dim) {
  const double scaled = coord * kNormScale / static_cast<double>(dim);
  const double rounded = std::floor(scaled + 0.5);
  return static_cast<int>(std::clamp(rounded, 0.0, static_cast<double>(kNormScale)));
}

std::string ShortestDouble(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string FormatBox(const BBox& b) {
  return ShortestDouble(b.x1) + "," + ShortestDouble(b.y1) + "," + ShortestDouble(b.x2) + "," +
         ShortestDouble(b.y2);
}

double Height(const BBox& b) { return b.y2 - b.y1; }

bool SameRow(const BBox& a, const BBox& b) {
  const double overlap = std::min(a.y2, b.y2) - std::max(a.y1, b.y1);
  return overlap >= 0.5 * std::min(Height(a), Height(b));
}

size_t FindRoot(std::vector<size_t>& parent, size_t i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

auto ItemKey(const TextItem& item) {
  return std::tie(item.box.x1, item.box.y1, item.box.x2, item.box.y2, item.text);
}

}  // namespace

void CheckBox(const BBox& box, const ImageDims& dims) {
  CheckDims(dims);
  for (double v : {box.x1, box.y1, box.x2, box.y2}) {
    if (!std::isfinite(v)) throw Error("box coordinate is not finite");
  }
  if (!(box.x1 < box.x2) || !(box.y1 < box.y2)) {
    throw Error("inverted or empty box (" + FormatBox(box) + ")");
  }
  if (box.x1 < 0 || box.y1 < 0 || box.x2 > static_cast<double>(dims.width) ||
      box.y2 > static_cast<double>(dims.height)) {
    throw Error("box (" + FormatBox(box) + ") lies outside the " + FormatDims(dims) + " image");
  }
}

NormBox NormalizeBox(const BBox& box, const ImageDims& dims) {
  CheckBox(box, dims);
  return {Quantize(box.x1, dims.width), Quantize(box.y1, dims.height),
          Quantize(box.x2, dims.width), Quantize(box.y2, dims.height)};
}

BBox DenormalizeBox(const NormBox& box, const ImageDims& dims) {
  auto scale = [](int v, int64_t dim) {
    return static_cast<double>(v) * static_cast<double>(dim) / kNormScale;
  };
  return {scale(box.x1, dims.width), scale(box.y1, dims.height), scale(box.x2, dims.width),
          scale(box.y2, dims.height)};
}

std::string FormatNormBox(const NormBox& box) {
  return "[" + std::to_string(box.x1) + "," + std::to_string(box.y1) + "," +
         std::to_string(box.x2) + "," + std::to_string(box.y2) + "]";
}

NormBox ParseNormBox(std::string_view text) {
  const size_t open = text.find('[');
  const size_t close = text.find(']', open);
  if (open == std::string_view::npos || close == std::string_view::npos) {
    throw Error("no [x1,y1,x2,y2] box in '" + std::string(text) + "'");
  }
  int values[4];
  const char* p = text.data() + open + 1;
  const char* end = text.data() + close;
  for (int i = 0; i < 4; ++i) {
    auto [next, ec] = std::from_chars(p, end, values[i]);
    if (ec != std::errc()) throw Error("malformed box '" + std::string(text) + "'");
    p = next;
    if (i < 3) {
      if (p == end || *p != ',') throw Error("malformed box '" + std::string(text) + "'");
      ++p;
    }
  }
  if (p != end) throw Error("malformed box '" + std::string(text) + "'");
  NormBox box{values[0], values[1], values[2], values[3]};
  for (int v : values) {
    if (v < 0 || v > kNormScale) throw Error("box coordinate outside [0,1000]");
  }
  if (box.x1 > box.x2 || box.y1 > box.y2) throw Error("inverted box " + FormatNormBox(box));
  return box;
}

std::string_view FrameColorName(FrameColor color) {
  switch (color) {
    case FrameColor::kRed:
      return "red";
    case FrameColor::kGreen:
      return "green";
    case FrameColor::kBlue:
      break;
  }
  return "blue";
}

FrameColor ParseFrameColor(std::string_view name) {
  if (name == "red") return FrameColor::kRed;
  if (name == "green") return FrameColor::kGreen;
  if (name == "blue") return FrameColor::kBlue;
  throw Error("unknown frame color '" + std::string(name) + "'");
}

Rgb FrameRgb(FrameColor color) {
  switch (color) {
    case FrameColor::kRed:
      return {255, 0, 0};
    case FrameColor::kGreen:
      return {0, 255, 0};
    case FrameColor::kBlue:
      break;
  }
  return {0, 0, 255};
}

FrameInstruction ColorFrameSpec(const BBox& box, const ColorPrompt& prompt) {
  if (prompt.frame_thickness < 1) throw Error("frame thickness must be positive");
  return {box, FrameRgb(prompt.color), prompt.frame_thickness};
}

std::string FormatFrameInstruction(const FrameInstruction& frame) {
  return "rect " + FormatBox(frame.box) + " rgb " + std::to_string(frame.rgb.r) + "," +
         std::to_string(frame.rgb.g) + "," + std::to_string(frame.rgb.b) + " thickness " +
         std::to_string(frame.thickness);
}

std::string ReadingOrderSerialize(std::span<const TextItem> items) {
  std::vector<size_t> parent(items.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (size_t i = 0; i < items.size(); ++i) {
    for (size_t j = i + 1; j < items.size(); ++j) {
      if (SameRow(items[i].box, items[j].box)) parent[FindRoot(parent, i)] = FindRoot(parent, j);
    }
  }

  struct Row {
    std::vector<const TextItem*> members;
    double top = 0;
    double left = 0;
    std::string text;
  };
  std::vector<Row> rows;
  std::vector<long> row_of(items.size(), -1);
  for (size_t i = 0; i < items.size(); ++i) {
    const size_t root = FindRoot(parent, i);
    if (row_of[root] < 0) {
      row_of[root] = static_cast<long>(rows.size());
      rows.emplace_back();
    }
    rows[static_cast<size_t>(row_of[root])].members.push_back(&items[i]);
  }
  for (Row& row : rows) {
    std::sort(row.members.begin(), row.members.end(),
              [](const TextItem* a, const TextItem* b) { return ItemKey(*a) < ItemKey(*b); });
    row.top = row.members.front()->box.y1;
    row.left = row.members.front()->box.x1;
    for (const TextItem* item : row.members) {
      row.top = std::min(row.top, item->box.y1);
      if (!row.text.empty()) row.text += ' ';
      row.text += item->text;
    }
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.top, a.left, a.text) < std::tie(b.top, b.left, b.text);
  });

  std::string out;
  for (const Row& row : rows) {
    if (!out.empty()) out += '\n';
    out += row.text;
  }
  return out;
}

std::vector<CropInstruction> CropRegions(const ImageDims& dims, std::span<const BBox> boxes) {
  std::vector<CropInstruction> crops;
  crops.reserve(boxes.size());
  for (size_t i = 0; i < boxes.size(); ++i) {
    CheckBox(boxes[i], dims);
    crops.push_back({i, static_cast<int64_t>(std::floor(boxes[i].x1)),
                     static_cast<int64_t>(std::floor(boxes[i].y1)),
                     static_cast<int64_t>(std::ceil(boxes[i].x2)),
                     static_cast<int64_t>(std::ceil(boxes[i].y2))});
  }
  return crops;
}

std::string BoxGuidedPrompt(const NormBox& box) {
  return "OCR the text inside the box " + FormatNormBox(box) + ":";
}

std::string ColorGuidedPrompt(FrameColor color) {
  return "OCR the text inside the " + std::string(FrameColorName(color)) + " frame:";
}

FineGrainedMode ParseFineGrainedMode(std::string_view name) {
  if (name == "box") return FineGrainedMode::kBox;
  if (name == "color") return FineGrainedMode::kColor;
  if (name == "both") return FineGrainedMode::kBoth;
  throw Error("unknown fine-grained mode '" + std::string(name) + "'");
}

std::vector<Sample> MakeFineGrainedSamples(const RegionPage& page, FineGrainedMode mode,
                                           uint64_t seed, int frame_thickness) {
  std::vector<BBox> boxes;
  for (const TextItem& region : page.regions) boxes.push_back(region.box);
  const std::vector<CropInstruction> crops = CropRegions(page.dims, boxes);

  Rng rng(seed);
  std::vector<Sample> samples;
  for (size_t i = 0; i < page.regions.size(); ++i) {
    const TextItem& region = page.regions[i];
    if (region.text.empty()) {
      throw Error("region " + std::to_string(i) + " of page '" + page.id + "' has no text");
    }
    Sample base;
    base.image_ref = page.image_ref;
    base.ground_truth = region.text;
    base.lang = page.lang;
    base.meta["page_id"] = page.id;
    base.meta["image_size"] = FormatDims(page.dims);
    base.meta["bbox"] = FormatBox(region.box);
    base.meta["crop"] = std::to_string(crops[i].x1) + "," + std::to_string(crops[i].y1) + "," +
                        std::to_string(crops[i].x2) + "," + std::to_string(crops[i].y2);
    base.meta["prompt_template"] = std::string(kPromptTemplateVersion);

    if (mode == FineGrainedMode::kBox || mode == FineGrainedMode::kBoth) {
      Sample s = base;
      const NormBox norm = NormalizeBox(region.box, page.dims);
      s.id = page.id + "/box/" + std::to_string(i);
      s.task_kind = TaskKind::kFineGrainedBox;
      s.prompt = BoxGuidedPrompt(norm);
      s.meta["norm_box"] = FormatNormBox(norm);
      samples.push_back(std::move(s));
    }
    if (mode == FineGrainedMode::kColor || mode == FineGrainedMode::kBoth) {
      Sample s = base;
      const auto color = static_cast<FrameColor>(rng.UniformInt(0, 2));
      s.id = page.id + "/color/" + std::to_string(i);
      s.task_kind = TaskKind::kFineGrainedColor;
      s.prompt = ColorGuidedPrompt(color);
      s.meta["frame_color"] = std::string(FrameColorName(color));
      s.meta["frame"] = FormatFrameInstruction(ColorFrameSpec(region.box, {color, frame_thickness}));
      samples.push_back(std::move(s));
    }
  }
  return samples;
}

}  // namespace ocrkit
