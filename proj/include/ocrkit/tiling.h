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

// Dynamic-resolution crop planning and page stitching. Geometry only: no
// pixels are read or written here.

#ifndef OCRKIT_TILING_H_
#define OCRKIT_TILING_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ocrkit/corpus.h"

namespace ocrkit {

inline constexpr int kTilePx = 1024;
inline constexpr int kDefaultMaxTiles = 12;

struct ImageDims {
  int64_t width = 0;
  int64_t height = 0;

  friend bool operator==(const ImageDims&, const ImageDims&) = default;
};

// Throws Error unless both sides are >= 1.
void CheckDims(const ImageDims& dims);
std::string FormatDims(const ImageDims& dims);  // "WxH"
ImageDims ParseDims(std::string_view text);

struct PixelRect {
  int64_t x = 0;
  int64_t y = 0;
  int64_t w = 0;
  int64_t h = 0;

  friend bool operator==(const PixelRect&, const PixelRect&) = default;
};

struct TilePlan {
  int grid_cols = 1;
  int grid_rows = 1;
  int tile_px = kTilePx;
  bool include_thumbnail = false;
  std::vector<PixelRect> tile_rects;  // row-major

  friend bool operator==(const TilePlan&, const TilePlan&) = default;
};

struct TilingOptions {
  int max_tiles = kDefaultMaxTiles;
  // When set, a global thumbnail accompanies every multi-tile plan.
  bool thumbnail = true;
};

// Picks the grid (cols, rows), cols * rows <= max_tiles, whose aspect ratio
// is closest to the image's; ties go to fewer tiles, then fewer columns. The
// comparison is exact (integer cross-multiplication). Cell boundaries are the
// ideal cuts i * width / cols rounded half up, so the cells partition the
// image exactly.
TilePlan PlanTiles(const ImageDims& dims, const TilingOptions& options = {});

// "2x1 (+thumbnail)" or "1x1".
std::string DescribePlan(const TilePlan& plan);

enum class StitchOrientation { kHorizontal, kVertical };

std::string_view OrientationName(StitchOrientation orientation);
StitchOrientation ParseOrientation(std::string_view name);

struct Placement {
  size_t page_index = 0;
  int64_t x = 0;
  int64_t y = 0;
  ImageDims dims;

  friend bool operator==(const Placement&, const Placement&) = default;
};

struct StitchSpec {
  StitchOrientation orientation = StitchOrientation::kHorizontal;
  ImageDims canvas;
  std::vector<Placement> placements;

  friend bool operator==(const StitchSpec&, const StitchSpec&) = default;
};

// Horizontal: pages left to right, top-aligned, canvas height = tallest page.
// Vertical: pages top to bottom, left-aligned. Needs at least two pages.
StitchSpec StitchPages(std::span<const ImageDims> pages, StitchOrientation orientation);

// Source rectangle of one placement on the stitched canvas.
PixelRect PlacementRect(const Placement& placement);

// Meta keys: tile.grid ("CxR"), tile.px, tile.thumbnail ("0"/"1"),
// tile.rects ("x,y,w,h;x,y,w,h;...").
void WriteTilePlanMeta(const TilePlan& plan, Meta& meta);
TilePlan ReadTilePlanMeta(const Meta& meta);

// Meta keys: stitch.orientation, stitch.canvas ("WxH"),
// stitch.placements ("index:x,y,WxH;...").
void WriteStitchMeta(const StitchSpec& spec, Meta& meta);
StitchSpec ReadStitchMeta(const Meta& meta);

// Builds a MultiCrop sample from page records. Each page carries its size in
// meta "width"/"height"; the ground truth is the page texts in stitch order
// separated by a blank line. The tile plan is computed for the stitched canvas.
Sample MakeMultiCropSample(std::string id, std::span<const Sample> pages,
                           StitchOrientation orientation, const TilingOptions& options = {});

}  // namespace ocrkit

#endif  // OCRKIT_TILING_H_
