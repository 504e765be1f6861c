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

#include "ocrkit/tiling.h"

#include <algorithm>
#include <charconv>

#include "ocrkit/error.h"

namespace ocrkit {
namespace {

using Wide = __int128;

// round_half_up(index * length / parts)
int64_t Cut(int64_t index, int64_t parts, int64_t length) {
  return static_cast<int64_t>((Wide{2} * index * length + parts) / (Wide{2} * parts));
}

int64_t ParseInt(std::string_view text, const char* what) {
  int64_t value = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw Error(std::string("bad ") + what + ": '" + std::string(text) + "'");
  return value;
}

std::vector<std::string_view> Split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  if (text.empty()) return parts;
  size_t start = 0;
  while (true) {
    const size_t end = text.find(sep, start);
    parts.push_back(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return parts;
}

const std::string& MetaValue(const Meta& meta, const std::string& key) {
  auto it = meta.find(key);
  if (it == meta.end()) throw Error("missing meta key '" + key + "'");
  return it->second;
}

}  // namespace

void CheckDims(const ImageDims& dims) {
  if (dims.width < 1 || dims.height < 1) {
    throw Error("image dimensions must be positive, got " + FormatDims(dims));
  }
}

std::string FormatDims(const ImageDims& dims) {
  return std::to_string(dims.width) + "x" + std::to_string(dims.height);
}

ImageDims ParseDims(std::string_view text) {
  const size_t x = text.find('x');
  if (x == std::string_view::npos) throw Error("expected WxH, got '" + std::string(text) + "'");
  ImageDims dims{ParseInt(text.substr(0, x), "width"), ParseInt(text.substr(x + 1), "height")};
  CheckDims(dims);
  return dims;
}

TilePlan PlanTiles(const ImageDims& dims, const TilingOptions& options) {
  CheckDims(dims);
  if (options.max_tiles < 1) throw Error("max_tiles must be at least 1");

  int best_cols = 1;
  int best_rows = 1;
  for (int cols = 1; cols <= options.max_tiles; ++cols) {
    for (int rows = 1; cols * rows <= options.max_tiles; ++rows) {
      // |w/h - c/r| = |w*r - c*h| / (h*r); h cancels when comparing two grids.
      const Wide error = dims.width * Wide{rows} - Wide{cols} * dims.height;
      const Wide best_error = dims.width * Wide{best_rows} - Wide{best_cols} * dims.height;
      const Wide lhs = (error < 0 ? -error : error) * best_rows;
      const Wide rhs = (best_error < 0 ? -best_error : best_error) * rows;
      bool better = lhs < rhs;
      if (lhs == rhs) {
        const int tiles = cols * rows;
        const int best_tiles = best_cols * best_rows;
        better = tiles < best_tiles || (tiles == best_tiles && cols < best_cols);
      }
      if (better) {
        best_cols = cols;
        best_rows = rows;
      }
    }
  }

  TilePlan plan;
  plan.grid_cols = best_cols;
  plan.grid_rows = best_rows;
  plan.include_thumbnail = options.thumbnail && best_cols * best_rows > 1;
  plan.tile_rects.reserve(static_cast<size_t>(best_cols * best_rows));
  for (int j = 0; j < best_rows; ++j) {
    const int64_t y0 = Cut(j, best_rows, dims.height);
    const int64_t y1 = Cut(j + 1, best_rows, dims.height);
    for (int i = 0; i < best_cols; ++i) {
      const int64_t x0 = Cut(i, best_cols, dims.width);
      const int64_t x1 = Cut(i + 1, best_cols, dims.width);
      plan.tile_rects.push_back({x0, y0, x1 - x0, y1 - y0});
    }
  }
  return plan;
}

std::string DescribePlan(const TilePlan& plan) {
  std::string out = std::to_string(plan.grid_cols) + "x" + std::to_string(plan.grid_rows);
  if (plan.include_thumbnail) out += " (+thumbnail)";
  return out;
}

std::string_view OrientationName(StitchOrientation orientation) {
  return orientation == StitchOrientation::kHorizontal ? "horizontal" : "vertical";
}

StitchOrientation ParseOrientation(std::string_view name) {
  if (name == "horizontal" || name == "h") return StitchOrientation::kHorizontal;
  if (name == "vertical" || name == "v") return StitchOrientation::kVertical;
  throw Error("unknown orientation '" + std::string(name) + "'");
}

StitchSpec StitchPages(std::span<const ImageDims> pages, StitchOrientation orientation) {
  if (pages.size() < 2) throw Error("stitching needs at least 2 pages");
  StitchSpec spec;
  spec.orientation = orientation;
  int64_t offset = 0;
  int64_t extent = 0;
  for (size_t i = 0; i < pages.size(); ++i) {
    CheckDims(pages[i]);
    Placement p;
    p.page_index = i;
    p.dims = pages[i];
    if (orientation == StitchOrientation::kHorizontal) {
      p.x = offset;
      offset += pages[i].width;
      extent = std::max(extent, pages[i].height);
    } else {
      p.y = offset;
      offset += pages[i].height;
      extent = std::max(extent, pages[i].width);
    }
    spec.placements.push_back(p);
  }
  spec.canvas = orientation == StitchOrientation::kHorizontal ? ImageDims{offset, extent}
                                                              : ImageDims{extent, offset};
  return spec;
}

PixelRect PlacementRect(const Placement& placement) {
  return {placement.x, placement.y, placement.dims.width, placement.dims.height};
}

void WriteTilePlanMeta(const TilePlan& plan, Meta& meta) {
  meta["tile.grid"] = std::to_string(plan.grid_cols) + "x" + std::to_string(plan.grid_rows);
  meta["tile.px"] = std::to_string(plan.tile_px);
  meta["tile.thumbnail"] = plan.include_thumbnail ? "1" : "0";
  std::string rects;
  for (const PixelRect& r : plan.tile_rects) {
    if (!rects.empty()) rects += ';';
    rects += std::to_string(r.x) + "," + std::to_string(r.y) + "," + std::to_string(r.w) + "," +
             std::to_string(r.h);
  }
  meta["tile.rects"] = rects;
}

TilePlan ReadTilePlanMeta(const Meta& meta) {
  TilePlan plan;
  const ImageDims grid = ParseDims(MetaValue(meta, "tile.grid"));
  plan.grid_cols = static_cast<int>(grid.width);
  plan.grid_rows = static_cast<int>(grid.height);
  plan.tile_px = static_cast<int>(ParseInt(MetaValue(meta, "tile.px"), "tile.px"));
  const std::string& thumb = MetaValue(meta, "tile.thumbnail");
  if (thumb != "0" && thumb != "1") throw Error("bad tile.thumbnail '" + thumb + "'");
  plan.include_thumbnail = thumb == "1";
  for (std::string_view item : Split(MetaValue(meta, "tile.rects"), ';')) {
    const auto fields = Split(item, ',');
    if (fields.size() != 4) throw Error("bad tile rect '" + std::string(item) + "'");
    plan.tile_rects.push_back({ParseInt(fields[0], "x"), ParseInt(fields[1], "y"),
                               ParseInt(fields[2], "w"), ParseInt(fields[3], "h")});
  }
  if (plan.tile_rects.size() != static_cast<size_t>(plan.grid_cols * plan.grid_rows)) {
    throw Error("tile.rects does not match tile.grid");
  }
  return plan;
}

void WriteStitchMeta(const StitchSpec& spec, Meta& meta) {
  meta["stitch.orientation"] = std::string(OrientationName(spec.orientation));
  meta["stitch.canvas"] = FormatDims(spec.canvas);
  std::string placements;
  for (const Placement& p : spec.placements) {
    if (!placements.empty()) placements += ';';
    placements += std::to_string(p.page_index) + ":" + std::to_string(p.x) + "," +
                  std::to_string(p.y) + "," + FormatDims(p.dims);
  }
  meta["stitch.placements"] = placements;
}

StitchSpec ReadStitchMeta(const Meta& meta) {
  StitchSpec spec;
  spec.orientation = ParseOrientation(MetaValue(meta, "stitch.orientation"));
  spec.canvas = ParseDims(MetaValue(meta, "stitch.canvas"));
  for (std::string_view item : Split(MetaValue(meta, "stitch.placements"), ';')) {
    const size_t colon = item.find(':');
    if (colon == std::string_view::npos) throw Error("bad placement '" + std::string(item) + "'");
    const auto fields = Split(item.substr(colon + 1), ',');
    if (fields.size() != 3) throw Error("bad placement '" + std::string(item) + "'");
    Placement p;
    p.page_index = static_cast<size_t>(ParseInt(item.substr(0, colon), "page index"));
    p.x = ParseInt(fields[0], "x");
    p.y = ParseInt(fields[1], "y");
    p.dims = ParseDims(fields[2]);
    spec.placements.push_back(p);
  }
  return spec;
}

Sample MakeMultiCropSample(std::string id, std::span<const Sample> pages,
                           StitchOrientation orientation, const TilingOptions& options) {
  std::vector<ImageDims> dims;
  std::string text;
  std::string sources;
  for (const Sample& page : pages) {
    dims.push_back({ParseInt(MetaValue(page.meta, "width"), "width"),
                    ParseInt(MetaValue(page.meta, "height"), "height")});
    if (!text.empty()) text += "\n\n";
    text += page.ground_truth;
    if (!sources.empty()) sources += ';';
    sources += page.image_ref.value_or(page.id);
  }
  const StitchSpec spec = StitchPages(dims, orientation);
  Sample sample;
  sample.id = std::move(id);
  sample.task_kind = TaskKind::kMultiCrop;
  sample.prompt = "OCR:";
  sample.ground_truth = std::move(text);
  sample.lang = pages.front().lang;
  WriteStitchMeta(spec, sample.meta);
  WriteTilePlanMeta(PlanTiles(spec.canvas, options), sample.meta);
  sample.meta["stitch.sources"] = sources;
  return sample;
}

}  // namespace ocrkit
