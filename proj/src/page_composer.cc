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

#include "ocrkit/page_composer.h"

#include <algorithm>

#include "ocrkit/error.h"
#include "ocrkit/random.h"
#include "ocrkit/text_metrics.h"

namespace ocrkit {

size_t TokenCount(std::string_view text) { return Tokenize(text, Granularity::kWord).size(); }

PageSpec MakePageSpec(std::string page_id, std::string text, std::string image_ref,
                      const TokenCounter& counter) {
  PageSpec page;
  page.token_count = counter ? counter(text) : TokenCount(text);
  page.page_id = std::move(page_id);
  page.text = std::move(text);
  page.image_ref = std::move(image_ref);
  return page;
}

std::string JoinPages(std::span<const PageSpec> pages, std::string_view separator) {
  std::string out;
  for (size_t i = 0; i < pages.size(); ++i) {
    if (i > 0) {
      out += '\n';
      out += separator;
      out += '\n';
    }
    out += pages[i].text;
  }
  return out;
}

std::vector<std::string> SplitPages(std::string_view joined, std::string_view separator) {
  const std::string delimiter = "\n" + std::string(separator) + "\n";
  std::vector<std::string> pages;
  size_t start = 0;
  while (true) {
    const size_t hit = joined.find(delimiter, start);
    if (hit == std::string_view::npos) {
      pages.emplace_back(joined.substr(start));
      break;
    }
    pages.emplace_back(joined.substr(start, hit - start));
    start = hit + delimiter.size();
  }
  return pages;
}

MultiPageSample ComposeMultipage(std::span<const PageSpec> pool, size_t n_pages, uint64_t seed,
                                 const ComposeOptions& options) {
  if (n_pages < options.min_pages || n_pages > options.max_pages) {
    throw Error("page count " + std::to_string(n_pages) + " outside [" +
                std::to_string(options.min_pages) + ", " + std::to_string(options.max_pages) + "]");
  }
  const TokenCounter count = options.counter ? options.counter : TokenCounter(TokenCount);

  std::vector<size_t> eligible;
  for (size_t i = 0; i < pool.size(); ++i) {
    if (pool[i].token_count < options.page_token_limit &&
        pool[i].text.find(options.separator) == std::string::npos) {
      eligible.push_back(i);
    }
  }
  if (eligible.size() < n_pages) {
    throw Error("insufficient eligible pages: need " + std::to_string(n_pages) + ", have " +
                std::to_string(eligible.size()));
  }
  const size_t separator_tokens = count(options.separator);

  Rng rng(seed);
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    std::vector<size_t> order = eligible;
    rng.Shuffle(order);
    MultiPageSample sample;
    size_t running = 0;
    for (size_t index : order) {
      if (sample.pages.size() == n_pages) break;
      const size_t cost = pool[index].token_count + (sample.pages.empty() ? 0 : separator_tokens);
      if (running + cost > options.total_token_budget) continue;
      running += cost;
      sample.pages.push_back(pool[index]);
    }
    if (sample.pages.size() < n_pages) continue;
    sample.joined_text = JoinPages(sample.pages, options.separator);
    sample.total_tokens = count(sample.joined_text);
    if (sample.total_tokens <= options.total_token_budget) return sample;
  }
  throw Error("token budget " + std::to_string(options.total_token_budget) +
              " unsatisfiable for " + std::to_string(n_pages) + " pages after " +
              std::to_string(options.max_attempts) + " attempts");
}

Sample MultiPageToSample(const MultiPageSample& composed, std::string id,
                         const ComposeOptions& options) {
  Sample sample;
  sample.id = std::move(id);
  sample.task_kind = TaskKind::kMultiPage;
  sample.prompt = "OCR with format across multiple pages:";
  sample.ground_truth = composed.joined_text;
  std::string ids;
  std::string images;
  for (const PageSpec& page : composed.pages) {
    if (!ids.empty()) {
      ids += ',';
      images += ';';
    }
    ids += page.page_id;
    images += page.image_ref;
  }
  sample.meta["page_ids"] = ids;
  sample.meta["page_image_refs"] = images;
  sample.meta["page_separator"] = options.separator;
  sample.meta["n_pages"] = std::to_string(composed.pages.size());
  sample.meta["total_tokens"] = std::to_string(composed.total_tokens);
  return sample;
}

PasteLayout PasteHandwritingLines(std::span<const ImageDims> slices, const ImageDims& canvas,
                                  uint64_t seed, const PasteOptions& options) {
  if (slices.size() < options.min_slices || slices.size() > options.max_slices) {
    throw Error("slice count " + std::to_string(slices.size()) + " outside [" +
                std::to_string(options.min_slices) + ", " + std::to_string(options.max_slices) + "]");
  }
  if (options.margin < 0 || options.gap_min < 0 || options.gap_max < options.gap_min) {
    throw Error("invalid paste margins or gaps");
  }
  CheckDims(canvas);
  const int64_t usable_width = canvas.width - 2 * options.margin;
  int64_t stacked = 0;
  for (size_t i = 0; i < slices.size(); ++i) {
    CheckDims(slices[i]);
    if (slices[i].width > usable_width) {
      throw Error("slice " + std::to_string(i) + " (" + FormatDims(slices[i]) +
                  ") is wider than the canvas minus margins");
    }
    stacked += slices[i].height;
  }
  const auto gaps = static_cast<int64_t>(slices.size() - 1);
  int64_t slack = canvas.height - 2 * options.margin - stacked - gaps * options.gap_min;
  if (slack < 0) {
    throw Error("slices need " + std::to_string(stacked + gaps * options.gap_min + 2 * options.margin) +
                " px of height, canvas has " + std::to_string(canvas.height));
  }

  Rng rng(seed);
  std::vector<int64_t> extra_gap(slices.size(), 0);
  for (size_t i = 1; i < slices.size(); ++i) {
    const int64_t extra = rng.UniformInt(0, std::min(options.gap_max - options.gap_min, slack));
    extra_gap[i] = extra;
    slack -= extra;
  }
  int64_t y = options.margin + rng.UniformInt(0, slack);

  PasteLayout layout;
  layout.canvas = canvas;
  for (size_t i = 0; i < slices.size(); ++i) {
    if (i > 0) y += options.gap_min + extra_gap[i];
    const int64_t x = options.margin + rng.UniformInt(0, usable_width - slices[i].width);
    layout.placements.push_back({i, x, y, slices[i].width, slices[i].height});
    y += slices[i].height;
  }
  return layout;
}

std::string FormatPasteLayout(const PasteLayout& layout) {
  std::string out = "canvas " + FormatDims(layout.canvas) + "\n";
  for (const PastePlacement& p : layout.placements) {
    out += "paste " + std::to_string(p.slice_index) + " at " + std::to_string(p.x) + "," +
           std::to_string(p.y) + " size " + std::to_string(p.w) + "x" + std::to_string(p.h) + "\n";
  }
  return out;
}

}  // namespace ocrkit
