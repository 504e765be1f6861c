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

// Multi-page samples under a token budget and handwriting paste-up layouts.

#ifndef OCRKIT_PAGE_COMPOSER_H_
#define OCRKIT_PAGE_COMPOSER_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ocrkit/corpus.h"
#include "ocrkit/tiling.h"

namespace ocrkit {

using TokenCounter = std::function<size_t(std::string_view)>;

// Word-granularity token count (CJK scalars count one each).
size_t TokenCount(std::string_view text);

struct PageSpec {
  std::string page_id;
  std::string text;
  size_t token_count = 0;
  std::string image_ref;

  friend bool operator==(const PageSpec&, const PageSpec&) = default;
};

// Fills token_count with counter (TokenCount when empty).
PageSpec MakePageSpec(std::string page_id, std::string text, std::string image_ref,
                      const TokenCounter& counter = {});

inline constexpr std::string_view kPageSeparator = "<--- page break --->";

struct ComposeOptions {
  size_t min_pages = 2;
  size_t max_pages = 8;
  size_t page_token_limit = 650;  // pages need strictly fewer tokens
  size_t total_token_budget = 8192;
  std::string separator = std::string(kPageSeparator);
  TokenCounter counter;  // empty: TokenCount
  int max_attempts = 16;
};

struct MultiPageSample {
  std::vector<PageSpec> pages;
  std::string joined_text;
  size_t total_tokens = 0;
};

// Page texts joined with "\n" + separator + "\n".
std::string JoinPages(std::span<const PageSpec> pages, std::string_view separator);
std::vector<std::string> SplitPages(std::string_view joined, std::string_view separator);

// Eligible pages have token_count < page_token_limit and do not contain the
// separator. Each attempt shuffles the eligible pages under the seed and
// takes them in order, skipping any page that would push the running count
// (page tokens plus separator tokens) over the budget. The joined text is
// then recounted with the counter; an attempt whose recount exceeds the
// budget is discarded. Throws after max_attempts failures.
MultiPageSample ComposeMultipage(std::span<const PageSpec> pool, size_t n_pages, uint64_t seed,
                                 const ComposeOptions& options = {});

Sample MultiPageToSample(const MultiPageSample& composed, std::string id,
                         const ComposeOptions& options = {});

struct PastePlacement {
  size_t slice_index = 0;
  int64_t x = 0;
  int64_t y = 0;
  int64_t w = 0;
  int64_t h = 0;

  friend bool operator==(const PastePlacement&, const PastePlacement&) = default;
};

struct PasteLayout {
  ImageDims canvas;
  std::vector<PastePlacement> placements;

  friend bool operator==(const PasteLayout&, const PasteLayout&) = default;
};

struct PasteOptions {
  size_t min_slices = 6;
  size_t max_slices = 8;
  int64_t margin = 40;
  int64_t gap_min = 10;
  int64_t gap_max = 60;
};

// Places the slices top to bottom in input order. Gaps are drawn from
// [gap_min, gap_max] but never beyond the vertical slack left on the canvas;
// whatever slack remains shifts the block down by a random amount. Each
// slice gets a random horizontal offset inside the margins.
PasteLayout PasteHandwritingLines(std::span<const ImageDims> slices, const ImageDims& canvas,
                                  uint64_t seed, const PasteOptions& options = {});

// One declarative line per placement: "paste <index> at <x>,<y> size <w>x<h>".
std::string FormatPasteLayout(const PasteLayout& layout);

}  // namespace ocrkit

#endif  // OCRKIT_PAGE_COMPOSER_H_
