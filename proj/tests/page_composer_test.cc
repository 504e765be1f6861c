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

#include <gtest/gtest.h>

#include <set>

#include "ocrkit/error.h"

namespace ocrkit {
namespace {

std::string Words(size_t n, const std::string& word = "w") {
  std::string out;
  for (size_t i = 0; i < n; ++i) {
    if (i > 0) out += ' ';
    out += word;
  }
  return out;
}

std::vector<PageSpec> Pool(size_t n, size_t tokens) {
  std::vector<PageSpec> pool;
  for (size_t i = 0; i < n; ++i) {
    pool.push_back(MakePageSpec("p" + std::to_string(i), Words(tokens), "img" + std::to_string(i)));
  }
  return pool;
}

TEST(TokenCountTest, Examples) {
  EXPECT_EQ(TokenCount(""), 0u);
  EXPECT_EQ(TokenCount("a b c"), 3u);
  EXPECT_EQ(TokenCount("你好 world"), 3u);
  EXPECT_EQ(TokenCount(kPageSeparator), 4u);
}

TEST(ComposeTest, AcceptsPagesUnderTheLimit) {
  const auto pool = Pool(10, 600);
  const MultiPageSample s = ComposeMultipage(pool, 5, 7);
  ASSERT_EQ(s.pages.size(), 5u);
  EXPECT_LE(s.total_tokens, 8192u);
  EXPECT_EQ(s.total_tokens, 5 * 600 + 4 * TokenCount(kPageSeparator));
  std::set<std::string> ids;
  for (const PageSpec& p : s.pages) ids.insert(p.page_id);
  EXPECT_EQ(ids.size(), 5u);
}

TEST(ComposeTest, NeverSelectsLongPages) {
  auto pool = Pool(6, 100);
  pool.push_back(MakePageSpec("long", Words(700), "long.png"));
  pool.push_back(MakePageSpec("edge", Words(650), "edge.png"));
  for (uint64_t seed = 0; seed < 50; ++seed) {
    const MultiPageSample s = ComposeMultipage(pool, 6, seed);
    for (const PageSpec& p : s.pages) {
      ASSERT_NE(p.page_id, "long");
      ASSERT_NE(p.page_id, "edge");
    }
  }
  EXPECT_THROW(ComposeMultipage(pool, 7, 0), Error);
}

TEST(ComposeTest, PageCountBounds) {
  const auto pool = Pool(10, 10);
  EXPECT_THROW(ComposeMultipage(pool, 1, 0), Error);
  EXPECT_THROW(ComposeMultipage(pool, 9, 0), Error);
  EXPECT_NO_THROW(ComposeMultipage(pool, 8, 0));
}

TEST(ComposeTest, BudgetIsRespectedOrReported) {
  const auto pool = Pool(10, 600);
  ComposeOptions tight;
  tight.total_token_budget = 1000;
  EXPECT_THROW(ComposeMultipage(pool, 2, 0, tight), Error);
  tight.total_token_budget = 1204;
  EXPECT_EQ(ComposeMultipage(pool, 2, 0, tight).total_tokens, 1204u);
}

TEST(ComposeTest, PagesContainingTheSeparatorAreExcluded) {
  auto pool = Pool(2, 5);
  pool.push_back(MakePageSpec("bad", "x " + std::string(kPageSeparator) + " y", ""));
  EXPECT_THROW(ComposeMultipage(pool, 3, 0), Error);
}

TEST(ComposeTest, SplitRecoversPagesAndSeedsAreDeterministic) {
  std::vector<PageSpec> pool;
  for (int i = 0; i < 12; ++i) {
    pool.push_back(MakePageSpec("p" + std::to_string(i), "page " + std::to_string(i) + "\n" + Words(i + 1, "x"), ""));
  }
  for (uint64_t seed = 0; seed < 30; ++seed) {
    const size_t n = 2 + seed % 7;
    const MultiPageSample s = ComposeMultipage(pool, n, seed);
    const auto parts = SplitPages(s.joined_text, kPageSeparator);
    ASSERT_EQ(parts.size(), n);
    for (size_t i = 0; i < n; ++i) ASSERT_EQ(parts[i], s.pages[i].text);
    const MultiPageSample again = ComposeMultipage(pool, n, seed);
    ASSERT_EQ(again.joined_text, s.joined_text);
  }
}

TEST(ComposeTest, SampleRecordsPageMeta) {
  const auto pool = Pool(4, 3);
  const MultiPageSample s = ComposeMultipage(pool, 3, 1);
  const Sample sample = MultiPageToSample(s, "mp-1");
  EXPECT_EQ(sample.task_kind, TaskKind::kMultiPage);
  EXPECT_EQ(sample.ground_truth, s.joined_text);
  EXPECT_EQ(sample.meta.at("n_pages"), "3");
  EXPECT_EQ(sample.meta.at("page_separator"), kPageSeparator);
}

TEST(PasteTest, SixLinesOnAnA4Canvas) {
  const std::vector<ImageDims> slices(6, ImageDims{1000, 80});
  const ImageDims canvas{1240, 1754};
  const PasteLayout layout = PasteHandwritingLines(slices, canvas, 3);
  ASSERT_EQ(layout.placements.size(), 6u);
  for (size_t i = 0; i < 6; ++i) {
    const PastePlacement& p = layout.placements[i];
    EXPECT_EQ(p.slice_index, i);
    EXPECT_GE(p.x, 40);
    EXPECT_GE(p.y, 40);
    EXPECT_LE(p.x + p.w, canvas.width - 40);
    EXPECT_LE(p.y + p.h, canvas.height - 40);
    if (i > 0) {
      const PastePlacement& prev = layout.placements[i - 1];
      EXPECT_GE(p.y - (prev.y + prev.h), 10);
      EXPECT_LE(p.y - (prev.y + prev.h), 60);
    }
  }
  EXPECT_EQ(layout, PasteHandwritingLines(slices, canvas, 3));
}

TEST(PasteTest, RejectsBadCounts) {
  const ImageDims canvas{1240, 1754};
  EXPECT_THROW(PasteHandwritingLines(std::vector<ImageDims>(5, ImageDims{1000, 80}), canvas, 0), Error);
  EXPECT_THROW(PasteHandwritingLines(std::vector<ImageDims>(9, ImageDims{1000, 80}), canvas, 0), Error);
  EXPECT_THROW(PasteHandwritingLines(std::vector<ImageDims>(6, ImageDims{1200, 80}), canvas, 0), Error);
  EXPECT_THROW(PasteHandwritingLines(std::vector<ImageDims>(8, ImageDims{1000, 300}), canvas, 0), Error);
}

TEST(PasteTest, RandomLayoutsStayInside) {
  for (uint64_t seed = 0; seed < 300; ++seed) {
    std::vector<ImageDims> slices(6 + seed % 3);
    for (size_t i = 0; i < slices.size(); ++i) {
      slices[i] = {static_cast<int64_t>(200 + (seed * 31 + i * 17) % 900), static_cast<int64_t>(40 + (seed + i * 7) % 120)};
    }
    const PasteLayout layout = PasteHandwritingLines(slices, {1240, 1754}, seed);
    for (size_t i = 0; i < layout.placements.size(); ++i) {
      const PastePlacement& p = layout.placements[i];
      ASSERT_LE(p.y + p.h, 1754 - 40);
      ASSERT_LE(p.x + p.w, 1240 - 40);
      if (i > 0) {
        ASSERT_GE(p.y, layout.placements[i - 1].y + layout.placements[i - 1].h + 10);
      }
    }
  }
}

}  // namespace
}  // namespace ocrkit
