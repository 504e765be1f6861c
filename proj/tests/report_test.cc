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


#include "ocrkit/report.h"

#include <gtest/gtest.h>

#include <random>

#include "ocrkit/error.h"

namespace ocrkit {
namespace {

TEST(FormatFixed3Test, Rounding) {
  EXPECT_EQ(FormatFixed3(0.7474999), "0.747");
  EXPECT_EQ(FormatFixed3(0.0625), "0.062");  // exact tie goes to even
  EXPECT_EQ(FormatFixed3(0.1875), "0.188");
  EXPECT_EQ(FormatFixed3(1.0), "1.000");
  EXPECT_EQ(FormatFixed3(-0.0001), "0.000");
  EXPECT_EQ(FormatFixed3(0.035), "0.035");
}

TEST(RenderReportTest, PerfectMarkdownRow) {
  const MetricReport perfect{0, 1, 1, 1, 1, 1, 20};
  const std::string md = RenderReport(perfect, ReportStyle::kMarkdown);
  EXPECT_NE(md.find("| Edit Distance↓ | F1-score↑ | Precision↑ | Recall↑ | BLEU↑ | METEOR↑ |"),
            std::string::npos)
      << md;
  EXPECT_NE(md.find("0.000 | 1.000 | 1.000 | 1.000 | 1.000 | 1.000"), std::string::npos) << md;
}

TEST(RenderReportTest, TextColumnOrder) {
  const std::string text = RenderReport(MetricReport{0.5, 0.25, 0.125, 1, 0, 0.75, 3}, ReportStyle::kText);
  const char* names[] = {"Edit Distance", "F1-score", "Precision", "Recall", "BLEU", "METEOR", "Samples"};
  size_t last = 0;
  for (const char* name : names) {
    const size_t at = text.find(name);
    ASSERT_NE(at, std::string::npos) << name;
    EXPECT_GE(at, last) << name;
    last = at;
  }
  EXPECT_NE(text.find("0.500"), std::string::npos);
}

TEST(RenderReportTest, ApReport) {
  const ApReport ones{1, 1, 1, 5};
  EXPECT_EQ(RenderReport(ones, ReportStyle::kText).rfind("AP@strict 1.000", 0), 0u);
  const std::string md = RenderReport(ApReport{0.747, 0.845, 0.867, 10}, ReportStyle::kMarkdown);
  EXPECT_NE(md.find("| AP@strict | AP@slight | AP@high |"), std::string::npos) << md;
  EXPECT_NE(md.find("| 0.747 | 0.845 | 0.867 |"), std::string::npos) << md;
}

TEST(ReportStyleTest, Parse) {
  EXPECT_EQ(ParseReportStyle("markdown"), ReportStyle::kMarkdown);
  EXPECT_EQ(ParseReportStyle("text"), ReportStyle::kText);
  EXPECT_THROW(ParseReportStyle("html"), Error);
}

TEST(ReportJsonTest, RoundTrips) {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 200; ++i) {
    const MetricReport m{u(gen), u(gen), u(gen), u(gen), u(gen), u(gen), static_cast<size_t>(gen() % 1000)};
    ASSERT_EQ(MetricReportFromJson(MetricReportToJson(m)), m);
    const ApReport a{u(gen), u(gen), u(gen), static_cast<size_t>(gen() % 1000)};
    ASSERT_EQ(ApReportFromJson(ApReportToJson(a)), a);
  }
  CorpusScore score;
  score.aggregate = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 2};
  score.per_sample = {{"a", {0, 1, 1, 1, 1, 0.999, 1}}, {"b", {0.2, 0, 0, 0, 0, 0, 1}}};
  const CorpusScore back = CorpusScoreFromJson(CorpusScoreToJson(score));
  EXPECT_EQ(back.aggregate, score.aggregate);
  ASSERT_EQ(back.per_sample.size(), 2u);
  EXPECT_EQ(back.per_sample[1].id, "b");
  EXPECT_EQ(back.per_sample[0].report, score.per_sample[0].report);
}

TEST(ReportJsonTest, RejectsMalformed) {
  EXPECT_THROW(MetricReportFromJson("{"), Error);
  EXPECT_THROW(ApReportFromJson(R"({"ap_strict": 1})"), Error);
}

}  // namespace
}  // namespace ocrkit
