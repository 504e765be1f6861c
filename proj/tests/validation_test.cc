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


#include "ocrkit/validation.h"

#include <gtest/gtest.h>

#include <random>

#include "ocrkit/chart.h"
#include "ocrkit/error.h"
#include "ocrkit/geometry.h"
#include "ocrkit/utf8.h"

namespace ocrkit {
namespace {

bool HasCode(const ValidationReport& report, std::string_view code) {
  for (const ValidationIssue& issue : report.issues) {
    if (issue.code == code) return true;
  }
  return false;
}

const ValidationIssue* Find(const ValidationReport& report, std::string_view code) {
  for (const ValidationIssue& issue : report.issues) {
    if (issue.code == code) return &issue;
  }
  return nullptr;
}

TEST(MarkdownValidatorTest, Examples) {
  EXPECT_TRUE(ValidateMathpixMarkdown("x = \\(a+b\\)").ok);
  EXPECT_TRUE(ValidateMathpixMarkdown("$$\nx^2\n$$\n\\[ y \\]").ok);

  const ValidationReport table =
      ValidateMathpixMarkdown("| a | b | c |\n| --- | --- | --- |\n| 1 | 2 |\n| 1 | 2 | 3 |\n");
  ASSERT_EQ(table.issues.size(), 1u);
  EXPECT_EQ(table.issues[0].code, "TABLE_ARITY");
  EXPECT_EQ(table.issues[0].line, 3);

  const ValidationReport env = ValidateMathpixMarkdown("\\begin{array}{cc} 1 & 2");
  EXPECT_FALSE(env.ok);
  EXPECT_TRUE(HasCode(env, "ENV_UNCLOSED"));
}

TEST(MarkdownValidatorTest, OtherProblems) {
  EXPECT_TRUE(HasCode(ValidateMathpixMarkdown("\\(a"), "MATH_UNCLOSED"));
  EXPECT_TRUE(HasCode(ValidateMathpixMarkdown("a\\)"), "MATH_UNOPENED"));
  EXPECT_TRUE(HasCode(ValidateMathpixMarkdown("\\(a\\]"), "MATH_MISMATCH"));
  EXPECT_TRUE(HasCode(ValidateMathpixMarkdown("\\begin{a}\\end{b}"), "ENV_MISMATCH"));
  EXPECT_TRUE(HasCode(ValidateMathpixMarkdown("\\end{a}"), "ENV_UNOPENED"));
  EXPECT_TRUE(HasCode(ValidateMathpixMarkdown("```\ncode"), "CODE_FENCE_UNTERMINATED"));
  // Delimiters inside code are literal.
  EXPECT_TRUE(ValidateMathpixMarkdown("```\n\\(\n```\n`\\[`").ok);
  // Pipes inside math do not split cells.
  EXPECT_TRUE(ValidateMathpixMarkdown("| a | b |\n|---|---|\n| \\(|x|\\) | 2 |\n").ok);
}

TEST(MarkdownValidatorTest, SingleDollarIsOptional) {
  EXPECT_TRUE(ValidateMathpixMarkdown("costs $5").ok);
  MarkdownOptions options;
  options.delimiters.push_back({"$", "$"});
  EXPECT_FALSE(ValidateMathpixMarkdown("costs $5", options).ok);
  EXPECT_TRUE(ValidateMathpixMarkdown("$x$ and $$y$$", options).ok);
}

TEST(SmilesValidatorTest, Examples) {
  EXPECT_TRUE(ValidateSmiles("C1CCCCC1").ok);
  EXPECT_TRUE(HasCode(ValidateSmiles("C1CC"), "RING_UNPAIRED"));
  EXPECT_TRUE(HasCode(ValidateSmiles("C(C(C)"), "PAREN_UNBALANCED"));
}

TEST(SmilesValidatorTest, Grammar) {
  for (const char* ok : {"CC(=O)O", "c1ccccc1", "[NH4+]", "[13CH4]", "C[C@@H](O)N", "C%10CC%10",
                         "[Fe+2]", "Cl/C=C/Br", "C.C", "[2H]O[2H]", "*C", "C1CC1C1CC1", "[C:1]"}) {
    EXPECT_TRUE(ValidateSmiles(ok).ok) << ok;
  }
  EXPECT_TRUE(HasCode(ValidateSmiles("Xx"), "ATOM_INVALID"));
  EXPECT_TRUE(HasCode(ValidateSmiles("[Qq]"), "BRACKET_INVALID"));
  EXPECT_TRUE(HasCode(ValidateSmiles("[NH4+"), "BRACKET_UNCLOSED"));
  EXPECT_TRUE(HasCode(ValidateSmiles("C==C"), "BOND_INVALID"));
  EXPECT_TRUE(HasCode(ValidateSmiles("C)"), "PAREN_UNBALANCED"));
  EXPECT_TRUE(HasCode(ValidateSmiles("C()C"), "BRANCH_EMPTY"));
  EXPECT_TRUE(HasCode(ValidateSmiles(""), "EMPTY"));
  EXPECT_TRUE(HasCode(ValidateSmiles("C\nC"), "MULTILINE"));
  const ValidationReport unpaired = ValidateSmiles("C1CC");
  const ValidationIssue* ring = Find(unpaired, "RING_UNPAIRED");
  ASSERT_NE(ring, nullptr);
  EXPECT_EQ(ring->line, 1);
  EXPECT_EQ(ring->column, 2);
}

TEST(KernValidatorTest, Examples) {
  EXPECT_TRUE(ValidateKern("**kern\n4c\n*-").ok);
  EXPECT_TRUE(HasCode(ValidateKern("**kern\n4c\n"), "SPINE_UNTERMINATED"));
  const ValidationReport arity = ValidateKern("**kern\t**kern\n4c\t4e\n4d\n*-\t*-\n");
  const ValidationIssue* issue = Find(arity, "SPINE_ARITY");
  ASSERT_NE(issue, nullptr);
  EXPECT_EQ(issue->line, 3);
}

TEST(KernValidatorTest, Records) {
  EXPECT_TRUE(ValidateKern("!!!COM: Bach\n**kern\t**kern\n*M4/4\t*M4/4\n=1\t=1\n4c#\t8.ee-L\n"
                           "!comment\t!\n4r\t.\n==\t==\n*-\t*-\n")
                  .ok);
  EXPECT_TRUE(HasCode(ValidateKern("4c\n"), "NO_EXCLUSIVE"));
  EXPECT_TRUE(HasCode(ValidateKern("**kern\n4k\n*-"), "KERN_TOKEN"));
  EXPECT_TRUE(HasCode(ValidateKern("**kern\n1\n*-"), "KERN_TOKEN"));
  EXPECT_TRUE(HasCode(ValidateKern("**kern\n=1\tx\n*-"), "SPINE_ARITY"));
  EXPECT_TRUE(HasCode(ValidateKern("**kern\n*-\n4c\n"), "DATA_AFTER_END"));
  EXPECT_TRUE(HasCode(ValidateKern("**kern\n!!linebreak:original\n4c\n*-"), "UNSUPPORTED"));
  // Split then join keeps the arity consistent.
  EXPECT_TRUE(ValidateKern("**kern\n*^\n4c\t4e\n*v\t*v\n4c\n*-").ok);
  EXPECT_TRUE(HasCode(ValidateKern("**kern\t**kern\n*v\t*\n4c\t4c\n*-\t*-"), "SPINE_MANIP"));
}

TEST(ValidatorsTest, StableUnderTrailingNewlineAndCrlf) {
  const std::vector<std::pair<FormatKind, std::string>> docs = {
      {FormatKind::kMarkdown, "| a | b |\n|---|---|\n| 1 |\n\\(x\\)"},
      {FormatKind::kMarkdown, "\\[x\\]\n"},
      {FormatKind::kSmiles, "C1CC"},
      {FormatKind::kSmiles, "CCO"},
      {FormatKind::kKern, "**kern\n4c\n*-"},
      {FormatKind::kKern, "**kern\t**kern\n4c\n*-\t*-"},
      {FormatKind::kTikz, "\\draw (0,0) circle (1);"},
      {FormatKind::kTikz, "\\draw (0,0) circle (0);"},
  };
  for (const auto& [kind, text] : docs) {
    const ValidationReport base = ValidateFormat(kind, text);
    EXPECT_EQ(ValidateFormat(kind, text + "\n").ok, base.ok) << text;
    std::string crlf;
    for (char c : text) {
      if (c == '\n') crlf += '\r';
      crlf += c;
    }
    EXPECT_EQ(ValidateFormat(kind, crlf).ok, base.ok) << text;
    EXPECT_EQ(ValidateFormat(kind, crlf + "\r\n").ok, base.ok) << text;
  }
}

// Line and column name an existing line and a column at most one past its end.
void ExpectPositionsInside(const ValidationReport& report, std::string_view text) {
  std::vector<std::u32string> lines;
  std::u32string current;
  for (char32_t c : DecodeUtf8(text)) {
    if (c == U'\n') {
      lines.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  lines.push_back(current);
  EXPECT_EQ(report.ok, report.issues.empty());
  for (const ValidationIssue& issue : report.issues) {
    ASSERT_GE(issue.line, 1) << FormatIssue(issue);
    ASSERT_LE(static_cast<size_t>(issue.line), lines.size()) << FormatIssue(issue);
    ASSERT_GE(issue.column, 1) << FormatIssue(issue);
    ASSERT_LE(static_cast<size_t>(issue.column), lines[issue.line - 1].size() + 1) << FormatIssue(issue);
  }
}

TEST(ValidatorsTest, TotalOnRandomInput) {
  std::mt19937_64 gen(99);
  const std::string alphabet = "()[]{}\\$|`~*!=-_^:;,. \t\n\r1234567890abcdefgCNOcnos%@+#/drawkern";
  for (int trial = 0; trial < 2000; ++trial) {
    std::string text;
    const size_t len = gen() % 60;
    for (size_t i = 0; i < len; ++i) {
      const uint64_t pick = gen() % 20;
      if (pick == 0) {
        AppendUtf8(text, static_cast<char32_t>(0x4e00 + gen() % 100));
      } else {
        text += alphabet[gen() % alphabet.size()];
      }
    }
    for (FormatKind kind : {FormatKind::kMarkdown, FormatKind::kTikz, FormatKind::kSmiles, FormatKind::kKern}) {
      ValidationReport report;
      ASSERT_NO_THROW(report = ValidateFormat(kind, text)) << text;
      ExpectPositionsInside(report, text);
    }
  }
}

TEST(ValidatorsTest, GeneratedArtifactsValidate) {
  for (uint64_t seed = 0; seed < 300; ++seed) {
    const TikzDoc doc = EmitTikz(GenScene(seed));
    const ValidationReport report = ValidateTikz(doc.source);
    ASSERT_TRUE(report.ok) << doc.source;
  }
  ChartGenConfig config;
  config.text_pool = DefaultTextPool();
  for (uint64_t seed = 0; seed < 300; ++seed) {
    const GeneratedChart g = GenChartStruct(seed, config);
    const std::string table = SerializeChartTable(g.chart);
    ASSERT_TRUE(ValidateMathpixMarkdown(table).ok) << table;
  }
}

TEST(ValidatorsTest, FormatIssueAndKinds) {
  EXPECT_EQ(FormatIssue({3, 7, "RING_UNPAIRED", "ring 1 is never closed"}),
            "3:7 RING_UNPAIRED ring 1 is never closed");
  EXPECT_EQ(ParseFormatKind("kern"), FormatKind::kKern);
  EXPECT_EQ(FormatKindName(FormatKind::kTikz), "tikz");
  EXPECT_THROW(ParseFormatKind("latex"), Error);
  EXPECT_TRUE(HasCode(ValidateTikz("\\drow (0,0);"), "TIKZ_SYNTAX"));
  EXPECT_TRUE(HasCode(ValidateTikz(""), "EMPTY"));
}

}  // namespace
}  // namespace ocrkit
