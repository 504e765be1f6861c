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

#include <algorithm>
#include <array>

#include "ocrkit/error.h"
#include "ocrkit/geometry.h"
#include "ocrkit/utf8.h"
#include "validator_util.h"

namespace ocrkit {
namespace internal {

std::vector<std::u32string> ValidatorLines(std::string_view text) {
  std::vector<std::u32string> lines;
  for (std::string_view line : SplitLines(text)) lines.push_back(DecodeUtf8(line));
  while (!lines.empty() && IsBlank(lines.back())) lines.pop_back();
  return lines;
}

bool IsBlank(std::u32string_view line) {
  for (char32_t c : line) {
    if (c != U' ' && c != U'\t' && c != U'\r') return false;
  }
  return true;
}

std::string ToUtf8(std::u32string_view text) {
  std::string out;
  for (char32_t c : text) AppendUtf8(out, c);
  return out;
}

}  // namespace internal

namespace {

constexpr std::array<std::pair<FormatKind, std::string_view>, 4> kFormatNames = {{
    {FormatKind::kMarkdown, "markdown"},
    {FormatKind::kTikz, "tikz"},
    {FormatKind::kSmiles, "smiles"},
    {FormatKind::kKern, "kern"},
}};

}  // namespace

void ValidationReport::Add(int line, int column, std::string code, std::string message) {
  issues.push_back({line, column, std::move(code), std::move(message)});
  ok = false;
}

std::string FormatIssue(const ValidationIssue& issue) {
  return std::to_string(issue.line) + ":" + std::to_string(issue.column) + " " + issue.code + " " +
         issue.message;
}

ValidationReport ValidateTikz(std::string_view text) {
  ValidationReport report;
  const auto lines = internal::ValidatorLines(text);
  bool any = false;
  for (size_t i = 0; i < lines.size(); ++i) {
    if (internal::IsBlank(lines[i])) continue;
    any = true;
    const int line_no = static_cast<int>(i) + 1;
    try {
      ParseTikzLine(internal::ToUtf8(lines[i]), line_no);
    } catch (const ParseError& e) {
      const int column = std::clamp(e.column(), 1, static_cast<int>(lines[i].size()) + 1);
      std::string message = e.what();
      // Drop the "line L, column C: " prefix; the issue carries the position.
      if (const size_t colon = message.find(": "); colon != std::string::npos) message.erase(0, colon + 2);
      report.Add(line_no, column, "TIKZ_SYNTAX", message);
    }
  }
  if (!any) report.Add(1, 1, "EMPTY", "no drawing commands");
  return report;
}

FormatKind ParseFormatKind(std::string_view name) {
  for (const auto& [kind, n] : kFormatNames) {
    if (n == name) return kind;
  }
  throw Error("unknown format kind '" + std::string(name) + "' (expected markdown, tikz, smiles or kern)");
}

std::string_view FormatKindName(FormatKind kind) {
  for (const auto& [k, name] : kFormatNames) {
    if (k == kind) return name;
  }
  return "markdown";
}

ValidationReport ValidateFormat(FormatKind kind, std::string_view text) {
  switch (kind) {
    case FormatKind::kMarkdown:
      return ValidateMathpixMarkdown(text);
    case FormatKind::kTikz:
      return ValidateTikz(text);
    case FormatKind::kSmiles:
      return ValidateSmiles(text);
    case FormatKind::kKern:
      return ValidateKern(text);
  }
  return {};
}

}  // namespace ocrkit
