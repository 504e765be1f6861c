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


#include <algorithm>
#include <optional>

#include "ocrkit/utf8.h"
#include "ocrkit/validation.h"
#include "validator_util.h"

namespace ocrkit {
namespace {

using internal::ToUtf8;

struct Delim {
  std::u32string open;
  std::u32string close;
};

struct OpenMath {
  size_t delim = 0;
  int line = 0;
  int column = 0;
};

struct OpenEnv {
  std::u32string name;
  int line = 0;
  int column = 0;
};

bool HasAt(std::u32string_view line, size_t i, std::u32string_view token) {
  return !token.empty() && line.substr(i, token.size()) == token;
}

size_t LeadingSpaces(std::u32string_view line) {
  size_t i = 0;
  while (i < line.size() && (line[i] == U' ' || line[i] == U'\t')) ++i;
  return i;
}

// Opening fence: up to three spaces, then at least three backticks or tildes.
std::optional<std::pair<char32_t, size_t>> FenceAt(std::u32string_view line) {
  const size_t indent = LeadingSpaces(line);
  if (indent > 3 || indent >= line.size()) return std::nullopt;
  const char32_t c = line[indent];
  if (c != U'`' && c != U'~') return std::nullopt;
  size_t run = 0;
  while (indent + run < line.size() && line[indent + run] == c) ++run;
  if (run < 3) return std::nullopt;
  return std::make_pair(c, run);
}

class MarkdownChecker {
 public:
  explicit MarkdownChecker(const MarkdownOptions& options) {
    for (const MathDelimiter& d : options.delimiters) {
      Delim delim{DecodeDelim(d.open), DecodeDelim(d.close)};
      if (!delim.open.empty() && !delim.close.empty()) delims_.push_back(std::move(delim));
    }
  }

  ValidationReport Run(std::string_view text) {
    const auto lines = internal::ValidatorLines(text);
    std::optional<std::pair<char32_t, size_t>> fence;
    int fence_line = 0;
    int fence_column = 0;
    TableState table;

    for (size_t li = 0; li < lines.size(); ++li) {
      const std::u32string& line = lines[li];
      const int line_no = static_cast<int>(li) + 1;

      if (fence) {
        const auto close = FenceAt(line);
        if (close && close->first == fence->first && close->second >= fence->second &&
            internal::IsBlank(std::u32string_view(line).substr(LeadingSpaces(line) + close->second))) {
          fence.reset();
        }
        continue;
      }
      if (!math_) {
        if (auto open = FenceAt(line)) {
          EndTable(table);
          fence = open;
          fence_line = line_no;
          fence_column = static_cast<int>(LeadingSpaces(line)) + 1;
          continue;
        }
      }

      const bool table_row = !math_ && LeadingSpaces(line) < line.size() && line[LeadingSpaces(line)] == U'|';
      std::vector<size_t> pipes;
      ScanLine(line, line_no, pipes);
      if (table_row) {
        const size_t cells = CellCount(line, pipes);
        if (!table.active) {
          table = {true, cells};
        } else if (cells != table.header_cells) {
          report_.Add(line_no, static_cast<int>(LeadingSpaces(line)) + 1, "TABLE_ARITY",
                      "row has " + std::to_string(cells) + " cells, header has " +
                          std::to_string(table.header_cells));
        }
      } else {
        EndTable(table);
      }
    }

    if (fence) {
      report_.Add(fence_line, fence_column, "CODE_FENCE_UNTERMINATED", "code fence is never closed");
    }
    if (math_) {
      report_.Add(math_->line, math_->column, "MATH_UNCLOSED",
                  "math opened with " + ToUtf8(delims_[math_->delim].open) + " is never closed");
    }
    for (const OpenEnv& env : envs_) {
      report_.Add(env.line, env.column, "ENV_UNCLOSED",
                  "\\begin{" + ToUtf8(env.name) + "} has no matching \\end");
    }
    std::stable_sort(report_.issues.begin(), report_.issues.end(),
                     [](const ValidationIssue& a, const ValidationIssue& b) {
                       return std::pair(a.line, a.column) < std::pair(b.line, b.column);
                     });
    return report_;
  }

 private:
  struct TableState {
    bool active = false;
    size_t header_cells = 0;
  };

  static void EndTable(TableState& table) { table = {}; }

  static std::u32string DecodeDelim(const std::string& s) { return DecodeUtf8(s); }

  // Delimiter token at i as (index, is_open). Inside math the current
  // closer wins; otherwise the longest token does.
  std::optional<std::pair<size_t, bool>> DelimAt(std::u32string_view line, size_t i) const {
    if (math_ && HasAt(line, i, delims_[math_->delim].close)) return std::make_pair(math_->delim, false);
    std::optional<std::pair<size_t, bool>> best;
    size_t best_len = 0;
    for (size_t d = 0; d < delims_.size(); ++d) {
      const Delim& delim = delims_[d];
      if (HasAt(line, i, delim.open) && delim.open.size() > best_len) {
        best = {d, true};
        best_len = delim.open.size();
      }
      if (delim.open != delim.close && HasAt(line, i, delim.close) && delim.close.size() > best_len) {
        best = {d, false};
        best_len = delim.close.size();
      }
    }
    return best;
  }

  void ScanLine(std::u32string_view line, int line_no, std::vector<size_t>& pipes) {
    size_t i = 0;
    while (i < line.size()) {
      const int column = static_cast<int>(i) + 1;
      const char32_t c = line[i];

      if (!math_ && c == U'`') {
        size_t run = 0;
        while (i + run < line.size() && line[i + run] == U'`') ++run;
        const std::u32string ticks(run, U'`');
        size_t close = line.find(ticks, i + run);
        while (close != std::u32string_view::npos && close + run < line.size() && line[close + run] == U'`') {
          size_t skip = close;
          while (skip < line.size() && line[skip] == U'`') ++skip;
          close = line.find(ticks, skip);
        }
        i = close == std::u32string_view::npos ? i + run : close + run;
        continue;
      }

      if (auto hit = DelimAt(line, i)) {
        const auto [d, is_open] = *hit;
        const Delim& delim = delims_[d];
        if (math_) {
          if (d == math_->delim && !is_open) {
            math_.reset();
          } else {
            report_.Add(line_no, column, "MATH_MISMATCH",
                        ToUtf8(is_open ? delim.open : delim.close) + " inside math opened with " +
                            ToUtf8(delims_[math_->delim].open));
            math_.reset();
          }
        } else if (is_open) {
          math_ = OpenMath{d, line_no, column};
        } else {
          report_.Add(line_no, column, "MATH_UNOPENED", ToUtf8(delim.close) + " without an opening delimiter");
        }
        i += is_open ? delim.open.size() : delim.close.size();
        continue;
      }

      if (c == U'\\') {
        if (const size_t used = Environment(line, i, line_no)) {
          i += used;
        } else {
          i += std::min<size_t>(2, line.size() - i);
        }
        continue;
      }
      if (c == U'|' && !math_) pipes.push_back(i);
      ++i;
    }
  }

  // Handles \begin{name} / \end{name} at i; returns the length consumed.
  size_t Environment(std::u32string_view line, size_t i, int line_no) {
    static constexpr std::u32string_view kBegin = U"\\begin{";
    static constexpr std::u32string_view kEnd = U"\\end{";
    const bool begin = HasAt(line, i, kBegin);
    if (!begin && !HasAt(line, i, kEnd)) return 0;
    const size_t name_start = i + (begin ? kBegin.size() : kEnd.size());
    const size_t close = line.find(U'}', name_start);
    if (close == std::u32string_view::npos) return 0;
    const std::u32string name(line.substr(name_start, close - name_start));
    const int column = static_cast<int>(i) + 1;
    if (begin) {
      envs_.push_back({name, line_no, column});
    } else if (envs_.empty()) {
      report_.Add(line_no, column, "ENV_UNOPENED", "\\end{" + ToUtf8(name) + "} without \\begin");
    } else if (envs_.back().name != name) {
      report_.Add(line_no, column, "ENV_MISMATCH",
                  "\\end{" + ToUtf8(name) + "} closes \\begin{" + ToUtf8(envs_.back().name) + "} from line " +
                      std::to_string(envs_.back().line));
      envs_.pop_back();
    } else {
      envs_.pop_back();
    }
    return close + 1 - i;
  }

  static size_t CellCount(std::u32string_view line, const std::vector<size_t>& pipes) {
    size_t last = line.size();
    while (last > 0 && (line[last - 1] == U' ' || line[last - 1] == U'\t')) --last;
    const bool leading = !pipes.empty() && pipes.front() == LeadingSpaces(line);
    const bool trailing = !pipes.empty() && last > 0 && pipes.back() == last - 1 &&
                          !(leading && pipes.size() == 1);
    return pipes.size() + 1 - (leading ? 1 : 0) - (trailing ? 1 : 0);
  }

  std::vector<Delim> delims_;
  std::optional<OpenMath> math_;
  std::vector<OpenEnv> envs_;
  ValidationReport report_;
};

}  // namespace

ValidationReport ValidateMathpixMarkdown(std::string_view text, const MarkdownOptions& options) {
  return MarkdownChecker(options).Run(text);
}

}  // namespace ocrkit
