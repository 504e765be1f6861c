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
#include <vector>

#include "ocrkit/validation.h"
#include "validator_util.h"

namespace ocrkit {
namespace {

using internal::ToUtf8;

constexpr std::u32string_view kSuffixChars = U")]}_;LJKkTtMmWwSs$O'\"`~^uv/\\xXyYzZqQPpR:|<>HhNIo";

struct Field {
  std::u32string_view text;
  int column = 1;
};

std::vector<Field> SplitFields(std::u32string_view line) {
  std::vector<Field> fields;
  size_t start = 0;
  while (true) {
    const size_t tab = line.find(U'\t', start);
    const size_t end = tab == std::u32string_view::npos ? line.size() : tab;
    fields.push_back({line.substr(start, end - start), static_cast<int>(start) + 1});
    if (tab == std::u32string_view::npos) break;
    start = tab + 1;
  }
  return fields;
}

bool IsDigit(char32_t c) { return c >= U'0' && c <= U'9'; }

bool ValidNote(std::u32string_view s) {
  size_t i = 0;
  while (i < s.size() && std::u32string_view(U"([{&").find(s[i]) != std::u32string_view::npos) ++i;
  while (i < s.size() && IsDigit(s[i])) ++i;
  if (i < s.size() && s[i] == U'%') {
    const size_t start = ++i;
    while (i < s.size() && IsDigit(s[i])) ++i;
    if (i == start) return false;
  }
  while (i < s.size() && s[i] == U'.') ++i;
  if (i >= s.size()) return false;
  const char32_t pitch = s[i];
  const bool letter = (pitch >= U'a' && pitch <= U'g') || (pitch >= U'A' && pitch <= U'G');
  if (pitch != U'r' && !letter) return false;
  while (i < s.size() && s[i] == pitch) ++i;
  if (letter && i < s.size()) {
    if (s[i] == U'#' || s[i] == U'-') {
      const char32_t accidental = s[i];
      while (i < s.size() && s[i] == accidental) ++i;
    } else if (s[i] == U'n') {
      ++i;
    }
  }
  for (; i < s.size(); ++i) {
    if (kSuffixChars.find(s[i]) == std::u32string_view::npos) return false;
  }
  return true;
}

bool ValidKernToken(std::u32string_view token) {
  if (token == U".") return true;
  size_t start = 0;
  while (true) {
    const size_t space = token.find(U' ', start);
    const size_t end = space == std::u32string_view::npos ? token.size() : space;
    if (!ValidNote(token.substr(start, end - start))) return false;
    if (space == std::u32string_view::npos) return true;
    start = space + 1;
  }
}

// '=' (or '=='), optional measure number and letter, then barline style marks.
bool ValidBarline(std::u32string_view s) {
  size_t i = 0;
  while (i < s.size() && i < 2 && s[i] == U'=') ++i;
  if (i == 0) return false;
  while (i < s.size() && IsDigit(s[i])) ++i;
  if (i < s.size() && s[i] >= U'a' && s[i] <= U'z') ++i;
  for (; i < s.size(); ++i) {
    if (std::u32string_view(U"|!:'`-;.,").find(s[i]) == std::u32string_view::npos) return false;
  }
  return true;
}

class KernChecker {
 public:
  ValidationReport Run(std::string_view text) {
    const auto lines = internal::ValidatorLines(text);
    int first_content = 0;
    for (size_t li = 0; li < lines.size(); ++li) {
      const std::u32string_view line = lines[li];
      const int line_no = static_cast<int>(li) + 1;
      if (internal::IsBlank(line)) continue;
      if (first_content == 0) first_content = line_no;
      if (line.starts_with(U"!!")) {
        if (line.starts_with(U"!!linebreak") || line.starts_with(U"!!pagebreak")) {
          report_.Add(line_no, 1, "UNSUPPORTED", "system breaks are outside single-system scores");
        }
        continue;
      }
      if (ended_) {
        report_.Add(line_no, 1, "DATA_AFTER_END", "record after every spine was terminated");
        return report_;
      }
      if (!started_) {
        if (line.starts_with(U"!")) continue;
        if (!Exclusive(line, line_no)) return report_;
        continue;
      }
      Record(line, line_no);
    }
    if (first_content == 0) {
      report_.Add(1, 1, "EMPTY", "no records");
    } else if (!started_) {
      report_.Add(first_content, 1, "NO_EXCLUSIVE", "no **kern exclusive interpretation");
    } else if (!ended_) {
      report_.Add(static_cast<int>(lines.size()), 1, "SPINE_UNTERMINATED",
                  std::to_string(spines_.size()) + " spine(s) never terminated with *-");
    }
    return report_;
  }

 private:
  bool Exclusive(std::u32string_view line, int line_no) {
    const auto fields = SplitFields(line);
    bool any_kern = false;
    for (const Field& f : fields) {
      if (!f.text.starts_with(U"**") || f.text.size() == 2) {
        report_.Add(line_no, f.column, "NO_EXCLUSIVE",
                    "expected an exclusive interpretation such as **kern, got '" + ToUtf8(f.text) + "'");
        return false;
      }
      any_kern = any_kern || f.text == U"**kern";
      spines_.push_back(f.text == U"**kern");
    }
    if (!any_kern) {
      report_.Add(line_no, 1, "NO_EXCLUSIVE", "no **kern spine declared");
      return false;
    }
    started_ = true;
    return true;
  }

  void Record(std::u32string_view line, int line_no) {
    const auto fields = SplitFields(line);
    if (fields.size() != spines_.size()) {
      report_.Add(line_no, 1, "SPINE_ARITY",
                  "record has " + std::to_string(fields.size()) + " field(s), expected " +
                      std::to_string(spines_.size()));
      return;
    }
    for (const Field& f : fields) {
      if (f.text.empty()) {
        report_.Add(line_no, f.column, "EMPTY_FIELD", "empty field");
        return;
      }
    }
    const char32_t lead = fields[0].text[0];
    if (lead == U'*') {
      if (Uniform(fields, U'*', line_no, "interpretation")) Interpretation(fields, line_no);
    } else if (lead == U'!') {
      Uniform(fields, U'!', line_no, "local comment");
    } else if (std::any_of(fields.begin(), fields.end(), [](const Field& f) { return f.text[0] == U'='; })) {
      for (const Field& f : fields) {
        if (!ValidBarline(f.text)) {
          report_.Add(line_no, f.column, "BARLINE", "malformed barline '" + ToUtf8(f.text) + "'");
        }
      }
    } else {
      for (size_t k = 0; k < fields.size(); ++k) {
        const Field& f = fields[k];
        const bool bad_lead = f.text[0] == U'*' || f.text[0] == U'!';
        if (bad_lead || (spines_[k] && !ValidKernToken(f.text))) {
          report_.Add(line_no, f.column, "KERN_TOKEN", "malformed kern token '" + ToUtf8(f.text) + "'");
        }
      }
    }
  }

  bool Uniform(const std::vector<Field>& fields, char32_t lead, int line_no, const std::string& what) {
    for (const Field& f : fields) {
      if (f.text[0] != lead) {
        report_.Add(line_no, f.column, "KERN_TOKEN", what + " record mixes in '" + ToUtf8(f.text) + "'");
        return false;
      }
    }
    return true;
  }

  void Interpretation(const std::vector<Field>& fields, int line_no) {
    std::vector<bool> spines = spines_;
    std::vector<size_t> exchange;
    for (size_t k = 0; k < fields.size(); ++k) {
      if (fields[k].text == U"*x") exchange.push_back(k);
    }
    if (exchange.size() == 2) {
      std::swap(spines[exchange[0]], spines[exchange[1]]);
    } else if (!exchange.empty()) {
      report_.Add(line_no, fields[exchange[0]].column, "SPINE_MANIP", "*x needs exactly two spines");
    }

    std::vector<bool> next;
    size_t k = 0;
    while (k < fields.size()) {
      const std::u32string_view f = fields[k].text;
      if (f == U"*^") {
        next.push_back(spines[k]);
        next.push_back(spines[k]);
        ++k;
      } else if (f == U"*v") {
        size_t j = k;
        while (j < fields.size() && fields[j].text == U"*v") ++j;
        if (j - k == 1) {
          report_.Add(line_no, fields[k].column, "SPINE_MANIP", "*v needs an adjacent *v to join with");
        } else if (std::any_of(spines.begin() + static_cast<long>(k), spines.begin() + static_cast<long>(j),
                               [&](bool kern) { return kern != spines[k]; })) {
          report_.Add(line_no, fields[k].column, "SPINE_MANIP", "*v joins spines of different types");
        }
        next.push_back(spines[k]);
        k = j;
      } else if (f == U"*-") {
        ++k;
      } else if (f == U"*+") {
        report_.Add(line_no, fields[k].column, "UNSUPPORTED", "*+ adds a spine; not supported");
        next.push_back(spines[k]);
        ++k;
      } else if (f.starts_with(U"**")) {
        next.push_back(f == U"**kern");
        ++k;
      } else {
        next.push_back(spines[k]);
        ++k;
      }
    }
    spines_ = std::move(next);
    if (spines_.empty()) ended_ = true;
  }

  std::vector<bool> spines_;  // true for **kern spines
  bool started_ = false;
  bool ended_ = false;
  ValidationReport report_;
};

}  // namespace

ValidationReport ValidateKern(std::string_view text) { return KernChecker().Run(text); }

}  // namespace ocrkit
