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


// Syntactic validators for the structured output formats. They are total:
// any UTF-8 input yields a report, never an exception. Positions are 1-based;
// columns count scalar values and may point one past the end of a line.
// CRLF line endings and trailing newlines do not affect the result.

#ifndef OCRKIT_VALIDATION_H_
#define OCRKIT_VALIDATION_H_

#include <string>
#include <string_view>
#include <vector>

namespace ocrkit {

struct ValidationIssue {
  int line = 1;
  int column = 1;
  std::string code;
  std::string message;

  friend bool operator==(const ValidationIssue&, const ValidationIssue&) = default;
};

struct ValidationReport {
  bool ok = true;  // == issues.empty()
  std::vector<ValidationIssue> issues;

  void Add(int line, int column, std::string code, std::string message);
};

// "LINE:COL CODE message"
std::string FormatIssue(const ValidationIssue& issue);

struct MathDelimiter {
  std::string open;
  std::string close;
};

struct MarkdownOptions {
  // Longest match wins, so "$$" is seen before a single "$" when both are
  // configured. Add {"$", "$"} to accept single-dollar inline math.
  std::vector<MathDelimiter> delimiters = {{"\\(", "\\)"}, {"\\[", "\\]"}, {"$$", "$$"}};
};

// Codes: MATH_UNCLOSED, MATH_UNOPENED, MATH_MISMATCH, ENV_UNCLOSED,
// ENV_UNOPENED, ENV_MISMATCH, TABLE_ARITY, CODE_FENCE_UNTERMINATED.
// Math may span lines; nothing inside code fences or code spans is checked.
// A table is a run of lines starting with '|'; every row, including the
// delimiter row, needs the header's cell count. "\|" is a literal pipe.
ValidationReport ValidateMathpixMarkdown(std::string_view text, const MarkdownOptions& options = {});

// Each non-blank line must parse as one element of the TikZ subset in
// geometry.h. Code: TIKZ_SYNTAX (plus EMPTY for a blank document).
ValidationReport ValidateTikz(std::string_view text);

// OpenSMILES syntax on a single line; anything after the first space or tab
// is a title and ignored. Codes: EMPTY, MULTILINE, ATOM_INVALID,
// BRACKET_INVALID, BRACKET_UNCLOSED, BOND_INVALID, PAREN_UNBALANCED,
// BRANCH_EMPTY, BRANCH_INVALID, RING_UNPAIRED, RING_INVALID. Ring-closure
// labels (digit or %nn) pair an opening with a closing occurrence and may be
// reused afterwards; when both ends carry a bond symbol they must agree.
ValidationReport ValidateSmiles(std::string_view text);

// Humdrum **kern, single-system scores. Records are tab-separated lines;
// "!!" lines are global comments and blank lines are ignored. Codes:
// EMPTY, NO_EXCLUSIVE, SPINE_ARITY, SPINE_MANIP, SPINE_UNTERMINATED,
// DATA_AFTER_END, EMPTY_FIELD, BARLINE, KERN_TOKEN, UNSUPPORTED (*+ and
// the !!linebreak / !!pagebreak system breaks).
//
// A kern data token is one or more space-separated subtokens, each
//
//   [([{&]*  digits ('%' digits)? '.'*  pitch  accidental?  suffix*
//
// where the duration is optional, pitch is 'r' (rest, possibly repeated) or
// one letter a-g / A-G repeated, accidental is '#'+, '-'+ or 'n', and each
// suffix character is an articulation, tie, slur, beam, stem or grace mark
// from the set  )]}_;LJKkTtMmWwSs$O'"`~^uv/\xXyYzZqQPpR:|<>HhNIo
// A lone "." is a null token.
ValidationReport ValidateKern(std::string_view text);

enum class FormatKind { kMarkdown, kTikz, kSmiles, kKern };

FormatKind ParseFormatKind(std::string_view name);  // throws Error
std::string_view FormatKindName(FormatKind kind);
ValidationReport ValidateFormat(FormatKind kind, std::string_view text);

}  // namespace ocrkit

#endif  // OCRKIT_VALIDATION_H_
