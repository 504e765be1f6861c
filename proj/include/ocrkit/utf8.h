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
#ifndef OCRKIT_UTF8_H_
#define OCRKIT_UTF8_H_

#include <string>
#include <string_view>
#include <vector>

namespace ocrkit {

// Decodes UTF-8 into scalar values. Ill-formed sequences decode to U+FFFD.
std::u32string DecodeUtf8(std::string_view text);

void AppendUtf8(std::string& out, char32_t c);

// NFC normalization. Ill-formed input is repaired with U+FFFD first.
std::string NormalizeNfc(std::string_view text);

bool IsUnicodeWhitespace(char32_t c);

// Han, Hiragana, Katakana and Bopomofo letters plus the CJK punctuation and
// fullwidth-form blocks. Hangul is excluded: Korean text is space-delimited.
bool IsCjk(char32_t c);

// Number of scalar values in text (ill-formed bytes count one each).
size_t CodePointCount(std::string_view text);

// Splits on '\n' after dropping a '\r' that immediately precedes it. A
// trailing newline does not produce an extra empty line.
std::vector<std::string_view> SplitLines(std::string_view text);

}  // namespace ocrkit

#endif  // OCRKIT_UTF8_H_
