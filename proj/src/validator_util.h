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


// Shared pieces of the format validators.

#ifndef OCRKIT_SRC_VALIDATOR_UTIL_H_
#define OCRKIT_SRC_VALIDATOR_UTIL_H_

#include <string>
#include <string_view>
#include <vector>

namespace ocrkit::internal {

// Lines of text as scalar values, CRLF folded and trailing blank lines
// dropped, so a trailing newline never changes what a validator sees.
std::vector<std::u32string> ValidatorLines(std::string_view text);

bool IsBlank(std::u32string_view line);

std::string ToUtf8(std::u32string_view text);

}  // namespace ocrkit::internal

#endif  // OCRKIT_SRC_VALIDATOR_UTIL_H_
