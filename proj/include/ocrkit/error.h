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
#ifndef OCRKIT_ERROR_H_
#define OCRKIT_ERROR_H_

#include <stdexcept>
#include <string>

namespace ocrkit {

// Base class for every error raised by the library. The CLI maps any Error
// to a nonzero exit status and prints what().
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input. line and column are 1-based; column is 0 when the
// error applies to a whole line.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace ocrkit

#endif  // OCRKIT_ERROR_H_
