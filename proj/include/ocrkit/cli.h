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


// Command-line front end. Exposed as a library so tests can drive it without
// spawning processes.

#ifndef OCRKIT_CLI_H_
#define OCRKIT_CLI_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace ocrkit {

// Seed used by every randomized subcommand when --seed is not given.
inline constexpr uint64_t kDefaultSeed = 20240901;

// Environment variable that sets the default scoring worker count.
inline constexpr const char* kWorkersEnv = "OCRKIT_WORKERS";

// args excludes the program name. Returns the process exit status: 0 on
// success (and, for validate-format, only when the input is valid).
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ocrkit

#endif  // OCRKIT_CLI_H_
