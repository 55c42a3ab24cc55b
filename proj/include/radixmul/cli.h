// Copyright 2026 The radixmul Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RADIXMUL_CLI_H_
#define RADIXMUL_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace radixmul {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCorrectness = 1;
inline constexpr int kExitUsage = 2;

// Entry point for the radixmul tool. `args` excludes the program name.
// Subcommands: mul, verify, sweep, compare.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace radixmul

#endif  // RADIXMUL_CLI_H_
