// Copyright 2026 The arrcc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ARRCC_TOOLS_CLI_HPP
#define ARRCC_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace arrcc::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitMalformed = 2;

/// Environment variable read for the default --tol.
inline constexpr const char *kToleranceEnv = "ARRCC_TOL";

/// Runs one invocation. `args` excludes the program name. Reports go to
/// `out`, diagnostics and failure details to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace arrcc::cli

#endif  // ARRCC_TOOLS_CLI_HPP
