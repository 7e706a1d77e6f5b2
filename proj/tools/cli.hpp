// Copyright 2026 The ccopt Authors
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

#ifndef CCOPT_TOOLS_CLI_HPP_
#define CCOPT_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace ccopt::cli {

/// Exit statuses of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitConfig = 2;

/// Environment variable that, when set, is the directory relative output
/// prefixes are resolved against.
inline constexpr const char* kOutputDirEnv = "CCOPT_OUTPUT_DIR";

/// Parses `args` (without the program name) and runs the subcommand:
/// solve, scenario, bound, study or oracle. Results go to `out`, diagnostics
/// to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ccopt::cli

#endif  // CCOPT_TOOLS_CLI_HPP_
