// Copyright 2026 The leafsep Authors
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

#pragma once

#include <iosfwd>

namespace leafsep {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitDomain = 1,  ///< non-separable input under --strict, invalid parameters
  kExitIo = 2,      ///< unreadable files, malformed JSON or circuit text, bad flags
};

/**
 * Entry point of the `leafsep` tool. Subcommands: synthesize, simulate,
 * check-separable, random-state, bench-fidelity, bench-cost. Machine output
 * goes to `out` (or files), diagnostics to `err`.
 */
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace leafsep
