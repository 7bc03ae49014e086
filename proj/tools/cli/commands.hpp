// Copyright 2026 The tfim-fidelity Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TFIM_CLI_COMMANDS_HPP
#define TFIM_CLI_COMMANDS_HPP

#include <iosfwd>

#include "tfim/error.hpp"

namespace tfim::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitRegime = 3;
inline constexpr int kExitNumerical = 4;

int exit_code_for(ErrorKind kind);

/// Parses and executes one command line. Data go to `out` (or the
/// --output file), diagnostics and run metadata to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tfim::cli

#endif  // TFIM_CLI_COMMANDS_HPP
