// Copyright 2026 The tmc Authors
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

#ifndef _TMC_CLI_H
#define _TMC_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace tmc {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    EXIT_OK = 0,
    EXIT_NOT_EQUIVALENT = 1,
    EXIT_PARSE_ERROR = 2,
    EXIT_COMPILE_ERROR = 3,
    EXIT_VERIFICATION_FAILED = 4,
};

/// Runs the command line `args` (without the program name). Paths equal to
/// "-" read from `in` or write to `out`; diagnostics and metadata that have
/// no other destination go to `err`.
int run_cli(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

}  // namespace tmc

#endif
