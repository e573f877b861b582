// Copyright 2026 The Whiteboard Authors. All Rights Reserved.
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


#ifndef WHITEBOARD_CLI_HPP_
#define WHITEBOARD_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace whiteboard::cli {

enum ExitCode : int {
  kOk = 0,
  kPropertyViolated = 1,
  kDeadlock = 2,
  kUsageError = 3,
};

// Runs one subcommand (gen, run, sweep, audit, oracle). `args` excludes the
// program name. Data goes to `out`, diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace whiteboard::cli

#endif  // WHITEBOARD_CLI_HPP_
