// Copyright 2026 The pdhg-lp Authors
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


// Subcommands of the pdhg command-line tool.

#ifndef PDHG_TOOLS_COMMANDS_H_
#define PDHG_TOOLS_COMMANDS_H_

#include <ostream>
#include <string>
#include <vector>

namespace pdhg::tools {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitIterationLimit = 2;
inline constexpr int kExitStagnation = 3;

// Runs the tool on args (without the program name). Regular output goes to
// out, diagnostics to err.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace pdhg::tools

#endif  // PDHG_TOOLS_COMMANDS_H_
