// Copyright 2026 The opendata-egt Authors
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

#ifndef EGT_TOOLS_CLI_HPP_
#define EGT_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace egt::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitDegenerate = 3;
inline constexpr int kExitDiverged = 4;

// Figure ids accepted by `reproduce`.
const std::vector<std::string>& ReproducibleFigures();

// Entry point shared by the egt binary and the tests. `args` excludes the
// program name.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace egt::cli

#endif  // EGT_TOOLS_CLI_HPP_
