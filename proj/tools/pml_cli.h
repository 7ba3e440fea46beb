// Copyright 2026 The PML Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PML_TOOLS_PML_CLI_H_
#define PML_TOOLS_PML_CLI_H_

#include <ostream>

namespace pml::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitViolation = 2;

inline constexpr char kVersion[] = "1.0.0";

// Runs one subcommand (analyze, thm3, bob, oracle, dp-check). Tables go to
// --out when given, otherwise to `out`; diagnostics go to `err`.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace pml::cli

#endif  // PML_TOOLS_PML_CLI_H_
