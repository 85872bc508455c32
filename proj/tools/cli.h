// Copyright 2026 The Authors.
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

#ifndef ASSORTMENT_TOOLS_CLI_H_
#define ASSORTMENT_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace assortment::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitAssertion = 4;
inline constexpr int kExitIo = 5;

// Runs `assort <args...>`. Documents without an output path go to `out`;
// failures print a JSON error object to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace assortment::cli

#endif  // ASSORTMENT_TOOLS_CLI_H_
