// Copyright 2026 The catseg Authors.
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

#ifndef CATSEG_TOOLS_CLI_H_
#define CATSEG_TOOLS_CLI_H_

#include <ostream>

namespace catseg {
namespace cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kInputError = 2;
inline constexpr int kValidationError = 3;

// Entry point of the catseg tool. Results go to `out` unless --output is
// given; diagnostics go to `err`.
int Run(int argc, const char *const *argv, std::ostream &out,
        std::ostream &err);

}  // namespace cli
}  // namespace catseg

#endif  // CATSEG_TOOLS_CLI_H_
