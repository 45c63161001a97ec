// Copyright 2026 The bentforge Authors.
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

#ifndef BENTFORGE_TOOLS_CLI_H_
#define BENTFORGE_TOOLS_CLI_H_

#include <cstdint>
#include <iosfwd>

namespace bentforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitHalted = 3;  // sweep stopped early on request

// The whole command line. Results go to `out` (or --out), diagnostics and
// summaries to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// The eleven worked parameter sets, with the m = 6 and m = 12 fields built
// from the given reduction polynomials.
int verify_examples(std::ostream& out, std::ostream& err, uint32_t poly6, uint32_t poly12, bool json);

}  // namespace bentforge::cli

#endif  // BENTFORGE_TOOLS_CLI_H_
