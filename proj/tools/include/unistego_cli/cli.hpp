// Copyright 2026 The unistego Authors.
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

#ifndef UNISTEGO_CLI_CLI_HPP
#define UNISTEGO_CLI_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace unistego::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 2;
inline constexpr int kExitUnknownSymbol = 3;
inline constexpr int kExitConfig = 4;

/// Runs one command line.  args[0] is the program name.  The JSON summary
/// goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace unistego::cli

#endif  // UNISTEGO_CLI_CLI_HPP
