// Copyright 2026 The RSVP Authors
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

#ifndef RSVP_TOOLS_CLI_H_
#define RSVP_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace rsvp::cli {

inline constexpr int kExitIsomorphic = 0;
inline constexpr int kExitNonIsomorphic = 1;
inline constexpr int kExitError = 2;

// Runs the `rsvp` command line. args[0] is the program name. Returns the
// process exit code; never calls exit().
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace rsvp::cli

#endif  // RSVP_TOOLS_CLI_H_
