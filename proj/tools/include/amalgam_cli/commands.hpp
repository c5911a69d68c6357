// Copyright 2026 The Amalgam Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace amalgam::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kPrecondition = 2,
  kInfeasible = 3,
  kMalformed = 4,
};

/// Runs the command line `args` (without the program name). Documents and
/// reports go to `out`, diagnostics to `err`. "-" as a path means stdin.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace amalgam::cli
