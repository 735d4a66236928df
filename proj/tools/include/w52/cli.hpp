// Copyright 2026 The w52 Authors
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


#ifndef W52_TOOLS_CLI_HPP
#define W52_TOOLS_CLI_HPP

#include <iosfwd>

namespace w52::cli {

enum ExitStatus : int {
    kSuccess = 0,
    kCheckFailed = 1,
    kUsageError = 2,
};

/// Runs the `w52` command line. All output goes to `out` and `err`, which
/// keeps the front end testable in-process.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace w52::cli

#endif
