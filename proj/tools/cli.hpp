// Copyright 2026 The becc Authors
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

#ifndef BECC_TOOLS_CLI_HPP_
#define BECC_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace becc {

// Command-line frontend, separated from main() so tests can drive it
// in-process. Returns the exit status: 0 success, 2 usage error,
// 3 validation failure, 4 I/O error.
int cli_run(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace becc

#endif  // BECC_TOOLS_CLI_HPP_
