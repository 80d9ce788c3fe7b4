// Copyright 2026 The atrbench Authors.
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


#ifndef ATRBENCH_TOOLS_CLI_HPP_
#define ATRBENCH_TOOLS_CLI_HPP_

#include <ostream>

namespace atrbench::cli {

// Runs one command line. Output goes to out unless --out names a file.
// Returns 0 on success or certification, 1 when a counterexample or a
// refusal is reported, 2 on input or domain errors.
int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace atrbench::cli

#endif  // ATRBENCH_TOOLS_CLI_HPP_
