/* Copyright 2026 The coalg Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */


// The command-line front end: one subcommand per computation, JSON on
// standard output and diagnostics on standard error.

#ifndef COALG_CLI_HPP
#define COALG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace coalg {

enum ExitCode { kExitOk = 0, kExitCheckFailed = 1, kExitInputError = 2 };

// argv[0] is the program name.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

// JSON with sorted keys and ", " / ": " separators.
std::string render(const nlohmann::json& j);

} // namespace coalg

#endif
