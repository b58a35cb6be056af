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


// The acceptance suites: seeded, deterministic checks of the formulas and
// theorems on concrete instances, one suite per acceptance criterion.

#ifndef COALG_SUITES_HPP
#define COALG_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace coalg {

struct SuiteResult {
    std::string name;
    int criterion = 0;
    std::string title;
    bool passed = true;
    long cases = 0;
    // The first few failed cases, described.
    std::vector<std::string> failures;
};

// Suite names in criterion order; "all" runs every one of them.
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);
SuiteResult run_suite(const std::string& name, std::uint64_t seed);
std::vector<SuiteResult> run_suites(const std::string& name, std::uint64_t seed);

} // namespace coalg

#endif
