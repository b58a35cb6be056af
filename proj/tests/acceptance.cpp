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


// Runs every acceptance suite and prints one PASS/FAIL line per criterion.

#include <cstdint>
#include <cstdio>
#include <string>

#include "coalg/suites.hpp"

int main(int argc, char** argv)
{
    const std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 42;
    bool all = true;
    for (const auto& r : coalg::run_suites("all", seed)) {
        std::printf("%s criterion %2d  %-13s %-46s %ld cases\n", r.passed ? "PASS" : "FAIL", r.criterion,
                    r.name.c_str(), r.title.c_str(), r.cases);
        for (const auto& f : r.failures) {
            std::printf("     %s\n", f.c_str());
        }
        all = all && r.passed;
    }
    return all ? 0 : 1;
}
