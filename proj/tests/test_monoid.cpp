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

#include "doctest.h"
#include "generators.hpp"

#include <set>

#include "coalg/monoid.hpp"

using namespace coalg;

namespace {

std::string nf(const TraceMonoid& m, const char* w) { return m.format(m.normal_form(m.parse_word(w))); }

} // namespace

TEST_CASE("normal form examples")
{
    CHECK(nf(TraceMonoid::free({"x", "y"}), "yx") == "yx");
    CHECK(nf(TraceMonoid({"x", "y"}, {{"x", "y"}}), "yx") == "xy");
    CHECK(nf(TraceMonoid::free_abelian({"x", "y", "z"}), "zyx") == "xyz");
    // y commutes with neither neighbour here, so nothing moves past it.
    const TraceMonoid path({"x", "y", "z"}, {{"x", "z"}});
    CHECK(nf(path, "zxy") == "xzy");
    CHECK(nf(path, "zyx") == "zyx");
    CHECK_THROWS_AS(TraceMonoid::free({"x"}).parse_word("xq"), Error);
}

TEST_CASE("normal form is idempotent and invariant under commuting swaps")
{
    testing::Rng rng(3);
    const TraceMonoid m({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"a", "d"}});
    for (int trial = 0; trial < 500; ++trial) {
        Word w(static_cast<std::size_t>(testing::uniform(rng, 0, 10)));
        for (auto& a : w) {
            a = static_cast<int>(testing::uniform(rng, 0, 3));
        }
        const Word n = m.normal_form(w);
        REQUIRE(m.normal_form(n) == n);
        REQUIRE(n.size() == w.size());
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (m.independent(w[i], w[i + 1])) {
                Word s = w;
                std::swap(s[i], s[i + 1]);
                REQUIRE(m.normal_form(s) == n);
            }
        }
    }
}

TEST_CASE("factorizations agree with brute-force products")
{
    const TraceMonoid m({"x", "y", "z"}, {{"x", "y"}});
    const auto elems = m.elements(4);
    for (const auto& w : elems) {
        std::set<std::pair<Word, Word>> brute;
        for (const auto& u : elems) {
            for (const auto& v : elems) {
                Word uv = u;
                uv.insert(uv.end(), v.begin(), v.end());
                if (m.normal_form(uv) == w) {
                    brute.insert({u, v});
                }
            }
        }
        const auto f = m.factorizations(w);
        REQUIRE(std::set<std::pair<Word, Word>>(f.begin(), f.end()) == brute);
        REQUIRE(f.size() == brute.size());
    }
}

TEST_CASE("cliques and element counts")
{
    CHECK(TraceMonoid::free({"x", "y"}).cliques().size() == 3);
    CHECK(TraceMonoid::free_abelian({"x", "y", "z"}).cliques().size() == 8);
    // Free abelian on two letters: length-n elements number n + 1.
    CHECK(TraceMonoid::free_abelian({"x", "y"}).elements(3).size() == 1 + 2 + 3 + 4);
    CHECK(TraceMonoid::free({"x", "y"}).elements(3).size() == 1 + 2 + 4 + 8);
}

TEST_CASE("finite monoids")
{
    const FiniteMonoid c2 = FiniteMonoid::cyclic_group(2);
    CHECK(c2.is_group());
    CHECK(c2.is_commutative());
    CHECK(c2.mul(1, 1) == c2.identity());

    CHECK_THROWS_AS(FiniteMonoid({"a", "b"}, {{1, 0}, {0, 0}}), Error);

    // Monoids of order 1..4 up to isomorphism: 1, 2, 7, 35 (OEIS A058129).
    CHECK(FiniteMonoid::enumerate(1).size() == 1);
    CHECK(FiniteMonoid::enumerate(2).size() == 2);
    CHECK(FiniteMonoid::enumerate(3).size() == 7);
    CHECK(FiniteMonoid::enumerate(4).size() == 35);
}
