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

#include "coalg/error.hpp"
#include "coalg/series.hpp"

using namespace coalg;
using namespace coalg::testing;

namespace {

const Ring Q = RingSpec::rationals();
const Ring Z = RingSpec::integers();

Series P(const TraceMonoid& m, int length, const char* text) { return Series::parse(m, Q, length, text); }

// Every commutation graph on the given letters.
std::vector<TraceMonoid> all_graphs(const std::vector<std::string>& letters)
{
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        for (std::size_t j = i + 1; j < letters.size(); ++j) {
            pairs.emplace_back(letters[i], letters[j]);
        }
    }
    std::vector<TraceMonoid> out;
    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
        std::vector<std::pair<std::string, std::string>> edges;
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            if (mask & (1u << k)) {
                edges.push_back(pairs[k]);
            }
        }
        out.emplace_back(letters, edges);
    }
    return out;
}

Series random_series(Rng& rng, const TraceMonoid& m, int length, bool proper)
{
    Series s(m, Q, length);
    for (const auto& w : m.elements(length)) {
        if ((proper && w.empty()) || uniform(rng, 0, 2) == 0) {
            continue;
        }
        s.add_term(w, random_scalar(rng, Q, 1));
    }
    return s;
}

Scalar R(long p, long q) { return Scalar::from_rational(Q, mpq_class(p, q)); }

} // namespace

TEST_CASE("series: parsing and printing")
{
    const TraceMonoid m({"x", "y"}, {{"x", "y"}});
    const Series s = P(m, 3, "1 - x - y + x*y");
    CHECK(s.to_string() == "1 - x - y + x*y");
    CHECK(P(m, 3, "y*x").to_string() == "x*y");
    CHECK(P(m, 3, "1/2*x*x - 3").to_string() == "-3 + 1/2*x*x");
    CHECK(P(m, 3, "0").is_zero());
    CHECK_THROWS_AS(P(m, 1, "x*y"), Error);
    CHECK_THROWS_AS(P(m, 3, "z"), Error);
}

TEST_CASE("cauchy_product: examples and laws")
{
    const auto free = TraceMonoid::free({"x", "y"});
    CHECK(cauchy_product(P(free, 4, "x"), P(free, 4, "y")) == P(free, 4, "x*y"));
    const TraceMonoid ab({"x", "y"}, {{"x", "y"}});
    const Series sum = cauchy_product(P(ab, 4, "x"), P(ab, 4, "y")) + cauchy_product(P(ab, 4, "y"), P(ab, 4, "x"));
    CHECK(sum == P(ab, 4, "2*x*y"));

    Rng rng(7);
    for (const auto& m : all_graphs({"x", "y", "z"})) {
        const int l = 4;
        const Series one = Series::one(m, Q, l);
        for (int t = 0; t < 3; ++t) {
            const Series a = random_series(rng, m, l, false);
            const Series b = random_series(rng, m, l, false);
            const Series c = random_series(rng, m, l, false);
            CHECK(cauchy_product(a, one) == a);
            CHECK(cauchy_product(one, a) == a);
            CHECK(cauchy_product(cauchy_product(a, b), c) == cauchy_product(a, cauchy_product(b, c)));
            CHECK(cauchy_product(a, b) == cauchy_product_fibers(a, b));
            if (m.is_free_abelian()) {
                CHECK(cauchy_product(a, b) == cauchy_product(b, a));
            }
        }
    }
    CHECK_THROWS_AS(cauchy_product(P(free, 4, "x"), P(ab, 4, "x")), Error);
}

TEST_CASE("kleene_star: examples and the star recursion")
{
    const auto x = TraceMonoid::free({"x"});
    CHECK(kleene_star(Series::zero(x, Q, 3)) == Series::one(x, Q, 3));
    CHECK(kleene_star(P(x, 3, "x")) == P(x, 3, "1 + x + x^2 + x^3"));
    CHECK_THROWS_AS(kleene_star(P(x, 3, "1 + x")), Error);

    const auto free = TraceMonoid::free({"x", "y"});
    const Series star = kleene_star(P(free, 5, "2*x + 1/3*y"));
    CHECK(star == character_series({R(2, 1), R(1, 3)}, free, 5));

    Rng rng(9);
    for (const auto& m : all_graphs({"x", "y", "z"})) {
        for (int t = 0; t < 3; ++t) {
            const Series a = random_series(rng, m, 4, true);
            const Series s = kleene_star(a);
            CHECK(s == Series::one(m, Q, 4) + cauchy_product(a, s));
        }
    }
}

TEST_CASE("mobius: examples and inversion on every small graph")
{
    const auto free = TraceMonoid::free({"x", "y"});
    CHECK(mobius(free, Q, 6).to_string() == "1 - x - y");
    const auto ab = TraceMonoid::free_abelian({"x", "y"});
    CHECK(mobius(ab, Q, 6).to_string() == "1 - x - y + x*y");

    const auto xyz = TraceMonoid::free_abelian({"x", "y", "z"});
    const Series mu = mobius(xyz, Z, 6);
    for (const auto& w : xyz.elements(6)) {
        std::vector<int> count(3, 0);
        for (int l : w) {
            ++count[static_cast<std::size_t>(l)];
        }
        const bool square_free = count[0] <= 1 && count[1] <= 1 && count[2] <= 1;
        const Scalar want = square_free ? Scalar::from_int(Z, w.size() % 2 ? -1 : 1) : Scalar::zero(Z);
        CHECK(mu.coefficient(w) == want);
    }

    CHECK(verify_mobius_inverse(TraceMonoid::free({"x"}), Q, 3));
    CHECK(verify_mobius_inverse(free, Q, 5));
    CHECK(verify_mobius_inverse(ab, Q, 5));
    for (const auto& m : all_graphs({"a", "b", "c", "d"})) {
        CHECK(verify_mobius_inverse(m, Z, 6));
    }
}

TEST_CASE("character_series: Kleene form and multiplicativity")
{
    const auto ab = TraceMonoid::free_abelian({"x", "y"});
    const auto free = TraceMonoid::free({"x", "y"});
    Rng rng(13);
    for (int t = 0; t < 5; ++t) {
        const Scalar a = R(uniform(rng, -5, 5), uniform(rng, 1, 4));
        const Scalar b = R(uniform(rng, -5, 5), uniform(rng, 1, 4));
        Series gen_free(free, Q, 6), gen_ab(ab, Q, 6);
        gen_free.add_term(Word{0}, a);
        gen_free.add_term(Word{1}, b);
        gen_ab.add_term(Word{0}, a);
        gen_ab.add_term(Word{1}, b);
        gen_ab.add_term(Word{0, 1}, -(a * b));
        CHECK(character_series({a, b}, free, 6) == kleene_star(gen_free));
        CHECK(character_series({a, b}, ab, 6) == kleene_star(gen_ab));
    }
    const auto x = TraceMonoid::free({"x"});
    CHECK(character_series({R(3, 2)}, x, 5) == kleene_star(P(x, 5, "3/2*x")));
    CHECK(character_series({R(0, 1), R(0, 1)}, ab, 5) == Series::one(ab, Q, 5));

    for (const auto& m : all_graphs({"x", "y", "z"})) {
        const std::vector<Scalar> chi = {R(uniform(rng, -3, 3), 2), R(uniform(rng, -3, 3), 1), R(1, uniform(rng, 1, 3))};
        const Series s = character_series(chi, m, 8);
        CHECK(s == character_series_kleene(chi, m, 8));
        const auto words = m.elements(4);
        for (int t = 0; t < 20; ++t) {
            const Word& u = words[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(words.size()) - 1))];
            const Word& v = words[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(words.size()) - 1))];
            Word uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            CHECK(s.coefficient(uv) == s.coefficient(u) * s.coefficient(v));
        }
    }
}
