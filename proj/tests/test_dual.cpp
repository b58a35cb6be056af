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

#include <algorithm>

#include "doctest.h"
#include "generators.hpp"

#include "coalg/dual.hpp"
#include "coalg/error.hpp"

using namespace coalg;
using namespace coalg::testing;

namespace {

const Ring Q = RingSpec::rationals();
const Ring Z = RingSpec::integers();

Scalar R(long p, long q = 1) { return Scalar::from_rational(Q, mpq_class(p, q)); }
Element E(const BialgebraPtr& b, const char* text) { return parse_element(b, text); }

// A random functional supported in degrees <= d.
Functional random_functional(Rng& rng, const BialgebraPtr& b, int d, int window)
{
    Functional f(b, Scalar::zero(b->ring()), window);
    for (const auto& i : b->basis(d)) {
        f.set(i, random_scalar(rng, b->ring(), 1));
    }
    return f;
}

Element random_augmented(Rng& rng, const BialgebraPtr& b, int d)
{
    Element u = random_element(rng, b, d);
    return u - Element::scalar(b, counit(u));
}

} // namespace

TEST_CASE("filtration_degree and shift: examples")
{
    const auto k = polynomial_primitive(Q, 12);
    CHECK(filtration_degree(neutral_like(k, Scalar::zero(Q), 6)) == 0);
    CHECK(filtration_degree(dual_basis_functional(k, k->parse("x"), 6)) == 1);
    CHECK(filtration_degree(Functional(k, Scalar::zero(Q), 6)) == -1);
    const auto gx = gx_quotient(Q, 4);
    CHECK_THROWS_AS(filtration_degree(Functional(gx, Scalar::zero(Q), 2)), Error);

    const Functional x2 = dual_basis_functional(k, k->parse("x^2"), 6);
    CHECK(shift(E(k, "x"), x2) == dual_basis_functional(k, k->parse("x"), 5));
    CHECK(shift(E(k, "x"), neutral_like(k, Scalar::zero(Q), 6)).table().empty());
    const Functional g = character(k, {R(3, 2)}, 8);
    CHECK(shift(E(k, "x"), g) == g.scaled(R(3, 2)));
    CHECK(shift(E(k, "x^7"), g).window() == 1);
    CHECK_THROWS_AS(shift(E(k, "x^9"), g), Error);
}

TEST_CASE("leibniz_shift_check")
{
    Rng rng(41);
    const auto k = polynomial_primitive(Q, 12);
    const auto inf = infiltration(Q, R(1), 12);
    const auto qq = RingSpec::poly(Q, {"q"});
    const auto infq = infiltration(qq, Scalar::variable(qq, "q"), 8);
    for (const auto& b : {k, inf, infq}) {
        CAPTURE(b->describe());
        for (int t = 0; t < 10; ++t) {
            const Functional f1 = random_functional(rng, b, 4, 8);
            const Functional f2 = random_functional(rng, b, 4, 8);
            CHECK(leibniz_shift_check(E(b, "x"), f1, f2));
            CHECK(leibniz_shift_check(random_augmented(rng, b, 3), f1, f2));
            const Functional eps = neutral_like(b, Scalar::zero(b->ring()), 8);
            CHECK(shift(E(b, "x"), convolve(f1, eps)) == shift(E(b, "x"), f1));
        }
    }
    const auto conc = tensor_conc(Q, {"a", "b"}, 6);
    for (int t = 0; t < 5; ++t) {
        const Functional f1 = random_functional(rng, conc, 3, 6);
        const Functional f2 = random_functional(rng, conc, 3, 6);
        CHECK(leibniz_shift_check(random_augmented(rng, conc, 2), f1, f2));
    }
    CHECK_THROWS_AS(leibniz_shift_check(E(k, "1 + x"), Functional(k, R(0), 4), Functional(k, R(0), 4)), Error);
}

TEST_CASE("filtration products, lowering and the shift action")
{
    Rng rng(43);
    const auto k = polynomial_primitive(Q, 12);
    const Functional xv = dual_basis_functional(k, k->parse("x"), 12);
    const auto r = verify_filtration_product(xv, xv);
    CHECK(r.degree_product == 2);
    CHECK(r.holds);
    const Functional eps = neutral_like(k, Scalar::zero(Q), 12);
    for (const auto& b : {k, infiltration(Q, R(2, 3), 12), infiltration(Z, Scalar::from_int(Z, -2), 12)}) {
        for (int t = 0; t < 20; ++t) {
            const Functional f = random_functional(rng, b, static_cast<int>(uniform(rng, 0, 5)), 12);
            const Functional g = random_functional(rng, b, static_cast<int>(uniform(rng, 0, 5)), 12);
            CHECK(verify_filtration_product(f, g).holds);
            const int d = filtration_degree(f);
            const Element u = random_augmented(rng, b, 2);
            if (d >= 0) {
                CHECK(filtration_degree(shift(u, f)) <= d - 1);
            }
            const Element v = random_augmented(rng, b, 2);
            CHECK(shift(u * v, f) == shift(u, shift(v, f)));
        }
    }
    const auto fe = verify_filtration_product(eps, xv);
    CHECK(fe.degree_product == 1);
}

TEST_CASE("characters: products and powers")
{
    const auto q0 = infiltration_character_product(R(2), R(5, 3), R(0), 10);
    CHECK(q0.equal);
    CHECK(q0.product == character(infiltration(Q, R(0), 10), {R(11, 3)}, 10));

    const auto ones = infiltration_character_product(R(1), R(1), R(1), 10);
    CHECK(ones.equal);
    CHECK(ones.expected.on(BasisIndex::monomial({2})) == R(9));
    const auto neutral = infiltration_character_product(R(-7, 2), R(0), R(3), 10);
    CHECK(neutral.equal);
    CHECK(neutral.product == character(infiltration(Q, R(3), 10), {R(-7, 2)}, 10));

    Rng rng(47);
    for (int t = 0; t < 10; ++t) {
        const Scalar a = R(uniform(rng, -5, 5), uniform(rng, 1, 3));
        const Scalar b = R(uniform(rng, -5, 5), uniform(rng, 1, 3));
        const Scalar q = R(uniform(rng, -3, 3), uniform(rng, 1, 3));
        const auto p = infiltration_character_product(a, b, q, 10);
        CHECK(p.equal);
        CHECK(is_character(p.product));
    }
    const auto k = polynomial_primitive(Q, 10);
    for (int n = 0; n <= 5; ++n) {
        const Scalar a = R(uniform(rng, -5, 5), uniform(rng, 1, 3));
        CHECK(conv_power(character(k, {a}, 10), n) == character(k, {a.scaled(n)}, 10));
    }
    const auto conc = tensor_conc(Q, {"a", "b"}, 6);
    for (int t = 0; t < 5; ++t) {
        const std::vector<Scalar> p1 = {R(uniform(rng, -3, 3)), R(uniform(rng, -3, 3), 2)};
        const std::vector<Scalar> p2 = {R(uniform(rng, -3, 3), 3), R(uniform(rng, -3, 3))};
        const Functional prod = convolve(character(conc, p1, 6), character(conc, p2, 6));
        CHECK(prod == character(conc, {p1[0] + p2[0], p1[1] + p2[1]}, 6));
        CHECK(is_character(prod));
    }
    CHECK(!is_character(dual_basis_functional(k, k->parse("x"), 4)));
    CHECK(character_invertible(R(5), R(0)));
    CHECK(!character_invertible(R(-1), R(1)));
}

TEST_CASE("character_independence_system")
{
    const auto k = polynomial_primitive(Q, 12);
    const auto s = character_independence_system(k, {{R(1)}, {R(2)}}, 2, 8);
    CHECK(s.trivial_only);
    CHECK(s.rows == 9);
    CHECK(s.columns == 6);
    CHECK(character_independence_system(k, {{R(0)}}, 3, 6).trivial_only);
    CHECK(character_independence_system(k, {{R(1)}, {R(2)}, {R(5)}}, 3, 12).trivial_only);

    const auto inf = infiltration(Q, R(1), 12);
    const auto w = character_independence_system(inf, {{R(-1)}}, 1, 12);
    REQUIRE(!w.trivial_only);
    CHECK(w.witness_verified);
    REQUIRE(w.witness.size() == 1);
    const Functional& f = w.witness[0];
    CHECK(f.on(inf->unit_index()).is_zero());
    CHECK(!f.on(BasisIndex::monomial({1})).is_zero());
    const Functional delta1 = dual_basis_functional(inf, BasisIndex::monomial({1}), 12);
    CHECK(convolve(delta1, character(inf, {R(-1)}, 12)).table().empty());

    const auto kz = polynomial_primitive(Z, 8);
    CHECK(character_independence_system(kz, {{Scalar::from_int(Z, 1)}, {Scalar::from_int(Z, 3)}}, 2, 8).trivial_only);
    const auto z4 = RingSpec::modular(4);
    CHECK_THROWS_AS(character_independence_system(polynomial_primitive(z4, 4), {{Scalar::one(z4)}}, 1, 4), Error);
    CHECK(!to_matrix_text(s).empty());

    const auto conc = tensor_conc(Q, {"a", "b"}, 5);
    CHECK(character_independence_system(conc, {{R(1), R(0)}, {R(0), R(1)}}, 1, 5).trivial_only);
}

TEST_CASE("monomial_map_injectivity")
{
    CHECK(monomial_map_injectivity({R(1)}, 3));
    CHECK(!monomial_map_injectivity({R(1), R(2)}, 3));
    CHECK(monomial_map_injectivity({R(1), R(10)}, 3));
    CHECK(!monomial_map_injectivity({R(1), R(10)}, 10));
}

TEST_CASE("finite duals: grouplikes against characters")
{
    const std::vector<Scalar> box = {R(-2), R(-1), R(-1, 2), R(0), R(1, 2), R(1), R(2)};
    auto sorted = [](std::vector<std::vector<Scalar>> v) {
        std::vector<std::string> out;
        for (const auto& row : v) {
            std::string s;
            for (const auto& c : row) {
                s += c.to_string() + ",";
            }
            out.push_back(s);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    for (int n = 1; n <= 3; ++n) {
        const FiniteAlgebra a = FiniteAlgebra::diagonal(Q, n);
        const auto chars = algebra_characters(a);
        CHECK(chars.size() == static_cast<std::size_t>(n));
        CHECK(sorted(chars) == sorted(finite_dual_grouplikes(finite_dual(a), box)));
    }
    const FiniteAlgebra dn = FiniteAlgebra::dual_numbers(Q);
    const auto chars = algebra_characters(dn);
    REQUIRE(chars.size() == 1);
    CHECK(chars[0][0] == R(1));
    CHECK(chars[0][1] == R(0));
    CHECK(sorted(chars) == sorted(finite_dual_grouplikes(finite_dual(dn), box)));

    const Ring f5 = RingSpec::modular(5);
    const FiniteAlgebra d5 = FiniteAlgebra::diagonal(f5, 3);
    CHECK(sorted(algebra_characters(d5)) == sorted(finite_dual_grouplikes(finite_dual(d5), {})));
}
