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

#include "coalg/bialgebra.hpp"

using namespace coalg;

namespace {

const Ring Z = RingSpec::integers();
const Ring Q = RingSpec::rationals();
const Ring Z4 = RingSpec::modular(4);

Element E(const BialgebraPtr& b, const char* text) { return parse_element(b, text); }
Tensor T2(const Element& a, const Element& b) { return Tensor::pure({a, b}); }

// (Delta applied to one leg) of a tensor.
Tensor delta_at(const Tensor& t, std::size_t leg)
{
    const Bialgebra& b = *t.bialgebra();
    Tensor out(t.bialgebra(), t.arity() + 1);
    for (const auto& [key, c] : t.terms()) {
        const Tensor split = b.coproduct(key[leg]);
        for (const auto& [pair, d] : split.terms()) {
            TensorKey k(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(leg));
            k.push_back(pair[0]);
            k.push_back(pair[1]);
            k.insert(k.end(), key.begin() + static_cast<std::ptrdiff_t>(leg) + 1, key.end());
            out.add_term(k, c * d);
        }
    }
    return out;
}

// Contracts one leg of a 2-tensor with the counit.
Element counit_at(const Tensor& t, std::size_t leg)
{
    const Bialgebra& b = *t.bialgebra();
    Element out(t.bialgebra());
    for (const auto& [key, c] : t.terms()) {
        out.add_term(key[1 - leg], c * b.counit(key[leg]));
    }
    return out;
}

std::vector<BialgebraPtr> family_zoo()
{
    const Ring qq = RingSpec::poly(Q, {"q"});
    return {
        polynomial_primitive(Q, 8),
        infiltration(Z4, Scalar::from_int(Z4, 2), 8),
        infiltration(qq, Scalar::variable(qq, "q"), 6),
        frobenius_quotient(RingSpec::modular(3), 3, Scalar::one(RingSpec::modular(3))),
        gx_quotient(Q, 6),
        trace_monoid_bialgebra(Z, TraceMonoid({"x", "y"}, {{"x", "y"}}), 4),
        trace_monoid_bialgebra(Z4, TraceMonoid::free({"x", "y"}), 4),
        finite_monoid_bialgebra(RingSpec::modular(6), FiniteMonoid::cyclic_group(3)),
        integer_group_bialgebra(Q, 4),
        tensor_conc(Q, {"a", "b"}, 5),
        tensor_product_bialgebra(integer_group_bialgebra(Q, 3), polynomial_primitive(Q, 3)),
    };
}

} // namespace

TEST_CASE("family structure examples")
{
    const auto inf = infiltration(Z4, Scalar::from_int(Z4, 2), 6);
    const Element x = E(inf, "x"), one = Element::one(inf);
    CHECK(delta(x) == T2(x, one) + T2(one, x) + T2(x, x).scaled(Scalar::from_int(Z4, 2)));

    const auto freex = trace_monoid_bialgebra(Q, TraceMonoid::free({"x"}), 6);
    for (int n = 0; n <= 6; ++n) {
        const Element w = E(freex, "x").pow(static_cast<unsigned>(n));
        CHECK(delta(w) == T2(w, w));
        CHECK(counit(w).is_one());
    }

    const auto gx = gx_quotient(Q, 4);
    CHECK((E(gx, "g") * E(gx, "x")).is_zero());
    CHECK(counit(E(gx, "g")).is_one());

    const Ring f3 = RingSpec::modular(3);
    const auto frob = frobenius_quotient(f3, 3, Scalar::one(f3));
    CHECK((E(frob, "x^2") * E(frob, "x")).is_zero());

    const auto pol = polynomial_primitive(Q, 4);
    CHECK(E(pol, "1 + x") * E(pol, "1 - x") == E(pol, "1 - x^2"));
    CHECK(counit(Element::zero(pol)).is_zero());
}

TEST_CASE("infiltration coproducts over Q[q]")
{
    const Ring qq = RingSpec::poly(Q, {"q"});
    const auto b = infiltration(qq, Scalar::variable(qq, "q"), 6);
    const Element g = E(b, "1 + q*x");
    CHECK(delta(g) == T2(g, g));
    CHECK(counit(g).is_one());

    const Element x = E(b, "x"), x2 = E(b, "x^2"), one = Element::one(b);
    const Scalar q = Scalar::variable(qq, "q");
    const Scalar two = Scalar::from_int(qq, 2);
    const Tensor expected = T2(x2, one) + T2(x, x).scaled(two) + T2(one, x2) + T2(x2, x).scaled(two * q) +
                            T2(x, x2).scaled(two * q) + T2(x2, x2).scaled(q * q);
    CHECK(delta(x2) == expected);
}

TEST_CASE("iterated coproducts")
{
    const auto pol = polynomial_primitive(Q, 4);
    const Element x = E(pol, "x"), one = Element::one(pol);
    CHECK(std::get<Tensor>(iterated_delta(x, 0)) == Tensor::pure({x}));
    CHECK(std::get<Tensor>(iterated_delta(x, 2)) ==
          Tensor::pure({x, one, one}) + Tensor::pure({one, x, one}) + Tensor::pure({one, one, x}));
    CHECK(std::get<Scalar>(iterated_delta(E(pol, "3 + x"), -1)) == Scalar::from_int(Q, 3));

    const Ring qq = RingSpec::poly(Q, {"q"});
    const auto inf = infiltration(qq, Scalar::variable(qq, "q"), 6);
    const Element g = E(inf, "1 + q*x");
    CHECK(iterated_delta_tensor(g, 2) == Tensor::power(g, 3));
    CHECK_THROWS_AS(iterated_delta(g, -2), Error);
}

TEST_CASE("grouplike tests")
{
    CHECK(is_grouplike(E(infiltration(Z4, Scalar::from_int(Z4, 2), 4), "1 + 2*x")));
    CHECK(is_grouplike(E(polynomial_primitive(Z4, 4), "1 + 2*x")));
    CHECK_FALSE(is_grouplike(E(polynomial_primitive(Q, 4), "x")));
    CHECK_FALSE(is_grouplike(E(polynomial_primitive(Q, 4), "1 + 2*x")));

    const auto c2q = finite_monoid_bialgebra(Q, FiniteMonoid::cyclic_group(2));
    CHECK(monoid_grouplike_criterion(E(c2q, "1")));
    CHECK_FALSE(monoid_grouplike_criterion(E(c2q, "1/2*1 + 1/2*g")));
    CHECK_FALSE(is_grouplike(E(c2q, "1/2*1 + 1/2*g")));

    const Ring z6 = RingSpec::modular(6);
    const auto c2 = finite_monoid_bialgebra(z6, FiniteMonoid::cyclic_group(2));
    const Element e = E(c2, "3*1 + 4*g");
    CHECK(monoid_grouplike_criterion(e));
    CHECK(is_grouplike(e));
}

TEST_CASE("orthogonal-idempotent criterion agrees with the grouplike test")
{
    const Ring z6 = RingSpec::modular(6);
    const auto b = finite_monoid_bialgebra(z6, FiniteMonoid::cyclic_group(3));
    // All 6^3 coefficient vectors.
    int agree = 0;
    for (int a = 0; a < 6; ++a) {
        for (int c = 0; c < 6; ++c) {
            for (int d = 0; d < 6; ++d) {
                Element e(b);
                e.add_term(BasisIndex::word({0}), Scalar::from_int(z6, a));
                e.add_term(BasisIndex::word({1}), Scalar::from_int(z6, c));
                e.add_term(BasisIndex::word({2}), Scalar::from_int(z6, d));
                REQUIRE(monoid_grouplike_criterion(e) == is_grouplike(e));
                agree += is_grouplike(e) ? 1 : 0;
            }
        }
    }
    // Either one coefficient is 1, or 1 = 3 + 4 on two distinct elements.
    CHECK(agree == 3 + 6);
}

TEST_CASE("tensor product bialgebra")
{
    const auto zg = integer_group_bialgebra(Q, 3);
    const auto pol = polynomial_primitive(Q, 3);
    const auto b = tensor_product_bialgebra(zg, pol);
    const Element gx = E(b, "(g|x)"), g1 = E(b, "(g|1)");
    CHECK(delta(gx) == T2(gx, g1) + T2(g1, gx));
    CHECK(counit(g1).is_one());
    CHECK(is_grouplike(E(b, "(g^-2|1)")));
    CHECK_THROWS_AS(tensor_product_bialgebra(zg, polynomial_primitive(Z, 3)), Error);
}

TEST_CASE("truncation is enforced")
{
    const auto pol = polynomial_primitive(Q, 3);
    CHECK_THROWS_AS(E(pol, "x^4"), Error);
    try {
        (void)(E(pol, "x^2") * E(pol, "x^2"));
        FAIL("expected TruncationExceeded");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TruncationExceeded);
    }
    CHECK_THROWS_AS(frobenius_quotient(Q, 3, Scalar::one(Q)), Error);
    CHECK_THROWS_AS(frobenius_quotient(RingSpec::modular(4), 4, Scalar::one(RingSpec::modular(4))), Error);
}

TEST_CASE("coassociativity and counitality on every family")
{
    for (const auto& b : family_zoo()) {
        CAPTURE(b->describe());
        const int top = b->truncation() ? std::min(*b->truncation(), 5) : 8;
        for (const auto& i : b->basis(top)) {
            const Tensor d = b->coproduct(i);
            REQUIRE(delta_at(d, 0) == delta_at(d, 1));
            const Element e = Element::basis(b, i);
            REQUIRE(counit_at(d, 0) == e);
            REQUIRE(counit_at(d, 1) == e);
        }
    }
}

TEST_CASE("coproduct and counit are unital algebra maps")
{
    testing::Rng rng(5);
    for (const auto& b : family_zoo()) {
        CAPTURE(b->describe());
        const Element one = Element::one(b);
        REQUIRE(delta(one) == T2(one, one));
        REQUIRE(counit(one).is_one());
        const int half = b->family() == Family::TensorProduct ? 1 : b->truncation() ? *b->truncation() / 2 : 8;
        for (int trial = 0; trial < 30; ++trial) {
            const Element x = testing::random_element(rng, b, half);
            const Element y = testing::random_element(rng, b, half);
            REQUIRE(delta(x * y) == delta(x) * delta(y));
            REQUIRE(counit(x * y) == counit(x) * counit(y));
        }
    }
}

TEST_CASE("iterated coproduct of grouplikes is a tensor power")
{
    const Ring qq = RingSpec::poly(Q, {"q"});
    const std::vector<Element> gs = {
        E(infiltration(qq, Scalar::variable(qq, "q"), 8), "1 + q*x"),
        E(infiltration(Z4, Scalar::from_int(Z4, 2), 8), "1 + 2*x"),
        E(gx_quotient(Q, 4), "g^3"),
        E(integer_group_bialgebra(Q, 4), "g^-1"),
        E(finite_monoid_bialgebra(RingSpec::modular(6), FiniteMonoid::cyclic_group(2)), "3*1 + 4*g"),
    };
    for (const auto& g : gs) {
        REQUIRE(is_grouplike(g));
        for (int k = 1; k <= 6; ++k) {
            REQUIRE(iterated_delta_tensor(g, k - 1) == Tensor::power(g, static_cast<std::size_t>(k)));
        }
    }
}

TEST_CASE("Frobenius quotient: the p-th power of Delta(x) vanishes")
{
    for (int p : {2, 3, 5}) {
        const Ring fp = RingSpec::modular(p);
        for (int q = 0; q < p; ++q) {
            const auto b = frobenius_quotient(fp, p, Scalar::from_int(fp, q));
            const Tensor dx = delta(E(b, "x"));
            Tensor pw = Tensor::power(Element::one(b), 2);
            for (int k = 0; k < p; ++k) {
                pw = pw * dx;
            }
            CHECK(pw.is_zero());
        }
    }
}

TEST_CASE("element regularity")
{
    const auto gx = gx_quotient(Q, 4);
    auto r = is_regular(E(gx, "g"));
    REQUIRE(r.status == Regularity::Status::ZeroDivisor);
    CHECK(*r.witness == E(gx, "x"));
    CHECK(is_regular(E(gx, "g - 1")).status == Regularity::Status::Regular);

    const auto zx = tensor_product_bialgebra(integer_group_bialgebra(Q, 3), polynomial_primitive(Q, 3));
    CHECK(is_regular(E(zx, "(g|1) - (1|1)")).status == Regularity::Status::Regular);

    const auto inf = infiltration(Z4, Scalar::from_int(Z4, 2), 4);
    r = is_regular(E(inf, "2*x"));
    REQUIRE(r.status == Regularity::Status::ZeroDivisor);
    CHECK((E(inf, "2*x") * *r.witness).is_zero());

    const Ring f3 = RingSpec::modular(3);
    const auto frob = frobenius_quotient(f3, 3, Scalar::one(f3));
    CHECK(is_regular(E(frob, "1 + x")).status == Regularity::Status::Regular);
    r = is_regular(E(frob, "x"));
    REQUIRE(r.status == Regularity::Status::ZeroDivisor);
    CHECK(*r.witness == E(frob, "x^2"));

    const auto c2 = finite_monoid_bialgebra(Q, FiniteMonoid::cyclic_group(2));
    r = is_regular(E(c2, "g - 1"));
    REQUIRE(r.status == Regularity::Status::ZeroDivisor);
    CHECK((E(c2, "g - 1") * *r.witness).is_zero());
    CHECK(is_regular(E(c2, "g + 2")).status == Regularity::Status::Regular);

    const auto c2z4 = finite_monoid_bialgebra(Z4, FiniteMonoid::cyclic_group(2));
    r = is_regular(E(c2z4, "g + 1"));
    REQUIRE(r.status == Regularity::Status::ZeroDivisor);
    CHECK((E(c2z4, "g + 1") * *r.witness).is_zero());

    CHECK_THROWS_AS(is_regular(E(tensor_conc(Q, {"a", "b"}, 3), "a")), Error);
}

TEST_CASE("element text round trip")
{
    for (const auto& b : family_zoo()) {
        testing::Rng rng(9);
        for (int trial = 0; trial < 20; ++trial) {
            const Element e = testing::random_element(rng, b, 3);
            CAPTURE(e.to_string());
            REQUIRE(parse_element(b, e.to_string()) == e);
        }
    }
}
