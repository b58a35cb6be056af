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

#include "coalg/convolution.hpp"
#include "coalg/error.hpp"
#include "coalg/sequences.hpp"

using namespace coalg;
using namespace coalg::testing;

namespace {

const Ring Z = RingSpec::integers();
const Ring Q = RingSpec::rationals();
const Ring Z4 = RingSpec::modular(4);
const Ring F3 = RingSpec::modular(3);
const Ring QQ = RingSpec::poly(Q, {"q"});

Element E(const BialgebraPtr& b, const char* text) { return parse_element(b, text); }

LinearMap random_map(Rng& rng, const BialgebraPtr& b, int window, int value_degree)
{
    return tabulate<Element>(b, Element::zero(b), window,
                             [&](const BasisIndex&) { return random_element(rng, b, value_degree, 2); });
}

Functional random_functional(Rng& rng, const BialgebraPtr& b, int window)
{
    return tabulate<Scalar>(b, Scalar::zero(b->ring()), window,
                            [&](const BasisIndex&) { return random_scalar(rng, b->ring(), 2); });
}

// Families with room for products of random elements of degree `small`.
struct Case {
    BialgebraPtr b;
    int small;
};

std::vector<Case> product_zoo()
{
    return {
        {polynomial_primitive(Q, 12), 2},
        {infiltration(Z4, Scalar::from_int(Z4, 2), 12), 2},
        {infiltration(QQ, Scalar::variable(QQ, "q"), 12), 2},
        {frobenius_quotient(F3, 3, Scalar::one(F3)), 2},
        {gx_quotient(Q, 12), 2},
        {trace_monoid_bialgebra(Z, TraceMonoid::free_abelian({"x", "y"}), 12), 2},
        {trace_monoid_bialgebra(Z4, TraceMonoid::free({"x", "y"}), 10), 2},
        {finite_monoid_bialgebra(RingSpec::modular(6), FiniteMonoid::cyclic_group(3)), 0},
        {integer_group_bialgebra(Q, 12), 2},
        {tensor_conc(Q, {"a", "b"}, 6), 2},
        {tensor_product_bialgebra(integer_group_bialgebra(Q, 12), polynomial_primitive(Q, 12)), 2},
    };
}

// Sums sum_i c_i e_i for integer coefficients.
Element combination(const BialgebraPtr& b, const std::vector<std::pair<mpz_class, Element>>& terms)
{
    Element out(b);
    for (const auto& [c, e] : terms) {
        out += times_integer(e, c);
    }
    return out;
}

} // namespace

TEST_CASE("convolution: neutral element and examples")
{
    Rng rng(11);
    const auto b = infiltration(QQ, Scalar::variable(QQ, "q"), 8);
    for (int t = 0; t < 20; ++t) {
        const LinearMap f = random_map(rng, b, 8, 8);
        CHECK(convolve(f, eta_eps(b, 8)) == f);
        CHECK(convolve(eta_eps(b, 8), f) == f);
    }

    const Element g = E(b, "1 + q*x");
    const LinearMap id = identity_map(b, 1);
    CHECK(convolve(id, id)(g) == g * g);

    const auto k = polynomial_primitive(Q, 6);
    const Functional xv = dual_basis_functional(k, k->parse("x"), 2);
    const Functional expect = dual_basis_functional(k, k->parse("x^2"), 2).scaled(Scalar::from_int(Q, 2));
    CHECK(convolve(xv, xv) == expect);

    CHECK_THROWS_AS(convolve(identity_map(b, 2), identity_map(k, 2)), Error);
}

TEST_CASE("convolution: powers of id")
{
    const auto b = infiltration(QQ, Scalar::variable(QQ, "q"), 8);
    const Scalar q = Scalar::variable(QQ, "q");
    CHECK(conv_power(identity_map(b, 3), 0) == eta_eps(b, 3));
    for (int n = 0; n <= 6; ++n) {
        const Element got = conv_power(identity_map(b, 1), n)(E(b, "x"));
        Element want(b);
        for (int k = 1; k <= n; ++k) {
            want += Element::basis(b, b->parse("x^" + std::to_string(k)), q.pow(static_cast<unsigned long>(k - 1)))
                        .scaled(Scalar::from_int(QQ, binomial(n, k)));
        }
        CHECK(got == want);
    }
    const auto m = finite_monoid_bialgebra(Q, FiniteMonoid::cyclic_group(5));
    const Element g = E(m, "g2");
    CHECK(conv_power(identity_map(m, 0), 3)(g) == g.pow(3));
    CHECK_THROWS_AS(conv_power(identity_map(m, 0), -1), Error);
}

TEST_CASE("convolution: (eta eps - id)^n on x")
{
    const auto b = infiltration(QQ, Scalar::variable(QQ, "q"), 8);
    const Scalar mq = -Scalar::variable(QQ, "q");
    const auto values = eta_eps_minus_id_powers(E(b, "x"), 8);
    for (int n = 1; n <= 8; ++n) {
        const Element want = -Element::basis(b, b->parse("x^" + std::to_string(n)), mq.pow(static_cast<unsigned long>(n - 1)));
        CHECK(values[static_cast<std::size_t>(n)] == want);
        CHECK(eta_eps_minus_id_power(E(b, "x"), n) == want);
    }

    const auto f = frobenius_quotient(F3, 3, Scalar::one(F3));
    for (int n = 3; n <= 10; ++n) {
        CHECK(eta_eps_minus_id_power(E(f, "x"), n).is_zero());
    }
    CHECK(eta_eps_minus_id_power(E(f, "x"), 2) == E(f, "x^2"));
    for (const auto& c : product_zoo()) {
        CHECK(eta_eps_minus_id_power(Element::one(c.b), 1).is_zero());
    }
}

TEST_CASE("convolution: delta_plus and mu_iterated")
{
    const auto k = polynomial_primitive(Q, 6);
    CHECK(delta_plus(E(k, "x"), 1).is_zero());
    CHECK(delta_plus(Element::one(k), 0).is_zero());

    const auto m = trace_monoid_bialgebra(Q, TraceMonoid::free({"g"}), 4);
    const Element g = E(m, "g");
    const Element gm1 = g - Element::one(m);
    CHECK(delta_plus(g, 1) == Tensor::pure({gm1, gm1}));

    CHECK(mu_iterated(Tensor::pure({E(k, "x"), Element::one(k), E(k, "x")})) == E(k, "x^2"));
    CHECK(mu_iterated(Tensor::power(g, 3)) == g.pow(3));
    const auto gx = gx_quotient(Q, 4);
    CHECK(mu_iterated(Tensor::pure({E(gx, "g"), E(gx, "x")})).is_zero());
}

TEST_CASE("sequences: binomial transform and m-polynomiality")
{
    const std::vector<mpz_class> delta0 = {1, 0, 0, 0, 0};
    CHECK(binomial_transform(delta0) == std::vector<mpz_class>{1, 1, 1, 1, 1});
    const std::vector<mpq_class> cs(6, mpq_class(3, 7));
    const auto bc = binomial_transform(cs);
    CHECK(bc[0] == mpq_class(3, 7));
    for (std::size_t i = 1; i < bc.size(); ++i) {
        CHECK(bc[i] == 0);
    }
    CHECK(binomial_transform(std::vector<mpz_class>{}).empty());

    std::vector<mpz_class> choose2, squares;
    for (long n = 0; n <= 12; ++n) {
        choose2.push_back(binomial(n, 2));
        squares.push_back(n * n);
    }
    const auto r = is_m_polynomial(choose2, 2);
    CHECK(r.holds);
    CHECK(r.witness == std::vector<mpz_class>{0, 0, 1});
    squares.resize(9);
    const auto s = is_m_polynomial(squares, 1);
    CHECK(!s.holds);
    CHECK(s.fails_at == 2);
    CHECK(is_m_polynomial(squares, 2).holds);
    CHECK(is_m_polynomial(std::vector<mpz_class>{0, 0, 0}, -1).holds);
}

TEST_CASE("sequences: involution, product identity and products of polynomial sequences")
{
    Rng rng(5);
    for (int t = 0; t < 50; ++t) {
        std::vector<mpz_class> a;
        const long len = uniform(rng, 0, 20);
        for (long i = 0; i < len; ++i) {
            a.push_back(uniform(rng, -1000, 1000));
        }
        CHECK(binomial_transform(binomial_transform(a)) == a);
    }
    for (long m = 0; m <= 10; ++m) {
        for (long a = 0; a <= 10; ++a) {
            for (long b = 0; b <= 10; ++b) {
                mpz_class rhs = 0;
                for (long i = 0; i <= m; ++i) {
                    rhs += binomial(i, a) * binomial(a, a + b - i) * binomial(m, i);
                }
                CHECK(binomial(m, a) * binomial(m, b) == rhs);
            }
        }
    }
    for (int p = 0; p <= 3; ++p) {
        for (int q = 0; q <= 3; ++q) {
            std::vector<mpz_class> cp, cq;
            for (int i = 0; i <= p; ++i) {
                cp.push_back(uniform(rng, -5, 5));
            }
            cp.back() = uniform(rng, 1, 5);
            for (int i = 0; i <= q; ++i) {
                cq.push_back(uniform(rng, -5, 5));
            }
            cq.back() = uniform(rng, 1, 5);
            std::vector<mpz_class> a, b, ab;
            for (long n = 0; n <= 12; ++n) {
                a.push_back(evaluate_binomial_basis(cp, n, mpz_class(0)));
                b.push_back(evaluate_binomial_basis(cq, n, mpz_class(0)));
                ab.push_back(a.back() * b.back());
            }
            CHECK(is_m_polynomial(a, p).holds);
            CHECK(!is_m_polynomial(a, p - 1).holds);
            const auto r = is_m_polynomial(ab, p + q);
            REQUIRE(r.holds);
            for (long n = 0; n <= 12; ++n) {
                CHECK(evaluate_binomial_basis(r.witness, n, mpz_class(0)) == ab[static_cast<std::size_t>(n)]);
            }
        }
    }
}

TEST_CASE("degree_upper_bound: examples")
{
    const auto b = infiltration(Z4, Scalar::from_int(Z4, 2), 16);
    const DegreeBound r = degree_upper_bound(E(b, "x"), 10);
    CHECK(r.bound == 2);
    CHECK(r.mode == DegreeBound::Mode::Certified);

    const auto f = frobenius_quotient(F3, 3, Scalar::one(F3));
    const DegreeBound s = degree_upper_bound(E(f, "x"), 10);
    CHECK(s.bound == 2);
    CHECK(s.mode == DegreeBound::Mode::Certified);

    for (const auto& c : product_zoo()) {
        CAPTURE(c.b->describe());
        const DegreeBound one = degree_upper_bound(Element::one(c.b), 6);
        CHECK(one.bound == 0);
        CHECK(one.mode == DegreeBound::Mode::Certified);
        CHECK(degree_upper_bound(Element::zero(c.b), 6).bound == -1);
    }

    const auto qq = infiltration(QQ, Scalar::variable(QQ, "q"), 8);
    const DegreeBound none = degree_upper_bound(E(qq, "x"), 6);
    CHECK(!none.bound);

    const auto laurent = integer_group_bialgebra(Q, 12);
    const DegreeBound g = degree_upper_bound(E(laurent, "g"), 6);
    CHECK(!g.bound);
}

TEST_CASE("convolution: associativity and neutrality per family")
{
    Rng rng(21);
    for (const auto& c : product_zoo()) {
        CAPTURE(c.b->describe());
        const int window = std::min(2, c.small);
        const int vd = c.b->truncation() ? *c.b->truncation() / 3 : 2;
        for (int t = 0; t < 4; ++t) {
            const LinearMap f = random_map(rng, c.b, window, vd);
            const LinearMap g = random_map(rng, c.b, window, vd);
            const LinearMap h = random_map(rng, c.b, window, vd);
            CHECK(convolve(convolve(f, g), h) == convolve(f, convolve(g, h)));
            CHECK(convolve(eta_eps(c.b, window), f) == f);
            const Functional u = random_functional(rng, c.b, window);
            const Functional v = random_functional(rng, c.b, window);
            const Functional w = random_functional(rng, c.b, window);
            CHECK(convolve(convolve(u, v), w) == convolve(u, convolve(v, w)));
        }
    }
    const auto dual = finite_dual(FiniteAlgebra::dual_numbers(Q));
    for (int t = 0; t < 10; ++t) {
        const Functional u = random_functional(rng, dual, 0);
        const Functional v = random_functional(rng, dual, 0);
        const Functional w = random_functional(rng, dual, 0);
        CHECK(convolve(convolve(u, v), w) == convolve(u, convolve(v, w)));
        CHECK(convolve(neutral_like(dual, Scalar::zero(Q), 0), u) == u);
    }
}

TEST_CASE("convolution: products of algebra maps are algebra maps")
{
    Rng rng(8);
    const auto k = polynomial_primitive(Q, 12);
    for (int t = 0; t < 30; ++t) {
        auto hom = [&]() {
            const Element img = Element::scalar(k, random_scalar(rng, Q, 1)) +
                                Element::basis(k, k->parse("x"), random_scalar(rng, Q, 1));
            return tabulate<Element>(k, Element::zero(k), 3,
                                     [&](const BasisIndex& i) { return img.pow(static_cast<unsigned>(i.weight())); });
        };
        const LinearMap p = hom(), q = hom();
        const LinearMap pq = convolve(p, q);
        const Element a = random_element(rng, k, 1), b = random_element(rng, k, 1);
        CHECK(pq(a * b) == pq(a) * pq(b));
        CHECK(pq(Element::one(k)) == Element::one(k));
    }
    const auto laurent = integer_group_bialgebra(Q, 12);
    for (int s = -1; s <= 2; ++s) {
        for (int r = -1; r <= 2; ++r) {
            auto hom = [&](int e) {
                return tabulate<Element>(laurent, Element::zero(laurent), 2, [&](const BasisIndex& i) {
                    return Element::basis(laurent, BasisIndex::monomial({e * i.exponents()[0]}));
                });
            };
            const LinearMap pq = convolve(hom(s), hom(r));
            for (int a = -1; a <= 1; ++a) {
                for (int b = -1; b <= 1; ++b) {
                    const Element ea = Element::basis(laurent, BasisIndex::monomial({a}));
                    const Element eb = Element::basis(laurent, BasisIndex::monomial({b}));
                    CHECK(pq(ea * eb) == pq(ea) * pq(eb));
                    CHECK(pq(ea) == Element::basis(laurent, BasisIndex::monomial({(s + r) * a})));
                }
            }
        }
    }
}

TEST_CASE("convolution: id^k is an algebra map on commutative families")
{
    Rng rng(9);
    for (const auto& c : product_zoo()) {
        if (!c.b->is_commutative()) {
            continue;
        }
        CAPTURE(c.b->describe());
        const int d = std::min(c.small, 1);
        for (int t = 0; t < 3; ++t) {
            const Element a = random_element(rng, c.b, d), b = random_element(rng, c.b, d);
            const auto pa = id_powers(a, 5), pb = id_powers(b, 5), pab = id_powers(a * b, 5);
            for (std::size_t k = 0; k <= 5; ++k) {
                CHECK(pab[k] == pa[k] * pb[k]);
            }
        }
        for (const auto& g : c.b->basis(1)) {
            const Element e = Element::basis(c.b, g);
            if (is_grouplike(e)) {
                const auto powers = id_powers(e, 4);
                for (unsigned k = 0; k <= 4; ++k) {
                    CHECK(powers[k] == e.pow(k));
                }
            }
        }
    }
}

TEST_CASE("convolution: (eta eps - id)^n = (-1)^n mu o delta_plus")
{
    Rng rng(13);
    for (const auto& c : product_zoo()) {
        CAPTURE(c.b->describe());
        const int d = std::min(c.small, c.b->truncation() ? *c.b->truncation() / 5 : 2);
        for (int t = 0; t < 3; ++t) {
            const Element b = random_element(rng, c.b, d);
            const auto values = eta_eps_minus_id_powers(b, 5);
            for (int n = 1; n <= 5; ++n) {
                Element rhs = mu_iterated(delta_plus(b, n - 1));
                if (n % 2 == 1) {
                    rhs = -rhs;
                }
                CHECK(values[static_cast<std::size_t>(n)] == rhs);
            }
        }
    }
}

TEST_CASE("degree_upper_bound: generating identity and polynomiality")
{
    Rng rng(17);
    const std::vector<BialgebraPtr> zoo = {
        polynomial_primitive(Q, 12),
        infiltration(Z4, Scalar::from_int(Z4, 2), 24),
        frobenius_quotient(RingSpec::modular(5), 5, Scalar::from_int(RingSpec::modular(5), 2)),
        tensor_conc(Q, {"a", "b"}, 3),
    };
    const int H = 10;
    for (const auto& b : zoo) {
        CAPTURE(b->describe());
        for (int t = 0; t < 6; ++t) {
            const Element e = random_element(rng, b, 2);
            const DegreeBound r = degree_upper_bound(e, H);
            REQUIRE(r.bound);
            CHECK(r.mode == DegreeBound::Mode::Certified);
            const int m = *r.bound;
            if (!e.is_zero()) {
                CHECK(m >= 0);
            }
            const auto a = id_powers(e, H);
            CHECK(is_m_polynomial(a, m).holds);
            if (m >= 0) {
                CHECK(!is_m_polynomial(a, m - 1).holds);
            }
            for (int j = 0; j <= H; ++j) {
                std::vector<std::pair<mpz_class, Element>> lhs, rhs;
                for (int i = 0; i <= std::min(j, m + 1); ++i) {
                    lhs.emplace_back((i % 2 ? -1 : 1) * binomial(m + 1, i), a[static_cast<std::size_t>(j - i)]);
                }
                for (int k = 0; k <= std::min(j, m); ++k) {
                    rhs.emplace_back(((j % 2) ? -1 : 1) * binomial(m - k, j - k), r.values[static_cast<std::size_t>(k)]);
                }
                CHECK(combination(b, lhs) == combination(b, rhs));
            }
        }
    }
}

TEST_CASE("degree_upper_bound: bounds add under products")
{
    Rng rng(19);
    const Ring z8 = RingSpec::modular(8);
    const auto b = infiltration(z8, Scalar::from_int(z8, 2), 24);
    const int H = 12;
    for (int t = 0; t < 40; ++t) {
        const Element u = random_element(rng, b, 2), v = random_element(rng, b, 2);
        if (u.is_zero() || v.is_zero()) {
            continue;
        }
        const DegreeBound ru = degree_upper_bound(u, H), rv = degree_upper_bound(v, H);
        REQUIRE(ru.mode == DegreeBound::Mode::Certified);
        REQUIRE(rv.mode == DegreeBound::Mode::Certified);
        const DegreeBound prod = degree_upper_bound(u * v, H);
        const DegreeBound sum = degree_upper_bound(u + v, H);
        REQUIRE(prod.bound);
        CHECK(*prod.bound <= *ru.bound + *rv.bound);
        CHECK(prod.mode == DegreeBound::Mode::Certified);
        REQUIRE(sum.bound);
        CHECK(*sum.bound <= std::max(*ru.bound, *rv.bound));
    }
}

TEST_CASE("convolution: support-closure powers agree with tabulated powers")
{
    Rng rng(23);
    for (const auto& c : product_zoo()) {
        CAPTURE(c.b->describe());
        const int d = std::min(c.small, c.b->truncation() ? *c.b->truncation() / 5 : 2);
        const LinearMap f = eta_eps(c.b, d) - identity_map(c.b, d);
        for (int t = 0; t < 3; ++t) {
            const Element b = random_element(rng, c.b, d);
            const auto values = eta_eps_minus_id_powers(b, 4);
            const auto ids = id_powers(b, 4);
            for (int n = 0; n <= 4; ++n) {
                CHECK(values[static_cast<std::size_t>(n)] == conv_power(f, n)(b));
                CHECK(ids[static_cast<std::size_t>(n)] == conv_power(identity_map(c.b, d), n)(b));
            }
        }
    }
}
