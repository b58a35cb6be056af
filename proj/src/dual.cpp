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

#include "coalg/dual.hpp"

#include <functional>
#include <set>
#include <sstream>

#include "coalg/error.hpp"
#include "coalg/linalg.hpp"

namespace coalg {

namespace {

void require_graded(const Bialgebra& b)
{
    if (!b.is_degree_filtered()) {
        raise(ErrorKind::NotGradedFamily, b.describe() + " is not filtered by degree");
    }
}

Functional zero_functional(const BialgebraPtr& b, int window) { return Functional(b, Scalar::zero(b->ring()), window); }

} // namespace

int filtration_degree(const Functional& f)
{
    require_graded(*f.source());
    int d = -1;
    for (const auto& [i, c] : f.table()) {
        d = std::max(d, f.source()->degree(i));
    }
    return d;
}

Functional shift(const Element& u, const Functional& f)
{
    const BialgebraPtr& b = f.source();
    check_same_bialgebra(b, u.bialgebra());
    const int window = f.window() - std::max(u.max_degree(), 0);
    if (window < 0) {
        raise(ErrorKind::TruncationExceeded, "the shift leaves no degrees inside the window");
    }
    Functional out = zero_functional(b, window);
    for (const auto& i : b->basis(window)) {
        out.set(i, f(Element::basis(b, i) * u));
    }
    return out;
}

bool leibniz_shift_check(const Element& u, const Functional& f1, const Functional& f2)
{
    const BialgebraPtr& b = u.bialgebra();
    if (!counit(u).is_zero()) {
        raise(ErrorKind::NotInAugmentationIdeal, u.to_string() + " has nonzero counit");
    }
    const Element one = Element::one(b);
    const Functional lhs = shift(u, convolve(f1, f2));
    Functional rhs = convolve(shift(u, f1), f2) + convolve(f1, shift(u, f2));
    const Tensor rest = delta(u) - Tensor::pure({u, one}) - Tensor::pure({one, u});
    for (const auto& [key, c] : rest.terms()) {
        const Functional a = shift(Element::basis(b, key[0]), f1);
        const Functional d = shift(Element::basis(b, key[1]), f2);
        rhs += convolve(a, d).scaled(c);
    }
    return lhs == rhs;
}

FiltrationProduct verify_filtration_product(const Functional& f, const Functional& g)
{
    FiltrationProduct r;
    r.degree_f = filtration_degree(f);
    r.degree_g = filtration_degree(g);
    r.degree_product = filtration_degree(convolve(f, g));
    const int bound = (r.degree_f < 0 || r.degree_g < 0) ? -1 : r.degree_f + r.degree_g;
    r.holds = r.degree_product <= bound;
    return r;
}

Functional character(const BialgebraPtr& b, const std::vector<Scalar>& values, int window)
{
    require_graded(*b);
    for (const auto& v : values) {
        if (!same_ring(v.ring(), b->ring())) {
            raise(ErrorKind::RingMismatch, "character values lie outside " + b->ring()->to_string());
        }
    }
    return tabulate<Scalar>(b, Scalar::zero(b->ring()), window, [&](const BasisIndex& i) {
        Scalar v = Scalar::one(b->ring());
        if (i.kind() == BasisIndex::Kind::Monomial) {
            const auto& e = i.exponents();
            if (e.size() != values.size()) {
                raise(ErrorKind::LengthMismatch, "one value per generator is required");
            }
            for (std::size_t k = 0; k < e.size(); ++k) {
                v *= values[k].pow(static_cast<unsigned long>(e[k]));
            }
        } else if (i.kind() == BasisIndex::Kind::Word) {
            for (int l : i.letters()) {
                if (l < 0 || static_cast<std::size_t>(l) >= values.size()) {
                    raise(ErrorKind::LengthMismatch, "one value per letter is required");
                }
                v *= values[static_cast<std::size_t>(l)];
            }
        } else {
            raise(ErrorKind::BadParameter, "characters are given on polynomial and tensor families");
        }
        return v;
    });
}

bool is_character(const Functional& f)
{
    const BialgebraPtr& b = f.source();
    if (!f.on(b->unit_index()).is_one()) {
        return false;
    }
    const auto basis = b->basis(f.window());
    for (const auto& i : basis) {
        for (const auto& j : basis) {
            if (b->degree(i) + b->degree(j) > f.window()) {
                continue;
            }
            if (!(f(Element::basis(b, i) * Element::basis(b, j)) == f.on(i) * f.on(j))) {
                return false;
            }
        }
    }
    return true;
}

bool character_invertible(const Scalar& alpha, const Scalar& q)
{
    return (Scalar::one(alpha.ring()) + q * alpha).is_unit();
}

CharacterProduct infiltration_character_product(const Scalar& alpha, const Scalar& beta, const Scalar& q,
                                                int window)
{
    const BialgebraPtr b = infiltration(q.ring(), q, window);
    const Functional prod = convolve(character(b, {alpha}, window), character(b, {beta}, window));
    Functional expected = character(b, {q * alpha * beta + alpha + beta}, window);
    const bool equal = prod == expected;
    return {prod, std::move(expected), equal};
}

IndependenceSystem character_independence_system(const BialgebraPtr& b,
                                                 const std::vector<std::vector<Scalar>>& chars, int maxdeg,
                                                 int window)
{
    require_graded(*b);
    const Ring& ring = b->ring();
    if (!ring->is_integral_domain()) {
        raise(ErrorKind::NotIntegralDomain, ring->to_string() + " is not an integral domain");
    }
    if (!ring->variables().empty()) {
        raise(ErrorKind::BadParameter, "independence systems are solved over Z or Q");
    }
    if (maxdeg < 0 || maxdeg > window) {
        raise(ErrorKind::BadParameter, "need 0 <= maxdeg <= window");
    }
    std::vector<Functional> gs;
    for (const auto& values : chars) {
        gs.push_back(character(b, values, window));
    }
    const auto unknowns = b->basis(maxdeg);
    std::map<BasisIndex, std::size_t> column_of;
    for (std::size_t j = 0; j < unknowns.size(); ++j) {
        column_of.emplace(unknowns[j], j);
    }
    const auto rows = b->basis(window);
    IndependenceSystem s;
    s.maxdeg = maxdeg;
    s.window = window;
    s.rows = rows.size();
    s.columns = gs.size() * unknowns.size();

    // Column (g, j) holds <j^v * g | w> = sum over Delta(w) with left leg j.
    Matrix<mpq_class> m(rows.size(), std::vector<mpq_class>(s.columns, 0));
    s.matrix.assign(rows.size(), std::vector<Scalar>(s.columns, Scalar::zero(ring)));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const Tensor d = b->coproduct(rows[r]);
        for (const auto& [key, c] : d.terms()) {
            auto it = column_of.find(key[0]);
            if (it == column_of.end()) {
                continue;
            }
            for (std::size_t g = 0; g < gs.size(); ++g) {
                const std::size_t col = g * unknowns.size() + it->second;
                s.matrix[r][col] += c * gs[g].on(key[1]);
            }
        }
        for (std::size_t col = 0; col < s.columns; ++col) {
            m[r][col] = s.matrix[r][col].constant_term();
        }
    }
    const auto kernel = nullspace(m, s.columns);
    s.trivial_only = kernel.empty();
    if (s.trivial_only) {
        return s;
    }
    std::vector<mpq_class> v = kernel.front();
    if (ring->ground_kind() == RingSpec::Kind::Integers) {
        const auto iv = primitive_integer_vector(v);
        v.assign(iv.begin(), iv.end());
    }
    Functional total = zero_functional(b, window);
    for (std::size_t g = 0; g < gs.size(); ++g) {
        Functional p = zero_functional(b, window);
        for (std::size_t j = 0; j < unknowns.size(); ++j) {
            p.set(unknowns[j], Scalar::from_rational(ring, v[g * unknowns.size() + j]));
        }
        total += convolve(p, gs[g]);
        s.witness.push_back(std::move(p));
    }
    s.witness_verified = total.table().empty();
    return s;
}

std::string to_matrix_text(const IndependenceSystem& s)
{
    std::ostringstream out;
    out << s.rows << " " << s.columns << "\n";
    for (const auto& row : s.matrix) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            out << (j ? " " : "") << row[j].to_plain_string();
        }
        out << "\n";
    }
    return out.str();
}

bool monomial_map_injectivity(const std::vector<Scalar>& cs, int bound)
{
    if (cs.empty()) {
        return true;
    }
    if (bound < 0) {
        raise(ErrorKind::BadParameter, "the exponent bound must be nonnegative");
    }
    const Ring& ring = cs[0].ring();
    std::set<std::string> seen;
    std::vector<int> a(cs.size(), 0);
    while (true) {
        Scalar sum = Scalar::zero(ring);
        for (std::size_t i = 0; i < cs.size(); ++i) {
            sum += cs[i].scaled(a[i]);
        }
        if (!seen.insert(sum.to_string()).second) {
            return false;
        }
        std::size_t k = 0;
        while (k < a.size() && a[k] == bound) {
            a[k++] = 0;
        }
        if (k == a.size()) {
            return true;
        }
        ++a[k];
    }
}

// ---------------------------------------------------------------------------
// Finite algebras

namespace {

// Coefficients c_0..c_n (c_n = 1) of det(t - A) by Faddeev-LeVerrier.
std::vector<mpq_class> characteristic_polynomial(const Matrix<mpq_class>& a)
{
    const std::size_t n = a.size();
    std::vector<mpq_class> c(n + 1, 0);
    c[n] = 1;
    Matrix<mpq_class> mk(n, std::vector<mpq_class>(n, 0));
    for (std::size_t k = 1; k <= n; ++k) {
        Matrix<mpq_class> next(n, std::vector<mpq_class>(n, 0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t l = 0; l < n; ++l) {
                    next[i][j] += a[i][l] * mk[l][j];
                }
            }
            next[i][i] += c[n - k + 1];
        }
        mpq_class trace = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t l = 0; l < n; ++l) {
                trace += a[i][l] * next[l][i];
            }
        }
        c[n - k] = -trace / static_cast<long>(k);
        mk = std::move(next);
    }
    return c;
}

std::vector<mpz_class> divisors(mpz_class n)
{
    n = abs(n);
    std::vector<mpz_class> out;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n) {
                out.push_back(n / d);
            }
        }
    }
    return out;
}

std::vector<mpq_class> rational_roots(std::vector<mpq_class> c)
{
    std::set<mpq_class> roots;
    while (!c.empty() && sgn(c.front()) == 0) {
        roots.insert(0);
        c.erase(c.begin());
    }
    if (c.size() > 1) {
        mpz_class l = 1;
        for (const auto& x : c) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        }
        std::vector<mpz_class> z;
        for (const auto& x : c) {
            z.push_back(mpz_class(x * l));
        }
        auto eval = [&](const mpq_class& t) {
            mpq_class acc = 0;
            for (std::size_t k = z.size(); k-- > 0;) {
                acc = acc * t + z[k];
            }
            return acc;
        };
        for (const auto& p : divisors(z.front())) {
            for (const auto& q : divisors(z.back())) {
                for (int sign : {1, -1}) {
                    mpq_class t(sign * p, q);
                    t.canonicalize();
                    if (sgn(eval(t)) == 0) {
                        roots.insert(t);
                    }
                }
            }
        }
    }
    return {roots.begin(), roots.end()};
}

} // namespace

std::vector<std::vector<Scalar>> algebra_characters(const FiniteAlgebra& input)
{
    const BialgebraPtr dual = finite_dual(input);
    const FiniteAlgebra& a = *finite_algebra_of(*dual);
    const Ring& ring = a.ring;
    const std::size_t n = a.rank();
    const bool rational = ring->kind() == RingSpec::Kind::Rationals;
    const bool prime_field = ring->kind() == RingSpec::Kind::Modular && ring->is_field();
    if (!rational && !prime_field) {
        raise(ErrorKind::NotAField, "characters are enumerated over Q or Z/p");
    }
    std::vector<std::vector<Scalar>> candidates(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (prime_field) {
            for (long r = 0; r < ring->modulus().get_si(); ++r) {
                candidates[i].push_back(Scalar::from_int(ring, r));
            }
            continue;
        }
        // Left multiplication by e_i, acting on coordinate columns.
        Matrix<mpq_class> li(n, std::vector<mpq_class>(n, 0));
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                li[k][j] = a.table[i][j][k].constant_term();
            }
        }
        for (const auto& r : rational_roots(characteristic_polynomial(li))) {
            candidates[i].push_back(Scalar::from_rational(ring, r));
        }
    }
    std::vector<std::vector<Scalar>> out;
    std::vector<Scalar> v;
    auto consistent = [&](std::size_t assigned) {
        for (std::size_t i = 0; i < assigned; ++i) {
            for (std::size_t j = 0; j < assigned; ++j) {
                bool ready = true;
                Scalar rhs = Scalar::zero(ring);
                for (std::size_t k = 0; k < n && ready; ++k) {
                    if (a.table[i][j][k].is_zero()) {
                        continue;
                    }
                    if (k >= assigned) {
                        ready = false;
                    } else {
                        rhs += a.table[i][j][k] * v[k];
                    }
                }
                if (ready && !(v[i] * v[j] == rhs)) {
                    return false;
                }
            }
        }
        return true;
    };
    std::function<void()> search = [&]() {
        if (v.size() == n) {
            Scalar at_unit = Scalar::zero(ring);
            for (std::size_t k = 0; k < n; ++k) {
                at_unit += (*a.unit)[k] * v[k];
            }
            if (at_unit.is_one()) {
                out.push_back(v);
            }
            return;
        }
        for (const auto& c : candidates[v.size()]) {
            v.push_back(c);
            if (consistent(v.size())) {
                search();
            }
            v.pop_back();
        }
    };
    search();
    return out;
}

std::vector<std::vector<Scalar>> finite_dual_grouplikes(const BialgebraPtr& dual, const std::vector<Scalar>& box)
{
    const FiniteAlgebra* a = finite_algebra_of(*dual);
    if (a == nullptr) {
        raise(ErrorKind::BadParameter, dual->describe() + " is not the dual of a finite algebra");
    }
    const std::size_t n = a->rank();
    std::vector<Scalar> values = box;
    const Ring& ring = dual->ring();
    if (ring->kind() == RingSpec::Kind::Modular) {
        values.clear();
        for (long r = 0; r < ring->modulus().get_si(); ++r) {
            values.push_back(Scalar::from_int(ring, r));
        }
    }
    double space = 1;
    for (std::size_t k = 0; k < n; ++k) {
        space *= static_cast<double>(values.size());
    }
    if (space > 2e5) {
        raise(ErrorKind::BadParameter, "the search box is too large");
    }
    const auto basis = dual->basis(0);
    std::vector<std::vector<Scalar>> out;
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        Element e(dual);
        std::vector<Scalar> coeffs;
        for (std::size_t k = 0; k < n; ++k) {
            coeffs.push_back(values[idx[k]]);
            e.add_term(basis[k], values[idx[k]]);
        }
        if (is_grouplike(e)) {
            out.push_back(std::move(coeffs));
        }
        std::size_t k = 0;
        while (k < n && idx[k] + 1 == values.size()) {
            idx[k++] = 0;
        }
        if (k == n) {
            return out;
        }
        ++idx[k];
    }
}

} // namespace coalg
