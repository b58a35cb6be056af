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

// Finite windows (a_0, ..., a_H) of sequences in an abelian group, their
// alternating binomial transform, and m-polynomiality.

#ifndef COALG_SEQUENCES_HPP
#define COALG_SEQUENCES_HPP

#include <optional>
#include <vector>

#include <gmpxx.h>

#include "coalg/bialgebra.hpp"

namespace coalg {

mpz_class binomial(long n, long k);

inline mpz_class times_integer(const mpz_class& a, const mpz_class& n) { return a * n; }
inline mpq_class times_integer(const mpq_class& a, const mpz_class& n) { return a * n; }
inline Scalar times_integer(const Scalar& a, const mpz_class& n) { return a.scaled(n); }
inline Element times_integer(const Element& a, const mpz_class& n)
{
    return a.scaled(Scalar::from_int(a.ring(), n));
}

inline bool is_zero_value(const mpz_class& a) { return sgn(a) == 0; }
inline bool is_zero_value(const mpq_class& a) { return sgn(a) == 0; }
inline bool is_zero_value(const Scalar& a) { return a.is_zero(); }
inline bool is_zero_value(const Element& a) { return a.is_zero(); }

// b_n = sum_{i <= n} (-1)^i C(n, i) a_i.
template <class V>
std::vector<V> binomial_transform(const std::vector<V>& a)
{
    std::vector<V> b;
    b.reserve(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
        V acc = times_integer(a[0], 0);
        for (std::size_t i = 0; i <= n; ++i) {
            mpz_class c = binomial(static_cast<long>(n), static_cast<long>(i));
            if (i % 2 == 1) {
                c = -c;
            }
            acc += times_integer(a[i], c);
        }
        b.push_back(std::move(acc));
    }
    return b;
}

template <class V>
struct PolynomialityReport {
    bool holds = false;
    int horizon = 0;
    // The first n > m with a nonzero alternating sum, when it fails.
    std::optional<int> fails_at;
    // c_0..c_m with a_n = sum_i C(n, i) c_i on the whole window.
    std::vector<V> witness;
};

// Checks sum_{i <= n} (-1)^i C(n, i) a_i = 0 for m < n <= H.
template <class V>
PolynomialityReport<V> is_m_polynomial(const std::vector<V>& a, int m)
{
    PolynomialityReport<V> r;
    r.horizon = static_cast<int>(a.size()) - 1;
    if (a.empty()) {
        r.holds = true;
        return r;
    }
    const std::vector<V> b = binomial_transform(a);
    for (int n = m + 1; n <= r.horizon; ++n) {
        if (n >= 0 && !is_zero_value(b[static_cast<std::size_t>(n)])) {
            r.fails_at = n;
            return r;
        }
    }
    r.holds = true;
    for (int i = 0; i <= m && i <= r.horizon; ++i) {
        r.witness.push_back(i % 2 == 0 ? b[static_cast<std::size_t>(i)]
                                       : times_integer(b[static_cast<std::size_t>(i)], -1));
    }
    return r;
}

// sum_i C(n, i) c_i.
template <class V>
V evaluate_binomial_basis(const std::vector<V>& c, long n, const V& zero)
{
    V acc = zero;
    for (std::size_t i = 0; i < c.size(); ++i) {
        acc += times_integer(c[i], binomial(n, static_cast<long>(i)));
    }
    return acc;
}

} // namespace coalg

#endif
