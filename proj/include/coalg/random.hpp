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


// Seeded random scalars and elements for the randomized suites and tests.

#ifndef COALG_RANDOM_HPP
#define COALG_RANDOM_HPP

#include <random>

#include "coalg/bialgebra.hpp"
#include "coalg/scalars.hpp"

namespace coalg {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// A small random scalar; rational rings also get small denominators, and
// polynomial rings random terms of degree <= 2 in every variable.
inline Scalar random_scalar(Rng& rng, const Ring& ring, int max_terms = 3)
{
    const std::size_t nv = ring->variables().size();
    std::vector<Scalar::Term> terms;
    const int count = static_cast<int>(uniform(rng, 0, max_terms));
    for (int t = 0; t < count; ++t) {
        Exponent e(nv, 0);
        for (auto& x : e) {
            x = static_cast<int>(uniform(rng, 0, 2));
        }
        mpq_class c(uniform(rng, -6, 6));
        if (ring->ground_kind() == RingSpec::Kind::Rationals) {
            c /= uniform(rng, 1, 4);
            c.canonicalize();
        }
        if (ring->ground_kind() == RingSpec::Kind::Modular) {
            mpz_class r = c.get_num() % ring->modulus();
            if (r < 0) {
                r += ring->modulus();
            }
            c = r;
        }
        terms.push_back({std::move(e), c});
    }
    return Scalar::from_terms(ring, std::move(terms));
}

// A small random rational p/q with |p| <= num and 1 <= q <= den.
inline Scalar random_rational(Rng& rng, const Ring& ring, long num, long den)
{
    mpq_class c(uniform(rng, -num, num), uniform(rng, 1, den));
    c.canonicalize();
    return Scalar::from_rational(ring, c);
}

inline Element random_element(Rng& rng, const BialgebraPtr& b, int max_degree, int max_terms = 3)
{
    const auto basis = b->basis(max_degree);
    Element e(b);
    const int count = static_cast<int>(uniform(rng, 0, max_terms));
    for (int t = 0; t < count; ++t) {
        const auto& i = basis[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(basis.size()) - 1))];
        e.add_term(i, random_scalar(rng, b->ring(), 2));
    }
    return e;
}

} // namespace coalg

#endif
