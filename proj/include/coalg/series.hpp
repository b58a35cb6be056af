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

// Formal series over a trace monoid, truncated at a maximal length L: the
// Cauchy product, Kleene stars, the Moebius function and characters.

#ifndef COALG_SERIES_HPP
#define COALG_SERIES_HPP

#include <map>
#include <string>
#include <vector>

#include "coalg/monoid.hpp"
#include "coalg/scalars.hpp"

namespace coalg {

// Orders words by length, then lexicographically.
struct LengthLex {
    bool operator()(const Word& a, const Word& b) const
    {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    }
};

class Series {
public:
    using Terms = std::map<Word, Scalar, LengthLex>;

    Series(TraceMonoid m, Ring ring, int length);

    static Series zero(const TraceMonoid& m, const Ring& ring, int length) { return Series(m, ring, length); }
    static Series one(const TraceMonoid& m, const Ring& ring, int length);
    // The characteristic series: every element of length <= L with coefficient 1.
    static Series characteristic(const TraceMonoid& m, const Ring& ring, int length);
    // Reads "2*x*y - 3*y + 1"-style text.
    static Series parse(const TraceMonoid& m, const Ring& ring, int length, std::string_view text);

    const TraceMonoid& monoid() const noexcept { return m_; }
    const Ring& ring() const noexcept { return ring_; }
    int length() const noexcept { return length_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    // The pairing <S | w>.
    Scalar coefficient(std::span<const int> w) const;
    // Normalizes w; raises TruncationExceeded past L.
    void add_term(std::span<const int> w, const Scalar& c);

    Series& operator+=(const Series& other);
    Series& operator-=(const Series& other);
    Series operator-() const;
    Series scaled(const Scalar& c) const;

    std::string to_string() const;

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend bool operator==(const Series& a, const Series& b);

    void check_compatible(const Series& other) const;

private:
    TraceMonoid m_;
    Ring ring_;
    int length_;
    Terms terms_;
};

// P * Q truncated at L, from all pairs of terms.
Series cauchy_product(const Series& p, const Series& q);
// The same product from the fibers: <P*Q | w> = sum_{uv = w} <P|u><Q|v>.
Series cauchy_product_fibers(const Series& p, const Series& q);

// sum_{n >= 0} S^n truncated at L; raises NotProper when <S|1> != 0.
Series kleene_star(const Series& s);

// sum over cliques C of (-1)^{|C|} prod C, truncated at L.
Series mobius(const TraceMonoid& m, const Ring& ring, int length);
// mobius * M = M * mobius = 1 and M = (1 - mobius)^* up to L.
bool verify_mobius_inverse(const TraceMonoid& m, const Ring& ring, int length);

// sum_w chi(w) w up to L, for chi multiplicative with the given letter values.
Series character_series(const std::vector<Scalar>& chi, const TraceMonoid& m, int length);
// (- sum_{C nonempty clique} chi(C) mu(C) C)^*.
Series character_series_kleene(const std::vector<Scalar>& chi, const TraceMonoid& m, int length);

} // namespace coalg

#endif
