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

// Exact commutative coefficient rings.
//
// Five kinds are supported: Z, Q, Z/n, polynomial rings over one of those,
// and quotients R[v,...]/(v^p) of such a polynomial ring by a power of one of
// its variables. Every element is stored in a canonical form, so equality is
// structural.

#ifndef COALG_SCALARS_HPP
#define COALG_SCALARS_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "coalg/error.hpp"

namespace coalg {

class RingSpec;
using Ring = std::shared_ptr<const RingSpec>;

class RingSpec {
public:
    enum class Kind { Integers, Rationals, Modular, Poly, MonomialQuotient };

    static Ring integers();
    static Ring rationals();
    static Ring modular(const mpz_class& n);
    static Ring poly(const Ring& base, std::vector<std::string> vars);
    static Ring monomial_quotient(const Ring& poly_ring, const std::string& var, int power);

    Kind kind() const noexcept { return kind_; }
    // The ground ring at the bottom of the tower: Integers, Rationals or Modular.
    Kind ground_kind() const noexcept { return ground_; }
    // Zero unless the ground ring is Z/n.
    const mpz_class& modulus() const noexcept { return modulus_; }
    // Polynomial variables (empty for ground rings).
    const std::vector<std::string>& variables() const noexcept { return vars_; }
    // (index of the quotient variable, power p) for MonomialQuotient.
    const std::optional<std::pair<std::size_t, int>>& quotient() const noexcept { return quotient_; }
    std::optional<std::size_t> variable_index(std::string_view name) const;

    mpz_class characteristic() const { return modulus_; }
    bool is_field() const;
    bool is_integral_domain() const;

    std::string to_string() const;

    friend bool operator==(const RingSpec& a, const RingSpec& b);

private:
    RingSpec() = default;

    Kind kind_ = Kind::Integers;
    Kind ground_ = Kind::Integers;
    mpz_class modulus_ = 0;
    std::vector<std::string> vars_;
    std::optional<std::pair<std::size_t, int>> quotient_;
};

bool same_ring(const Ring& a, const Ring& b);

// Parses "Z", "Q", "Z/n", "<ring>[a,b]" and "<poly ring>/(v^p)".
Ring parse_ring(std::string_view text);

using Exponent = std::vector<int>;

class Scalar {
public:
    struct Term {
        Exponent exponent;
        mpq_class coeff;
    };

    Scalar() = default; // an empty handle; only assignable
    static Scalar zero(const Ring& ring);
    static Scalar one(const Ring& ring);
    static Scalar from_int(const Ring& ring, const mpz_class& value);
    static Scalar from_rational(const Ring& ring, const mpq_class& value);
    static Scalar variable(const Ring& ring, std::string_view name);
    static Scalar from_terms(const Ring& ring, std::vector<Term> terms);

    const Ring& ring() const noexcept { return ring_; }
    // Canonical terms in increasing graded-lexicographic exponent order.
    const std::vector<Term>& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_one() const;
    // The coefficient of the empty monomial, as a ground-ring value.
    mpq_class constant_term() const;
    int total_degree() const; // -1 for zero

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);
    Scalar scaled(const mpz_class& n) const;
    Scalar pow(unsigned long e) const;
    // Inverse of a unit; raises BadParameter otherwise.
    Scalar inverse() const;
    bool is_unit() const;

    std::string to_string() const;
    // Like to_string, but Z/n residues are printed without the " mod n" suffix.
    std::string to_plain_string() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

private:
    Scalar(Ring ring, std::vector<Term> terms);
    void normalize();
    void check_ring(const Scalar& other) const;

    Ring ring_;
    std::vector<Term> terms_;
};

Scalar parse_scalar(const Ring& ring, std::string_view text);

// "c1*b1 + c2*b2 - c3*b3" with unit coefficients omitted and the basis name
// "1" absorbed into its coefficient; "0" for no terms.
std::string format_linear_combination(const std::vector<std::pair<std::string, Scalar>>& terms);

struct Regularity {
    enum class Status { Regular, ZeroDivisor, Unknown };
    Status status = Status::Unknown;
    // Set for ZeroDivisor: a nonzero b with a*b = 0.
    std::optional<Scalar> witness;
};

std::string_view to_string(Regularity::Status status) noexcept;

Regularity is_regular(const Scalar& a);
// The same decision for an element of R[M], M a torsion-free commutative
// monoid, given the coefficient terms of all its components pooled together.
// The witness is then a constant of R[M].
Regularity content_regularity(const Ring& ring, const std::vector<Scalar::Term>& terms);

// Multiplicative order of nilpotence: the least r >= 1 with a^r = 0, searched
// up to `limit`.
std::optional<int> nilpotency_order(const Scalar& a, int limit = 64);

} // namespace coalg

#endif
