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

// Based free bialgebras over a coefficient ring, given by structure rules on
// basis indices, together with sparse elements and tensors.
//
// Families with an infinite basis carry a truncation degree D. Any product or
// basis index beyond D raises TruncationExceeded; nothing is dropped silently.

#ifndef COALG_BIALGEBRA_HPP
#define COALG_BIALGEBRA_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "coalg/basis.hpp"
#include "coalg/monoid.hpp"
#include "coalg/scalars.hpp"

namespace coalg {

enum class Family {
    PolynomialPrimitive,
    InfiltrationQ,
    FrobeniusQuotient,
    GxQuotient,
    MonoidDiag,
    TensorConc,
    TensorProduct,
    FiniteDualOfAlgebra,
};

std::string_view to_string(Family f) noexcept;

class Bialgebra;
using BialgebraPtr = std::shared_ptr<const Bialgebra>;
using Terms = std::map<BasisIndex, Scalar>;

class Element {
public:
    explicit Element(BialgebraPtr b);

    static Element zero(const BialgebraPtr& b) { return Element(b); }
    static Element one(const BialgebraPtr& b);
    static Element scalar(const BialgebraPtr& b, const Scalar& c);
    static Element basis(const BialgebraPtr& b, const BasisIndex& i);
    static Element basis(const BialgebraPtr& b, const BasisIndex& i, const Scalar& c);
    // Validates every index against the family and drops zero coefficients.
    static Element from_terms(const BialgebraPtr& b, const Terms& terms);

    const BialgebraPtr& bialgebra() const noexcept { return b_; }
    const Ring& ring() const;
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Scalar coefficient(const BasisIndex& i) const;
    int max_degree() const; // -1 for zero

    void add_term(const BasisIndex& i, const Scalar& c);
    Element& operator+=(const Element& other);
    Element& operator-=(const Element& other);
    Element operator-() const;
    Element scaled(const Scalar& c) const;
    Element pow(unsigned n) const;

    std::string to_string() const;

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Element& a, const Element& b);
    friend bool operator==(const Element& a, const Element& b);

private:
    void check_same(const Element& other) const;

    BialgebraPtr b_;
    Terms terms_;
};

// An element of B^{(x)k}, stored on flat k-tuples of basis indices.
class Tensor {
public:
    Tensor(BialgebraPtr b, std::size_t arity);

    // e_1 (x) ... (x) e_k.
    static Tensor pure(const std::vector<Element>& legs);
    // e^{(x)k}.
    static Tensor power(const Element& e, std::size_t k);

    const BialgebraPtr& bialgebra() const noexcept { return b_; }
    std::size_t arity() const noexcept { return arity_; }
    const std::map<TensorKey, Scalar>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const TensorKey& key, const Scalar& c);
    Tensor& operator+=(const Tensor& other);
    Tensor& operator-=(const Tensor& other);
    Tensor scaled(const Scalar& c) const;
    // s (x) t with arity s.arity() + t.arity().
    Tensor concat(const Tensor& other) const;

    std::string to_string() const;

    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    // Legwise product in the algebra B^{(x)k}.
    friend Tensor operator*(const Tensor& a, const Tensor& b);
    friend bool operator==(const Tensor& a, const Tensor& b);

private:
    void check_same(const Tensor& other) const;

    BialgebraPtr b_;
    std::size_t arity_;
    std::map<TensorKey, Scalar> terms_;
};

struct ElementRegularity {
    Regularity::Status status = Regularity::Status::Unknown;
    std::optional<Element> witness;
    std::string reason;
};

class Bialgebra : public std::enable_shared_from_this<Bialgebra> {
public:
    virtual ~Bialgebra() = default;

    const Ring& ring() const noexcept { return ring_; }
    std::optional<int> truncation() const noexcept { return truncation_; }

    virtual Family family() const = 0;
    virtual std::string describe() const = 0;

    virtual int degree(const BasisIndex& i) const { return i.weight(); }
    virtual BasisIndex unit_index() const = 0;
    // Every basis index of degree at most `max_degree` (all of them for
    // finite families), in increasing order.
    virtual std::vector<BasisIndex> basis(int max_degree) const = 0;
    // Raises BadParameter for malformed indices and TruncationExceeded past D.
    virtual void validate(const BasisIndex& i) const = 0;

    virtual bool has_product() const { return true; }
    virtual bool is_commutative() const = 0;
    // True when B_+^N is the span of basis indices of degree >= N.
    virtual bool is_degree_filtered() const { return false; }
    // True for group algebras of torsion-free commutative monoids (k[x],
    // Laurent polynomials, free abelian monoids and their tensor products).
    virtual bool is_torsion_free_monoid_algebra() const { return false; }

    virtual Terms product(const BasisIndex& a, const BasisIndex& b) const = 0;
    virtual Tensor coproduct(const BasisIndex& i) const = 0;
    virtual Scalar counit(const BasisIndex& i) const = 0;

    virtual std::string format(const BasisIndex& i) const = 0;
    virtual BasisIndex parse(std::string_view text) const = 0;

    // A structural degree-upper bound for `b`, when the family supplies one.
    virtual std::optional<int> unipotence_bound(const Element& b) const;
    virtual ElementRegularity regularity(const Element& a) const;

    BialgebraPtr self() const { return shared_from_this(); }

protected:
    Bialgebra(Ring ring, std::optional<int> truncation);
    void check_degree(int degree) const;

private:
    Ring ring_;
    std::optional<int> truncation_;
};

void check_same_bialgebra(const BialgebraPtr& a, const BialgebraPtr& b);

// A finite free k-algebra by structure constants: table[i][j][k] is the
// coefficient of e_k in e_i e_j. The unit is solved for over a field when
// not supplied.
struct FiniteAlgebra {
    Ring ring;
    std::vector<std::string> names;
    std::vector<std::vector<std::vector<Scalar>>> table;
    std::optional<std::vector<Scalar>> unit;

    // k^n with orthogonal idempotent basis.
    static FiniteAlgebra diagonal(const Ring& ring, int n);
    // k[x]/(x^2) on the basis (1, x).
    static FiniteAlgebra dual_numbers(const Ring& ring);

    std::size_t rank() const { return names.size(); }
    std::vector<Scalar> multiply(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const;
};

BialgebraPtr polynomial_primitive(const Ring& ring, int truncation);
BialgebraPtr infiltration(const Ring& ring, const Scalar& q, int truncation);
BialgebraPtr frobenius_quotient(const Ring& ring, int p, const Scalar& q);
BialgebraPtr gx_quotient(const Ring& ring, int truncation);
BialgebraPtr trace_monoid_bialgebra(const Ring& ring, const TraceMonoid& m, int truncation);
BialgebraPtr finite_monoid_bialgebra(const Ring& ring, const FiniteMonoid& m);
// The group algebra k[Z] = k[g, g^-1], basis g^k with |k| <= truncation.
BialgebraPtr integer_group_bialgebra(const Ring& ring, int truncation);
BialgebraPtr tensor_conc(const Ring& ring, std::vector<std::string> alphabet, int truncation);
BialgebraPtr tensor_product_bialgebra(const BialgebraPtr& left, const BialgebraPtr& right);
// The coalgebra on the dual basis of A; it has no product (NotAnAlgebra).
BialgebraPtr finite_dual(const FiniteAlgebra& a);

// Parameters of specific families, for callers that need them.
std::optional<Scalar> infiltration_parameter(const Bialgebra& b);
const TraceMonoid* trace_monoid_of(const Bialgebra& b);
const FiniteMonoid* finite_monoid_of(const Bialgebra& b);
const FiniteAlgebra* finite_algebra_of(const Bialgebra& b);
std::pair<BialgebraPtr, BialgebraPtr> tensor_factors(const Bialgebra& b);

Tensor delta(const Element& e);
Scalar counit(const Element& e);
// k = -1 gives the counit, k = 0 the element itself as a 1-tensor, and
// k >= 1 gives (id (x) Delta^{(k-1)}) o Delta.
std::variant<Scalar, Tensor> iterated_delta(const Element& e, int k);
Tensor iterated_delta_tensor(const Element& e, int k); // k >= 0
bool is_grouplike(const Element& e);
// Coefficients of a MonoidDiag element form orthogonal idempotents summing
// to one.
bool monoid_grouplike_criterion(const Element& e);

// Element-level regularity in a commutative family.
ElementRegularity is_regular(const Element& a);

// "2*x^2 - 3*x + 1"-style text for any family; basis names per `format`.
Element parse_element(const BialgebraPtr& b, std::string_view text);

} // namespace coalg

#endif
