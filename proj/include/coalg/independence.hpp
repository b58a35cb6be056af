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

// Linear independence of grouplike elements: the symmetric algebra of a
// based coalgebra and verifiers that evaluate the independence theorems on
// concrete instances.

#ifndef COALG_INDEPENDENCE_HPP
#define COALG_INDEPENDENCE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coalg/bialgebra.hpp"
#include "coalg/convolution.hpp"

namespace coalg {

// A polynomial in commuting indeterminates Y_i, one per basis index of C.
// Monomials are sorted multisets of basis indices.
class SymElement {
public:
    using Monomial = std::vector<BasisIndex>;

    explicit SymElement(BialgebraPtr b);

    static SymElement one(const BialgebraPtr& b);
    static SymElement variable(const BialgebraPtr& b, const BasisIndex& i);
    // The embedding C -> Sym C, i -> Y_i.
    static SymElement embed(const Element& e);

    const BialgebraPtr& bialgebra() const noexcept { return b_; }
    const std::map<Monomial, Scalar>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(Monomial m, const Scalar& c);
    SymElement& operator+=(const SymElement& other);
    SymElement& operator-=(const SymElement& other);
    SymElement scaled(const Scalar& c) const;
    SymElement pow(unsigned n) const;

    std::string to_string() const;

    friend SymElement operator+(SymElement a, const SymElement& b) { return a += b; }
    friend SymElement operator-(SymElement a, const SymElement& b) { return a -= b; }
    friend SymElement operator*(const SymElement& a, const SymElement& b);
    friend bool operator==(const SymElement& a, const SymElement& b);

private:
    void check_same(const SymElement& other) const;

    BialgebraPtr b_;
    std::map<Monomial, Scalar> terms_;
};

// The canonical projection T(C) -> Sym C on one tensor power.
SymElement sym_project(const Tensor& t);

enum class CheckMode { Certified, HorizonOnly };
std::string_view to_string(CheckMode m) noexcept;

struct Assumption {
    std::string name;
    std::string status;
    std::string detail;
};

// The shape shared by the theorem verifiers. `consistent` is false only when
// every hypothesis is established and the conclusion still fails.
struct VerifierReport {
    struct Hypothesis {
        bool holds = false;
        CheckMode mode = CheckMode::HorizonOnly;
        int horizon = 0;
        std::optional<int> fails_at;
    };
    struct Conclusion {
        bool holds = false;
        std::vector<std::string> witnesses;
    };

    std::string theorem;
    Hypothesis hypothesis;
    Conclusion conclusion;
    std::vector<Assumption> assumptions;
    std::map<std::string, std::string> values;
    std::string verdict;
    bool consistent = true;
};

// sum_i c_i g_i^k = 0 for all k implies c_i prod_{j != i} (g_i - g_j) = 0,
// for g_i, c_i in a commutative ring. The sequence s_k = sum_i c_i g_i^k
// obeys the recurrence with characteristic polynomial prod_j (t - g_j), so
// the hypothesis is Certified once s_0..s_{n-1} vanish.
VerifierReport verify_thm_old1(const std::vector<Scalar>& gs, const std::vector<Scalar>& cs, int horizon);
// The same for elements of a commutative family.
VerifierReport verify_thm_old1(const std::vector<Element>& gs, const std::vector<Element>& cs, int horizon);

// For grouplikes g_i with sum_i c_i g_i = 0, every c_i prod_{j != i} (g_i - g_j)
// vanishes in Sym C. Raises NotGrouplike and HypothesisFails.
VerifierReport verify_thm_old2(const std::vector<Element>& gs, const std::vector<Scalar>& cs);

// Rank of the coefficient matrix of `gs` over a field.
int grouplike_rank(const std::vector<Element>& gs);

// Grouplikes g_i and id-unipotent b_i in a commutative family: reports the
// regularity assumptions, the degree-upper bounds of the b_i and the sum
// sum_i b_i g_i. A vanishing sum with all assumptions established and some
// b_i nonzero is reported as inconsistent.
VerifierReport verify_thm1_instance(const std::vector<Element>& gs, const std::vector<Element>& bs, int horizon = 12);

} // namespace coalg

#endif
