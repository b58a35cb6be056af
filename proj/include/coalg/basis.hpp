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

#ifndef COALG_BASIS_HPP
#define COALG_BASIS_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace coalg {

// A basis vector of a based free module. Monomials carry an exponent vector
// over the owning family's symbols, words a sequence of letter indices (for
// trace monoids, always the normal form), and pairs index tensor products.
class BasisIndex {
public:
    enum class Kind : std::uint8_t { Monomial, Word, Pair };

    BasisIndex() : kind_(Kind::Word) {}

    static BasisIndex monomial(std::vector<int> exponents);
    static BasisIndex word(std::vector<int> letters);
    static BasisIndex pair(BasisIndex left, BasisIndex right);

    Kind kind() const noexcept { return kind_; }
    std::span<const int> exponents() const noexcept { return data_; }
    std::span<const int> letters() const noexcept { return data_; }
    const BasisIndex& left() const { return parts_.at(0); }
    const BasisIndex& right() const { return parts_.at(1); }

    // Sum of |exponents|, word length, or the sum over both components.
    int weight() const noexcept;

    friend bool operator==(const BasisIndex& a, const BasisIndex& b);
    // Graded lexicographic: weight first, then kind, then contents.
    friend std::strong_ordering operator<=>(const BasisIndex& a, const BasisIndex& b);

private:
    Kind kind_;
    std::vector<int> data_;
    std::vector<BasisIndex> parts_;
};

using TensorKey = std::vector<BasisIndex>;

} // namespace coalg

#endif
