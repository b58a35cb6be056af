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

#include "coalg/basis.hpp"

#include <cstdlib>

namespace coalg {

BasisIndex BasisIndex::monomial(std::vector<int> exponents)
{
    BasisIndex b;
    b.kind_ = Kind::Monomial;
    b.data_ = std::move(exponents);
    return b;
}

BasisIndex BasisIndex::word(std::vector<int> letters)
{
    BasisIndex b;
    b.kind_ = Kind::Word;
    b.data_ = std::move(letters);
    return b;
}

BasisIndex BasisIndex::pair(BasisIndex left, BasisIndex right)
{
    BasisIndex b;
    b.kind_ = Kind::Pair;
    b.parts_.reserve(2);
    b.parts_.push_back(std::move(left));
    b.parts_.push_back(std::move(right));
    return b;
}

int BasisIndex::weight() const noexcept
{
    switch (kind_) {
    case Kind::Monomial: {
        int w = 0;
        for (int e : data_) {
            w += std::abs(e);
        }
        return w;
    }
    case Kind::Word: return static_cast<int>(data_.size());
    case Kind::Pair: return parts_[0].weight() + parts_[1].weight();
    }
    return 0;
}

bool operator==(const BasisIndex& a, const BasisIndex& b)
{
    return a.kind_ == b.kind_ && a.data_ == b.data_ && a.parts_ == b.parts_;
}

std::strong_ordering operator<=>(const BasisIndex& a, const BasisIndex& b)
{
    if (auto c = a.weight() <=> b.weight(); c != 0) {
        return c;
    }
    if (auto c = a.kind_ <=> b.kind_; c != 0) {
        return c;
    }
    if (a.kind_ == BasisIndex::Kind::Pair) {
        if (auto c = a.parts_[0] <=> b.parts_[0]; c != 0) {
            return c;
        }
        return a.parts_[1] <=> b.parts_[1];
    }
    return a.data_ <=> b.data_;
}

} // namespace coalg
