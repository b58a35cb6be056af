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

// Monoids used as bases of monoid bialgebras and of series: trace monoids
// M(X, theta) given by a commutation graph, and finite monoids given by a
// Cayley table.

#ifndef COALG_MONOID_HPP
#define COALG_MONOID_HPP

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coalg {

using Word = std::vector<int>;

class TraceMonoid {
public:
    // Edges are unordered pairs of distinct letters; loops are implicit.
    TraceMonoid(std::vector<std::string> alphabet, const std::vector<std::pair<std::string, std::string>>& edges);

    static TraceMonoid free(std::vector<std::string> alphabet);
    static TraceMonoid free_abelian(std::vector<std::string> alphabet);

    const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
    int letter(std::string_view name) const;
    // True for distinct letters joined by an edge.
    bool independent(int a, int b) const;
    bool is_free_abelian() const;
    std::vector<std::pair<int, int>> edges() const;

    // Lexicographically least word in the commutation class of `w`.
    Word normal_form(std::span<const int> w) const;
    // Reads "xyx" or "x*y*x" (longest-match on multi-character letters).
    Word parse_word(std::string_view text) const;
    // Letters joined by `sep`; the empty word prints as "1".
    std::string format(std::span<const int> w, std::string_view sep = "") const;

    // All cliques of the commutation graph (including the empty one), each
    // as a sorted letter list.
    std::vector<Word> cliques() const;
    // Normal forms of every element with at most `max_length` letters, in
    // (length, lex) order.
    std::vector<Word> elements(int max_length) const;
    // Every (u, v) of normal forms with u v = w in the monoid.
    std::vector<std::pair<Word, Word>> factorizations(std::span<const int> w) const;

    friend bool operator==(const TraceMonoid& a, const TraceMonoid& b)
    {
        return a.alphabet_ == b.alphabet_ && a.edges_ == b.edges_;
    }

private:
    std::vector<std::string> alphabet_;
    std::set<std::pair<int, int>> edges_;
};

class FiniteMonoid {
public:
    // `table[a][b]` is the index of a*b. The identity is located, and
    // associativity checked, on construction.
    FiniteMonoid(std::vector<std::string> names, std::vector<std::vector<int>> table);

    static FiniteMonoid cyclic_group(int order);

    int size() const noexcept { return static_cast<int>(names_.size()); }
    int identity() const noexcept { return identity_; }
    int mul(int a, int b) const { return table_[a][b]; }
    bool is_commutative() const;
    bool is_group() const;
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::vector<std::vector<int>>& table() const noexcept { return table_; }
    int element(std::string_view name) const;

    // All monoids of the given order, one per isomorphism class.
    static std::vector<FiniteMonoid> enumerate(int order);

    friend bool operator==(const FiniteMonoid& a, const FiniteMonoid& b)
    {
        return a.names_ == b.names_ && a.table_ == b.table_;
    }

private:
    std::vector<std::string> names_;
    std::vector<std::vector<int>> table_;
    int identity_ = 0;
};

} // namespace coalg

#endif
