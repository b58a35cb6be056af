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

#include "coalg/monoid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "coalg/error.hpp"

namespace coalg {

// ---------------------------------------------------------------------------
// TraceMonoid

TraceMonoid::TraceMonoid(std::vector<std::string> alphabet,
                         const std::vector<std::pair<std::string, std::string>>& edges)
    : alphabet_(std::move(alphabet))
{
    if (alphabet_.empty()) {
        raise(ErrorKind::BadParameter, "a trace monoid needs a nonempty alphabet");
    }
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
        if (alphabet_[i].empty() || alphabet_[i] == "1") {
            raise(ErrorKind::BadParameter, "bad letter '" + alphabet_[i] + "'");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (alphabet_[i] == alphabet_[j]) {
                raise(ErrorKind::BadParameter, "duplicate letter '" + alphabet_[i] + "'");
            }
        }
    }
    for (const auto& [a, b] : edges) {
        int ia = letter(a), ib = letter(b);
        if (ia == ib) {
            raise(ErrorKind::BadParameter, "commutation edges join distinct letters");
        }
        edges_.insert({std::min(ia, ib), std::max(ia, ib)});
    }
}

TraceMonoid TraceMonoid::free(std::vector<std::string> alphabet) { return TraceMonoid(std::move(alphabet), {}); }

TraceMonoid TraceMonoid::free_abelian(std::vector<std::string> alphabet)
{
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
        for (std::size_t j = i + 1; j < alphabet.size(); ++j) {
            edges.emplace_back(alphabet[i], alphabet[j]);
        }
    }
    return TraceMonoid(std::move(alphabet), edges);
}

int TraceMonoid::letter(std::string_view name) const
{
    for (std::size_t i = 0; i < alphabet_.size(); ++i) {
        if (alphabet_[i] == name) {
            return static_cast<int>(i);
        }
    }
    raise(ErrorKind::UnknownLetter, "'" + std::string(name) + "' is not in the alphabet");
}

bool TraceMonoid::independent(int a, int b) const
{
    return a != b && edges_.count({std::min(a, b), std::max(a, b)}) > 0;
}

bool TraceMonoid::is_free_abelian() const
{
    const std::size_t n = alphabet_.size();
    return edges_.size() == n * (n - 1) / 2;
}

std::vector<std::pair<int, int>> TraceMonoid::edges() const { return {edges_.begin(), edges_.end()}; }

Word TraceMonoid::normal_form(std::span<const int> w) const
{
    const int n = static_cast<int>(alphabet_.size());
    for (int a : w) {
        if (a < 0 || a >= n) {
            raise(ErrorKind::UnknownLetter, "letter index " + std::to_string(a) + " out of range");
        }
    }
    // Repeatedly extract the smallest letter whose first occurrence commutes
    // with everything before it.
    Word rest(w.begin(), w.end());
    Word out;
    out.reserve(rest.size());
    while (!rest.empty()) {
        std::size_t best = rest.size();
        std::vector<bool> seen(n, false);
        for (std::size_t i = 0; i < rest.size(); ++i) {
            const int a = rest[i];
            if (seen[a]) {
                continue;
            }
            bool movable = true;
            for (std::size_t j = 0; j < i && movable; ++j) {
                movable = independent(rest[j], a);
            }
            seen[a] = true;
            if (movable && (best == rest.size() || a < rest[best])) {
                best = i;
            }
        }
        out.push_back(rest[best]);
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
    }
    return out;
}

Word TraceMonoid::parse_word(std::string_view text) const
{
    Word w;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == '*' || text[pos] == ' ') {
            ++pos;
            continue;
        }
        if (text.substr(pos) == "1" && w.empty()) {
            break;
        }
        int best = -1;
        std::size_t best_len = 0;
        for (std::size_t i = 0; i < alphabet_.size(); ++i) {
            const auto& s = alphabet_[i];
            if (s.size() > best_len && text.substr(pos, s.size()) == s) {
                best = static_cast<int>(i);
                best_len = s.size();
            }
        }
        if (best < 0) {
            raise(ErrorKind::UnknownLetter, "cannot read a letter at '" + std::string(text.substr(pos)) + "'");
        }
        w.push_back(best);
        pos += best_len;
        // optional power suffix: "x^3"
        if (pos < text.size() && text[pos] == '^') {
            std::size_t end = pos + 1;
            while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) {
                ++end;
            }
            if (end == pos + 1) {
                raise(ErrorKind::ParseError, "missing exponent in '" + std::string(text) + "'");
            }
            int e = std::stoi(std::string(text.substr(pos + 1, end - pos - 1)));
            w.pop_back();
            w.insert(w.end(), static_cast<std::size_t>(e), best);
            pos = end;
        }
    }
    return w;
}

std::string TraceMonoid::format(std::span<const int> w, std::string_view sep) const
{
    if (w.empty()) {
        return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) {
            out += sep;
        }
        out += alphabet_.at(w[i]);
    }
    return out;
}

std::vector<Word> TraceMonoid::cliques() const
{
    const int n = static_cast<int>(alphabet_.size());
    std::vector<Word> out;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
        Word c;
        for (int i = 0; i < n; ++i) {
            if (mask & (1U << i)) {
                c.push_back(i);
            }
        }
        bool ok = true;
        for (std::size_t i = 0; i < c.size() && ok; ++i) {
            for (std::size_t j = i + 1; j < c.size() && ok; ++j) {
                ok = independent(c[i], c[j]);
            }
        }
        if (ok) {
            out.push_back(std::move(c));
        }
    }
    std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

std::vector<Word> TraceMonoid::elements(int max_length) const
{
    std::vector<Word> out{Word{}};
    std::vector<Word> layer{Word{}};
    const int n = static_cast<int>(alphabet_.size());
    for (int len = 1; len <= max_length; ++len) {
        std::set<Word> next;
        for (const auto& w : layer) {
            for (int a = 0; a < n; ++a) {
                Word v = w;
                v.push_back(a);
                next.insert(normal_form(v));
            }
        }
        layer.assign(next.begin(), next.end());
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::vector<std::pair<Word, Word>> TraceMonoid::factorizations(std::span<const int> w) const
{
    // Left factors of a trace are the downward-closed sets of positions of
    // its dependence order.
    const std::size_t n = w.size();
    if (n > 20) {
        raise(ErrorKind::BadParameter, "factorization enumeration is limited to 20 letters");
    }
    std::vector<std::pair<Word, Word>> out;
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        bool closed = true;
        for (std::size_t j = 0; j < n && closed; ++j) {
            if (!(mask & (1UL << j))) {
                continue;
            }
            for (std::size_t i = 0; i < j && closed; ++i) {
                if (!(mask & (1UL << i)) && !independent(w[i], w[j])) {
                    closed = false;
                }
            }
        }
        if (!closed) {
            continue;
        }
        Word u, v;
        for (std::size_t i = 0; i < n; ++i) {
            (mask & (1UL << i) ? u : v).push_back(w[i]);
        }
        out.emplace_back(normal_form(u), normal_form(v));
    }
    return out;
}

// ---------------------------------------------------------------------------
// FiniteMonoid

FiniteMonoid::FiniteMonoid(std::vector<std::string> names, std::vector<std::vector<int>> table)
    : names_(std::move(names)), table_(std::move(table))
{
    const int n = size();
    if (n == 0 || static_cast<int>(table_.size()) != n) {
        raise(ErrorKind::BadParameter, "Cayley table size does not match the element list");
    }
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n) {
            raise(ErrorKind::BadParameter, "Cayley table is not square");
        }
        for (int v : row) {
            if (v < 0 || v >= n) {
                raise(ErrorKind::BadParameter, "Cayley table entry out of range");
            }
        }
    }
    identity_ = -1;
    for (int e = 0; e < n && identity_ < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) {
            ok = table_[e][a] == a && table_[a][e] == a;
        }
        if (ok) {
            identity_ = e;
        }
    }
    if (identity_ < 0) {
        raise(ErrorKind::NotUnital, "the table has no two-sided identity");
    }
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            for (int c = 0; c < n; ++c) {
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
                    raise(ErrorKind::NotAssociative,
                          "(" + names_[a] + names_[b] + ")" + names_[c] + " != " + names_[a] + "(" + names_[b] +
                              names_[c] + ")");
                }
            }
        }
    }
}

FiniteMonoid FiniteMonoid::cyclic_group(int order)
{
    if (order < 1) {
        raise(ErrorKind::BadParameter, "group order must be positive");
    }
    std::vector<std::string> names;
    std::vector<std::vector<int>> table(order, std::vector<int>(order));
    for (int i = 0; i < order; ++i) {
        names.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g" + std::to_string(i)));
        for (int j = 0; j < order; ++j) {
            table[i][j] = (i + j) % order;
        }
    }
    return FiniteMonoid(std::move(names), std::move(table));
}

bool FiniteMonoid::is_commutative() const
{
    for (int a = 0; a < size(); ++a) {
        for (int b = 0; b < a; ++b) {
            if (table_[a][b] != table_[b][a]) {
                return false;
            }
        }
    }
    return true;
}

bool FiniteMonoid::is_group() const
{
    for (int a = 0; a < size(); ++a) {
        bool has_inverse = false;
        for (int b = 0; b < size() && !has_inverse; ++b) {
            has_inverse = table_[a][b] == identity_;
        }
        if (!has_inverse) {
            return false;
        }
    }
    return true;
}

int FiniteMonoid::element(std::string_view name) const
{
    for (int i = 0; i < size(); ++i) {
        if (names_[i] == name) {
            return i;
        }
    }
    raise(ErrorKind::UnknownLetter, "'" + std::string(name) + "' is not a monoid element");
}

std::vector<FiniteMonoid> FiniteMonoid::enumerate(int order)
{
    if (order < 1 || order > 4) {
        raise(ErrorKind::BadParameter, "monoid enumeration supports orders 1 through 4");
    }
    const int n = order;
    const int free_cells = (n - 1) * (n - 1);
    long total = 1;
    for (int i = 0; i < free_cells; ++i) {
        total *= n;
    }
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::set<std::vector<int>> seen;
    std::vector<FiniteMonoid> out;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (long code = 0; code < total; ++code) {
        // element 0 is the identity
        for (int i = 0; i < n; ++i) {
            t[0][i] = t[i][0] = i;
        }
        long c = code;
        for (int a = 1; a < n; ++a) {
            for (int b = 1; b < n; ++b) {
                t[a][b] = static_cast<int>(c % n);
                c /= n;
            }
        }
        bool assoc = true;
        for (int a = 1; a < n && assoc; ++a) {
            for (int b = 1; b < n && assoc; ++b) {
                for (int d = 1; d < n && assoc; ++d) {
                    assoc = t[t[a][b]][d] == t[a][t[b][d]];
                }
            }
        }
        if (!assoc) {
            continue;
        }
        // canonical form: least relabelled table over permutations fixing 0
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<int> best;
        do {
            std::vector<int> inv(n);
            for (int i = 0; i < n; ++i) {
                inv[perm[i]] = i;
            }
            std::vector<int> flat;
            flat.reserve(static_cast<std::size_t>(n * n));
            for (int a = 0; a < n; ++a) {
                for (int b = 0; b < n; ++b) {
                    flat.push_back(perm[t[inv[a]][inv[b]]]);
                }
            }
            if (best.empty() || flat < best) {
                best = std::move(flat);
            }
        } while (std::next_permutation(perm.begin() + 1, perm.end()));
        if (!seen.insert(best).second) {
            continue;
        }
        std::vector<std::string> names{"1"};
        for (int i = 1; i < n; ++i) {
            names.push_back(std::string(1, static_cast<char>('a' + i - 1)));
        }
        std::vector<std::vector<int>> table(n, std::vector<int>(n));
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                table[a][b] = best[static_cast<std::size_t>(a * n + b)];
            }
        }
        out.emplace_back(std::move(names), std::move(table));
    }
    return out;
}

} // namespace coalg
