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

#include "coalg/series.hpp"

#include <optional>

#include "coalg/error.hpp"

namespace coalg {

Series::Series(TraceMonoid m, Ring ring, int length) : m_(std::move(m)), ring_(std::move(ring)), length_(length)
{
    if (length < 0) {
        raise(ErrorKind::BadParameter, "series length must be nonnegative");
    }
}

Series Series::one(const TraceMonoid& m, const Ring& ring, int length)
{
    Series s(m, ring, length);
    s.add_term({}, Scalar::one(ring));
    return s;
}

Series Series::characteristic(const TraceMonoid& m, const Ring& ring, int length)
{
    Series s(m, ring, length);
    for (const auto& w : m.elements(length)) {
        s.terms_.emplace(w, Scalar::one(ring));
    }
    return s;
}

namespace {

std::string trim(std::string_view s)
{
    std::size_t a = 0, b = s.size();
    while (a < b && s[a] == ' ') {
        ++a;
    }
    while (b > a && s[b - 1] == ' ') {
        --b;
    }
    return std::string(s.substr(a, b - a));
}

// Splits at top-level occurrences of the separators, keeping each separator
// at the start of the following piece.
std::vector<std::string> split_top(std::string_view text, std::string_view seps, bool keep)
{
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char ch = text[i];
        depth += ch == '(' ? 1 : ch == ')' ? -1 : 0;
        const bool binary = keep ? !trim(cur).empty() : true;
        if (depth == 0 && seps.find(ch) != std::string_view::npos && binary) {
            out.push_back(cur);
            cur.clear();
            if (keep) {
                cur.push_back(ch);
            }
            continue;
        }
        cur.push_back(ch);
    }
    out.push_back(cur);
    return out;
}

std::optional<Scalar> try_scalar(const Ring& ring, const std::string& text)
{
    try {
        return parse_scalar(ring, text);
    } catch (const Error&) {
        return std::nullopt;
    }
}

std::optional<Word> try_word(const TraceMonoid& m, const std::string& text)
{
    try {
        return m.parse_word(text);
    } catch (const Error&) {
        return std::nullopt;
    }
}

} // namespace

Series Series::parse(const TraceMonoid& m, const Ring& ring, int length, std::string_view text)
{
    Series s(m, ring, length);
    for (std::string term : split_top(text, "+-", true)) {
        term = trim(term);
        if (term.empty()) {
            continue;
        }
        Scalar coeff = Scalar::one(ring);
        if (term[0] == '+' || term[0] == '-') {
            if (term[0] == '-') {
                coeff = -coeff;
            }
            term = trim(term.substr(1));
        }
        Word w;
        for (std::string factor : split_top(term, "*", false)) {
            factor = trim(factor);
            if (factor.empty()) {
                raise(ErrorKind::ParseError, "empty factor in '" + std::string(text) + "'");
            }
            if (factor.front() == '(' && factor.back() == ')') {
                coeff *= parse_scalar(ring, factor.substr(1, factor.size() - 2));
                continue;
            }
            if (auto word = try_word(m, factor)) {
                w.insert(w.end(), word->begin(), word->end());
            } else if (auto c = try_scalar(ring, factor)) {
                coeff *= *c;
            } else {
                raise(ErrorKind::ParseError, "cannot read '" + factor + "' as a scalar or a word");
            }
        }
        s.add_term(w, coeff);
    }
    return s;
}

Scalar Series::coefficient(std::span<const int> w) const
{
    auto it = terms_.find(m_.normal_form(w));
    return it == terms_.end() ? Scalar::zero(ring_) : it->second;
}

void Series::add_term(std::span<const int> w, const Scalar& c)
{
    if (!same_ring(ring_, c.ring())) {
        raise(ErrorKind::RingMismatch, "coefficient ring differs from the series ring");
    }
    if (static_cast<int>(w.size()) > length_) {
        raise(ErrorKind::TruncationExceeded,
              "word of length " + std::to_string(w.size()) + " exceeds length " + std::to_string(length_));
    }
    if (c.is_zero()) {
        return;
    }
    Word nf = m_.normal_form(w);
    auto it = terms_.find(nf);
    if (it == terms_.end()) {
        terms_.emplace(std::move(nf), c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) {
        terms_.erase(it);
    }
}

void Series::check_compatible(const Series& other) const
{
    if (!(m_ == other.m_)) {
        raise(ErrorKind::MonoidMismatch, "series over different monoids");
    }
    if (!same_ring(ring_, other.ring_)) {
        raise(ErrorKind::RingMismatch, "series over different rings");
    }
    if (length_ != other.length_) {
        raise(ErrorKind::BadParameter, "series truncated at different lengths");
    }
}

Series& Series::operator+=(const Series& other)
{
    check_compatible(other);
    for (const auto& [w, c] : other.terms_) {
        add_term(w, c);
    }
    return *this;
}

Series& Series::operator-=(const Series& other)
{
    check_compatible(other);
    for (const auto& [w, c] : other.terms_) {
        add_term(w, -c);
    }
    return *this;
}

Series Series::operator-() const { return scaled(-Scalar::one(ring_)); }

Series Series::scaled(const Scalar& c) const
{
    Series out(m_, ring_, length_);
    for (const auto& [w, d] : terms_) {
        out.add_term(w, d * c);
    }
    return out;
}

bool operator==(const Series& a, const Series& b)
{
    a.check_compatible(b);
    return a.terms_ == b.terms_;
}

std::string Series::to_string() const
{
    std::vector<std::pair<std::string, Scalar>> parts;
    for (const auto& [w, c] : terms_) {
        parts.emplace_back(m_.format(w, "*"), c);
    }
    return format_linear_combination(parts);
}

Series cauchy_product(const Series& p, const Series& q)
{
    p.check_compatible(q);
    Series out(p.monoid(), p.ring(), p.length());
    for (const auto& [u, a] : p.terms()) {
        for (const auto& [v, b] : q.terms()) {
            if (static_cast<int>(u.size() + v.size()) > p.length()) {
                break;
            }
            Word w = u;
            w.insert(w.end(), v.begin(), v.end());
            out.add_term(w, a * b);
        }
    }
    return out;
}

Series cauchy_product_fibers(const Series& p, const Series& q)
{
    p.check_compatible(q);
    Series out(p.monoid(), p.ring(), p.length());
    for (const auto& w : p.monoid().elements(p.length())) {
        Scalar acc = Scalar::zero(p.ring());
        for (const auto& [u, v] : p.monoid().factorizations(w)) {
            acc += p.coefficient(u) * q.coefficient(v);
        }
        out.add_term(w, acc);
    }
    return out;
}

Series kleene_star(const Series& s)
{
    if (!s.coefficient({}).is_zero()) {
        raise(ErrorKind::NotProper, "the series has a nonzero constant term");
    }
    const Series one = Series::one(s.monoid(), s.ring(), s.length());
    Series star = one;
    for (int n = 0; n < s.length(); ++n) {
        star = one + cauchy_product(s, star);
    }
    return star;
}

Series mobius(const TraceMonoid& m, const Ring& ring, int length)
{
    Series out(m, ring, length);
    for (const auto& c : m.cliques()) {
        if (static_cast<int>(c.size()) <= length) {
            out.add_term(c, c.size() % 2 == 0 ? Scalar::one(ring) : -Scalar::one(ring));
        }
    }
    return out;
}

bool verify_mobius_inverse(const TraceMonoid& m, const Ring& ring, int length)
{
    const Series mu = mobius(m, ring, length);
    const Series chr = Series::characteristic(m, ring, length);
    const Series one = Series::one(m, ring, length);
    return cauchy_product(mu, chr) == one && cauchy_product(chr, mu) == one && kleene_star(one - mu) == chr;
}

namespace {

Scalar character_value(const std::vector<Scalar>& chi, std::span<const int> w, const Ring& ring)
{
    Scalar v = Scalar::one(ring);
    for (int l : w) {
        v *= chi[static_cast<std::size_t>(l)];
    }
    return v;
}

const Ring& character_ring(const std::vector<Scalar>& chi, const TraceMonoid& m)
{
    if (chi.size() != m.alphabet().size() || chi.empty()) {
        raise(ErrorKind::LengthMismatch, "one character value per letter is required");
    }
    for (const auto& c : chi) {
        if (!same_ring(c.ring(), chi[0].ring())) {
            raise(ErrorKind::RingMismatch, "character values in different rings");
        }
    }
    return chi[0].ring();
}

} // namespace

Series character_series(const std::vector<Scalar>& chi, const TraceMonoid& m, int length)
{
    const Ring& ring = character_ring(chi, m);
    Series out(m, ring, length);
    for (const auto& w : m.elements(length)) {
        out.add_term(w, character_value(chi, w, ring));
    }
    return out;
}

Series character_series_kleene(const std::vector<Scalar>& chi, const TraceMonoid& m, int length)
{
    const Ring& ring = character_ring(chi, m);
    Series gen(m, ring, length);
    for (const auto& c : m.cliques()) {
        if (!c.empty() && static_cast<int>(c.size()) <= length) {
            const Scalar v = character_value(chi, c, ring);
            gen.add_term(c, c.size() % 2 == 1 ? v : -v);
        }
    }
    return kleene_star(gen);
}

} // namespace coalg
