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

#include "coalg/bialgebra.hpp"

#include <cctype>

#include "coalg/error.hpp"

namespace coalg {

std::string_view to_string(Family f) noexcept
{
    switch (f) {
    case Family::PolynomialPrimitive: return "PolynomialPrimitive";
    case Family::InfiltrationQ: return "InfiltrationQ";
    case Family::FrobeniusQuotient: return "FrobeniusQuotient";
    case Family::GxQuotient: return "GxQuotient";
    case Family::MonoidDiag: return "MonoidDiag";
    case Family::TensorConc: return "TensorConc";
    case Family::TensorProduct: return "TensorProduct";
    case Family::FiniteDualOfAlgebra: return "FiniteDualOfAlgebra";
    }
    return "?";
}

void check_same_bialgebra(const BialgebraPtr& a, const BialgebraPtr& b)
{
    if (a != b && a->describe() != b->describe()) {
        raise(ErrorKind::DescriptorMismatch, a->describe() + " vs " + b->describe());
    }
}

// ---------------------------------------------------------------------------
// Bialgebra defaults

Bialgebra::Bialgebra(Ring ring, std::optional<int> truncation)
    : ring_(std::move(ring)), truncation_(truncation)
{
    if (truncation_ && *truncation_ < 0) {
        raise(ErrorKind::BadParameter, "truncation degree must be nonnegative");
    }
}

void Bialgebra::check_degree(int degree) const
{
    if (truncation_ && degree > *truncation_) {
        raise(ErrorKind::TruncationExceeded,
              "degree " + std::to_string(degree) + " exceeds truncation " + std::to_string(*truncation_));
    }
}

std::optional<int> Bialgebra::unipotence_bound(const Element& b) const
{
    if (b.is_zero()) {
        return -1;
    }
    if (b.terms().size() == 1 && b.terms().begin()->first == unit_index()) {
        return 0;
    }
    return std::nullopt;
}

ElementRegularity Bialgebra::regularity(const Element& a) const
{
    ElementRegularity r;
    if (a.is_zero()) {
        r.status = Regularity::Status::ZeroDivisor;
        r.witness = Element::one(self());
        r.reason = "zero";
        return r;
    }
    if (!is_torsion_free_monoid_algebra()) {
        r.reason = "no regularity oracle for " + describe();
        return r;
    }
    std::vector<Scalar::Term> pooled;
    for (const auto& [i, c] : a.terms()) {
        pooled.insert(pooled.end(), c.terms().begin(), c.terms().end());
    }
    Regularity s = content_regularity(ring(), pooled);
    r.status = s.status;
    if (s.witness) {
        r.witness = Element::scalar(self(), *s.witness);
        r.reason = "killed by the constant " + s.witness->to_plain_string();
    } else {
        r.reason = "content criterion in a torsion-free monoid algebra";
    }
    return r;
}

// ---------------------------------------------------------------------------
// Element

Element::Element(BialgebraPtr b) : b_(std::move(b)) {}

const Ring& Element::ring() const { return b_->ring(); }

Element Element::one(const BialgebraPtr& b) { return basis(b, b->unit_index()); }

Element Element::scalar(const BialgebraPtr& b, const Scalar& c) { return basis(b, b->unit_index(), c); }

Element Element::basis(const BialgebraPtr& b, const BasisIndex& i) { return basis(b, i, Scalar::one(b->ring())); }

Element Element::basis(const BialgebraPtr& b, const BasisIndex& i, const Scalar& c)
{
    b->validate(i);
    Element e(b);
    e.add_term(i, c);
    return e;
}

Element Element::from_terms(const BialgebraPtr& b, const Terms& terms)
{
    Element e(b);
    for (const auto& [i, c] : terms) {
        b->validate(i);
        e.add_term(i, c);
    }
    return e;
}

Scalar Element::coefficient(const BasisIndex& i) const
{
    auto it = terms_.find(i);
    return it == terms_.end() ? Scalar::zero(ring()) : it->second;
}

int Element::max_degree() const
{
    int d = -1;
    for (const auto& [i, c] : terms_) {
        d = std::max(d, b_->degree(i));
    }
    return d;
}

void Element::add_term(const BasisIndex& i, const Scalar& c)
{
    if (!same_ring(c.ring(), ring())) {
        raise(ErrorKind::RingMismatch, c.ring()->to_string() + " coefficient in " + b_->describe());
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(i, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

void Element::check_same(const Element& other) const { check_same_bialgebra(b_, other.b_); }

Element& Element::operator+=(const Element& other)
{
    check_same(other);
    for (const auto& [i, c] : other.terms_) {
        add_term(i, c);
    }
    return *this;
}

Element& Element::operator-=(const Element& other)
{
    check_same(other);
    for (const auto& [i, c] : other.terms_) {
        add_term(i, -c);
    }
    return *this;
}

Element Element::operator-() const
{
    Element out(b_);
    for (const auto& [i, c] : terms_) {
        out.terms_.emplace(i, -c);
    }
    return out;
}

Element Element::scaled(const Scalar& c) const
{
    Element out(b_);
    for (const auto& [i, a] : terms_) {
        out.add_term(i, a * c);
    }
    return out;
}

Element Element::pow(unsigned n) const
{
    Element out = one(b_);
    for (unsigned k = 0; k < n; ++k) {
        out = out * *this;
    }
    return out;
}

Element operator*(const Element& a, const Element& b)
{
    a.check_same(b);
    if (!a.b_->has_product()) {
        raise(ErrorKind::NotAnAlgebra, a.b_->describe() + " has no multiplication");
    }
    Element out(a.b_);
    for (const auto& [i, c] : a.terms_) {
        for (const auto& [j, d] : b.terms_) {
            const Scalar cd = c * d;
            if (cd.is_zero()) {
                continue;
            }
            for (const auto& [k, e] : a.b_->product(i, j)) {
                out.add_term(k, cd * e);
            }
        }
    }
    return out;
}

bool operator==(const Element& a, const Element& b)
{
    a.check_same(b);
    if (a.terms_.size() != b.terms_.size()) {
        return false;
    }
    auto it = b.terms_.begin();
    for (const auto& [i, c] : a.terms_) {
        if (!(i == it->first) || !(c == it->second)) {
            return false;
        }
        ++it;
    }
    return true;
}

std::string Element::to_string() const
{
    std::vector<std::pair<std::string, Scalar>> parts;
    for (const auto& [i, c] : terms_) {
        parts.emplace_back(b_->format(i), c);
    }
    return format_linear_combination(parts);
}

// ---------------------------------------------------------------------------
// Tensor

Tensor::Tensor(BialgebraPtr b, std::size_t arity) : b_(std::move(b)), arity_(arity)
{
    if (arity_ == 0) {
        raise(ErrorKind::BadParameter, "tensor arity must be positive");
    }
}

Tensor Tensor::pure(const std::vector<Element>& legs)
{
    if (legs.empty()) {
        raise(ErrorKind::BadParameter, "a pure tensor needs at least one leg");
    }
    Tensor out(legs.front().bialgebra(), legs.size());
    std::map<TensorKey, Scalar> acc{{TensorKey{}, Scalar::one(legs.front().ring())}};
    for (const auto& leg : legs) {
        check_same_bialgebra(out.b_, leg.bialgebra());
        std::map<TensorKey, Scalar> next;
        for (const auto& [key, c] : acc) {
            for (const auto& [i, d] : leg.terms()) {
                TensorKey k = key;
                k.push_back(i);
                next.emplace(std::move(k), c * d);
            }
        }
        acc = std::move(next);
    }
    for (auto& [k, c] : acc) {
        out.add_term(k, c);
    }
    return out;
}

Tensor Tensor::power(const Element& e, std::size_t k) { return pure(std::vector<Element>(k, e)); }

void Tensor::add_term(const TensorKey& key, const Scalar& c)
{
    if (key.size() != arity_) {
        raise(ErrorKind::BadParameter, "tensor key of the wrong arity");
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

void Tensor::check_same(const Tensor& other) const
{
    check_same_bialgebra(b_, other.b_);
    if (arity_ != other.arity_) {
        raise(ErrorKind::BadParameter, "tensor arities differ");
    }
}

Tensor& Tensor::operator+=(const Tensor& other)
{
    check_same(other);
    for (const auto& [k, c] : other.terms_) {
        add_term(k, c);
    }
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& other)
{
    check_same(other);
    for (const auto& [k, c] : other.terms_) {
        add_term(k, -c);
    }
    return *this;
}

Tensor Tensor::scaled(const Scalar& c) const
{
    Tensor out(b_, arity_);
    for (const auto& [k, a] : terms_) {
        out.add_term(k, a * c);
    }
    return out;
}

Tensor Tensor::concat(const Tensor& other) const
{
    check_same_bialgebra(b_, other.b_);
    Tensor out(b_, arity_ + other.arity_);
    for (const auto& [k1, c1] : terms_) {
        for (const auto& [k2, c2] : other.terms_) {
            TensorKey k = k1;
            k.insert(k.end(), k2.begin(), k2.end());
            out.add_term(k, c1 * c2);
        }
    }
    return out;
}

Tensor operator*(const Tensor& a, const Tensor& b)
{
    a.check_same(b);
    const Bialgebra& alg = *a.b_;
    if (!alg.has_product()) {
        raise(ErrorKind::NotAnAlgebra, alg.describe() + " has no multiplication");
    }
    Tensor out(a.b_, a.arity_);
    for (const auto& [ka, ca] : a.terms_) {
        for (const auto& [kb, cb] : b.terms_) {
            const Scalar cab = ca * cb;
            if (cab.is_zero()) {
                continue;
            }
            std::map<TensorKey, Scalar> acc{{TensorKey{}, cab}};
            for (std::size_t leg = 0; leg < a.arity_ && !acc.empty(); ++leg) {
                const Terms p = alg.product(ka[leg], kb[leg]);
                std::map<TensorKey, Scalar> next;
                for (const auto& [key, c] : acc) {
                    for (const auto& [i, d] : p) {
                        TensorKey k = key;
                        k.push_back(i);
                        next.emplace(std::move(k), c * d);
                    }
                }
                acc = std::move(next);
            }
            for (const auto& [k, c] : acc) {
                out.add_term(k, c);
            }
        }
    }
    return out;
}

bool operator==(const Tensor& a, const Tensor& b)
{
    a.check_same(b);
    if (a.terms_.size() != b.terms_.size()) {
        return false;
    }
    auto it = b.terms_.begin();
    for (const auto& [k, c] : a.terms_) {
        if (k != it->first || !(c == it->second)) {
            return false;
        }
        ++it;
    }
    return true;
}

std::string Tensor::to_string() const
{
    std::vector<std::pair<std::string, Scalar>> parts;
    for (const auto& [key, c] : terms_) {
        std::string name;
        for (std::size_t i = 0; i < key.size(); ++i) {
            name += (i ? " (x) " : "") + b_->format(key[i]);
        }
        parts.emplace_back(arity_ == 1 && key[0] == b_->unit_index() ? "1" : "[" + name + "]", c);
    }
    return format_linear_combination(parts);
}

// ---------------------------------------------------------------------------
// Structure maps on elements

Tensor delta(const Element& e)
{
    const Bialgebra& b = *e.bialgebra();
    Tensor out(e.bialgebra(), 2);
    for (const auto& [i, c] : e.terms()) {
        out += b.coproduct(i).scaled(c);
    }
    return out;
}

Scalar counit(const Element& e)
{
    const Bialgebra& b = *e.bialgebra();
    Scalar out = Scalar::zero(e.ring());
    for (const auto& [i, c] : e.terms()) {
        out += c * b.counit(i);
    }
    return out;
}

Tensor iterated_delta_tensor(const Element& e, int k)
{
    if (k < 0) {
        raise(ErrorKind::BadParameter, "iterated coproduct order must be >= 0 here");
    }
    const Bialgebra& b = *e.bialgebra();
    Tensor cur(e.bialgebra(), 1);
    for (const auto& [i, c] : e.terms()) {
        cur.add_term({i}, c);
    }
    // Splitting the last leg k times unfolds (id (x) Delta^{(k-1)}) o Delta.
    for (int step = 0; step < k; ++step) {
        Tensor next(e.bialgebra(), cur.arity() + 1);
        for (const auto& [key, c] : cur.terms()) {
            TensorKey head(key.begin(), key.end() - 1);
            const Tensor split = b.coproduct(key.back());
            for (const auto& [pair, d] : split.terms()) {
                TensorKey nk = head;
                nk.push_back(pair[0]);
                nk.push_back(pair[1]);
                next.add_term(nk, c * d);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

std::variant<Scalar, Tensor> iterated_delta(const Element& e, int k)
{
    if (k < -1) {
        raise(ErrorKind::BadParameter, "iterated coproduct order must be >= -1");
    }
    if (k == -1) {
        return counit(e);
    }
    return iterated_delta_tensor(e, k);
}

bool is_grouplike(const Element& e)
{
    if (!counit(e).is_one()) {
        return false;
    }
    return delta(e) == Tensor::power(e, 2);
}

bool monoid_grouplike_criterion(const Element& e)
{
    if (e.bialgebra()->family() != Family::MonoidDiag) {
        raise(ErrorKind::BadParameter, "the orthogonal-idempotent criterion applies to monoid bialgebras");
    }
    Scalar sum = Scalar::zero(e.ring());
    for (auto it = e.terms().begin(); it != e.terms().end(); ++it) {
        const Scalar& a = it->second;
        if (!(a * a == a)) {
            return false;
        }
        for (auto jt = std::next(it); jt != e.terms().end(); ++jt) {
            if (!(a * jt->second).is_zero()) {
                return false;
            }
        }
        sum += a;
    }
    return sum.is_one();
}

ElementRegularity is_regular(const Element& a)
{
    const Bialgebra& b = *a.bialgebra();
    if (!b.is_commutative()) {
        raise(ErrorKind::NotCommutativeFamily, b.describe() + " is not commutative");
    }
    return b.regularity(a);
}

// ---------------------------------------------------------------------------
// Element parsing

namespace {

class ElementParser {
public:
    ElementParser(const BialgebraPtr& b, std::string_view text) : b_(b), text_(text) {}

    Element parse()
    {
        Element e = sum();
        skip();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(text_.substr(pos_)) + "'");
        }
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        raise(ErrorKind::ParseError, "element '" + std::string(text_) + "': " + what);
    }

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    Element sum()
    {
        Element acc(b_);
        bool first = true;
        while (true) {
            skip();
            bool negative = false;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
                negative = text_[pos_] == '-';
                ++pos_;
            } else if (!first) {
                break;
            }
            Element t = product();
            acc += negative ? -t : t;
            first = false;
            skip();
            if (pos_ >= text_.size() || text_[pos_] == ')') {
                break;
            }
        }
        return acc;
    }

    // A factor is either a scalar or an element; scalars are folded into one
    // coefficient so that coalgebras without a product still parse "3*e^v".
    struct Factor {
        std::optional<Scalar> scalar;
        std::optional<Element> element;
    };

    Element product()
    {
        Scalar coeff = Scalar::one(b_->ring());
        std::optional<Element> acc;
        while (true) {
            Factor f = factor();
            if (f.scalar) {
                coeff *= *f.scalar;
            } else {
                acc = acc ? *acc * *f.element : *f.element;
            }
            skip();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
            } else {
                break;
            }
        }
        if (!acc) {
            return Element::scalar(b_, coeff);
        }
        return acc->scaled(coeff);
    }

    // The extent of one factor: up to the next top-level '*', '+' or '-',
    // keeping "g^-1" and parenthesized groups intact.
    std::string_view atom()
    {
        const std::size_t start = pos_;
        int depth = 0;
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '(') {
                ++depth;
            } else if (c == ')') {
                if (depth == 0) {
                    break;
                }
                --depth;
            } else if (depth == 0 && (c == '*' || c == ' ' || ((c == '+' || c == '-') && pos_ > start &&
                                                                  text_[pos_ - 1] != '^'))) {
                break;
            }
            ++pos_;
        }
        return text_.substr(start, pos_ - start);
    }

    Factor factor()
    {
        skip();
        if (pos_ < text_.size() && text_[pos_] == '(') {
            // Either a grouped sum or a pair index "(a|b)".
            const std::size_t start = pos_;
            std::string_view a = atom();
            if (a.find('|') != std::string_view::npos && a.back() == ')') {
                return {std::nullopt, Element::basis(b_, b_->parse(a))};
            }
            pos_ = start + 1;
            Element inner = sum();
            skip();
            if (pos_ >= text_.size() || text_[pos_] != ')') {
                fail("missing ')'");
            }
            ++pos_;
            if (pos_ < text_.size() && text_[pos_] == '^') {
                ++pos_;
                const std::size_t s = pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    ++pos_;
                }
                if (s == pos_) {
                    fail("missing exponent");
                }
                inner = inner.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(s, pos_ - s)))));
            }
            return {std::nullopt, inner};
        }
        std::string_view a = atom();
        if (a.empty()) {
            fail("empty factor");
        }
        return read_atom(a);
    }

    Factor read_atom(std::string_view a) const
    {
        try {
            return {std::nullopt, Element::basis(b_, b_->parse(a))};
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::TruncationExceeded) {
                throw;
            }
        }
        try {
            return {parse_scalar(b_->ring(), a), std::nullopt};
        } catch (const Error&) {
        }
        // "2x" written without the '*'.
        std::size_t k = 0;
        while (k < a.size() && (std::isdigit(static_cast<unsigned char>(a[k])) || a[k] == '/')) {
            ++k;
        }
        if (k > 0 && k < a.size()) {
            Scalar c = parse_scalar(b_->ring(), a.substr(0, k));
            return {std::nullopt, Element::basis(b_, b_->parse(a.substr(k)), c)};
        }
        fail("cannot read '" + std::string(a) + "'");
    }

    BialgebraPtr b_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Element parse_element(const BialgebraPtr& b, std::string_view text) { return ElementParser(b, text).parse(); }

} // namespace coalg
