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

#include "coalg/scalars.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <numeric>

namespace coalg {

namespace {

int total(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

struct GrlexLess {
    bool operator()(const Exponent& a, const Exponent& b) const
    {
        const int da = total(a), db = total(b);
        if (da != db) {
            return da < db;
        }
        return a < b;
    }
};

bool is_prime(const mpz_class& n) { return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0; }

} // namespace

// ---------------------------------------------------------------------------
// RingSpec

Ring RingSpec::integers()
{
    static const Ring zz = [] {
        auto r = std::shared_ptr<RingSpec>(new RingSpec());
        r->kind_ = r->ground_ = Kind::Integers;
        return Ring(r);
    }();
    return zz;
}

Ring RingSpec::rationals()
{
    static const Ring qq = [] {
        auto r = std::shared_ptr<RingSpec>(new RingSpec());
        r->kind_ = r->ground_ = Kind::Rationals;
        return Ring(r);
    }();
    return qq;
}

Ring RingSpec::modular(const mpz_class& n)
{
    if (n < 2) {
        raise(ErrorKind::BadParameter, "modulus must be at least 2, got " + n.get_str());
    }
    auto r = std::shared_ptr<RingSpec>(new RingSpec());
    r->kind_ = r->ground_ = Kind::Modular;
    r->modulus_ = n;
    return r;
}

Ring RingSpec::poly(const Ring& base, std::vector<std::string> vars)
{
    if (!base || base->kind() == Kind::Poly || base->kind() == Kind::MonomialQuotient) {
        raise(ErrorKind::BadParameter, "polynomial rings are built over Z, Q or Z/n");
    }
    if (vars.empty()) {
        raise(ErrorKind::BadParameter, "a polynomial ring needs at least one variable");
    }
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i].empty() || !std::isalpha(static_cast<unsigned char>(vars[i][0]))) {
            raise(ErrorKind::BadParameter, "bad variable name '" + vars[i] + "'");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (vars[i] == vars[j]) {
                raise(ErrorKind::BadParameter, "duplicate variable '" + vars[i] + "'");
            }
        }
    }
    auto r = std::shared_ptr<RingSpec>(new RingSpec());
    r->kind_ = Kind::Poly;
    r->ground_ = base->ground_;
    r->modulus_ = base->modulus_;
    r->vars_ = std::move(vars);
    return r;
}

Ring RingSpec::monomial_quotient(const Ring& poly_ring, const std::string& var, int power)
{
    if (!poly_ring || poly_ring->kind() != Kind::Poly) {
        raise(ErrorKind::BadParameter, "monomial quotients are taken of a polynomial ring");
    }
    if (power < 1) {
        raise(ErrorKind::BadParameter, "quotient power must be at least 1");
    }
    auto idx = poly_ring->variable_index(var);
    if (!idx) {
        raise(ErrorKind::BadParameter, "quotient variable '" + var + "' is not a ring variable");
    }
    auto r = std::shared_ptr<RingSpec>(new RingSpec(*poly_ring));
    r->kind_ = Kind::MonomialQuotient;
    r->quotient_ = std::make_pair(*idx, power);
    return r;
}

std::optional<std::size_t> RingSpec::variable_index(std::string_view name) const
{
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) {
            return i;
        }
    }
    return std::nullopt;
}

bool RingSpec::is_field() const
{
    if (!vars_.empty()) {
        return false;
    }
    return ground_ == Kind::Rationals || (ground_ == Kind::Modular && is_prime(modulus_));
}

bool RingSpec::is_integral_domain() const
{
    const bool ground_domain = ground_ != Kind::Modular || is_prime(modulus_);
    if (kind_ == Kind::MonomialQuotient) {
        return ground_domain && quotient_->second == 1;
    }
    return ground_domain;
}

std::string RingSpec::to_string() const
{
    std::string out;
    switch (ground_) {
    case Kind::Integers: out = "Z"; break;
    case Kind::Rationals: out = "Q"; break;
    default: out = "Z/" + modulus_.get_str(); break;
    }
    if (!vars_.empty()) {
        out += "[";
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            out += (i ? "," : "") + vars_[i];
        }
        out += "]";
    }
    if (quotient_) {
        out += "/(" + vars_[quotient_->first] + "^" + std::to_string(quotient_->second) + ")";
    }
    return out;
}

bool operator==(const RingSpec& a, const RingSpec& b)
{
    return a.kind_ == b.kind_ && a.ground_ == b.ground_ && a.modulus_ == b.modulus_ && a.vars_ == b.vars_ &&
           a.quotient_ == b.quotient_;
}

bool same_ring(const Ring& a, const Ring& b) { return a == b || (a && b && *a == *b); }

Ring parse_ring(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
            s.remove_prefix(1);
        }
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
            s.remove_suffix(1);
        }
        return s;
    };
    std::string_view s = trim(text);
    const auto fail = [&](const std::string& why) -> Ring {
        raise(ErrorKind::ParseError, "ring '" + std::string(text) + "': " + why);
    };

    // quotient suffix "/(v^p)"
    std::optional<std::pair<std::string, int>> quot;
    if (auto pos = s.rfind("/("); pos != std::string_view::npos && s.back() == ')') {
        std::string_view inner = trim(s.substr(pos + 2, s.size() - pos - 3));
        auto caret = inner.find('^');
        if (caret == std::string_view::npos) {
            return fail("quotient must look like (v^p)");
        }
        try {
            quot = std::make_pair(std::string(trim(inner.substr(0, caret))),
                                  std::stoi(std::string(trim(inner.substr(caret + 1)))));
        } catch (const std::exception&) {
            return fail("bad quotient power");
        }
        s = trim(s.substr(0, pos));
    }
    std::vector<std::string> vars;
    if (!s.empty() && s.back() == ']') {
        auto open = s.find('[');
        if (open == std::string_view::npos) {
            return fail("unbalanced brackets");
        }
        std::string_view inner = s.substr(open + 1, s.size() - open - 2);
        while (!inner.empty()) {
            auto comma = inner.find(',');
            vars.emplace_back(trim(inner.substr(0, comma)));
            if (comma == std::string_view::npos) {
                break;
            }
            inner.remove_prefix(comma + 1);
        }
        s = trim(s.substr(0, open));
    }
    Ring ground;
    if (s == "Z" || s == "ZZ") {
        ground = RingSpec::integers();
    } else if (s == "Q" || s == "QQ") {
        ground = RingSpec::rationals();
    } else if (s.size() > 2 && s.substr(0, 2) == "Z/") {
        std::string_view n = s.substr(2);
        if (n.size() > 2 && n.front() == '(' && n.back() == ')') {
            n = n.substr(1, n.size() - 2);
        }
        mpz_class m;
        if (m.set_str(std::string(trim(n)), 10) != 0) {
            return fail("bad modulus");
        }
        ground = RingSpec::modular(m);
    } else {
        return fail("unknown ground ring");
    }
    if (vars.empty()) {
        if (quot) {
            return fail("a quotient needs a polynomial ring");
        }
        return ground;
    }
    Ring p = RingSpec::poly(ground, std::move(vars));
    if (quot) {
        return RingSpec::monomial_quotient(p, quot->first, quot->second);
    }
    return p;
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(Ring ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms))
{
    normalize();
}

Scalar Scalar::zero(const Ring& ring) { return Scalar(ring, {}); }

Scalar Scalar::one(const Ring& ring) { return from_int(ring, 1); }

Scalar Scalar::from_int(const Ring& ring, const mpz_class& value)
{
    std::vector<Term> t;
    t.push_back({Exponent(ring->variables().size(), 0), mpq_class(value)});
    return Scalar(ring, std::move(t));
}

Scalar Scalar::from_rational(const Ring& ring, const mpq_class& value)
{
    mpq_class v = value;
    v.canonicalize();
    if (v.get_den() == 1) {
        return from_int(ring, v.get_num());
    }
    switch (ring->ground_kind()) {
    case RingSpec::Kind::Rationals: {
        std::vector<Term> t;
        t.push_back({Exponent(ring->variables().size(), 0), v});
        return Scalar(ring, std::move(t));
    }
    case RingSpec::Kind::Modular: {
        mpz_class inv;
        mpz_class den = v.get_den();
        if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), ring->modulus().get_mpz_t()) == 0) {
            raise(ErrorKind::BadParameter, "denominator " + den.get_str() + " is not a unit in " + ring->to_string());
        }
        return from_int(ring, v.get_num() * inv);
    }
    default:
        raise(ErrorKind::BadParameter, "fraction " + v.get_str() + " is not an element of " + ring->to_string());
    }
}

Scalar Scalar::variable(const Ring& ring, std::string_view name)
{
    auto idx = ring->variable_index(name);
    if (!idx) {
        raise(ErrorKind::BadParameter, "'" + std::string(name) + "' is not a variable of " + ring->to_string());
    }
    Exponent e(ring->variables().size(), 0);
    e[*idx] = 1;
    std::vector<Term> t;
    t.push_back({std::move(e), mpq_class(1)});
    return Scalar(ring, std::move(t));
}

Scalar Scalar::from_terms(const Ring& ring, std::vector<Term> terms)
{
    for (const auto& t : terms) {
        if (t.exponent.size() != ring->variables().size()) {
            raise(ErrorKind::BadParameter, "exponent length does not match " + ring->to_string());
        }
        if (ring->ground_kind() != RingSpec::Kind::Rationals && t.coeff.get_den() != 1) {
            raise(ErrorKind::BadParameter, "non-integral coefficient for " + ring->to_string());
        }
    }
    return Scalar(ring, std::move(terms));
}

void Scalar::normalize()
{
    std::map<Exponent, mpq_class, GrlexLess> acc;
    const auto& q = ring_->quotient();
    for (auto& t : terms_) {
        if (q && t.exponent[q->first] >= q->second) {
            continue;
        }
        acc[std::move(t.exponent)] += t.coeff;
    }
    terms_.clear();
    const bool modular = ring_->ground_kind() == RingSpec::Kind::Modular;
    for (auto& [e, c] : acc) {
        c.canonicalize();
        if (modular) {
            assert(c.get_den() == 1);
            mpz_class r;
            mpz_fdiv_r(r.get_mpz_t(), c.get_num_mpz_t(), ring_->modulus().get_mpz_t());
            c = r;
        }
        if (c != 0) {
            terms_.push_back({e, c});
        }
    }
}

void Scalar::check_ring(const Scalar& other) const
{
    if (!same_ring(ring_, other.ring_)) {
        raise(ErrorKind::RingMismatch, (ring_ ? ring_->to_string() : "<none>") + " vs " +
                                           (other.ring_ ? other.ring_->to_string() : "<none>"));
    }
}

bool Scalar::is_one() const
{
    return terms_.size() == 1 && total(terms_[0].exponent) == 0 && terms_[0].coeff == 1;
}

mpq_class Scalar::constant_term() const
{
    if (!terms_.empty() && total(terms_[0].exponent) == 0) {
        return terms_[0].coeff;
    }
    return 0;
}

int Scalar::total_degree() const { return terms_.empty() ? -1 : total(terms_.back().exponent); }

Scalar Scalar::operator-() const
{
    std::vector<Term> t = terms_;
    for (auto& x : t) {
        x.coeff = -x.coeff;
    }
    return Scalar(ring_, std::move(t));
}

Scalar& Scalar::operator+=(const Scalar& other)
{
    check_ring(other);
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other)
{
    check_ring(other);
    std::vector<Term> out;
    out.reserve(terms_.size() * other.terms_.size());
    for (const auto& a : terms_) {
        for (const auto& b : other.terms_) {
            Exponent e = a.exponent;
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] += b.exponent[i];
            }
            out.push_back({std::move(e), a.coeff * b.coeff});
        }
    }
    terms_ = std::move(out);
    normalize();
    return *this;
}

Scalar Scalar::scaled(const mpz_class& n) const
{
    std::vector<Term> t = terms_;
    for (auto& x : t) {
        x.coeff *= n;
    }
    return Scalar(ring_, std::move(t));
}

Scalar Scalar::pow(unsigned long e) const
{
    Scalar result = one(ring_);
    Scalar base = *this;
    while (e) {
        if (e & 1UL) {
            result *= base;
        }
        e >>= 1;
        if (e) {
            base *= base;
        }
    }
    return result;
}

namespace {

bool is_nilpotent_coefficient(const RingSpec& ring, const mpq_class& c)
{
    if (ring.ground_kind() != RingSpec::Kind::Modular) {
        return sgn(c) == 0;
    }
    const mpz_class& n = ring.modulus();
    mpz_class power;
    const mpz_class num = c.get_num();
    mpz_powm_ui(power.get_mpz_t(), num.get_mpz_t(), mpz_sizeinbase(n.get_mpz_t(), 2), n.get_mpz_t());
    return power == 0;
}

bool is_ground_unit(const RingSpec& ring, const mpq_class& c)
{
    switch (ring.ground_kind()) {
    case RingSpec::Kind::Rationals: return sgn(c) != 0;
    case RingSpec::Kind::Integers: return c == 1 || c == -1;
    default: {
        mpz_class g;
        const mpz_class num = c.get_num();
        mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), ring.modulus().get_mpz_t());
        return g == 1;
    }
    }
}

} // namespace

// A unit constant term plus a nilpotent remainder: terms in the quotient
// variable are nilpotent, and other terms need nilpotent coefficients.
bool Scalar::is_unit() const
{
    bool unit_constant = false;
    for (const auto& t : terms_) {
        if (total(t.exponent) == 0) {
            unit_constant = is_ground_unit(*ring_, t.coeff);
            continue;
        }
        const auto& q = ring_->quotient();
        if (q && t.exponent[q->first] > 0) {
            continue;
        }
        if (!is_nilpotent_coefficient(*ring_, t.coeff)) {
            return false;
        }
    }
    return unit_constant;
}

Scalar Scalar::inverse() const
{
    if (!is_unit()) {
        raise(ErrorKind::BadParameter, to_string() + " is not a unit of " + ring_->to_string());
    }
    mpq_class c = 0;
    for (const auto& t : terms_) {
        if (total(t.exponent) == 0) {
            c = t.coeff;
        }
    }
    Scalar u;
    if (ring_->ground_kind() == RingSpec::Kind::Modular) {
        mpz_class inv;
        mpz_class num = c.get_num();
        mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), ring_->modulus().get_mpz_t());
        u = from_int(ring_, inv);
    } else {
        u = from_rational(ring_, 1 / c);
    }
    // (u a)^{-1} = sum_k (1 - u a)^k, a finite sum since 1 - u a is nilpotent.
    const Scalar n = one(ring_) - *this * u;
    Scalar acc = one(ring_);
    Scalar power = n;
    while (!power.is_zero()) {
        acc += power;
        power *= n;
    }
    return acc * u;
}

bool operator==(const Scalar& a, const Scalar& b)
{
    a.check_ring(b);
    if (a.terms_.size() != b.terms_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].exponent != b.terms_[i].exponent || a.terms_[i].coeff != b.terms_[i].coeff) {
            return false;
        }
    }
    return true;
}

std::string Scalar::to_plain_string() const
{
    if (terms_.empty()) {
        return "0";
    }
    const auto& vars = ring_->variables();
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string mono;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (it->exponent[i] == 0) {
                continue;
            }
            mono += (mono.empty() ? "" : "*") + vars[i];
            if (it->exponent[i] != 1) {
                mono += "^" + std::to_string(it->exponent[i]);
            }
        }
        mpq_class c = it->coeff;
        bool negative = c < 0;
        if (negative) {
            c = -c;
        }
        std::string piece;
        if (mono.empty()) {
            piece = c.get_str();
        } else if (c == 1) {
            piece = mono;
        } else {
            piece = c.get_str() + "*" + mono;
        }
        if (first) {
            out = (negative ? "-" : "") + piece;
        } else {
            out += (negative ? " - " : " + ") + piece;
        }
        first = false;
    }
    return out;
}

std::string Scalar::to_string() const
{
    if (ring_->kind() == RingSpec::Kind::Modular) {
        return to_plain_string() + " mod " + ring_->modulus().get_str();
    }
    return to_plain_string();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class ScalarParser {
public:
    ScalarParser(const Ring& ring, std::string_view text) : ring_(ring), text_(text) {}

    Scalar parse()
    {
        Scalar v = expr();
        skip();
        if (pos_ != text_.size()) {
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& why) const
    {
        raise(ErrorKind::ParseError, "scalar '" + std::string(text_) + "' in " + ring_->to_string() + ": " + why);
    }

    void skip()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool eat(char c)
    {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Scalar expr()
    {
        skip();
        bool negate = false;
        if (eat('-')) {
            negate = true;
        } else {
            eat('+');
        }
        Scalar acc = term();
        if (negate) {
            acc = -acc;
        }
        for (;;) {
            if (eat('+')) {
                acc += term();
            } else if (eat('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Scalar term()
    {
        Scalar acc = factor();
        while (eat('*')) {
            acc *= factor();
        }
        return acc;
    }

    mpz_class integer()
    {
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected a number");
        }
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    unsigned long exponent()
    {
        mpz_class e = integer();
        if (!e.fits_ulong_p()) {
            fail("exponent too large");
        }
        return e.get_ui();
    }

    Scalar factor()
    {
        skip();
        if (pos_ >= text_.size()) {
            fail("unexpected end of input");
        }
        Scalar base;
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            base = expr();
            if (!eat(')')) {
                fail("missing ')'");
            }
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = integer();
            skip();
            // "a/b" but not "a/(" which would be ambiguous with quotient notation
            if (pos_ + 1 < text_.size() && text_[pos_] == '/' &&
                std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
                ++pos_;
                mpz_class den = integer();
                if (den == 0) {
                    fail("division by zero");
                }
                base = Scalar::from_rational(ring_, mpq_class(num, den));
            } else {
                base = Scalar::from_int(ring_, num);
            }
            skip();
            if (text_.substr(pos_, 3) == "mod") {
                pos_ += 3;
                mpz_class n = integer();
                if (ring_->ground_kind() != RingSpec::Kind::Modular || n != ring_->modulus()) {
                    fail("modulus " + n.get_str() + " does not match the ring");
                }
            }
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            std::string_view name = text_.substr(start, pos_ - start);
            if (!ring_->variable_index(name)) {
                fail("unknown variable '" + std::string(name) + "'");
            }
            base = Scalar::variable(ring_, name);
        } else {
            fail("unexpected '" + std::string(1, c) + "'");
        }
        if (eat('^')) {
            base = base.pow(exponent());
        }
        return base;
    }

    const Ring& ring_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Scalar parse_scalar(const Ring& ring, std::string_view text) { return ScalarParser(ring, text).parse(); }

std::string format_linear_combination(const std::vector<std::pair<std::string, Scalar>>& terms)
{
    if (terms.empty()) {
        return "0";
    }
    std::string out;
    for (const auto& [name, c] : terms) {
        std::string s = c.to_plain_string();
        const bool compound = c.terms().size() > 1;
        const bool negative = !compound && s.front() == '-';
        if (negative) {
            s.erase(0, 1);
        }
        if (compound) {
            s = "(" + s + ")";
        }
        std::string body;
        if (name == "1") {
            body = s;
        } else if (s == "1") {
            body = name;
        } else {
            body = s + "*" + name;
        }
        if (out.empty()) {
            out = (negative ? "-" : "") + body;
        } else {
            out += (negative ? " - " : " + ") + body;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Regularity

std::string_view to_string(Regularity::Status status) noexcept
{
    switch (status) {
    case Regularity::Status::Regular: return "Regular";
    case Regularity::Status::ZeroDivisor: return "ZeroDivisor";
    default: return "Unknown";
    }
}

namespace {

// gcd of all (integral) coefficients with the modulus.
mpz_class content_gcd(const std::vector<Scalar::Term>& terms, const mpz_class& n)
{
    mpz_class g = n;
    for (const auto& t : terms) {
        mpz_class num = t.coeff.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    }
    return g;
}

Regularity zero_divisor(Scalar witness)
{
    Regularity r;
    r.status = Regularity::Status::ZeroDivisor;
    r.witness = std::move(witness);
    return r;
}

Regularity regular()
{
    Regularity r;
    r.status = Regularity::Status::Regular;
    return r;
}

} // namespace

// Over a domain every nonzero polynomial is regular. Over Z/n, McCoy's theorem
// reduces the polynomial case to the content: f is a zero divisor iff some
// nonzero constant kills it. In R[v]/(v^p) an element is a zero divisor iff
// its v-free part is one in R (a nonzero c with c*a0 = 0 gives c*v^(p-1)).
Regularity is_regular(const Scalar& a)
{
    if (a.is_zero()) {
        return zero_divisor(Scalar::one(a.ring()));
    }
    return content_regularity(a.ring(), a.terms());
}

Regularity content_regularity(const Ring& ring, const std::vector<Scalar::Term>& terms)
{
    if (terms.empty()) {
        return zero_divisor(Scalar::one(ring));
    }
    const bool modular = ring->ground_kind() == RingSpec::Kind::Modular;
    const auto& q = ring->quotient();
    if (!q) {
        if (!modular) {
            return regular();
        }
        mpz_class g = content_gcd(terms, ring->modulus());
        if (g == 1) {
            return regular();
        }
        return zero_divisor(Scalar::from_int(ring, ring->modulus() / g));
    }

    const auto [qi, power] = *q;
    std::vector<Scalar::Term> free_part;
    int min_exp = power;
    for (const auto& t : terms) {
        min_exp = std::min(min_exp, t.exponent[qi]);
        if (t.exponent[qi] == 0) {
            free_part.push_back(t);
        }
    }
    Exponent top(ring->variables().size(), 0);
    if (free_part.empty()) {
        top[qi] = power - min_exp;
        return zero_divisor(Scalar::from_terms(ring, {{top, mpq_class(1)}}));
    }
    if (!modular) {
        return regular();
    }
    mpz_class g = content_gcd(free_part, ring->modulus());
    if (g == 1) {
        return regular();
    }
    top[qi] = power - 1;
    return zero_divisor(Scalar::from_terms(ring, {{top, mpq_class(ring->modulus() / g)}}));
}

std::optional<int> nilpotency_order(const Scalar& a, int limit)
{
    Scalar p = a;
    for (int r = 1; r <= limit; ++r) {
        if (p.is_zero()) {
            return r;
        }
        p *= a;
    }
    return std::nullopt;
}

} // namespace coalg
