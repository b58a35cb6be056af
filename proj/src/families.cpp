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

#include <algorithm>
#include <cctype>
#include <cstdint>

#include "coalg/bialgebra.hpp"
#include "coalg/error.hpp"
#include "coalg/linalg.hpp"

namespace coalg {

namespace {

int read_int(std::string_view s, std::string_view what)
{
    if (s.empty()) {
        raise(ErrorKind::ParseError, "missing exponent in " + std::string(what));
    }
    std::size_t k = (s[0] == '-') ? 1 : 0;
    if (k == s.size()) {
        raise(ErrorKind::ParseError, "bad exponent in " + std::string(what));
    }
    for (std::size_t i = k; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            raise(ErrorKind::ParseError, "bad exponent in " + std::string(what));
        }
    }
    return std::stoi(std::string(s));
}

// Reads "1", "x", "x^n" (n possibly negative) for a symbol; nullopt if the
// text names a different symbol.
std::optional<int> read_power(std::string_view text, std::string_view symbol)
{
    if (text == "1") {
        return 0;
    }
    if (text.substr(0, symbol.size()) != symbol) {
        return std::nullopt;
    }
    std::string_view rest = text.substr(symbol.size());
    if (rest.empty()) {
        return 1;
    }
    if (rest[0] != '^') {
        return std::nullopt;
    }
    return read_int(rest.substr(1), text);
}

std::string power_name(std::string_view symbol, int n)
{
    if (n == 0) {
        return "1";
    }
    return n == 1 ? std::string(symbol) : std::string(symbol) + "^" + std::to_string(n);
}

Scalar one_of(const Ring& r) { return Scalar::one(r); }

Terms single(const BasisIndex& i, const Ring& r) { return Terms{{i, one_of(r)}}; }

ElementRegularity zero_divisor(Element witness, std::string reason)
{
    ElementRegularity r;
    r.status = Regularity::Status::ZeroDivisor;
    r.witness = std::move(witness);
    r.reason = std::move(reason);
    return r;
}

ElementRegularity regular(std::string reason)
{
    ElementRegularity r;
    r.status = Regularity::Status::Regular;
    r.reason = std::move(reason);
    return r;
}

ElementRegularity unknown(std::string reason)
{
    ElementRegularity r;
    r.reason = std::move(reason);
    return r;
}

// ---------------------------------------------------------------------------
// k[x] with Delta(x) = x(x)1 + 1(x)x + q x(x)x, and its quotient by x^p.

class PolynomialFamily final : public Bialgebra {
public:
    PolynomialFamily(Family fam, Ring ring, Scalar q, std::optional<int> truncation, int p)
        : Bialgebra(std::move(ring), truncation), fam_(fam), q_(std::move(q)), p_(p)
    {
    }

    Family family() const override { return fam_; }

    std::string describe() const override
    {
        std::string s(to_string(fam_));
        if (fam_ == Family::InfiltrationQ) {
            s += "(q=" + q_.to_plain_string() + ")";
        } else if (fam_ == Family::FrobeniusQuotient) {
            s += "(p=" + std::to_string(p_) + ", q=" + q_.to_plain_string() + ")";
        }
        s += " over " + ring()->to_string();
        if (truncation()) {
            s += ", D=" + std::to_string(*truncation());
        }
        return s;
    }

    const Scalar& q() const { return q_; }

    BasisIndex unit_index() const override { return BasisIndex::monomial({0}); }

    int top() const { return p_ > 0 ? p_ - 1 : *truncation(); }

    std::vector<BasisIndex> basis(int max_degree) const override
    {
        std::vector<BasisIndex> out;
        for (int n = 0; n <= std::min(max_degree, top()); ++n) {
            out.push_back(BasisIndex::monomial({n}));
        }
        return out;
    }

    void validate(const BasisIndex& i) const override
    {
        if (i.kind() != BasisIndex::Kind::Monomial || i.exponents().size() != 1 || i.exponents()[0] < 0) {
            raise(ErrorKind::BadParameter, "not a basis index of " + describe());
        }
        if (p_ > 0 && i.exponents()[0] >= p_) {
            raise(ErrorKind::BadParameter, "x^" + std::to_string(i.exponents()[0]) + " vanishes in " + describe());
        }
        check_degree(i.exponents()[0]);
    }

    bool is_commutative() const override { return true; }
    bool is_degree_filtered() const override { return fam_ != Family::FrobeniusQuotient; }
    bool is_torsion_free_monoid_algebra() const override { return fam_ != Family::FrobeniusQuotient; }

    Terms product(const BasisIndex& a, const BasisIndex& b) const override
    {
        const int n = a.exponents()[0] + b.exponents()[0];
        if (p_ > 0 && n >= p_) {
            return {};
        }
        check_degree(n);
        return single(BasisIndex::monomial({n}), ring());
    }

    Tensor coproduct(const BasisIndex& i) const override
    {
        validate(i);
        const BasisIndex one = unit_index();
        const BasisIndex x = BasisIndex::monomial({1});
        Tensor out(self(), 2);
        out.add_term({one, one}, one_of(ring()));
        const int n = i.exponents()[0];
        if (n == 0) {
            return out;
        }
        Tensor dx(self(), 2);
        dx.add_term({x, one}, one_of(ring()));
        dx.add_term({one, x}, one_of(ring()));
        dx.add_term({x, x}, q_);
        for (int k = 0; k < n; ++k) {
            out = out * dx;
        }
        return out;
    }

    Scalar counit(const BasisIndex& i) const override
    {
        return i.exponents()[0] == 0 ? one_of(ring()) : Scalar::zero(ring());
    }

    std::string format(const BasisIndex& i) const override { return power_name("x", i.exponents()[0]); }

    BasisIndex parse(std::string_view text) const override
    {
        auto n = read_power(text, "x");
        if (!n || *n < 0) {
            raise(ErrorKind::ParseError, "'" + std::string(text) + "' is not a monomial in x");
        }
        BasisIndex i = BasisIndex::monomial({*n});
        validate(i);
        return i;
    }

    std::optional<int> unipotence_bound(const Element& b) const override
    {
        if (auto base = Bialgebra::unipotence_bound(b)) {
            return base;
        }
        // Bound of x: 1 when q = 0, the nilpotency order of q, or p - 1 in
        // the quotient; then x^j has j times that bound.
        std::optional<int> bx;
        if (q_.is_zero()) {
            bx = 1;
        } else {
            bx = nilpotency_order(q_);
        }
        if (p_ > 0) {
            bx = bx ? std::min(*bx, p_ - 1) : p_ - 1;
        }
        if (!bx) {
            return std::nullopt;
        }
        return b.max_degree() * *bx;
    }

    ElementRegularity regularity(const Element& a) const override
    {
        if (fam_ != Family::FrobeniusQuotient || a.is_zero()) {
            return Bialgebra::regularity(a);
        }
        const Element top_power = Element::basis(self(), BasisIndex::monomial({p_ - 1}));
        const Scalar a0 = a.coefficient(unit_index());
        if (a0.is_zero()) {
            return zero_divisor(top_power, "no constant term, so x^(p-1) kills it");
        }
        Regularity r = is_regular(a0);
        switch (r.status) {
        case Regularity::Status::Regular: return regular("constant term is regular, the rest is nilpotent");
        case Regularity::Status::ZeroDivisor:
            return zero_divisor(top_power.scaled(*r.witness), "constant term is a zero divisor");
        default: return unknown("constant term undecided");
        }
    }

private:
    Family fam_;
    Scalar q_;
    int p_;
};

// ---------------------------------------------------------------------------
// k[g, x]/(gx), g grouplike and x primitive. Basis g^a x^b with ab = 0.

class GxFamily final : public Bialgebra {
public:
    GxFamily(Ring ring, int truncation) : Bialgebra(std::move(ring), truncation) {}

    Family family() const override { return Family::GxQuotient; }
    std::string describe() const override
    {
        return "GxQuotient over " + ring()->to_string() + ", D=" + std::to_string(*truncation());
    }
    BasisIndex unit_index() const override { return BasisIndex::monomial({0, 0}); }

    std::vector<BasisIndex> basis(int max_degree) const override
    {
        std::vector<BasisIndex> out{unit_index()};
        for (int d = 1; d <= std::min(max_degree, *truncation()); ++d) {
            out.push_back(BasisIndex::monomial({0, d}));
            out.push_back(BasisIndex::monomial({d, 0}));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    void validate(const BasisIndex& i) const override
    {
        if (i.kind() != BasisIndex::Kind::Monomial || i.exponents().size() != 2 || i.exponents()[0] < 0 ||
            i.exponents()[1] < 0 || (i.exponents()[0] > 0 && i.exponents()[1] > 0)) {
            raise(ErrorKind::BadParameter, "not a basis index of " + describe());
        }
        check_degree(i.weight());
    }

    bool is_commutative() const override { return true; }

    Terms product(const BasisIndex& a, const BasisIndex& b) const override
    {
        const int ga = a.exponents()[0] + b.exponents()[0];
        const int xa = a.exponents()[1] + b.exponents()[1];
        if (ga > 0 && xa > 0) {
            return {};
        }
        check_degree(ga + xa);
        return single(BasisIndex::monomial({ga, xa}), ring());
    }

    Tensor coproduct(const BasisIndex& i) const override
    {
        validate(i);
        const BasisIndex one = unit_index();
        Tensor out(self(), 2);
        out.add_term({one, one}, one_of(ring()));
        Tensor gen(self(), 2);
        int n = 0;
        if (i.exponents()[0] > 0) {
            const BasisIndex g = BasisIndex::monomial({1, 0});
            gen.add_term({g, g}, one_of(ring()));
            n = i.exponents()[0];
        } else {
            const BasisIndex x = BasisIndex::monomial({0, 1});
            gen.add_term({x, one}, one_of(ring()));
            gen.add_term({one, x}, one_of(ring()));
            n = i.exponents()[1];
        }
        for (int k = 0; k < n; ++k) {
            out = out * gen;
        }
        return out;
    }

    Scalar counit(const BasisIndex& i) const override
    {
        return i.exponents()[1] == 0 ? one_of(ring()) : Scalar::zero(ring());
    }

    std::string format(const BasisIndex& i) const override
    {
        return i.exponents()[0] > 0 ? power_name("g", i.exponents()[0]) : power_name("x", i.exponents()[1]);
    }

    BasisIndex parse(std::string_view text) const override
    {
        BasisIndex i;
        if (auto n = read_power(text, "g")) {
            i = BasisIndex::monomial({*n, 0});
        } else if (auto m = read_power(text, "x")) {
            i = BasisIndex::monomial({0, *m});
        } else {
            raise(ErrorKind::ParseError, "'" + std::string(text) + "' is not g^a or x^b");
        }
        validate(i);
        return i;
    }

    std::optional<int> unipotence_bound(const Element& b) const override
    {
        if (auto base = Bialgebra::unipotence_bound(b)) {
            return base;
        }
        // The x-part is the graded connected subbialgebra k[x].
        for (const auto& [i, c] : b.terms()) {
            if (i.exponents()[0] > 0) {
                return std::nullopt;
            }
        }
        return b.max_degree();
    }

    // B embeds in k[g] x k[x] as the pairs agreeing at 0.
    ElementRegularity regularity(const Element& a) const override
    {
        if (a.is_zero()) {
            return Bialgebra::regularity(a);
        }
        std::vector<Scalar::Term> g_part, x_part;
        for (const auto& [i, c] : a.terms()) {
            if (i.exponents()[1] == 0) {
                g_part.insert(g_part.end(), c.terms().begin(), c.terms().end());
            }
            if (i.exponents()[0] == 0) {
                x_part.insert(x_part.end(), c.terms().begin(), c.terms().end());
            }
        }
        const Element g = Element::basis(self(), BasisIndex::monomial({1, 0}));
        const Element x = Element::basis(self(), BasisIndex::monomial({0, 1}));
        if (g_part.empty()) {
            return zero_divisor(g, "only positive powers of x occur, and g x = 0");
        }
        if (x_part.empty()) {
            return zero_divisor(x, "only positive powers of g occur, and g x = 0");
        }
        if (ring()->quotient()) {
            return unknown("no oracle over " + ring()->to_string());
        }
        const Regularity rg = content_regularity(ring(), g_part);
        if (rg.status == Regularity::Status::ZeroDivisor) {
            return zero_divisor(g.scaled(*rg.witness), "the k[g] component is a zero divisor");
        }
        const Regularity rx = content_regularity(ring(), x_part);
        if (rx.status == Regularity::Status::ZeroDivisor) {
            return zero_divisor(x.scaled(*rx.witness), "the k[x] component is a zero divisor");
        }
        return regular("both components are regular");
    }
};

// ---------------------------------------------------------------------------
// Monoid bialgebras k[M] with Delta(w) = w (x) w.

class MonoidFamilyBase : public Bialgebra {
public:
    using Bialgebra::Bialgebra;

    Family family() const override { return Family::MonoidDiag; }

    Tensor coproduct(const BasisIndex& i) const override
    {
        validate(i);
        Tensor out(self(), 2);
        out.add_term({i, i}, one_of(ring()));
        return out;
    }

    Scalar counit(const BasisIndex& i) const override
    {
        validate(i);
        return one_of(ring());
    }
};

class TraceMonoidFamily final : public MonoidFamilyBase {
public:
    TraceMonoidFamily(Ring ring, TraceMonoid m, int truncation)
        : MonoidFamilyBase(std::move(ring), truncation), m_(std::move(m))
    {
    }

    const TraceMonoid& monoid() const { return m_; }

    std::string describe() const override
    {
        std::string s = "MonoidDiag(trace ";
        for (std::size_t i = 0; i < m_.alphabet().size(); ++i) {
            s += (i ? "," : "") + m_.alphabet()[i];
        }
        s += ";";
        bool first = true;
        for (const auto& [a, b] : m_.edges()) {
            s += (first ? " " : ",") + m_.alphabet()[a] + "-" + m_.alphabet()[b];
            first = false;
        }
        return s + ") over " + ring()->to_string() + ", D=" + std::to_string(*truncation());
    }

    BasisIndex unit_index() const override { return BasisIndex::word({}); }

    std::vector<BasisIndex> basis(int max_degree) const override
    {
        std::vector<BasisIndex> out;
        for (auto& w : m_.elements(std::min(max_degree, *truncation()))) {
            out.push_back(BasisIndex::word(std::move(w)));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    void validate(const BasisIndex& i) const override
    {
        if (i.kind() != BasisIndex::Kind::Word) {
            raise(ErrorKind::BadParameter, "not a basis index of " + describe());
        }
        const auto w = i.letters();
        if (m_.normal_form(w) != Word(w.begin(), w.end())) {
            raise(ErrorKind::BadParameter, "word is not in normal form");
        }
        check_degree(static_cast<int>(w.size()));
    }

    bool is_commutative() const override { return m_.is_free_abelian(); }
    bool is_torsion_free_monoid_algebra() const override { return m_.is_free_abelian(); }

    Terms product(const BasisIndex& a, const BasisIndex& b) const override
    {
        Word w(a.letters().begin(), a.letters().end());
        w.insert(w.end(), b.letters().begin(), b.letters().end());
        check_degree(static_cast<int>(w.size()));
        return single(BasisIndex::word(m_.normal_form(w)), ring());
    }

    std::string format(const BasisIndex& i) const override { return m_.format(i.letters(), "*"); }

    BasisIndex parse(std::string_view text) const override
    {
        BasisIndex i = BasisIndex::word(m_.normal_form(m_.parse_word(text)));
        validate(i);
        return i;
    }

private:
    TraceMonoid m_;
};

class FiniteMonoidFamily final : public MonoidFamilyBase {
public:
    FiniteMonoidFamily(Ring ring, FiniteMonoid m) : MonoidFamilyBase(std::move(ring), std::nullopt), m_(std::move(m)) {}

    const FiniteMonoid& monoid() const { return m_; }

    std::string describe() const override
    {
        std::string s = "MonoidDiag(finite";
        for (const auto& row : m_.table()) {
            s += " ";
            for (int v : row) {
                s += m_.names()[v] + ",";
            }
        }
        s += " names";
        for (const auto& n : m_.names()) {
            s += " " + n;
        }
        return s + ") over " + ring()->to_string();
    }

    int degree(const BasisIndex&) const override { return 0; }
    BasisIndex unit_index() const override { return BasisIndex::word({m_.identity()}); }

    std::vector<BasisIndex> basis(int) const override
    {
        std::vector<BasisIndex> out;
        for (int i = 0; i < m_.size(); ++i) {
            out.push_back(BasisIndex::word({i}));
        }
        return out;
    }

    void validate(const BasisIndex& i) const override
    {
        if (i.kind() != BasisIndex::Kind::Word || i.letters().size() != 1 || i.letters()[0] < 0 ||
            i.letters()[0] >= m_.size()) {
            raise(ErrorKind::BadParameter, "not a basis index of " + describe());
        }
    }

    bool is_commutative() const override { return m_.is_commutative(); }

    Terms product(const BasisIndex& a, const BasisIndex& b) const override
    {
        return single(BasisIndex::word({m_.mul(a.letters()[0], b.letters()[0])}), ring());
    }

    std::string format(const BasisIndex& i) const override { return m_.names()[i.letters()[0]]; }

    BasisIndex parse(std::string_view text) const override { return BasisIndex::word({m_.element(text)}); }

    ElementRegularity regularity(const Element& a) const override
    {
        if (a.is_zero()) {
            return Bialgebra::regularity(a);
        }
        const int n = m_.size();
        const Ring& r = ring();
        std::vector<Scalar> coeff(n, Scalar::zero(r));
        for (const auto& [i, c] : a.terms()) {
            coeff[i.letters()[0]] = c;
        }
        auto build = [&](const std::vector<Scalar>& v) {
            Element e(self());
            for (int j = 0; j < n; ++j) {
                e.add_term(BasisIndex::word({j}), v[j]);
            }
            return e;
        };
        // Column j of the multiplication matrix is a * e_j.
        Matrix<Scalar> mat(n, std::vector<Scalar>(n, Scalar::zero(r)));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                mat[m_.mul(i, j)][j] += coeff[i];
            }
        }
        if (!r->variables().empty()) {
            return unknown("no oracle for monoid algebras over " + r->to_string());
        }
        if (r->ground_kind() != RingSpec::Kind::Modular || r->is_field()) {
            if (r->ground_kind() == RingSpec::Kind::Integers) {
                Matrix<mpq_class> q(n, std::vector<mpq_class>(n));
                for (int i = 0; i < n; ++i) {
                    for (int j = 0; j < n; ++j) {
                        q[i][j] = mat[i][j].constant_term();
                    }
                }
                auto ns = nullspace(q, static_cast<std::size_t>(n));
                if (ns.empty()) {
                    return regular("multiplication matrix has full rank over Q");
                }
                std::vector<Scalar> w;
                for (const auto& z : primitive_integer_vector(ns.front())) {
                    w.push_back(Scalar::from_int(r, z));
                }
                return zero_divisor(build(w), "kernel vector of the multiplication matrix");
            }
            auto ns = nullspace(r, mat, static_cast<std::size_t>(n));
            if (ns.empty()) {
                return regular("multiplication matrix is invertible");
            }
            return zero_divisor(build(ns.front()), "kernel vector of the multiplication matrix");
        }
        // Z/n with n composite: exhaustive search when small.
        const mpz_class& mod = r->modulus();
        double space = 1;
        for (int i = 0; i < n; ++i) {
            space *= mod.get_d();
        }
        if (space > 2e5) {
            return unknown("search space too large over " + r->to_string());
        }
        const long base = mod.get_si();
        std::vector<long> digits(n, 0);
        while (true) {
            int k = 0;
            while (k < n && ++digits[k] == base) {
                digits[k++] = 0;
            }
            if (k == n) {
                break;
            }
            std::vector<Scalar> v;
            for (long d : digits) {
                v.push_back(Scalar::from_int(r, d));
            }
            bool kills = true;
            for (int i = 0; i < n && kills; ++i) {
                Scalar s = Scalar::zero(r);
                for (int j = 0; j < n; ++j) {
                    s += mat[i][j] * v[j];
                }
                kills = s.is_zero();
            }
            if (kills) {
                return zero_divisor(build(v), "annihilator found by exhaustive search");
            }
        }
        return regular("exhaustive search found no annihilator");
    }

private:
    FiniteMonoid m_;
};

class IntegerGroupFamily final : public MonoidFamilyBase {
public:
    IntegerGroupFamily(Ring ring, int truncation) : MonoidFamilyBase(std::move(ring), truncation) {}

    std::string describe() const override
    {
        return "MonoidDiag(Z) over " + ring()->to_string() + ", D=" + std::to_string(*truncation());
    }

    BasisIndex unit_index() const override { return BasisIndex::monomial({0}); }

    std::vector<BasisIndex> basis(int max_degree) const override
    {
        std::vector<BasisIndex> out;
        const int m = std::min(max_degree, *truncation());
        for (int k = -m; k <= m; ++k) {
            out.push_back(BasisIndex::monomial({k}));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    void validate(const BasisIndex& i) const override
    {
        if (i.kind() != BasisIndex::Kind::Monomial || i.exponents().size() != 1) {
            raise(ErrorKind::BadParameter, "not a basis index of " + describe());
        }
        check_degree(i.weight());
    }

    bool is_commutative() const override { return true; }
    bool is_torsion_free_monoid_algebra() const override { return true; }

    Terms product(const BasisIndex& a, const BasisIndex& b) const override
    {
        const int k = a.exponents()[0] + b.exponents()[0];
        check_degree(std::abs(k));
        return single(BasisIndex::monomial({k}), ring());
    }

    std::string format(const BasisIndex& i) const override { return power_name("g", i.exponents()[0]); }

    BasisIndex parse(std::string_view text) const override
    {
        auto k = read_power(text, "g");
        if (!k) {
            raise(ErrorKind::ParseError, "'" + std::string(text) + "' is not a power of g");
        }
        BasisIndex i = BasisIndex::monomial({*k});
        validate(i);
        return i;
    }
};

// ---------------------------------------------------------------------------
// The tensor algebra with concatenation and primitive letters.

class TensorConcFamily final : public Bialgebra {
public:
    TensorConcFamily(Ring ring, std::vector<std::string> alphabet, int truncation)
        : Bialgebra(std::move(ring), truncation), m_(TraceMonoid::free(std::move(alphabet)))
    {
        for (const auto& a : m_.alphabet()) {
            if (a.size() != 1) {
                short_names_ = false;
            }
        }
    }

    Family family() const override { return Family::TensorConc; }

    std::string describe() const override
    {
        std::string s = "TensorConc(";
        for (std::size_t i = 0; i < m_.alphabet().size(); ++i) {
            s += (i ? "," : "") + m_.alphabet()[i];
        }
        return s + ") over " + ring()->to_string() + ", D=" + std::to_string(*truncation());
    }

    const std::vector<std::string>& alphabet() const { return m_.alphabet(); }

    BasisIndex unit_index() const override { return BasisIndex::word({}); }

    std::vector<BasisIndex> basis(int max_degree) const override
    {
        std::vector<BasisIndex> out;
        for (auto& w : m_.elements(std::min(max_degree, *truncation()))) {
            out.push_back(BasisIndex::word(std::move(w)));
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    void validate(const BasisIndex& i) const override
    {
        if (i.kind() != BasisIndex::Kind::Word) {
            raise(ErrorKind::BadParameter, "not a basis index of " + describe());
        }
        for (int a : i.letters()) {
            if (a < 0 || a >= static_cast<int>(m_.alphabet().size())) {
                raise(ErrorKind::UnknownLetter, "letter index out of range in " + describe());
            }
        }
        check_degree(static_cast<int>(i.letters().size()));
    }

    bool is_commutative() const override { return m_.alphabet().size() == 1; }
    bool is_degree_filtered() const override { return true; }
    bool is_torsion_free_monoid_algebra() const override { return m_.alphabet().size() == 1; }

    Terms product(const BasisIndex& a, const BasisIndex& b) const override
    {
        Word w(a.letters().begin(), a.letters().end());
        w.insert(w.end(), b.letters().begin(), b.letters().end());
        check_degree(static_cast<int>(w.size()));
        return single(BasisIndex::word(std::move(w)), ring());
    }

    // Deshuffle: every split of the positions into a left and right subword.
    Tensor coproduct(const BasisIndex& i) const override
    {
        validate(i);
        const auto w = i.letters();
        const std::size_t n = w.size();
        Tensor out(self(), 2);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            Word l, r;
            for (std::size_t k = 0; k < n; ++k) {
                ((mask >> k) & 1U ? l : r).push_back(w[k]);
            }
            out.add_term({BasisIndex::word(std::move(l)), BasisIndex::word(std::move(r))}, one_of(ring()));
        }
        return out;
    }

    Scalar counit(const BasisIndex& i) const override
    {
        return i.letters().empty() ? one_of(ring()) : Scalar::zero(ring());
    }

    std::string format(const BasisIndex& i) const override
    {
        return m_.format(i.letters(), short_names_ ? "" : "*");
    }

    BasisIndex parse(std::string_view text) const override
    {
        BasisIndex i = BasisIndex::word(m_.parse_word(text));
        validate(i);
        return i;
    }

    std::optional<int> unipotence_bound(const Element& b) const override
    {
        if (auto base = Bialgebra::unipotence_bound(b)) {
            return base;
        }
        return b.max_degree();
    }

private:
    TraceMonoid m_;
    bool short_names_ = true;
};

// ---------------------------------------------------------------------------
// B1 (x) B2 with the middle-swap coproduct.

class TensorProductFamily final : public Bialgebra {
public:
    TensorProductFamily(BialgebraPtr l, BialgebraPtr r)
        : Bialgebra(l->ring(), std::nullopt), l_(std::move(l)), r_(std::move(r))
    {
    }

    Family family() const override { return Family::TensorProduct; }
    std::string describe() const override { return "(" + l_->describe() + ") (x) (" + r_->describe() + ")"; }

    const BialgebraPtr& left() const { return l_; }
    const BialgebraPtr& right() const { return r_; }

    int degree(const BasisIndex& i) const override { return l_->degree(i.left()) + r_->degree(i.right()); }
    BasisIndex unit_index() const override { return BasisIndex::pair(l_->unit_index(), r_->unit_index()); }

    std::vector<BasisIndex> basis(int max_degree) const override
    {
        std::vector<BasisIndex> out;
        for (const auto& i : l_->basis(max_degree)) {
            for (const auto& j : r_->basis(max_degree - l_->degree(i))) {
                out.push_back(BasisIndex::pair(i, j));
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    void validate(const BasisIndex& i) const override
    {
        if (i.kind() != BasisIndex::Kind::Pair) {
            raise(ErrorKind::BadParameter, "not a basis index of " + describe());
        }
        l_->validate(i.left());
        r_->validate(i.right());
    }

    bool has_product() const override { return l_->has_product() && r_->has_product(); }
    bool is_commutative() const override { return l_->is_commutative() && r_->is_commutative(); }
    bool is_torsion_free_monoid_algebra() const override
    {
        return l_->is_torsion_free_monoid_algebra() && r_->is_torsion_free_monoid_algebra();
    }

    Terms product(const BasisIndex& a, const BasisIndex& b) const override
    {
        Terms out;
        const Terms pl = l_->product(a.left(), b.left());
        if (pl.empty()) {
            return out;
        }
        for (const auto& [i, c] : pl) {
            for (const auto& [j, d] : r_->product(a.right(), b.right())) {
                out.emplace(BasisIndex::pair(i, j), c * d);
            }
        }
        return out;
    }

    Tensor coproduct(const BasisIndex& i) const override
    {
        const Tensor dl = l_->coproduct(i.left());
        const Tensor dr = r_->coproduct(i.right());
        Tensor out(self(), 2);
        for (const auto& [kl, c] : dl.terms()) {
            for (const auto& [kr, d] : dr.terms()) {
                out.add_term({BasisIndex::pair(kl[0], kr[0]), BasisIndex::pair(kl[1], kr[1])}, c * d);
            }
        }
        return out;
    }

    Scalar counit(const BasisIndex& i) const override { return l_->counit(i.left()) * r_->counit(i.right()); }

    std::string format(const BasisIndex& i) const override
    {
        return "(" + l_->format(i.left()) + "|" + r_->format(i.right()) + ")";
    }

    BasisIndex parse(std::string_view text) const override
    {
        if (text.size() < 3 || text.front() != '(' || text.back() != ')') {
            raise(ErrorKind::ParseError, "expected a pair '(a|b)', got '" + std::string(text) + "'");
        }
        std::string_view inner = text.substr(1, text.size() - 2);
        int depth = 0;
        for (std::size_t k = 0; k < inner.size(); ++k) {
            if (inner[k] == '(') {
                ++depth;
            } else if (inner[k] == ')') {
                --depth;
            } else if (inner[k] == '|' && depth == 0) {
                return BasisIndex::pair(l_->parse(inner.substr(0, k)), r_->parse(inner.substr(k + 1)));
            }
        }
        raise(ErrorKind::ParseError, "missing '|' in '" + std::string(text) + "'");
    }

    std::optional<int> unipotence_bound(const Element& b) const override
    {
        if (auto base = Bialgebra::unipotence_bound(b)) {
            return base;
        }
        // Reduce to one factor when the other leg is always the unit; the
        // inclusions b -> b (x) 1 and b -> 1 (x) b are bialgebra maps.
        bool left_unit = true, right_unit = true;
        for (const auto& [i, c] : b.terms()) {
            left_unit = left_unit && i.left() == l_->unit_index();
            right_unit = right_unit && i.right() == r_->unit_index();
        }
        if (left_unit) {
            Element e(r_);
            for (const auto& [i, c] : b.terms()) {
                e.add_term(i.right(), c);
            }
            return r_->unipotence_bound(e);
        }
        if (right_unit) {
            Element e(l_);
            for (const auto& [i, c] : b.terms()) {
                e.add_term(i.left(), c);
            }
            return l_->unipotence_bound(e);
        }
        return std::nullopt;
    }

private:
    BialgebraPtr l_, r_;
};

// ---------------------------------------------------------------------------
// The dual coalgebra of a finite free algebra.

class FiniteDualFamily final : public Bialgebra {
public:
    explicit FiniteDualFamily(FiniteAlgebra a) : Bialgebra(a.ring, std::nullopt), a_(std::move(a)) {}

    Family family() const override { return Family::FiniteDualOfAlgebra; }

    std::string describe() const override
    {
        std::string s = "FiniteDual(";
        for (std::size_t i = 0; i < a_.names.size(); ++i) {
            s += (i ? "," : "") + a_.names[i];
        }
        s += ";";
        for (const auto& row : a_.table) {
            for (const auto& cell : row) {
                for (const auto& c : cell) {
                    s += " " + c.to_plain_string();
                }
            }
        }
        return s + ") over " + ring()->to_string();
    }

    const FiniteAlgebra& algebra() const { return a_; }

    int degree(const BasisIndex&) const override { return 0; }
    BasisIndex unit_index() const override
    {
        raise(ErrorKind::NotAnAlgebra, describe() + " has no unit");
    }

    std::vector<BasisIndex> basis(int) const override
    {
        std::vector<BasisIndex> out;
        for (std::size_t i = 0; i < a_.rank(); ++i) {
            out.push_back(BasisIndex::word({static_cast<int>(i)}));
        }
        return out;
    }

    void validate(const BasisIndex& i) const override
    {
        if (i.kind() != BasisIndex::Kind::Word || i.letters().size() != 1 || i.letters()[0] < 0 ||
            i.letters()[0] >= static_cast<int>(a_.rank())) {
            raise(ErrorKind::BadParameter, "not a basis index of " + describe());
        }
    }

    bool has_product() const override { return false; }
    bool is_commutative() const override { return false; }

    Terms product(const BasisIndex&, const BasisIndex&) const override
    {
        raise(ErrorKind::NotAnAlgebra, describe() + " has no multiplication");
    }

    Tensor coproduct(const BasisIndex& k) const override
    {
        validate(k);
        Tensor out(self(), 2);
        const int kk = k.letters()[0];
        for (std::size_t i = 0; i < a_.rank(); ++i) {
            for (std::size_t j = 0; j < a_.rank(); ++j) {
                out.add_term({BasisIndex::word({static_cast<int>(i)}), BasisIndex::word({static_cast<int>(j)})},
                             a_.table[i][j][kk]);
            }
        }
        return out;
    }

    Scalar counit(const BasisIndex& k) const override
    {
        validate(k);
        return (*a_.unit)[k.letters()[0]];
    }

    std::string format(const BasisIndex& i) const override { return a_.names[i.letters()[0]] + "^v"; }

    BasisIndex parse(std::string_view text) const override
    {
        for (std::size_t i = 0; i < a_.rank(); ++i) {
            if (text == a_.names[i] + "^v") {
                return BasisIndex::word({static_cast<int>(i)});
            }
        }
        raise(ErrorKind::ParseError, "'" + std::string(text) + "' is not a dual basis vector");
    }

    std::optional<int> unipotence_bound(const Element&) const override { return std::nullopt; }

private:
    FiniteAlgebra a_;
};

void check_finite_algebra(FiniteAlgebra& a)
{
    const std::size_t n = a.rank();
    if (n == 0 || n > 12) {
        raise(ErrorKind::BadParameter, "finite algebras of rank 1..12 are supported");
    }
    if (a.table.size() != n) {
        raise(ErrorKind::BadParameter, "multiplication table has the wrong shape");
    }
    for (const auto& row : a.table) {
        if (row.size() != n) {
            raise(ErrorKind::BadParameter, "multiplication table has the wrong shape");
        }
        for (const auto& cell : row) {
            if (cell.size() != n) {
                raise(ErrorKind::BadParameter, "multiplication table has the wrong shape");
            }
            for (const auto& c : cell) {
                if (!same_ring(c.ring(), a.ring)) {
                    raise(ErrorKind::RingMismatch, "structure constant outside " + a.ring->to_string());
                }
            }
        }
    }
    auto e = [&](std::size_t i) {
        std::vector<Scalar> v(n, Scalar::zero(a.ring));
        v[i] = Scalar::one(a.ring);
        return v;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                if (a.multiply(a.multiply(e(i), e(j)), e(k)) != a.multiply(e(i), a.multiply(e(j), e(k)))) {
                    raise(ErrorKind::NotAssociative, "(e" + std::to_string(i) + " e" + std::to_string(j) + ") e" +
                                                         std::to_string(k) + " differs from the other bracketing");
                }
            }
        }
    }
    auto is_unit = [&](const std::vector<Scalar>& u) {
        for (std::size_t j = 0; j < n; ++j) {
            if (a.multiply(u, e(j)) != e(j) || a.multiply(e(j), u) != e(j)) {
                return false;
            }
        }
        return true;
    };
    if (a.unit) {
        if (a.unit->size() != n || !is_unit(*a.unit)) {
            raise(ErrorKind::NotUnital, "the supplied unit is not a two-sided identity");
        }
        return;
    }
    // Solve u e_j = e_j = e_j u, a linear system in the coordinates of u.
    if (!a.ring->is_field()) {
        for (std::size_t i = 0; i < n; ++i) {
            if (is_unit(e(i))) {
                a.unit = e(i);
                return;
            }
        }
        raise(ErrorKind::NotUnital, "no basis vector is a unit and the ring is not a field");
    }
    Matrix<Scalar> rows;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<Scalar> left(n + 1, Scalar::zero(a.ring)), right(n + 1, Scalar::zero(a.ring));
            for (std::size_t i = 0; i < n; ++i) {
                left[i] = a.table[i][j][k];
                right[i] = a.table[j][i][k];
            }
            left[n] = right[n] = j == k ? -Scalar::one(a.ring) : Scalar::zero(a.ring);
            rows.push_back(std::move(left));
            rows.push_back(std::move(right));
        }
    }
    for (const auto& v : nullspace(a.ring, rows, n + 1)) {
        if (!v[n].is_zero()) {
            std::vector<Scalar> u(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n));
            const Scalar s = v[n].inverse();
            for (auto& c : u) {
                c *= s;
            }
            if (is_unit(u)) {
                a.unit = std::move(u);
                return;
            }
        }
    }
    raise(ErrorKind::NotUnital, "the algebra has no two-sided unit");
}

} // namespace

// ---------------------------------------------------------------------------
// FiniteAlgebra

FiniteAlgebra FiniteAlgebra::diagonal(const Ring& ring, int n)
{
    FiniteAlgebra a;
    a.ring = ring;
    for (int i = 0; i < n; ++i) {
        a.names.push_back("e" + std::to_string(i + 1));
    }
    a.table.assign(n, std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n, Scalar::zero(ring))));
    for (int i = 0; i < n; ++i) {
        a.table[i][i][i] = Scalar::one(ring);
    }
    return a;
}

FiniteAlgebra FiniteAlgebra::dual_numbers(const Ring& ring)
{
    FiniteAlgebra a;
    a.ring = ring;
    a.names = {"1", "x"};
    const Scalar z = Scalar::zero(ring), o = Scalar::one(ring);
    a.table = {{{o, z}, {z, o}}, {{z, o}, {z, z}}};
    return a;
}

std::vector<Scalar> FiniteAlgebra::multiply(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const
{
    const std::size_t n = rank();
    std::vector<Scalar> out(n, Scalar::zero(ring));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j].is_zero()) {
                continue;
            }
            const Scalar ab = a[i] * b[j];
            for (std::size_t k = 0; k < n; ++k) {
                out[k] += ab * table[i][j][k];
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Factories

BialgebraPtr polynomial_primitive(const Ring& ring, int truncation)
{
    return std::make_shared<PolynomialFamily>(Family::PolynomialPrimitive, ring, Scalar::zero(ring), truncation, 0);
}

BialgebraPtr infiltration(const Ring& ring, const Scalar& q, int truncation)
{
    if (!same_ring(q.ring(), ring)) {
        raise(ErrorKind::RingMismatch, "q must lie in " + ring->to_string());
    }
    return std::make_shared<PolynomialFamily>(Family::InfiltrationQ, ring, q, truncation, 0);
}

BialgebraPtr frobenius_quotient(const Ring& ring, int p, const Scalar& q)
{
    if (!same_ring(q.ring(), ring)) {
        raise(ErrorKind::RingMismatch, "q must lie in " + ring->to_string());
    }
    if (p < 2 || mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 30) == 0) {
        raise(ErrorKind::BadParameter, "p = " + std::to_string(p) + " is not prime");
    }
    if (ring->characteristic() != p) {
        raise(ErrorKind::BadParameter,
              ring->to_string() + " does not have characteristic " + std::to_string(p));
    }
    return std::make_shared<PolynomialFamily>(Family::FrobeniusQuotient, ring, q, std::nullopt, p);
}

BialgebraPtr gx_quotient(const Ring& ring, int truncation) { return std::make_shared<GxFamily>(ring, truncation); }

BialgebraPtr trace_monoid_bialgebra(const Ring& ring, const TraceMonoid& m, int truncation)
{
    return std::make_shared<TraceMonoidFamily>(ring, m, truncation);
}

BialgebraPtr finite_monoid_bialgebra(const Ring& ring, const FiniteMonoid& m)
{
    return std::make_shared<FiniteMonoidFamily>(ring, m);
}

BialgebraPtr integer_group_bialgebra(const Ring& ring, int truncation)
{
    return std::make_shared<IntegerGroupFamily>(ring, truncation);
}

BialgebraPtr tensor_conc(const Ring& ring, std::vector<std::string> alphabet, int truncation)
{
    if (truncation > 20) {
        raise(ErrorKind::BadParameter, "tensor algebra truncation is limited to 20");
    }
    return std::make_shared<TensorConcFamily>(ring, std::move(alphabet), truncation);
}

BialgebraPtr tensor_product_bialgebra(const BialgebraPtr& left, const BialgebraPtr& right)
{
    if (!same_ring(left->ring(), right->ring())) {
        raise(ErrorKind::RingMismatch, left->ring()->to_string() + " vs " + right->ring()->to_string());
    }
    return std::make_shared<TensorProductFamily>(left, right);
}

BialgebraPtr finite_dual(const FiniteAlgebra& a)
{
    FiniteAlgebra copy = a;
    check_finite_algebra(copy);
    return std::make_shared<FiniteDualFamily>(std::move(copy));
}

std::optional<Scalar> infiltration_parameter(const Bialgebra& b)
{
    if (const auto* p = dynamic_cast<const PolynomialFamily*>(&b)) {
        return p->q();
    }
    return std::nullopt;
}

const TraceMonoid* trace_monoid_of(const Bialgebra& b)
{
    const auto* p = dynamic_cast<const TraceMonoidFamily*>(&b);
    return p ? &p->monoid() : nullptr;
}

const FiniteMonoid* finite_monoid_of(const Bialgebra& b)
{
    const auto* p = dynamic_cast<const FiniteMonoidFamily*>(&b);
    return p ? &p->monoid() : nullptr;
}

const FiniteAlgebra* finite_algebra_of(const Bialgebra& b)
{
    const auto* p = dynamic_cast<const FiniteDualFamily*>(&b);
    return p ? &p->algebra() : nullptr;
}

std::pair<BialgebraPtr, BialgebraPtr> tensor_factors(const Bialgebra& b)
{
    const auto* p = dynamic_cast<const TensorProductFamily*>(&b);
    if (!p) {
        raise(ErrorKind::BadParameter, b.describe() + " is not a tensor product");
    }
    return {p->left(), p->right()};
}

} // namespace coalg
