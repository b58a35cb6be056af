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

#include "coalg/independence.hpp"

#include <algorithm>

#include "coalg/error.hpp"
#include "coalg/linalg.hpp"

namespace coalg {

// ---------------------------------------------------------------------------
// SymElement

SymElement::SymElement(BialgebraPtr b) : b_(std::move(b)) {}

SymElement SymElement::one(const BialgebraPtr& b)
{
    SymElement s(b);
    s.add_term({}, Scalar::one(b->ring()));
    return s;
}

SymElement SymElement::variable(const BialgebraPtr& b, const BasisIndex& i)
{
    b->validate(i);
    SymElement s(b);
    s.add_term({i}, Scalar::one(b->ring()));
    return s;
}

SymElement SymElement::embed(const Element& e)
{
    SymElement s(e.bialgebra());
    for (const auto& [i, c] : e.terms()) {
        s.add_term({i}, c);
    }
    return s;
}

void SymElement::add_term(Monomial m, const Scalar& c)
{
    if (c.is_zero()) {
        return;
    }
    std::sort(m.begin(), m.end());
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) {
        terms_.erase(it);
    }
}

void SymElement::check_same(const SymElement& other) const { check_same_bialgebra(b_, other.b_); }

SymElement& SymElement::operator+=(const SymElement& other)
{
    check_same(other);
    for (const auto& [m, c] : other.terms_) {
        add_term(m, c);
    }
    return *this;
}

SymElement& SymElement::operator-=(const SymElement& other)
{
    check_same(other);
    for (const auto& [m, c] : other.terms_) {
        add_term(m, -c);
    }
    return *this;
}

SymElement SymElement::scaled(const Scalar& c) const
{
    SymElement out(b_);
    for (const auto& [m, d] : terms_) {
        out.add_term(m, d * c);
    }
    return out;
}

SymElement SymElement::pow(unsigned n) const
{
    SymElement out = one(b_);
    for (unsigned k = 0; k < n; ++k) {
        out = out * *this;
    }
    return out;
}

SymElement operator*(const SymElement& a, const SymElement& b)
{
    a.check_same(b);
    SymElement out(a.b_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            const Scalar c = ca * cb;
            if (c.is_zero()) {
                continue;
            }
            SymElement::Monomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            out.add_term(std::move(m), c);
        }
    }
    return out;
}

bool operator==(const SymElement& a, const SymElement& b)
{
    a.check_same(b);
    return a.terms_ == b.terms_;
}

std::string SymElement::to_string() const
{
    std::vector<std::pair<std::string, Scalar>> parts;
    for (const auto& [m, c] : terms_) {
        std::string name;
        std::size_t k = 0;
        while (k < m.size()) {
            std::size_t e = k;
            while (e < m.size() && m[e] == m[k]) {
                ++e;
            }
            if (!name.empty()) {
                name += "*";
            }
            name += "Y[" + b_->format(m[k]) + "]";
            if (e - k > 1) {
                name += "^" + std::to_string(e - k);
            }
            k = e;
        }
        parts.emplace_back(name.empty() ? "1" : name, c);
    }
    return format_linear_combination(parts);
}

SymElement sym_project(const Tensor& t)
{
    SymElement s(t.bialgebra());
    for (const auto& [key, c] : t.terms()) {
        s.add_term(key, c);
    }
    return s;
}

std::string_view to_string(CheckMode m) noexcept
{
    return m == CheckMode::Certified ? "Certified" : "HorizonOnly";
}

// ---------------------------------------------------------------------------
// Theorem verifiers

namespace {

std::string status_name(Regularity::Status s) { return std::string(to_string(s)); }

Scalar unit_of(const Scalar& g) { return Scalar::one(g.ring()); }
Element unit_of(const Element& g) { return Element::one(g.bialgebra()); }
Scalar zero_of(const Scalar& g) { return Scalar::zero(g.ring()); }
Element zero_of(const Element& g) { return Element::zero(g.bialgebra()); }
void check_commutative(const Scalar&) {}
void check_commutative(const Element& g)
{
    if (!g.bialgebra()->has_product() || !g.bialgebra()->is_commutative()) {
        raise(ErrorKind::NotCommutativeFamily, g.bialgebra()->describe() + " is not a commutative algebra");
    }
}

template <class T>
void check_lengths(const std::vector<T>& gs, std::size_t other)
{
    if (gs.empty() || gs.size() != other) {
        raise(ErrorKind::LengthMismatch,
              "expected equal nonempty lists, got " + std::to_string(gs.size()) + " and " + std::to_string(other));
    }
}

std::string indexed(const char* name, std::size_t i) { return std::string(name) + "_" + std::to_string(i + 1); }

// Fills the conclusion from the products c_i prod_{j != i} (g_i - g_j).
template <class P>
void fill_conclusion(VerifierReport& r, const std::vector<P>& products)
{
    r.conclusion.holds = true;
    for (std::size_t i = 0; i < products.size(); ++i) {
        if (!products[i].is_zero()) {
            r.conclusion.holds = false;
            r.conclusion.witnesses.push_back(indexed("i", i) + ": " + products[i].to_string());
        }
    }
}

void finish(VerifierReport& r)
{
    if (!r.hypothesis.holds) {
        r.verdict = "hypothesis fails";
    } else if (r.hypothesis.mode != CheckMode::Certified) {
        r.verdict = r.conclusion.holds ? "consistent within horizon" : "hypothesis not certified";
    } else if (r.conclusion.holds) {
        r.verdict = "conclusion holds";
    } else {
        r.verdict = "counterexample";
        r.consistent = false;
    }
}

template <class T>
VerifierReport thm_old1(const std::vector<T>& gs, const std::vector<T>& cs, int horizon)
{
    check_lengths(gs, cs.size());
    if (horizon < 0) {
        raise(ErrorKind::BadParameter, "horizon must be nonnegative");
    }
    for (std::size_t i = 0; i < gs.size(); ++i) {
        check_commutative(gs[i]);
        (void)(gs[i] - gs[0]);
        (void)(cs[i] - gs[0]);
    }
    const std::size_t n = gs.size();
    VerifierReport r;
    r.theorem = "old1";
    r.hypothesis.horizon = horizon;
    std::vector<T> powers(n, unit_of(gs[0]));
    r.hypothesis.holds = true;
    for (int k = 0; k <= horizon; ++k) {
        T s = zero_of(gs[0]);
        for (std::size_t i = 0; i < n; ++i) {
            s += cs[i] * powers[i];
            powers[i] = powers[i] * gs[i];
        }
        if (!s.is_zero()) {
            r.hypothesis.holds = false;
            r.hypothesis.fails_at = k;
            r.values["sum_at_failure"] = s.to_string();
            break;
        }
    }
    if (r.hypothesis.holds && horizon + 1 >= static_cast<int>(n)) {
        r.hypothesis.mode = CheckMode::Certified;
    }
    std::vector<T> products;
    for (std::size_t i = 0; i < n; ++i) {
        T p = cs[i];
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) {
                p = p * (gs[i] - gs[j]);
            }
        }
        products.push_back(std::move(p));
    }
    fill_conclusion(r, products);
    r.assumptions.push_back({"commutative", "holds", ""});
    finish(r);
    return r;
}

} // namespace

VerifierReport verify_thm_old1(const std::vector<Scalar>& gs, const std::vector<Scalar>& cs, int horizon)
{
    return thm_old1(gs, cs, horizon);
}

VerifierReport verify_thm_old1(const std::vector<Element>& gs, const std::vector<Element>& cs, int horizon)
{
    return thm_old1(gs, cs, horizon);
}

VerifierReport verify_thm_old2(const std::vector<Element>& gs, const std::vector<Scalar>& cs)
{
    check_lengths(gs, cs.size());
    const BialgebraPtr& b = gs[0].bialgebra();
    const std::size_t n = gs.size();
    Element sum(b);
    for (std::size_t i = 0; i < n; ++i) {
        check_same_bialgebra(b, gs[i].bialgebra());
        if (!is_grouplike(gs[i])) {
            raise(ErrorKind::NotGrouplike, indexed("g", i) + " = " + gs[i].to_string() + " is not grouplike");
        }
        sum += gs[i].scaled(cs[i]);
    }
    if (!sum.is_zero()) {
        raise(ErrorKind::HypothesisFails, "sum c_i g_i = " + sum.to_string() + " is not zero");
    }
    VerifierReport r;
    r.theorem = "old2";
    r.hypothesis.horizon = static_cast<int>(n);
    r.hypothesis.holds = true;

    std::vector<SymElement> ys;
    for (const auto& g : gs) {
        ys.push_back(SymElement::embed(g));
    }
    // The iterated coproducts of a grouplike project to powers of its image,
    // so sum_i c_i Y(g_i)^k is the projection of Delta^{(k-1)}(0).
    bool projections = true;
    for (std::size_t i = 0; i < n; ++i) {
        for (int k = 1; k <= static_cast<int>(n); ++k) {
            if (!(sym_project(iterated_delta_tensor(gs[i], k - 1)) == ys[i].pow(static_cast<unsigned>(k)))) {
                projections = false;
            }
        }
    }
    r.assumptions.push_back({"grouplike", "holds", ""});
    r.assumptions.push_back({"projection of iterated coproducts", projections ? "holds" : "fails", ""});
    for (int k = 0; k < static_cast<int>(n) && r.hypothesis.holds; ++k) {
        SymElement s(b);
        for (std::size_t i = 0; i < n; ++i) {
            s += ys[i].pow(static_cast<unsigned>(k)).scaled(cs[i]);
        }
        if (!s.is_zero()) {
            r.hypothesis.holds = false;
            r.hypothesis.fails_at = k;
        }
    }
    if (r.hypothesis.holds && projections) {
        r.hypothesis.mode = CheckMode::Certified;
    }
    std::vector<SymElement> products;
    for (std::size_t i = 0; i < n; ++i) {
        SymElement p = SymElement::one(b).scaled(cs[i]);
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) {
                p = p * (ys[i] - ys[j]);
            }
        }
        products.push_back(std::move(p));
    }
    fill_conclusion(r, products);
    r.values["sum"] = sum.to_string();
    finish(r);
    return r;
}

int grouplike_rank(const std::vector<Element>& gs)
{
    if (gs.empty()) {
        return 0;
    }
    const BialgebraPtr& b = gs[0].bialgebra();
    if (!b->ring()->is_field()) {
        raise(ErrorKind::NotAField, b->ring()->to_string() + " is not a field");
    }
    std::vector<BasisIndex> support;
    for (const auto& g : gs) {
        check_same_bialgebra(b, g.bialgebra());
        for (const auto& [i, c] : g.terms()) {
            support.push_back(i);
        }
    }
    std::sort(support.begin(), support.end());
    support.erase(std::unique(support.begin(), support.end()), support.end());
    Matrix<Scalar> m;
    for (const auto& g : gs) {
        std::vector<Scalar> row;
        for (const auto& i : support) {
            row.push_back(g.coefficient(i));
        }
        m.push_back(std::move(row));
    }
    return static_cast<int>(rank(b->ring(), m));
}

VerifierReport verify_thm1_instance(const std::vector<Element>& gs, const std::vector<Element>& bs, int horizon)
{
    check_lengths(gs, bs.size());
    const BialgebraPtr& b = gs[0].bialgebra();
    check_commutative(gs[0]);
    const std::size_t n = gs.size();
    for (std::size_t i = 0; i < n; ++i) {
        check_same_bialgebra(b, gs[i].bialgebra());
        check_same_bialgebra(b, bs[i].bialgebra());
        if (!is_grouplike(gs[i])) {
            raise(ErrorKind::NotGrouplike, indexed("g", i) + " = " + gs[i].to_string() + " is not grouplike");
        }
    }
    VerifierReport r;
    r.theorem = "thm1";
    r.hypothesis.horizon = horizon;

    bool regular = true;
    auto record = [&](std::string name, const Element& a) {
        const ElementRegularity reg = is_regular(a);
        std::string detail = reg.witness ? "witness " + reg.witness->to_string() : reg.reason;
        regular = regular && reg.status == Regularity::Status::Regular;
        r.assumptions.push_back({std::move(name), status_name(reg.status), std::move(detail)});
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            record(indexed("g", i) + " - " + indexed("g", j) + " regular", gs[i] - gs[j]);
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        record(indexed("g", i) + " regular", gs[i]);
    }

    bool certified = true;
    for (std::size_t i = 0; i < n; ++i) {
        const DegreeBound d = degree_upper_bound(bs[i], horizon);
        certified = certified && d.bound && d.mode == DegreeBound::Mode::Certified;
        std::string status = d.bound ? std::string(to_string(d.mode)) : "NotWithinHorizon";
        std::string detail = d.bound ? "bound " + std::to_string(*d.bound) : "";
        r.assumptions.push_back({indexed("b", i) + " id-unipotent", std::move(status), std::move(detail)});
    }

    Element sum(b);
    bool all_zero = true;
    for (std::size_t i = 0; i < n; ++i) {
        sum += bs[i] * gs[i];
        all_zero = all_zero && bs[i].is_zero();
    }
    r.values["sum"] = sum.to_string();
    r.hypothesis.holds = sum.is_zero();
    r.hypothesis.mode = CheckMode::Certified;
    r.conclusion.holds = all_zero;
    for (std::size_t i = 0; i < n; ++i) {
        if (!bs[i].is_zero()) {
            r.conclusion.witnesses.push_back(indexed("b", i) + " = " + bs[i].to_string());
        }
    }
    if (!r.hypothesis.holds) {
        r.verdict = "no relation";
    } else if (!regular) {
        r.verdict = "assumptions not met";
    } else if (!certified) {
        r.verdict = "unipotence not certified";
    } else if (all_zero) {
        r.verdict = "independent";
    } else {
        r.verdict = "counterexample";
        r.consistent = false;
    }
    return r;
}

} // namespace coalg
