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

#include "coalg/convolution.hpp"

#include <set>

namespace coalg {

mpz_class binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

LinearMap identity_map(const BialgebraPtr& b, int window)
{
    return tabulate<Element>(b, Element::zero(b), window, [&](const BasisIndex& i) { return Element::basis(b, i); });
}

LinearMap eta_eps(const BialgebraPtr& b, int window) { return neutral_like(b, Element::zero(b), window); }

Functional dual_basis_functional(const BialgebraPtr& b, const BasisIndex& i, int window)
{
    b->validate(i);
    Functional f(b, Scalar::zero(b->ring()), window);
    f.set(i, Scalar::one(b->ring()));
    return f;
}

namespace {

// The smallest set of basis indices containing the support of b and closed
// under taking right legs of coproducts.
std::vector<BasisIndex> right_closure(const Element& b)
{
    const Bialgebra& c = *b.bialgebra();
    std::set<BasisIndex> seen;
    std::vector<BasisIndex> stack;
    for (const auto& [i, v] : b.terms()) {
        stack.push_back(i);
    }
    while (!stack.empty()) {
        BasisIndex i = stack.back();
        stack.pop_back();
        if (!seen.insert(i).second) {
            continue;
        }
        const Tensor d = c.coproduct(i);
        for (const auto& [key, v] : d.terms()) {
            if (!seen.count(key[1])) {
                stack.push_back(key[1]);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

// f^{*n}(b) for n = 0..horizon, evaluated on the right closure of b only.
std::vector<Element> powers_on(const std::function<Element(const BasisIndex&)>& f, const Element& b, int horizon)
{
    const BialgebraPtr& src = b.bialgebra();
    const auto support = right_closure(b);
    std::map<BasisIndex, Tensor> coproducts;
    std::map<BasisIndex, Element> fvals, cur;
    for (const auto& i : support) {
        coproducts.emplace(i, src->coproduct(i));
        cur.emplace(i, Element::scalar(src, src->counit(i)));
    }
    auto apply = [&](const std::map<BasisIndex, Element>& table) {
        Element out(src);
        for (const auto& [i, c] : b.terms()) {
            out += table.at(i).scaled(c);
        }
        return out;
    };
    std::vector<Element> out;
    out.push_back(apply(cur));
    for (int n = 1; n <= horizon; ++n) {
        std::map<BasisIndex, Element> next;
        for (const auto& i : support) {
            Element acc(src);
            for (const auto& [key, c] : coproducts.at(i).terms()) {
                const Element& right = cur.at(key[1]);
                if (right.is_zero()) {
                    continue;
                }
                auto it = fvals.find(key[0]);
                if (it == fvals.end()) {
                    it = fvals.emplace(key[0], f(key[0])).first;
                }
                if (!it->second.is_zero()) {
                    acc += (it->second * right).scaled(c);
                }
            }
            next.emplace(i, std::move(acc));
        }
        cur = std::move(next);
        out.push_back(apply(cur));
    }
    return out;
}

} // namespace

std::vector<Element> eta_eps_minus_id_powers(const Element& b, int horizon)
{
    const BialgebraPtr& src = b.bialgebra();
    return powers_on(
        [&](const BasisIndex& i) { return Element::scalar(src, src->counit(i)) - Element::basis(src, i); }, b,
        horizon);
}

std::vector<Element> id_powers(const Element& b, int horizon)
{
    const BialgebraPtr& src = b.bialgebra();
    return powers_on([&](const BasisIndex& i) { return Element::basis(src, i); }, b, horizon);
}

Element eta_eps_minus_id_power(const Element& b, int n)
{
    if (n < 0) {
        raise(ErrorKind::BadParameter, "convolution powers need n >= 0");
    }
    return eta_eps_minus_id_powers(b, n).back();
}

Tensor delta_plus(const Element& e, int k)
{
    const BialgebraPtr& b = e.bialgebra();
    const Tensor full = iterated_delta_tensor(e, k);
    Tensor out(b, full.arity());
    for (const auto& [key, c] : full.terms()) {
        std::vector<Element> legs;
        legs.reserve(key.size());
        for (const auto& i : key) {
            legs.push_back(Element::basis(b, i) - Element::scalar(b, b->counit(i)));
        }
        out += Tensor::pure(legs).scaled(c);
    }
    return out;
}

Element mu_iterated(const Tensor& t)
{
    const BialgebraPtr& b = t.bialgebra();
    Element out(b);
    for (const auto& [key, c] : t.terms()) {
        Element p = Element::basis(b, key[0], c);
        for (std::size_t l = 1; l < key.size() && !p.is_zero(); ++l) {
            p = p * Element::basis(b, key[l]);
        }
        out += p;
    }
    return out;
}

std::string_view to_string(DegreeBound::Mode m) noexcept
{
    return m == DegreeBound::Mode::Certified ? "Certified" : "HorizonOnly";
}

DegreeBound degree_upper_bound(const Element& b, int horizon)
{
    if (horizon < 0) {
        raise(ErrorKind::BadParameter, "horizon must be nonnegative");
    }
    DegreeBound r;
    r.horizon = horizon;
    r.values = eta_eps_minus_id_powers(b, horizon);
    r.structural = b.bialgebra()->unipotence_bound(b);
    if (!r.values.back().is_zero() && horizon > 0) {
        return r;
    }
    int m = -1;
    for (int n = 0; n <= horizon; ++n) {
        if (!r.values[static_cast<std::size_t>(n)].is_zero()) {
            m = n;
        }
    }
    r.bound = m;
    if (r.structural && *r.structural <= horizon && m <= *r.structural) {
        r.mode = DegreeBound::Mode::Certified;
    }
    return r;
}

} // namespace coalg
