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

// The convolution algebra Hom(C, A): linear maps tabulated on the basis of
// C up to a degree window, f * g = mu o (f (x) g) o Delta, and the
// id-unipotence machinery built on (eta eps - id)^{*n}.

#ifndef COALG_CONVOLUTION_HPP
#define COALG_CONVOLUTION_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coalg/bialgebra.hpp"
#include "coalg/sequences.hpp"

namespace coalg {

namespace detail {

inline Element unit_like(const Element& zero, const Scalar& c) { return Element::scalar(zero.bialgebra(), c); }
inline Scalar unit_like(const Scalar&, const Scalar& c) { return c; }
inline Element scale(const Element& v, const Scalar& c) { return v.scaled(c); }
inline Scalar scale(const Scalar& v, const Scalar& c) { return v * c; }
inline void check_target(const Element& a, const Element& b)
{
    check_same_bialgebra(a.bialgebra(), b.bialgebra());
}
inline void check_target(const Scalar& a, const Scalar& b)
{
    if (!same_ring(a.ring(), b.ring())) {
        raise(ErrorKind::RingMismatch, "maps into different rings");
    }
}

} // namespace detail

// A linear map from the based coalgebra `source` into values of type V
// (Element for maps into an algebra, Scalar for functionals), defined on
// every basis index of degree at most `window`. Missing entries are zero.
template <class V>
class BasisMap {
public:
    BasisMap(BialgebraPtr source, V zero, int window)
        : source_(std::move(source)), zero_(std::move(zero)), window_(window)
    {
    }

    const BialgebraPtr& source() const noexcept { return source_; }
    const V& zero() const noexcept { return zero_; }
    int window() const noexcept { return window_; }
    const std::map<BasisIndex, V>& table() const noexcept { return table_; }

    void check_domain(const BasisIndex& i) const
    {
        const int d = source_->degree(i);
        if (d > window_) {
            raise(ErrorKind::TruncationExceeded,
                  "degree " + std::to_string(d) + " is outside the window " + std::to_string(window_));
        }
    }

    V on(const BasisIndex& i) const
    {
        check_domain(i);
        auto it = table_.find(i);
        return it == table_.end() ? zero_ : it->second;
    }

    void set(const BasisIndex& i, V v)
    {
        check_domain(i);
        if (is_zero(v)) {
            table_.erase(i);
        } else {
            table_.insert_or_assign(i, std::move(v));
        }
    }

    V operator()(const Element& e) const
    {
        check_same_bialgebra(source_, e.bialgebra());
        V out = zero_;
        for (const auto& [i, c] : e.terms()) {
            auto it = table_.find(i);
            check_domain(i);
            if (it != table_.end()) {
                out += detail::scale(it->second, c);
            }
        }
        return out;
    }

    BasisMap& operator+=(const BasisMap& other)
    {
        check_compatible(other);
        window_ = std::min(window_, other.window_);
        trim();
        for (const auto& [i, v] : other.table_) {
            if (source_->degree(i) > window_) {
                continue;
            }
            V sum = on(i);
            sum += v;
            set(i, std::move(sum));
        }
        return *this;
    }

    BasisMap& operator-=(const BasisMap& other)
    {
        check_compatible(other);
        window_ = std::min(window_, other.window_);
        trim();
        for (const auto& [i, v] : other.table_) {
            if (source_->degree(i) > window_) {
                continue;
            }
            V diff = on(i);
            diff -= v;
            set(i, std::move(diff));
        }
        return *this;
    }

    BasisMap scaled(const Scalar& c) const
    {
        BasisMap out(source_, zero_, window_);
        for (const auto& [i, v] : table_) {
            out.set(i, detail::scale(v, c));
        }
        return out;
    }

    friend BasisMap operator+(BasisMap a, const BasisMap& b) { return a += b; }
    friend BasisMap operator-(BasisMap a, const BasisMap& b) { return a -= b; }

    // Equal on the common window.
    friend bool operator==(const BasisMap& a, const BasisMap& b)
    {
        a.check_compatible(b);
        const int w = std::min(a.window_, b.window_);
        auto restricted = [w](const BasisMap& m) {
            std::vector<std::pair<BasisIndex, V>> out;
            for (const auto& [i, v] : m.table_) {
                if (m.source_->degree(i) <= w) {
                    out.emplace_back(i, v);
                }
            }
            return out;
        };
        const auto ra = restricted(a), rb = restricted(b);
        if (ra.size() != rb.size()) {
            return false;
        }
        for (std::size_t k = 0; k < ra.size(); ++k) {
            if (!(ra[k].first == rb[k].first) || !(ra[k].second == rb[k].second)) {
                return false;
            }
        }
        return true;
    }

    void check_compatible(const BasisMap& other) const
    {
        if (source_ != other.source_ && source_->describe() != other.source_->describe()) {
            raise(ErrorKind::SourceMismatch, source_->describe() + " vs " + other.source_->describe());
        }
        detail::check_target(zero_, other.zero_);
    }

private:
    static bool is_zero(const V& v) { return v.is_zero(); }

    void trim()
    {
        for (auto it = table_.begin(); it != table_.end();) {
            it = source_->degree(it->first) > window_ ? table_.erase(it) : std::next(it);
        }
    }

    BialgebraPtr source_;
    V zero_;
    int window_;
    std::map<BasisIndex, V> table_;
};

using LinearMap = BasisMap<Element>;
using Functional = BasisMap<Scalar>;

// Tabulates `fn` on source->basis(window).
template <class V>
BasisMap<V> tabulate(const BialgebraPtr& source, const V& zero, int window,
                     const std::function<V(const BasisIndex&)>& fn)
{
    BasisMap<V> out(source, zero, window);
    for (const auto& i : source->basis(window)) {
        out.set(i, fn(i));
    }
    return out;
}

LinearMap identity_map(const BialgebraPtr& b, int window);
LinearMap eta_eps(const BialgebraPtr& b, int window);
// i -> eps(i) * 1, valued like `zero`.
template <class V>
BasisMap<V> neutral_like(const BialgebraPtr& source, const V& zero, int window)
{
    return tabulate<V>(source, zero, window,
                       [&](const BasisIndex& i) { return detail::unit_like(zero, source->counit(i)); });
}
// The dual-basis functional i^v.
Functional dual_basis_functional(const BialgebraPtr& b, const BasisIndex& i, int window);

template <class V>
BasisMap<V> convolve(const BasisMap<V>& f, const BasisMap<V>& g)
{
    f.check_compatible(g);
    const int w = std::min(f.window(), g.window());
    BasisMap<V> out(f.source(), f.zero(), w);
    const Bialgebra& c = *f.source();
    for (const auto& i : c.basis(w)) {
        const Tensor d = c.coproduct(i);
        V acc = f.zero();
        for (const auto& [key, coeff] : d.terms()) {
            const V a = f.on(key[0]);
            if (a.is_zero()) {
                continue;
            }
            const V b = g.on(key[1]);
            if (b.is_zero()) {
                continue;
            }
            acc += detail::scale(a * b, coeff);
        }
        out.set(i, std::move(acc));
    }
    return out;
}

template <class V>
BasisMap<V> conv_power(const BasisMap<V>& f, int n)
{
    if (n < 0) {
        raise(ErrorKind::BadParameter, "convolution powers need n >= 0");
    }
    BasisMap<V> out = neutral_like(f.source(), f.zero(), f.window());
    for (int k = 0; k < n; ++k) {
        out = convolve(f, out);
    }
    return out;
}

// (eta eps - id)^{*n}(b).
Element eta_eps_minus_id_power(const Element& b, int n);
// The values (eta eps - id)^{*n}(b) for n = 0..horizon.
std::vector<Element> eta_eps_minus_id_powers(const Element& b, int horizon);
// The values id^{*n}(b) for n = 0..horizon.
std::vector<Element> id_powers(const Element& b, int horizon);

// (id - eta eps)^{(x)(k+1)} o Delta^{(k)}.
Tensor delta_plus(const Element& e, int k);
// Multiplies the legs of every term left to right.
Element mu_iterated(const Tensor& t);

struct DegreeBound {
    enum class Mode { Certified, HorizonOnly };
    // Least m with (eta eps - id)^{*n}(b) = 0 for m < n <= horizon; empty
    // when the last value in the window is still nonzero.
    std::optional<int> bound;
    Mode mode = Mode::HorizonOnly;
    int horizon = 0;
    // The family's structural bound, when it has one.
    std::optional<int> structural;
    std::vector<Element> values;
};

std::string_view to_string(DegreeBound::Mode m) noexcept;

DegreeBound degree_upper_bound(const Element& b, int horizon = 12);

} // namespace coalg

#endif
