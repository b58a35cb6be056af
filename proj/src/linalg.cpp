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

#include "coalg/linalg.hpp"

namespace coalg {

namespace {

void require_field(const Ring& ring)
{
    if (!ring->is_field()) {
        raise(ErrorKind::NotAField, "linear algebra over " + ring->to_string() + " needs a field");
    }
}

} // namespace

std::size_t rank(Matrix<mpq_class> a)
{
    const std::size_t ncols = a.empty() ? 0 : a.front().size();
    return detail::rref(a, ncols).size();
}

Matrix<mpq_class> nullspace(Matrix<mpq_class> a, std::size_t ncols)
{
    return detail::nullspace_impl<mpq_class>(std::move(a), ncols, mpq_class(0), mpq_class(1));
}

std::size_t rank(const Ring& ring, Matrix<Scalar> a)
{
    require_field(ring);
    const std::size_t ncols = a.empty() ? 0 : a.front().size();
    return detail::rref(a, ncols).size();
}

Matrix<Scalar> nullspace(const Ring& ring, Matrix<Scalar> a, std::size_t ncols)
{
    require_field(ring);
    return detail::nullspace_impl<Scalar>(std::move(a), ncols, Scalar::zero(ring), Scalar::one(ring));
}

std::vector<mpz_class> primitive_integer_vector(const std::vector<mpq_class>& v)
{
    mpz_class den = 1;
    for (const auto& x : v) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    }
    std::vector<mpz_class> out;
    out.reserve(v.size());
    mpz_class g = 0;
    for (const auto& x : v) {
        mpz_class n = x.get_num() * (den / x.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        out.push_back(std::move(n));
    }
    if (g > 1) {
        for (auto& n : out) {
            n /= g;
        }
    }
    return out;
}

} // namespace coalg
