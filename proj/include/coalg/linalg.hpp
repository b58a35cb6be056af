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

// Exact Gaussian elimination over Q (mpq_class) and over field-valued
// Scalars (Q or Z/p).

#ifndef COALG_LINALG_HPP
#define COALG_LINALG_HPP

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "coalg/scalars.hpp"

namespace coalg {

template <class T>
using Matrix = std::vector<std::vector<T>>;

namespace detail {

inline bool field_is_zero(const mpq_class& a) { return sgn(a) == 0; }
inline mpq_class field_inverse(const mpq_class& a) { return 1 / a; }
inline bool field_is_zero(const Scalar& a) { return a.is_zero(); }
inline Scalar field_inverse(const Scalar& a) { return a.inverse(); }

// Reduced row echelon form in place; returns the pivot columns.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& a, std::size_t ncols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
        std::size_t sel = row;
        while (sel < a.size() && field_is_zero(a[sel][col])) {
            ++sel;
        }
        if (sel == a.size()) {
            continue;
        }
        std::swap(a[row], a[sel]);
        const T inv = field_inverse(a[row][col]);
        for (std::size_t j = col; j < ncols; ++j) {
            a[row][j] = a[row][j] * inv;
        }
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || field_is_zero(a[r][col])) {
                continue;
            }
            const T f = a[r][col];
            for (std::size_t j = col; j < ncols; ++j) {
                a[r][j] = a[r][j] - f * a[row][j];
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class T>
Matrix<T> nullspace_impl(Matrix<T> a, std::size_t ncols, const T& zero, const T& one)
{
    const auto pivots = rref(a, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : pivots) {
        is_pivot[p] = true;
    }
    Matrix<T> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<T> v(ncols, zero);
        v[free] = one;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = zero - a[r][free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace detail

std::size_t rank(Matrix<mpq_class> a);
// A basis of {v : a v = 0}; each vector has `ncols` entries.
Matrix<mpq_class> nullspace(Matrix<mpq_class> a, std::size_t ncols);

// The entries must live in a field (Q or Z/p); NotAField otherwise.
std::size_t rank(const Ring& ring, Matrix<Scalar> a);
Matrix<Scalar> nullspace(const Ring& ring, Matrix<Scalar> a, std::size_t ncols);

// Clears denominators and content: the primitive integer multiple of `v`.
std::vector<mpz_class> primitive_integer_vector(const std::vector<mpq_class>& v);

} // namespace coalg

#endif
