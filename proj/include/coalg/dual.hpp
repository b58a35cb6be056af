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

// The dual algebra B^v of a graded bialgebra: its filtration by degree, the
// shift action u |> f, characters and truncated independence systems, and
// the characters of a finite algebra against the grouplikes of its dual.

#ifndef COALG_DUAL_HPP
#define COALG_DUAL_HPP

#include <string>
#include <vector>

#include "coalg/convolution.hpp"

namespace coalg {

// The least d >= -1 with f supported in degrees <= d. Raises NotGradedFamily
// unless B_+^N is the span of the basis indices of degree >= N.
int filtration_degree(const Functional& f);

// <u |> f | v> = <f | v u>, defined on the window of f lowered by deg(u).
Functional shift(const Element& u, const Functional& f);

// u |> (f1 * f2) against (u |> f1) * f2 + f1 * (u |> f2) plus the terms of
// Delta(u) - u (x) 1 - 1 (x) u. Raises NotInAugmentationIdeal.
bool leibniz_shift_check(const Element& u, const Functional& f1, const Functional& f2);

struct FiltrationProduct {
    int degree_f = -1;
    int degree_g = -1;
    int degree_product = -1;
    bool holds = false;
};

FiltrationProduct verify_filtration_product(const Functional& f, const Functional& g);

// The character with the given values on the generators: the variables of
// a polynomial family or the letters of a tensor algebra.
Functional character(const BialgebraPtr& b, const std::vector<Scalar>& values, int window);
// f(1) = 1 and f(ij) = f(i) f(j) for all basis pairs inside the window.
bool is_character(const Functional& f);
// A one-generator character (alpha x)^* of k[x] with product
// (alpha x)^* * (beta x)^* = ((q alpha beta + alpha + beta) x)^* is invertible
// exactly when 1 + q alpha is a unit.
bool character_invertible(const Scalar& alpha, const Scalar& q);

struct CharacterProduct {
    Functional product;
    Functional expected;
    bool equal = false;
};

// (alpha x)^* * (beta x)^* in the dual of the q-infiltration bialgebra,
// against ((q alpha beta + alpha + beta) x)^*, up to degree `window`.
CharacterProduct infiltration_character_product(const Scalar& alpha, const Scalar& beta, const Scalar& q,
                                                int window);

struct IndependenceSystem {
    int maxdeg = 0;
    int window = 0;
    std::size_t rows = 0;
    std::size_t columns = 0;
    bool trivial_only = true;
    // One functional p_g per character, with sum_g p_g * g = 0 up to the window.
    std::vector<Functional> witness;
    bool witness_verified = false;
    std::vector<std::vector<Scalar>> matrix;
};

// The linear system in the coefficients of p_g in B^v_{maxdeg} expressing
// <sum_g p_g * g | w> = 0 for every basis index w of degree <= window.
IndependenceSystem character_independence_system(const BialgebraPtr& b,
                                                 const std::vector<std::vector<Scalar>>& chars, int maxdeg,
                                                 int window);
// Plain text dump: "rows cols" then one row per line.
std::string to_matrix_text(const IndependenceSystem& s);

// True when the sums sum_i a_i c_i over exponent vectors with entries <= bound
// are pairwise distinct.
bool monomial_map_injectivity(const std::vector<Scalar>& cs, int bound);

// Algebra maps A -> k of a finite algebra over Q or Z/p, as value vectors on
// the basis. Each value is a root of the characteristic polynomial of the
// corresponding multiplication operator.
std::vector<std::vector<Scalar>> algebra_characters(const FiniteAlgebra& a);
// Grouplikes of finite_dual(A) whose coefficients lie in `box` (every
// residue over Z/p), as coefficient vectors on the dual basis.
std::vector<std::vector<Scalar>> finite_dual_grouplikes(const BialgebraPtr& dual, const std::vector<Scalar>& box);

} // namespace coalg

#endif
