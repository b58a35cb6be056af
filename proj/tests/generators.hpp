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


// Hand-rolled random generators for property tests.

#ifndef COALG_TESTS_GENERATORS_HPP
#define COALG_TESTS_GENERATORS_HPP

#include "coalg/random.hpp"

namespace coalg::testing {

using coalg::random_element;
using coalg::random_scalar;
using coalg::Rng;
using coalg::uniform;

} // namespace coalg::testing

#endif
