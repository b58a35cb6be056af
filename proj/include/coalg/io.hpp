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


// JSON instance files and the JSON form of elements, maps and reports.
//
// An instance is {"ring": "Q", "bialgebra": {"family": ..., "params": {...},
// "truncation": D}, "elements": {"name": [{"basis": "x^2", "coeff": "3/4"}]}}.

#ifndef COALG_IO_HPP
#define COALG_IO_HPP

#include <map>
#include <string>

#include "json.hpp"

#include "coalg/convolution.hpp"
#include "coalg/dual.hpp"
#include "coalg/independence.hpp"

namespace coalg {

using Json = nlohmann::json;

struct Instance {
    BialgebraPtr bialgebra;
    std::map<std::string, Element> elements;
    // Everything else in the file, for the verify subcommand.
    Json extra;
};

// Family names are those of to_string(Family). Raises ParseError for
// malformed documents and the library errors of the family constructors.
BialgebraPtr bialgebra_from_json(const Ring& ring, const Json& spec);
Element element_from_json(const BialgebraPtr& b, const Json& terms);
Instance instance_from_json(const Json& doc);
Instance load_instance(const std::string& path);

// A named element of the instance, or else element text for the bialgebra.
Element resolve_element(const Instance& inst, const std::string& text);

Json to_json(const Element& e);
Json to_json(const Functional& f);
Json to_json(const LinearMap& f);
Json to_json(const DegreeBound& d);
Json to_json(const VerifierReport& r);
Json to_json(const IndependenceSystem& s, const std::vector<std::vector<Scalar>>& chars);

} // namespace coalg

#endif
