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


#include "coalg/io.hpp"

#include <fstream>
#include <sstream>

#include "coalg/error.hpp"

namespace coalg {

namespace {

[[noreturn]] void bad(const std::string& what) { raise(ErrorKind::ParseError, what); }

const Json& field(const Json& obj, const char* key)
{
    if (!obj.is_object() || !obj.contains(key)) {
        bad(std::string("missing field '") + key + "'");
    }
    return obj.at(key);
}

std::string text_of(const Json& j)
{
    if (j.is_string()) {
        return j.get<std::string>();
    }
    if (j.is_number_integer()) {
        return std::to_string(j.get<long long>());
    }
    bad("expected a string or an integer, got " + j.dump());
}

Scalar scalar_of(const Ring& ring, const Json& j) { return parse_scalar(ring, text_of(j)); }

int int_of(const Json& j, const char* what)
{
    if (!j.is_number_integer()) {
        bad(std::string(what) + " must be an integer");
    }
    return j.get<int>();
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        if (!cur.empty()) {
            out.push_back(cur);
        }
    }
    return out;
}

std::vector<std::string> names_of(const Json& j)
{
    if (j.is_string()) {
        return split(j.get<std::string>(), ',');
    }
    if (!j.is_array()) {
        bad("expected a list of names");
    }
    std::vector<std::string> out;
    for (const auto& n : j) {
        out.push_back(text_of(n));
    }
    return out;
}

std::vector<std::pair<std::string, std::string>> edges_of(const Json& j)
{
    std::vector<std::pair<std::string, std::string>> out;
    if (j.is_string()) {
        for (const auto& e : split(j.get<std::string>(), ',')) {
            const auto ends = split(e, '-');
            if (ends.size() != 2) {
                bad("edge '" + e + "' is not of the form a-b");
            }
            out.emplace_back(ends[0], ends[1]);
        }
        return out;
    }
    if (!j.is_array()) {
        bad("expected a list of edges");
    }
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) {
            bad("edge " + e.dump() + " is not a pair");
        }
        out.emplace_back(text_of(e[0]), text_of(e[1]));
    }
    return out;
}

int truncation_of(const Json& spec)
{
    return int_of(field(spec, "truncation"), "truncation");
}

FiniteMonoid monoid_of(const Json& j)
{
    std::vector<std::vector<int>> table;
    for (const auto& row : field(j, "table")) {
        std::vector<int> r;
        for (const auto& v : row) {
            r.push_back(int_of(v, "monoid table entry"));
        }
        table.push_back(std::move(r));
    }
    return FiniteMonoid(names_of(field(j, "names")), std::move(table));
}

FiniteAlgebra algebra_of(const Ring& ring, const Json& params)
{
    if (params.contains("algebra")) {
        const std::string kind = text_of(params.at("algebra"));
        if (kind == "diagonal") {
            return FiniteAlgebra::diagonal(ring, int_of(field(params, "n"), "n"));
        }
        if (kind == "dual_numbers") {
            return FiniteAlgebra::dual_numbers(ring);
        }
        bad("unknown algebra '" + kind + "'");
    }
    FiniteAlgebra a;
    a.ring = ring;
    a.names = names_of(field(params, "names"));
    for (const auto& plane : field(params, "table")) {
        std::vector<std::vector<Scalar>> p;
        for (const auto& row : plane) {
            std::vector<Scalar> r;
            for (const auto& v : row) {
                r.push_back(scalar_of(ring, v));
            }
            p.push_back(std::move(r));
        }
        a.table.push_back(std::move(p));
    }
    if (params.contains("unit")) {
        std::vector<Scalar> u;
        for (const auto& v : params.at("unit")) {
            u.push_back(scalar_of(ring, v));
        }
        a.unit = std::move(u);
    }
    return a;
}

} // namespace

BialgebraPtr bialgebra_from_json(const Ring& ring, const Json& spec)
{
    const std::string family = text_of(field(spec, "family"));
    const Json params = spec.contains("params") ? spec.at("params") : Json::object();
    if (!params.is_object()) {
        bad("params must be an object");
    }
    if (family == "PolynomialPrimitive") {
        return polynomial_primitive(ring, truncation_of(spec));
    }
    if (family == "InfiltrationQ") {
        return infiltration(ring, scalar_of(ring, field(params, "q")), truncation_of(spec));
    }
    if (family == "FrobeniusQuotient") {
        const Scalar q = params.contains("q") ? scalar_of(ring, params.at("q")) : Scalar::one(ring);
        return frobenius_quotient(ring, int_of(field(params, "p"), "p"), q);
    }
    if (family == "GxQuotient") {
        return gx_quotient(ring, truncation_of(spec));
    }
    if (family == "MonoidDiag") {
        if (params.contains("alphabet")) {
            const Json edges = params.contains("edges") ? params.at("edges") : Json::array();
            return trace_monoid_bialgebra(ring, TraceMonoid(names_of(params.at("alphabet")), edges_of(edges)),
                                          truncation_of(spec));
        }
        if (params.contains("monoid")) {
            return finite_monoid_bialgebra(ring, monoid_of(params.at("monoid")));
        }
        if (params.contains("cyclic")) {
            return finite_monoid_bialgebra(ring, FiniteMonoid::cyclic_group(int_of(params.at("cyclic"), "cyclic")));
        }
        if (params.contains("group") && text_of(params.at("group")) == "Z") {
            return integer_group_bialgebra(ring, truncation_of(spec));
        }
        bad("MonoidDiag needs one of alphabet, monoid, cyclic or group");
    }
    if (family == "TensorConc") {
        return tensor_conc(ring, names_of(field(params, "alphabet")), truncation_of(spec));
    }
    if (family == "TensorProduct") {
        return tensor_product_bialgebra(bialgebra_from_json(ring, field(params, "left")),
                                        bialgebra_from_json(ring, field(params, "right")));
    }
    if (family == "FiniteDualOfAlgebra") {
        return finite_dual(algebra_of(ring, params));
    }
    bad("unknown family '" + family + "'");
}

Element element_from_json(const BialgebraPtr& b, const Json& terms)
{
    if (terms.is_string()) {
        return parse_element(b, terms.get<std::string>());
    }
    if (!terms.is_array()) {
        bad("an element is a list of {basis, coeff} terms");
    }
    Element e(b);
    for (const auto& t : terms) {
        const BasisIndex i = b->parse(text_of(field(t, "basis")));
        b->validate(i);
        e.add_term(i, t.contains("coeff") ? scalar_of(b->ring(), t.at("coeff")) : Scalar::one(b->ring()));
    }
    return e;
}

Instance instance_from_json(const Json& doc)
{
    if (!doc.is_object()) {
        bad("an instance is a JSON object");
    }
    Instance inst;
    const Ring ring = parse_ring(text_of(field(doc, "ring")));
    inst.bialgebra = bialgebra_from_json(ring, field(doc, "bialgebra"));
    if (doc.contains("elements")) {
        for (const auto& [name, terms] : doc.at("elements").items()) {
            inst.elements.emplace(name, element_from_json(inst.bialgebra, terms));
        }
    }
    inst.extra = doc;
    inst.extra.erase("ring");
    inst.extra.erase("bialgebra");
    inst.extra.erase("elements");
    return inst;
}

Instance load_instance(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        bad("cannot open '" + path + "'");
    }
    Json doc;
    try {
        in >> doc;
    } catch (const Json::parse_error& e) {
        bad(path + ": " + e.what());
    }
    return instance_from_json(doc);
}

Element resolve_element(const Instance& inst, const std::string& text)
{
    auto it = inst.elements.find(text);
    if (it != inst.elements.end()) {
        return it->second;
    }
    return parse_element(inst.bialgebra, text);
}

Json to_json(const Element& e)
{
    Json out = Json::array();
    for (const auto& [i, c] : e.terms()) {
        out.push_back({{"basis", e.bialgebra()->format(i)}, {"coeff", c.to_string()}});
    }
    return out;
}

Json to_json(const Functional& f)
{
    Json on = Json::object();
    for (const auto& [i, c] : f.table()) {
        on[f.source()->format(i)] = c.to_string();
    }
    return {{"on", on}, {"window", f.window()}};
}

Json to_json(const LinearMap& f)
{
    Json on = Json::object();
    for (const auto& [i, v] : f.table()) {
        on[f.source()->format(i)] = v.to_string();
    }
    return {{"on", on}, {"window", f.window()}};
}

Json to_json(const DegreeBound& d)
{
    return {{"bound", d.bound ? Json(*d.bound) : Json(nullptr)}, {"mode", std::string(to_string(d.mode))}};
}

Json to_json(const VerifierReport& r)
{
    Json hyp = {{"holds", r.hypothesis.holds},
                {"mode", std::string(to_string(r.hypothesis.mode))},
                {"horizon", r.hypothesis.horizon}};
    if (r.hypothesis.fails_at) {
        hyp["fails_at"] = *r.hypothesis.fails_at;
    }
    Json assumptions = Json::array();
    for (const auto& a : r.assumptions) {
        assumptions.push_back({{"name", a.name}, {"status", a.status}, {"detail", a.detail}});
    }
    return {{"theorem", r.theorem},
            {"hypothesis", hyp},
            {"conclusion", {{"holds", r.conclusion.holds}, {"witnesses", r.conclusion.witnesses}}},
            {"assumptions", assumptions},
            {"values", r.values},
            {"verdict", r.verdict},
            {"consistent", r.consistent}};
}

Json to_json(const IndependenceSystem& s, const std::vector<std::vector<Scalar>>& chars)
{
    Json witness = Json::array();
    for (std::size_t g = 0; g < s.witness.size() && g < chars.size(); ++g) {
        Json values = Json::array();
        for (const auto& v : chars[g]) {
            values.push_back(v.to_string());
        }
        witness.push_back({values, to_json(s.witness[g])});
    }
    return {{"maxdeg", s.maxdeg},
            {"window", s.window},
            {"rows", s.rows},
            {"columns", s.columns},
            {"trivial_only", s.trivial_only},
            {"witness", witness},
            {"witness_verified", s.witness_verified}};
}

} // namespace coalg
