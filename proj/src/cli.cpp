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


#include "coalg/cli.hpp"

#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "coalg/error.hpp"
#include "coalg/io.hpp"
#include "coalg/series.hpp"
#include "coalg/suites.hpp"

namespace coalg {

std::string render(const Json& j)
{
    if (j.is_object()) {
        std::string s = "{";
        bool first = true;
        for (const auto& [k, v] : j.items()) {
            s += (first ? "" : ", ") + Json(k).dump() + ": " + render(v);
            first = false;
        }
        return s + "}";
    }
    if (j.is_array()) {
        std::string s = "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
            s += (i ? ", " : "") + render(j[i]);
        }
        return s + "]";
    }
    return j.dump();
}

namespace {

struct Options {
    std::string file;
    std::string ring;
    std::string q;
    std::optional<int> p;
    std::string alphabet;
    std::string edges;
    std::string element;
    int k = 1;
    int n = 1;
    int horizon = 12;
    std::optional<int> trunc;
    int maxdeg = 3;
    std::string chars;
    std::string suite = "all";
    std::uint64_t seed = 42;
};

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

[[noreturn]] void input_error(const std::string& what) { raise(ErrorKind::BadParameter, what); }

Ring ring_of(const Options& o)
{
    if (!o.ring.empty()) {
        return parse_ring(o.ring);
    }
    return o.p ? RingSpec::modular(*o.p) : RingSpec::rationals();
}

// The instance file, or the family named by the inline flags: --p gives the
// Frobenius quotient, --q the q-infiltration bialgebra and otherwise k[x].
Instance instance_of(const Options& o)
{
    if (!o.file.empty()) {
        return load_instance(o.file);
    }
    Instance inst;
    const Ring ring = ring_of(o);
    const int d = o.trunc.value_or(12);
    if (o.p) {
        const Scalar q = o.q.empty() ? Scalar::one(ring) : parse_scalar(ring, o.q);
        inst.bialgebra = frobenius_quotient(ring, *o.p, q);
    } else if (!o.q.empty()) {
        inst.bialgebra = infiltration(ring, parse_scalar(ring, o.q), d);
    } else {
        inst.bialgebra = polynomial_primitive(ring, d);
    }
    return inst;
}

Element element_of(const Options& o, const Instance& inst)
{
    if (o.element.empty()) {
        input_error("--element is required");
    }
    return resolve_element(inst, o.element);
}

TraceMonoid monoid_of(const Options& o)
{
    if (o.alphabet.empty()) {
        input_error("--alphabet is required");
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& e : split(o.edges, ',')) {
        const auto ends = split(e, '-');
        if (ends.size() != 2) {
            input_error("edge '" + e + "' is not of the form a-b");
        }
        edges.emplace_back(ends[0], ends[1]);
    }
    return TraceMonoid(split(o.alphabet, ','), edges);
}

std::vector<Scalar> values_of(const Ring& ring, const std::string& text)
{
    std::vector<Scalar> out;
    for (const auto& v : split(text, ',')) {
        out.push_back(parse_scalar(ring, v));
    }
    return out;
}

int window_of(const Options& o, const BialgebraPtr& b)
{
    if (o.trunc) {
        return *o.trunc;
    }
    return b->truncation().value_or(12);
}

std::size_t generator_count(const BialgebraPtr& b)
{
    return b->family() == Family::TensorConc ? b->basis(1).size() - 1 : 1;
}

int cmd_delta(const Options& o, Json& out)
{
    const Instance inst = instance_of(o);
    const auto d = iterated_delta(element_of(o, inst), o.k);
    out["k"] = o.k;
    out["delta"] = std::holds_alternative<Scalar>(d) ? std::get<Scalar>(d).to_string() : std::get<Tensor>(d).to_string();
    return kExitOk;
}

int cmd_conv(const Options& o, Json& out)
{
    if (o.n < 0) {
        input_error("--n must be nonnegative");
    }
    const Instance inst = instance_of(o);
    const Element b = element_of(o, inst);
    out["n"] = o.n;
    out["eta_eps_minus_id"] = eta_eps_minus_id_power(b, o.n).to_string();
    out["id"] = id_powers(b, o.n).back().to_string();
    return kExitOk;
}

int cmd_unipotent(const Options& o, Json& out)
{
    const Instance inst = instance_of(o);
    const DegreeBound d = degree_upper_bound(element_of(o, inst), o.horizon);
    out = to_json(d);
    return d.bound ? kExitOk : kExitCheckFailed;
}

int cmd_mobius(const Options& o, Json& out)
{
    const TraceMonoid m = monoid_of(o);
    const int length = o.trunc.value_or(static_cast<int>(m.alphabet().size()));
    out["series"] = mobius(m, ring_of(o), length).to_string();
    return kExitOk;
}

int cmd_star(const Options& o, Json& out)
{
    const TraceMonoid m = monoid_of(o);
    if (o.element.empty()) {
        input_error("--element is required");
    }
    const int length = o.trunc.value_or(6);
    out["series"] = kleene_star(Series::parse(m, ring_of(o), length, o.element)).to_string();
    return kExitOk;
}

int cmd_character(const Options& o, Json& out)
{
    if (!o.alphabet.empty()) {
        const TraceMonoid m = monoid_of(o);
        out["series"] = character_series(values_of(ring_of(o), o.chars), m, o.trunc.value_or(6)).to_string();
        return kExitOk;
    }
    const Instance inst = instance_of(o);
    const BialgebraPtr& b = inst.bialgebra;
    const Functional f = character(b, values_of(b->ring(), o.chars), window_of(o, b));
    out = to_json(f);
    out["is_character"] = is_character(f);
    return kExitOk;
}

int cmd_independence(const Options& o, Json& out)
{
    const Instance inst = instance_of(o);
    const BialgebraPtr& b = inst.bialgebra;
    std::vector<std::vector<Scalar>> chars;
    if (o.chars.find(';') != std::string::npos || generator_count(b) != 1) {
        for (const auto& c : split(o.chars, ';')) {
            chars.push_back(values_of(b->ring(), c));
        }
    } else {
        for (const auto& v : values_of(b->ring(), o.chars)) {
            chars.push_back({v});
        }
    }
    if (chars.empty()) {
        input_error("--chars is required");
    }
    const IndependenceSystem s = character_independence_system(b, chars, o.maxdeg, window_of(o, b));
    out = to_json(s, chars);
    return s.trivial_only || s.witness_verified ? kExitOk : kExitCheckFailed;
}

std::vector<Element> elements_of(const Instance& inst, const Json& names)
{
    std::vector<Element> out;
    for (const auto& n : names) {
        out.push_back(resolve_element(inst, n.get<std::string>()));
    }
    return out;
}

int verify_instance(const Options& o, Json& out)
{
    const Instance inst = load_instance(o.file);
    if (!inst.extra.contains("verify")) {
        input_error("the instance has no 'verify' section");
    }
    const Json& v = inst.extra.at("verify");
    const std::string theorem = v.at("theorem").get<std::string>();
    const int horizon = v.value("horizon", o.horizon);
    const std::vector<Element> gs = elements_of(inst, v.at("gs"));
    VerifierReport r;
    if (theorem == "thm1") {
        r = verify_thm1_instance(gs, elements_of(inst, v.at("bs")), horizon);
    } else if (theorem == "old1") {
        r = verify_thm_old1(gs, elements_of(inst, v.at("cs")), horizon);
    } else if (theorem == "old2") {
        std::vector<Scalar> cs;
        for (const auto& c : v.at("cs")) {
            cs.push_back(parse_scalar(inst.bialgebra->ring(), c.is_string() ? c.get<std::string>() : c.dump()));
        }
        r = verify_thm_old2(gs, cs);
    } else {
        input_error("unknown theorem '" + theorem + "'");
    }
    out = to_json(r);
    return r.consistent ? kExitOk : kExitCheckFailed;
}

int cmd_verify(const Options& o, Json& out, bool suite_given)
{
    if (!o.file.empty() && !suite_given) {
        return verify_instance(o, out);
    }
    if (!is_suite_name(o.suite)) {
        input_error("unknown suite '" + o.suite + "'");
    }
    bool passed = true;
    Json suites = Json::object();
    for (const auto& r : run_suites(o.suite, o.seed)) {
        suites[r.name] = {{"criterion", r.criterion}, {"title", r.title},   {"passed", r.passed},
                          {"cases", r.cases},         {"failures", r.failures}};
        passed = passed && r.passed;
    }
    out["seed"] = o.seed;
    out["passed"] = passed;
    out["suites"] = suites;
    return passed ? kExitOk : kExitCheckFailed;
}

} // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Exact computations in bialgebras, convolution algebras and trace monoids", "coalg"};
    app.require_subcommand(1);

    auto instance_flags = [&](CLI::App* c) {
        c->add_option("--file", o.file, "JSON instance file");
        c->add_option("--ring", o.ring, "coefficient ring, e.g. Q, Z/4, Q[q]");
        c->add_option("--q", o.q, "q for the q-infiltration family");
        c->add_option("--p", o.p, "p for the Frobenius quotient");
        c->add_option("--trunc", o.trunc, "truncation degree or window");
    };
    auto graph_flags = [&](CLI::App* c) {
        c->add_option("--alphabet", o.alphabet, "letters, e.g. x,y,z");
        c->add_option("--edges", o.edges, "commutation edges, e.g. x-y,y-z");
    };

    CLI::App* delta = app.add_subcommand("delta", "iterated coproduct of an element");
    instance_flags(delta);
    delta->add_option("--element", o.element, "element name or text");
    delta->add_option("--k", o.k, "order of the iterated coproduct");

    CLI::App* conv = app.add_subcommand("conv", "convolution powers of id and eta eps - id on an element");
    instance_flags(conv);
    conv->add_option("--element", o.element, "element name or text");
    conv->add_option("--n", o.n, "power");

    CLI::App* unipotent = app.add_subcommand("unipotent", "degree-upper bound of an element");
    instance_flags(unipotent);
    unipotent->add_option("--element", o.element, "element name or text");
    unipotent->add_option("--horizon", o.horizon, "horizon");

    CLI::App* mob = app.add_subcommand("mobius", "Mobius function of a trace monoid");
    graph_flags(mob);
    mob->add_option("--ring", o.ring, "coefficient ring");
    mob->add_option("--trunc", o.trunc, "maximal word length");

    CLI::App* star = app.add_subcommand("star", "Kleene star of a proper series");
    graph_flags(star);
    star->add_option("--ring", o.ring, "coefficient ring");
    star->add_option("--trunc", o.trunc, "maximal word length");
    star->add_option("--element", o.element, "series text, e.g. 2*x + y");

    CLI::App* chr = app.add_subcommand("character", "character series or character functional");
    instance_flags(chr);
    graph_flags(chr);
    chr->add_option("--chars", o.chars, "values on the generators, e.g. 2,1/3");

    CLI::App* indep = app.add_subcommand("independence", "truncated independence system for characters");
    instance_flags(indep);
    indep->add_option("--chars", o.chars, "characters separated by ';', values by ','");
    indep->add_option("--maxdeg", o.maxdeg, "filtration degree of the coefficients");

    CLI::App* verify = app.add_subcommand("verify", "acceptance suites or a theorem instance");
    verify->add_option("--file", o.file, "instance file with a 'verify' section");
    CLI::Option* suite = verify->add_option("--suite", o.suite, "suite name or 'all'");
    verify->add_option("--seed", o.seed, "random seed");
    verify->add_option("--horizon", o.horizon, "horizon");

    std::vector<const char*> args;
    for (const auto& a : argv) {
        args.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(args.size()), args.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    Json result = Json::object();
    int code = kExitOk;
    try {
        if (*delta) {
            code = cmd_delta(o, result);
        } else if (*conv) {
            code = cmd_conv(o, result);
        } else if (*unipotent) {
            code = cmd_unipotent(o, result);
        } else if (*mob) {
            code = cmd_mobius(o, result);
        } else if (*star) {
            code = cmd_star(o, result);
        } else if (*chr) {
            code = cmd_character(o, result);
        } else if (*indep) {
            code = cmd_independence(o, result);
        } else {
            code = cmd_verify(o, result, suite->count() > 0);
        }
    } catch (const Error& e) {
        err << "coalg: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Json::exception& e) {
        err << "coalg: ParseError: " << e.what() << "\n";
        return kExitInputError;
    }
    out << render(result) << "\n";
    return code;
}

} // namespace coalg
