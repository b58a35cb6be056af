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


#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coalg/cli.hpp"
#include "coalg/error.hpp"
#include "coalg/io.hpp"
#include "coalg/series.hpp"
#include "coalg/suites.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

py::tuple run_cli(const std::vector<std::string>& args)
{
    std::vector<std::string> argv = {"coalg"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    const int code = coalg::run(argv, out, err);
    return py::make_tuple(code, out.str(), err.str());
}

py::dict suite(const std::string& name, std::uint64_t seed)
{
    const coalg::SuiteResult r = coalg::run_suite(name, seed);
    return py::dict("name"_a = r.name, "criterion"_a = r.criterion, "title"_a = r.title, "passed"_a = r.passed,
                    "cases"_a = r.cases, "failures"_a = r.failures);
}

coalg::TraceMonoid trace_monoid(const std::vector<std::string>& alphabet,
                                const std::vector<std::pair<std::string, std::string>>& edges)
{
    return coalg::TraceMonoid(alphabet, edges);
}

class PyInstance {
public:
    explicit PyInstance(const std::string& path) : inst_(coalg::load_instance(path)) {}

    static PyInstance from_json(const std::string& text)
    {
        PyInstance p;
        p.inst_ = coalg::instance_from_json(coalg::Json::parse(text));
        return p;
    }

    std::string family() const { return std::string(coalg::to_string(inst_.bialgebra->family())); }
    std::string describe() const { return inst_.bialgebra->describe(); }

    std::vector<std::string> names() const
    {
        std::vector<std::string> out;
        for (const auto& [name, e] : inst_.elements) {
            out.push_back(name);
        }
        return out;
    }

    std::string element(const std::string& text) const { return coalg::resolve_element(inst_, text).to_string(); }

    std::string delta(const std::string& text, int k) const
    {
        const auto d = coalg::iterated_delta(coalg::resolve_element(inst_, text), k);
        return std::holds_alternative<coalg::Scalar>(d) ? std::get<coalg::Scalar>(d).to_string()
                                                       : std::get<coalg::Tensor>(d).to_string();
    }

    bool is_grouplike(const std::string& text) const
    {
        return coalg::is_grouplike(coalg::resolve_element(inst_, text));
    }

    py::tuple degree_upper_bound(const std::string& text, int horizon) const
    {
        const coalg::DegreeBound d = coalg::degree_upper_bound(coalg::resolve_element(inst_, text), horizon);
        return py::make_tuple(d.bound ? py::cast(*d.bound) : py::none(), std::string(coalg::to_string(d.mode)));
    }

private:
    PyInstance() = default;

    coalg::Instance inst_;
};

} // namespace

PYBIND11_MODULE(_coalg, m)
{
    m.doc() = "coalg: exact computations in bialgebras, convolution algebras and trace monoids";

    py::register_exception<coalg::Error>(m, "CoalgError", PyExc_ValueError);

    m.def("run", &run_cli, "args"_a, "run(args) -> (exit code, stdout, stderr) of the command-line front end");
    m.def("suite_names", &coalg::suite_names, "suite_names() -> acceptance suite names in criterion order");
    m.def("run_suite", &suite, "name"_a, "seed"_a = 42, "run_suite(name, seed) -> result dict");

    m.def(
        "mobius",
        [](const std::vector<std::string>& alphabet, const std::vector<std::pair<std::string, std::string>>& edges,
           int length, const std::string& ring) {
            return coalg::mobius(trace_monoid(alphabet, edges), coalg::parse_ring(ring), length).to_string();
        },
        "alphabet"_a, "edges"_a = std::vector<std::pair<std::string, std::string>>{}, "length"_a = 6, "ring"_a = "Q",
        "mobius(alphabet, edges, length, ring) -> the Mobius series as text");
    m.def(
        "kleene_star",
        [](const std::vector<std::string>& alphabet, const std::vector<std::pair<std::string, std::string>>& edges,
           const std::string& series, int length, const std::string& ring) {
            const coalg::TraceMonoid t = trace_monoid(alphabet, edges);
            return coalg::kleene_star(coalg::Series::parse(t, coalg::parse_ring(ring), length, series)).to_string();
        },
        "alphabet"_a, "edges"_a, "series"_a, "length"_a = 6, "ring"_a = "Q",
        "kleene_star(alphabet, edges, series, length, ring) -> the truncated star as text");

    py::class_<PyInstance>(m, "Instance")
        .def(py::init<const std::string&>(), "path"_a)
        .def_static("from_json", &PyInstance::from_json, "text"_a)
        .def_property_readonly("family", &PyInstance::family)
        .def("describe", &PyInstance::describe)
        .def("names", &PyInstance::names)
        .def("element", &PyInstance::element, "text"_a)
        .def("delta", &PyInstance::delta, "element"_a, "k"_a = 1)
        .def("is_grouplike", &PyInstance::is_grouplike, "element"_a)
        .def("degree_upper_bound", &PyInstance::degree_upper_bound, "element"_a, "horizon"_a = 12);
}
