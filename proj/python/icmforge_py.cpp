// Copyright 2026 The icmforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "icmforge/branch.hpp"
#include "icmforge/cli.hpp"
#include "icmforge/compiler.hpp"
#include "icmforge/compose.hpp"
#include "icmforge/depth.hpp"
#include "icmforge/gadgets.hpp"
#include "icmforge/resources.hpp"
#include "icmforge/text_format.hpp"

namespace py = pybind11;
using namespace icmforge;

namespace {

py::dict reductions_dict(const Reductions& r) {
    py::dict d;
    d["ancillae"] = r.ancillae;
    d["cnots"] = r.cnots;
    d["czs"] = r.czs;
    d["hs"] = r.hs;
    d["measurements"] = r.measurements;
    return d;
}

}  // namespace

PYBIND11_MODULE(_icmforge, m) {
    m.doc() = "Clifford+T to ICM compiler with exhaustive branch verification.";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<UnsupportedGate>(m, "UnsupportedGate", PyExc_ValueError);

    py::class_<Circuit>(m, "Circuit")
        .def(py::init<>())
        .def_property_readonly("num_qubits", &Circuit::num_qubits)
        .def_property_readonly("num_outcomes", &Circuit::num_outcomes)
        .def_property_readonly("data_arity", &Circuit::data_arity)
        .def_property_readonly("num_ops", [](const Circuit& c) { return c.ops().size(); })
        .def("is_icm", [](const Circuit& c, bool extended) { return validate_icm(c, IcmOptions{extended}).passed(); },
             py::arg("extended") = false)
        .def("icm_violations",
             [](const Circuit& c, bool extended) {
                 std::vector<std::string> out;
                 for (const auto& v : validate_icm(c, IcmOptions{extended}).violations) out.push_back(v.message);
                 return out;
             },
             py::arg("extended") = false)
        .def("__eq__", [](const Circuit& a, const Circuit& b) { return a == b; })
        .def("__str__", &serialize_circuit)
        .def("__repr__", [](const Circuit& c) {
            std::ostringstream os;
            os << "<Circuit qubits=" << c.num_qubits() << " measurements=" << c.num_outcomes() << ">";
            return os.str();
        });

    py::class_<ResourceReport>(m, "ResourceReport")
        .def(py::init<>())
        .def_readwrite("ancillae", &ResourceReport::ancillae)
        .def_readwrite("cnots", &ResourceReport::cnots)
        .def_readwrite("czs", &ResourceReport::czs)
        .def_readwrite("hs", &ResourceReport::hs)
        .def_readwrite("measurements", &ResourceReport::measurements)
        .def_readwrite("clifford_depth", &ResourceReport::clifford_depth)
        .def_readwrite("measurement_depth", &ResourceReport::measurement_depth)
        .def("as_tuple", [](const ResourceReport& r) {
            return py::make_tuple(r.ancillae, r.cnots, r.czs, r.hs, r.measurements);
        })
        .def("__eq__", [](const ResourceReport& a, const ResourceReport& b) { return a == b; })
        .def("__add__", [](const ResourceReport& a, const ResourceReport& b) { return a + b; })
        .def("__repr__", &format_report_text);

    py::class_<SimOptions>(m, "SimOptions")
        .def(py::init<>())
        .def_readwrite("prune_tol", &SimOptions::prune_tol)
        .def_readwrite("separability_tol", &SimOptions::separability_tol);

    py::class_<EquivalenceResult>(m, "EquivalenceResult")
        .def_readonly("passed", &EquivalenceResult::passed)
        .def_readonly("worst_overlap", &EquivalenceResult::worst_overlap)
        .def_readonly("max_probability_spread", &EquivalenceResult::max_probability_spread)
        .def_readonly("inputs_checked", &EquivalenceResult::inputs_checked)
        .def_readonly("branches_per_input", &EquivalenceResult::branches_per_input)
        .def_readonly("failures", &EquivalenceResult::failures)
        .def_property_readonly("branches", [](const EquivalenceResult& r) {
            py::list out;
            for (const auto& b : r.reference_branches) {
                out.append(py::make_tuple(b.outcomes, b.probability, b.global_phase));
            }
            return out;
        })
        .def("__bool__", [](const EquivalenceResult& r) { return r.passed; });

    m.def("parse_circuit", [](const std::string& text) { return parse_circuit(text); }, py::arg("text"));
    m.def("serialize_circuit", &serialize_circuit, py::arg("circuit"));

    m.def("compact_t", &compact_t);
    m.def("compact_t_dagger", &compact_t_dagger);
    m.def("legacy_t_probabilistic", &legacy_t_probabilistic);
    m.def("h_icm_gadget", &h_icm_gadget);
    m.def("one_bit_teleport", &one_bit_teleport);
    m.def("controlled_v_decomposition", &controlled_v_decomposition);
    m.def("gadget", [](const std::string& name) {
        const auto* g = find_gadget(name);
        if (g == nullptr) throw py::key_error("unknown gadget '" + name + "'");
        return g->build();
    }, py::arg("name"));
    m.def("gadget_names", [] {
        std::vector<std::string> names;
        for (const auto& g : gadget_catalog()) names.push_back(g.name);
        return names;
    });

    m.def("compose", py::overload_cast<const Circuit&, const Circuit&>(&compose), py::arg("first"),
          py::arg("second"));
    m.def("icm_convert", &icm_convert, py::arg("circuit"));
    m.def("build_htn", &build_htn, py::arg("n"), py::arg("optimize") = true);
    m.def("time_optimal_transform", [](const Circuit& c) {
        const auto f = time_optimal_transform(c);
        std::vector<std::vector<std::uint32_t>> layers;
        for (const auto& layer : f.measurement_layers) {
            auto& l = layers.emplace_back();
            for (auto id : layer) l.push_back(id.index);
        }
        return py::make_tuple(f.circuit, layers, f.t_count);
    }, py::arg("circuit"), "Returns (circuit, measurement_layers, t_count).");
    m.def("measurement_depth", &measurement_depth, py::arg("circuit"));
    m.def("clifford_depth", &clifford_depth, py::arg("circuit"));

    m.def("count", &count, py::arg("circuit"));
    m.def("legacy_t_counts", &legacy_t_counts);
    m.def("compare", [](const ResourceReport& baseline, const ResourceReport& candidate) {
        return reductions_dict(compare(baseline, candidate).reductions);
    }, py::arg("baseline"), py::arg("candidate"));
    m.def("paper_reproduction_suite", [] {
        py::list out;
        for (const auto& e : paper_reproduction_suite()) {
            py::dict d;
            d["name"] = e.name;
            d["reductions"] = reductions_dict(e.comparison.reductions);
            d["expected"] = e.expected;
            d["passed"] = e.passed;
            out.append(d);
        }
        return out;
    });

    m.def("channel_equiv", &channel_equiv, py::arg("circuit"), py::arg("target"), py::arg("tol") = 1e-10,
          py::arg("options") = SimOptions{});
    m.def("target_unitary", [](const std::string& spec, std::size_t arity) { return resolve_target(spec, arity); },
          py::arg("spec"), py::arg("arity") = 1);
    m.def("induced_unitary", [](const Circuit& c) { return induced_unitary(c); }, py::arg("circuit"));

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Runs a command in-process; returns (exit_code, stdout, stderr).");
}
