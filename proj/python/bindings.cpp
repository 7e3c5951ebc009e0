// Copyright 2026 The trottersmith Authors
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

#include "trottersmith/coloring.hpp"
#include "trottersmith/error.hpp"
#include "trottersmith/io.hpp"
#include "trottersmith/model.hpp"
#include "trottersmith/oracle.hpp"
#include "trottersmith/resources.hpp"
#include "trottersmith/synth.hpp"
#include "trottersmith/trotter.hpp"

namespace py = pybind11;
using namespace trottersmith;

namespace {

void export_model(py::module_& m) {
    py::enum_<LatticeKind>(m, "LatticeKind")
        .value("chain", LatticeKind::chain)
        .value("square", LatticeKind::square)
        .value("hexagonal", LatticeKind::hexagonal)
        .value("custom", LatticeKind::custom);
    py::enum_<Boundary>(m, "Boundary").value("open", Boundary::open).value("periodic", Boundary::periodic);

    py::class_<CouplingTensor>(m, "CouplingTensor")
        .def(py::init<>())
        .def(py::init<const Eigen::Matrix3d&>(), py::arg("entries"))
        .def_static("heisenberg", &CouplingTensor::heisenberg, py::arg("j"))
        .def_static("diagonal", &CouplingTensor::diagonal, py::arg("jx"), py::arg("jy"), py::arg("jz"))
        .def_property_readonly("entries", &CouplingTensor::entries)
        .def("is_isotropic", &CouplingTensor::is_isotropic)
        .def("spectral_norm", &CouplingTensor::spectral_norm);

    py::class_<EdgeTerm>(m, "EdgeTerm")
        .def(py::init([](std::size_t i, std::size_t j, const CouplingTensor& c, const Vec3& hi, const Vec3& hj) {
                 return EdgeTerm{i, j, c, hi, hj};
             }),
             py::arg("i"), py::arg("j"), py::arg("coupling"), py::arg("hi") = Vec3::Zero(),
             py::arg("hj") = Vec3::Zero())
        .def_readonly("i", &EdgeTerm::i)
        .def_readonly("j", &EdgeTerm::j)
        .def_readonly("coupling", &EdgeTerm::coupling)
        .def_readonly("hi_share", &EdgeTerm::hi_share)
        .def_readonly("hj_share", &EdgeTerm::hj_share)
        .def("is_heisenberg_form", &EdgeTerm::is_heisenberg_form);

    py::class_<SpinModel>(m, "SpinModel")
        .def(py::init([](std::size_t n, std::vector<EdgeTerm> edges) { return SpinModel(n, std::move(edges)); }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &SpinModel::n)
        .def_property_readonly("edges", &SpinModel::edges)
        .def_property_readonly("j_max", &SpinModel::j_max)
        .def_property_readonly("lattice_kind", &SpinModel::lattice_kind)
        .def_property_readonly("boundary", &SpinModel::boundary)
        .def("degree", &SpinModel::degree)
        .def("to_json", [](const SpinModel& s) { return io::model_to_json(s).dump(); })
        .def_static("from_json", [](const std::string& text) { return io::model_from_json(io::json::parse(text)); });

    m.def("build_lattice", &build_lattice, py::arg("kind"), py::arg("dims"), py::arg("boundary"),
          py::arg("coupling"), py::arg("field") = Vec3::Zero());
    m.def("term_hamiltonian", &term_hamiltonian, py::arg("edge"));
}

void export_coloring(py::module_& m) {
    py::class_<EdgeColoring>(m, "EdgeColoring")
        .def_readonly("classes", &EdgeColoring::classes)
        .def_readonly("labels", &EdgeColoring::labels)
        .def_property_readonly("K", &EdgeColoring::num_colors);
    m.def("color", &color, py::arg("model"));
    m.def("color_builtin", &color_builtin, py::arg("model"));
    m.def("color_general", &color_general, py::arg("model"));
    m.def(
        "validate",
        [](const EdgeColoring& c, const SpinModel& model) -> std::optional<std::string> {
            if (auto v = validate(c, model)) return v->message;
            return std::nullopt;
        },
        py::arg("coloring"), py::arg("model"), "None when valid, else a description of the first violation");
}

void export_trotter(py::module_& m) {
    py::class_<Stage>(m, "Stage").def_readonly("color", &Stage::color).def_readonly("coeff", &Stage::coeff);
    py::class_<ProductFormula>(m, "ProductFormula")
        .def_readonly("order", &ProductFormula::order)
        .def_readonly("num_colors", &ProductFormula::num_colors)
        .def_readonly("stages", &ProductFormula::stages)
        .def("coefficient_sums", &ProductFormula::coefficient_sums);
    py::class_<StepPlan>(m, "StepPlan")
        .def_readonly("m", &StepPlan::m)
        .def_readonly("order", &StepPlan::order)
        .def_readonly("t", &StepPlan::t)
        .def_readonly("epsilon", &StepPlan::epsilon)
        .def_property_readonly("bound_used", [](const StepPlan& p) { return to_string(p.bound_used); });
    py::class_<TimedStage>(m, "TimedStage")
        .def_readonly("color", &TimedStage::color)
        .def_readonly("duration", &TimedStage::duration)
        .def_readonly("scale", &TimedStage::scale);

    m.def("first_order", &first_order, py::arg("K"));
    m.def("second_order", &second_order, py::arg("K"), py::arg("merge") = true);
    m.def("suzuki", &suzuki, py::arg("q"), py::arg("K"), py::arg("merge") = true);
    m.def("product_formula", &product_formula, py::arg("order"), py::arg("K"));
    m.def("suzuki_p", &suzuki_p, py::arg("q"));
    m.def("first_order_error_bound", &first_order_error_bound, py::arg("K"), py::arg("n"), py::arg("J"), py::arg("t"),
          py::arg("m"));
    m.def("steps_for_accuracy", &steps_for_accuracy, py::arg("order"), py::arg("K"), py::arg("n"), py::arg("J"),
          py::arg("t"), py::arg("epsilon"), py::arg("c3") = 1.0);
    m.def(
        "expand", [](const StepPlan& plan, const ProductFormula& f) { return expand(plan, f); }, py::arg("plan"),
        py::arg("formula"));
}

void export_synth(py::module_& m) {
    py::enum_<GateMode>(m, "GateMode").value("decomposed", GateMode::decomposed).value("scaled", GateMode::scaled);
    py::enum_<TemplateChoice>(m, "TemplateChoice")
        .value("automatic", TemplateChoice::automatic)
        .value("general", TemplateChoice::general)
        .value("heisenberg", TemplateChoice::heisenberg);

    py::class_<CartanCoefficients>(m, "CartanCoefficients")
        .def_readonly("alpha", &CartanCoefficients::alpha)
        .def_readonly("beta", &CartanCoefficients::beta)
        .def_readonly("gamma", &CartanCoefficients::gamma)
        .def_readonly("u1", &CartanCoefficients::u1)
        .def_readonly("u2", &CartanCoefficients::u2)
        .def_readonly("v1", &CartanCoefficients::v1)
        .def_readonly("v2", &CartanCoefficients::v2)
        .def_readonly("global_phase", &CartanCoefficients::global_phase)
        .def("reconstruct", &CartanCoefficients::reconstruct);

    py::class_<Circuit>(m, "Circuit")
        .def_readonly("n", &Circuit::n)
        .def_readonly("interaction_gates", &Circuit::interaction_gates)
        .def_readonly("blocks", &Circuit::blocks)
        .def_property_readonly("depth", &Circuit::depth)
        .def("to_qasm", &to_qasm)
        .def("to_json", [](const Circuit& c) { return io::circuit_to_json(c).dump(); });

    m.def("kak_decompose", &kak_decompose, py::arg("u"));
    m.def("cartan_core", &cartan_core, py::arg("alpha"), py::arg("beta"), py::arg("gamma"));
    m.def("synth_general", &synth_general, py::arg("edge"), py::arg("tau"));
    m.def("synth_heisenberg", &synth_heisenberg, py::arg("alpha"), py::arg("a") = 0, py::arg("b") = 1);
    m.def("build_trotter_circuit", &build_trotter_circuit, py::arg("model"), py::arg("coloring"),
          py::arg("schedule"), py::arg("mode"), py::arg("choice") = TemplateChoice::automatic);
    m.def(
        "counts",
        [](const Circuit& c) {
            const CircuitCounts counted = counts(c);
            py::dict d;
            py::dict by_kind;
            for (const auto& [kind, count] : counted.by_kind) by_kind[py::str(to_string(kind))] = count;
            d["by_kind"] = by_kind;
            d["total_gates"] = counted.total_gates;
            d["cnots"] = counted.cnots;
            d["interaction_gates"] = counted.interaction_gates;
            d["depth"] = counted.depth;
            d["blocks"] = counted.blocks;
            return d;
        },
        py::arg("circuit"));
    m.def("circuit_unitary", &circuit_unitary, py::arg("circuit"));
}

void export_oracle(py::module_& m) {
    m.def("total_hamiltonian", &total_hamiltonian, py::arg("model"), py::arg("scale") = 1.0);
    m.def("exact_evolution", &exact_evolution, py::arg("model"), py::arg("t"));
    m.def(
        "spectral_norm",
        [](const Eigen::MatrixXcd& a, std::uint64_t seed) {
            PowerIterationOptions o;
            o.seed = seed;
            return spectral_norm(a, o);
        },
        py::arg("a"), py::arg("seed") = 0xC0FFEE);
    m.def(
        "trotter_error",
        [](const SpinModel& model, const EdgeColoring& c, const ProductFormula& f, std::int64_t steps, double t) {
            return trotter_error(model, c, f, steps, t);
        },
        py::arg("model"), py::arg("coloring"), py::arg("formula"), py::arg("m"), py::arg("t"));
}

void export_resources(py::module_& m) {
    py::class_<GateTimingModel>(m, "GateTimingModel")
        .def(py::init([](double t_inf, double s) { return GateTimingModel{t_inf, s}; }), py::arg("t_inf") = 1.0,
             py::arg("s") = 0.0)
        .def_readonly("t_inf", &GateTimingModel::t_inf)
        .def_readonly("s", &GateTimingModel::s);
    py::enum_<InteractionKind>(m, "InteractionKind")
        .value("general", InteractionKind::general)
        .value("heisenberg", InteractionKind::heisenberg);
    py::class_<ResourceReport>(m, "ResourceReport")
        .def_readonly("order", &ResourceReport::order)
        .def_readonly("m", &ResourceReport::m)
        .def_readonly("interaction_gates", &ResourceReport::interaction_gates)
        .def_readonly("cnots", &ResourceReport::cnots)
        .def_readonly("depth", &ResourceReport::depth)
        .def_readonly("simulation_time", &ResourceReport::simulation_time)
        .def_readonly("closed_form_gates", &ResourceReport::closed_form_gates)
        .def_readonly("assumptions", &ResourceReport::assumptions);
    m.def("estimate_first_order", &estimate_first_order, py::arg("n"), py::arg("K"), py::arg("J"), py::arg("t"),
          py::arg("epsilon"), py::arg("timing") = GateTimingModel{},
          py::arg("interaction") = InteractionKind::general);
    m.def(
        "estimate_higher_order",
        [](int q, std::size_t n, std::size_t k, double j, double t, double eps, double c3,
           const GateTimingModel& timing) {
            return estimate_higher_order(q, n, k, j, t, eps, ScalingConstants{c3, 1.0, 1.0, 1.0}, timing);
        },
        py::arg("q"), py::arg("n"), py::arg("K"), py::arg("J"), py::arg("t"), py::arg("epsilon"), py::arg("c3") = 1.0,
        py::arg("timing") = GateTimingModel{});
    m.def("estimate_scaled", &estimate_scaled, py::arg("K"), py::arg("s"), py::arg("t"));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Trotter-Suzuki circuit compiler and dense verifier for lattice spin-1/2 models";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<OracleLimitError>(m, "OracleLimitError", PyExc_MemoryError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

    export_model(m);
    export_coloring(m);
    export_trotter(m);
    export_synth(m);
    export_oracle(m);
    export_resources(m);
}
