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

#include "trottersmith/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "trottersmith/error.hpp"

namespace trottersmith::io {

namespace {

json vec3_to_json(const Vec3& v) { return json::array({v(0), v(1), v(2)}); }

Vec3 vec3_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 3) throw ValidationError(std::string(what) + " must be a 3-vector");
    return Vec3(j[0].get<double>(), j[1].get<double>(), j[2].get<double>());
}

json matrix3_to_json(const Eigen::Matrix3d& m) {
    json rows = json::array();
    for (int r = 0; r < 3; ++r) rows.push_back(json::array({m(r, 0), m(r, 1), m(r, 2)}));
    return rows;
}

Eigen::Matrix3d matrix3_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) throw ValidationError("J must be a 3x3 array");
    Eigen::Matrix3d m;
    for (int r = 0; r < 3; ++r) {
        if (!j[r].is_array() || j[r].size() != 3) throw ValidationError("J must be a 3x3 array");
        for (int c = 0; c < 3; ++c) m(r, c) = j[r][c].get<double>();
    }
    return m;
}

json mat2_to_json(const Mat2& m) {
    json rows = json::array();
    for (int r = 0; r < 2; ++r) {
        json row = json::array();
        for (int c = 0; c < 2; ++c) row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
        rows.push_back(row);
    }
    return rows;
}

Mat2 mat2_from_json(const json& j) {
    Mat2 m;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) m(r, c) = Complex(j.at(r).at(c).at(0).get<double>(), j.at(r).at(c).at(1).get<double>());
    }
    return m;
}

json edge_to_json(const EdgeTerm& e) {
    return json{{"i", e.i},
                {"j", e.j},
                {"J", matrix3_to_json(e.coupling.entries())},
                {"hi", vec3_to_json(e.hi_share)},
                {"hj", vec3_to_json(e.hj_share)}};
}

EdgeTerm edge_from_json(const json& j) {
    EdgeTerm e;
    e.i = j.at("i").get<std::size_t>();
    e.j = j.at("j").get<std::size_t>();
    e.coupling = CouplingTensor(matrix3_from_json(j.at("J")));
    if (j.contains("hi")) e.hi_share = vec3_from_json(j["hi"], "hi");
    if (j.contains("hj")) e.hj_share = vec3_from_json(j["hj"], "hj");
    return e;
}

}  // namespace

json model_to_json(const SpinModel& model) {
    json edges = json::array();
    for (const EdgeTerm& e : model.edges()) edges.push_back(edge_to_json(e));
    json profile = model.profile().factors().empty()
                       ? json{{"kind", "constant"}}
                       : json{{"kind", "piecewise"}, {"factors", model.profile().factors()}};
    return json{{"n", model.n()},
                {"lattice", to_string(model.lattice_kind())},
                {"boundary", to_string(model.boundary())},
                {"dims", model.dims()},
                {"edges", edges},
                {"profile", profile}};
}

SpinModel model_from_json(const json& doc) {
    try {
        const auto n = doc.at("n").get<std::size_t>();
        const LatticeKind kind = lattice_kind_from_string(doc.value("lattice", std::string("custom")));
        const Boundary boundary = boundary_from_string(doc.value("boundary", std::string("open")));
        std::vector<std::size_t> dims;
        if (doc.contains("dims")) dims = doc["dims"].get<std::vector<std::size_t>>();
        std::vector<EdgeTerm> edges;
        for (const json& e : doc.at("edges")) edges.push_back(edge_from_json(e));
        TimeProfile profile;
        if (doc.contains("profile")) {
            const json& p = doc["profile"];
            const std::string pk = p.value("kind", std::string("constant"));
            if (pk == "piecewise") {
                profile = TimeProfile::piecewise(p.at("factors").get<std::vector<double>>());
            } else if (pk != "constant") {
                throw ValidationError("unknown profile kind '" + pk + "'");
            }
        }
        return SpinModel(n, std::move(edges), kind, boundary, std::move(dims), std::move(profile));
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed model file: ") + e.what());
    }
}

json coloring_to_json(const EdgeColoring& coloring, const SpinModel& model) {
    json classes = json::array();
    std::vector<std::size_t> colors(model.edges().size(), 0);
    for (std::size_t k = 0; k < coloring.classes.size(); ++k) {
        classes.push_back(json{{"label", coloring.labels.at(k)}, {"edges", coloring.classes[k]}});
        for (std::size_t e : coloring.classes[k]) {
            if (e < colors.size()) colors[e] = k;
        }
    }
    return json{{"K", coloring.num_colors()}, {"classes", classes}, {"edge_colors", colors}};
}

EdgeColoring coloring_from_json(const json& doc) {
    try {
        EdgeColoring coloring;
        for (const json& c : doc.at("classes")) {
            coloring.labels.push_back(c.value("label", "c" + std::to_string(coloring.classes.size())));
            coloring.classes.push_back(c.at("edges").get<std::vector<std::size_t>>());
        }
        return coloring;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed coloring file: ") + e.what());
    }
}

json plan_to_json(const StepPlan& plan, std::size_t num_colors) {
    return json{{"m", plan.m},
                {"order", plan.order},
                {"t", plan.t},
                {"epsilon", plan.epsilon},
                {"bound_used", to_string(plan.bound_used)},
                {"raw_bound", plan.raw_bound},
                {"c3", plan.c3},
                {"K", num_colors}};
}

json report_to_json(const ResourceReport& r) {
    return json{{"order", r.order},
                {"m", r.m},
                {"interaction_gates", r.interaction_gates},
                {"cnots", r.cnots},
                {"depth", r.depth},
                {"simulation_time", r.simulation_time},
                {"gate_time", r.gate_time},
                {"stages_per_step", r.stages_per_step},
                {"closed_form_gates", r.closed_form_gates},
                {"closed_form_time", r.closed_form_time},
                {"assumptions", r.assumptions}};
}

json circuit_to_json(const Circuit& circuit) {
    json layers = json::array();
    for (const auto& layer : circuit.layers) {
        json gates = json::array();
        for (const Gate& g : layer) {
            json rec{{"kind", to_string(g.kind)}, {"qubits", g.qubits}};
            switch (g.kind) {
                case GateKind::rx:
                case GateKind::ry:
                case GateKind::rz:
                    rec["theta"] = g.theta;
                    break;
                case GateKind::u1q:
                    rec["matrix"] = mat2_to_json(g.matrix);
                    break;
                case GateKind::scaled_two_qubit:
                    rec["tau"] = g.tau;
                    rec["edge"] = edge_to_json(g.edge);
                    break;
                default:
                    break;
            }
            gates.push_back(std::move(rec));
        }
        layers.push_back(std::move(gates));
    }
    return json{{"n", circuit.n},
                {"interaction_gates", circuit.interaction_gates},
                {"blocks", circuit.blocks},
                {"layers", layers}};
}

Circuit circuit_from_json(const json& doc) {
    try {
        Circuit c;
        c.n = doc.at("n").get<std::size_t>();
        c.interaction_gates = doc.value("interaction_gates", std::size_t{0});
        c.blocks = doc.value("blocks", std::size_t{0});
        for (const json& layer : doc.at("layers")) {
            std::vector<Gate> gates;
            for (const json& rec : layer) {
                Gate g;
                g.kind = gate_kind_from_string(rec.at("kind").get<std::string>());
                g.qubits = rec.at("qubits").get<std::vector<std::size_t>>();
                if (rec.contains("theta")) g.theta = rec["theta"].get<double>();
                if (rec.contains("matrix")) g.matrix = mat2_from_json(rec["matrix"]);
                if (rec.contains("tau")) g.tau = rec["tau"].get<double>();
                if (rec.contains("edge")) g.edge = edge_from_json(rec["edge"]);
                const std::size_t arity =
                    (g.kind == GateKind::cnot || g.kind == GateKind::scaled_two_qubit) ? 2 : 1;
                if (g.qubits.size() != arity) throw ValidationError("gate " + to_string(g.kind) + " has wrong arity");
                gates.push_back(std::move(g));
            }
            c.layers.push_back(std::move(gates));
        }
        if (auto problem = check_structure(c)) throw ValidationError(*problem);
        return c;
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed circuit file: ") + e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << contents;
}

std::string format_double(double value) {
    char buf[64];
    auto result = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
    return std::string(buf, result.ptr);
}

}  // namespace trottersmith::io
