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

#include "trottersmith/resources.hpp"

#include <cmath>

#include "trottersmith/error.hpp"
#include "trottersmith/trotter.hpp"

namespace trottersmith {

double GateTimingModel::gate_time(double t, std::int64_t m) const {
    if (t_inf < 0.0 || s < 0.0) throw ValidationError("gate timing parameters must be nonnegative");
    if (t_inf == 0.0 && s == 0.0) throw ValidationError("gate timing model needs t_inf > 0 or s > 0");
    return t_inf + s * t / static_cast<double>(m);
}

namespace {

double cnots_per_gate(InteractionKind kind) { return kind == InteractionKind::heisenberg ? 3.0 : 6.0; }

std::string timing_note(const GateTimingModel& timing) {
    if (timing.s == 0.0) return "fixed-gate regime: t_g = t_inf";
    return "t_g = t_inf + s t/m";
}

}  // namespace

ResourceReport estimate_first_order(std::size_t n, std::size_t num_colors, double j, double t, double epsilon,
                                    const GateTimingModel& timing, InteractionKind interaction) {
    const StepPlan plan = steps_for_accuracy(1, num_colors, n, j, t, epsilon);
    const double k = static_cast<double>(num_colors);
    const double sites = static_cast<double>(n);
    const double m = static_cast<double>(plan.m);
    ResourceReport r;
    r.order = 1;
    r.m = plan.m;
    r.stages_per_step = num_colors;
    r.interaction_gates = m * sites * k / 2.0;
    r.cnots = cnots_per_gate(interaction) * r.interaction_gates;
    r.depth = m * k;
    r.gate_time = timing.gate_time(t, plan.m);
    r.simulation_time = m * k * r.gate_time;
    r.closed_form_gates = 3.0 / 32.0 * k * k * (k - 1.0) * t * t / epsilon * sites * sites * j * j;
    r.closed_form_time = 3.0 / 16.0 * k * k * (k - 1.0) * t * t / epsilon * sites * j * j * r.gate_time;
    r.assumptions = {"regular lattice with n K / 2 edges", timing_note(timing),
                     interaction == InteractionKind::heisenberg ? "3 CNOTs per Heisenberg interaction gate"
                                                                : "6 CNOTs per general interaction gate"};
    return r;
}

ResourceReport estimate_higher_order(int q, std::size_t n, std::size_t num_colors, double j, double t,
                                     double epsilon, const ScalingConstants& constants,
                                     const GateTimingModel& timing, InteractionKind interaction) {
    if (q < 1) throw ValidationError("q must be >= 1");
    if (constants.c3 <= 0 || constants.c4 <= 0 || constants.c5 <= 0 || constants.c6 <= 0) {
        throw ValidationError("scaling constants must be positive");
    }
    const StepPlan plan = steps_for_accuracy(2 * q, num_colors, n, j, t, epsilon, constants.c3);
    const double k = static_cast<double>(num_colors);
    const double sites = static_cast<double>(n);
    const double m = static_cast<double>(plan.m);
    const double inv = 1.0 / (2.0 * q);
    ResourceReport r;
    r.order = 2 * q;
    r.m = plan.m;
    r.stages_per_step = unmerged_stage_count(2 * q, num_colors);
    const double stages = static_cast<double>(r.stages_per_step);
    r.interaction_gates = constants.c4 * m * stages * sites / 2.0;  // every class holds n/2 edges
    r.cnots = cnots_per_gate(interaction) * r.interaction_gates;
    r.depth = constants.c4 * m * stages;
    r.gate_time = timing.gate_time(t, plan.m);
    r.simulation_time = r.depth * r.gate_time;
    r.closed_form_gates = constants.c5 * std::pow(sites, 1.0 + inv) * std::pow(k, 2.0 + inv) * std::pow(t, 1.0 + inv) /
                          std::pow(epsilon, inv);
    r.closed_form_time = constants.c6 * std::pow(k, 2.0 + inv) * std::pow(t, 1.0 + inv) / std::pow(epsilon, inv) *
                         std::pow(sites, inv) * r.gate_time;
    r.assumptions = {"regular lattice with n K / 2 edges",
                     "unmerged stage count 2*5^(q-1)*K per step (upper bound)",
                     "c3=" + std::to_string(constants.c3) + " c4=" + std::to_string(constants.c4) +
                         " c5=" + std::to_string(constants.c5) + " c6=" + std::to_string(constants.c6) +
                         " (symbolic constants, not derived)",
                     timing_note(timing),
                     interaction == InteractionKind::heisenberg ? "3 CNOTs per Heisenberg interaction gate"
                                                                : "6 CNOTs per general interaction gate"};
    return r;
}

ResourceReport estimate_for_model(const SpinModel& model, const EdgeColoring& coloring, int order, double t,
                                  double epsilon, const ScalingConstants& constants, const GateTimingModel& timing) {
    const std::size_t k = coloring.num_colors();
    const InteractionKind interaction =
        model.all_heisenberg_form() ? InteractionKind::heisenberg : InteractionKind::general;
    ResourceReport r = order == 1 ? estimate_first_order(model.n(), k, model.j_max(), t, epsilon, timing, interaction)
                                  : estimate_higher_order(order / 2, model.n(), k, model.j_max(), t, epsilon,
                                                          constants, timing, interaction);
    // Replace the regular-lattice count with the actual per-class edge numbers.
    const ProductFormula raw = order == 1   ? first_order(k)
                               : order == 2 ? second_order(k, false)
                                            : suzuki(order / 2, k, false);
    double per_step = 0.0;
    for (const Stage& s : raw.stages) per_step += static_cast<double>(coloring.classes[s.color].size());
    const double c4 = order == 1 ? 1.0 : constants.c4;
    const double regular = r.interaction_gates;
    r.interaction_gates = c4 * static_cast<double>(r.m) * per_step;
    r.cnots = cnots_per_gate(interaction) * r.interaction_gates;
    r.assumptions[0] = "actual edge counts per color class (" + std::to_string(model.edges().size()) +
                       " edges); regular-lattice reference N = " + std::to_string(regular);
    return r;
}

double estimate_scaled(std::size_t num_colors, double s, double t) {
    if (!(s > 0.0)) throw ValidationError("scaled-gate slope s must be positive");
    return static_cast<double>(num_colors) * s * t;
}

std::vector<Discrepancy> audit(const ResourceReport& report, const Circuit& circuit) {
    std::vector<Discrepancy> out;
    const CircuitCounts c = counts(circuit);
    auto check = [&](const std::string& what, double predicted, double measured) {
        if (predicted != measured) out.push_back({what, predicted, measured});
    };
    check("interaction_gates", report.interaction_gates, static_cast<double>(c.interaction_gates));
    check("depth", report.depth, static_cast<double>(c.blocks));
    bool decomposed = c.by_kind.count(GateKind::scaled_two_qubit) == 0;
    if (decomposed) check("cnots", report.cnots, static_cast<double>(c.cnots));
    return out;
}

}  // namespace trottersmith
