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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "trottersmith/coloring.hpp"
#include "trottersmith/model.hpp"
#include "trottersmith/synth.hpp"

namespace trottersmith {

/// Gate time t_g = t_inf + s * (t / m).
struct GateTimingModel {
    double t_inf = 1.0;  // fixed gate time
    double s = 0.0;      // scaled-gate slope

    double gate_time(double t, std::int64_t m) const;
};

/// Free constants of the higher-order scaling laws.
struct ScalingConstants {
    double c3 = 1.0;
    double c4 = 1.0;
    double c5 = 1.0;
    double c6 = 1.0;
};

enum class InteractionKind { general, heisenberg };

struct ResourceReport {
    int order = 1;
    std::int64_t m = 0;
    /// Interaction gates U_ij.
    double interaction_gates = 0.0;
    double cnots = 0.0;
    /// Interaction-layer depth (parallel blocks).
    double depth = 0.0;
    /// Simulation time T.
    double simulation_time = 0.0;
    double gate_time = 0.0;
    /// Stages per step the counts assume (unmerged for higher orders).
    std::size_t stages_per_step = 0;
    /// Regular-lattice closed forms (3/32)K^2(K-1)t^2 n^2 J^2/eps etc., or the c5/c6 asymptotic forms.
    double closed_form_gates = 0.0;
    double closed_form_time = 0.0;
    std::vector<std::string> assumptions;
};

/// First-order estimate on a regular lattice of n sites and coordination K.
ResourceReport estimate_first_order(std::size_t n, std::size_t num_colors, double j, double t, double epsilon,
                                    const GateTimingModel& timing = {},
                                    InteractionKind interaction = InteractionKind::general);

/// Order-2q estimate (q >= 1) on a regular lattice. Counts use 2*5^{q-1} unmerged stages per step.
ResourceReport estimate_higher_order(int q, std::size_t n, std::size_t num_colors, double j, double t,
                                     double epsilon, const ScalingConstants& constants = {},
                                     const GateTimingModel& timing = {},
                                     InteractionKind interaction = InteractionKind::general);

/// Estimate for a concrete model and coloring: counts use the actual per-class edge numbers,
/// the regular-lattice closed form is kept alongside.
ResourceReport estimate_for_model(const SpinModel& model, const EdgeColoring& coloring, int order, double t,
                                  double epsilon, const ScalingConstants& constants = {},
                                  const GateTimingModel& timing = {});

/// T = K s t for all-scaled-gate circuits; independent of m, n and epsilon.
double estimate_scaled(std::size_t num_colors, double s, double t);

struct Discrepancy {
    std::string quantity;
    double predicted = 0.0;
    double measured = 0.0;
};

/// Compares predicted interaction gates, CNOTs (decomposed circuits only) and block depth with the circuit.
std::vector<Discrepancy> audit(const ResourceReport& report, const Circuit& circuit);

}  // namespace trottersmith
