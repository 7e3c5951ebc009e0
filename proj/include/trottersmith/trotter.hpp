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

#include "trottersmith/model.hpp"

namespace trottersmith {

/// One factor exp(-i coeff (t/m) H_k) of a single product-formula step.
struct Stage {
    std::size_t color = 0;
    double coeff = 0.0;

    bool operator==(const Stage&) const = default;
};

/// One step of a Trotter-Suzuki product formula. Stages are in time order:
/// stages.front() acts on the state first.
struct ProductFormula {
    int order = 1;  // 1 or 2q
    std::size_t num_colors = 0;
    std::vector<Stage> stages;

    /// Per-color sum of coefficients; each equals 1 for a consistent formula.
    std::vector<double> coefficient_sums() const;
};

/// Suzuki's p_q = 1 / (4 - 4^{1/(2q-1)}).
double suzuki_p(int q);

/// Number of stages of the order-`order` formula before adjacent same-color stages merge.
std::size_t unmerged_stage_count(int order, std::size_t num_colors);

ProductFormula first_order(std::size_t num_colors);
/// Symmetric formula; the two middle half-steps of the last color are merged unless merge = false.
ProductFormula second_order(std::size_t num_colors, bool merge = true);
/// Order-2q formula via the five-fold Suzuki recursion from second_order; q >= 2.
ProductFormula suzuki(int q, std::size_t num_colors, bool merge = true);
/// Dispatch on order in {1, 2, 4, 6, ...}.
ProductFormula product_formula(int order, std::size_t num_colors);

/// Merges adjacent stages of the same color.
std::vector<Stage> merge_adjacent(const std::vector<Stage>& stages);

enum class BoundKind { first_order_explicit, higher_order_scaling };
std::string to_string(BoundKind kind);

struct StepPlan {
    std::int64_t m = 1;
    int order = 1;
    double t = 0.0;
    double epsilon = 0.0;
    BoundKind bound_used = BoundKind::first_order_explicit;
    double c3 = 1.0;
    /// The uncapped real-valued bound that m is the ceiling of.
    double raw_bound = 0.0;
};

/// (3/16) K (K-1) t^2 n J^2 / m.
double first_order_error_bound(std::size_t num_colors, std::size_t n, double j, double t, std::int64_t m);

/// Smallest m meeting the first-order bound (order 1) or the 2q scaling rule
/// m >= c3 (K t)^{1+1/2q} n^{1/2q} / eps^{1/2q} (even orders).
StepPlan steps_for_accuracy(int order, std::size_t num_colors, std::size_t n, double j, double t, double epsilon,
                            double c3 = 1.0);

/// A stage of the full m-step schedule.
struct TimedStage {
    std::size_t color = 0;
    double duration = 0.0;  // simulated time coeff * t / m (summed when merged)
    double scale = 1.0;     // TimeProfile factor of the step
    std::size_t step = 0;   // step of the first merged piece

    bool operator==(const TimedStage&) const = default;
};

/// m copies of the one-step schedule. Adjacent same-color stages across a step
/// boundary merge when both steps carry the same profile factor.
std::vector<TimedStage> expand(const StepPlan& plan, const ProductFormula& formula,
                               const TimeProfile& profile = TimeProfile::constant());

}  // namespace trottersmith
