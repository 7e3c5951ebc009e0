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

#include "trottersmith/trotter.hpp"

#include <cmath>
#include <limits>

#include "trottersmith/error.hpp"

namespace trottersmith {

namespace {

// The bounds are evaluated in floating point from decimal inputs such as
// eps = 0.01; shave a few ulps before the ceiling so that an exact integer
// bound does not round up to the next step count.
std::int64_t ceil_steps(double bound) {
    double shaved = bound * (1.0 - 8.0 * std::numeric_limits<double>::epsilon());
    double m = std::ceil(shaved);
    if (m > static_cast<double>(std::numeric_limits<std::int64_t>::max() / 2)) {
        throw ValidationError("required step count overflows");
    }
    return std::max<std::int64_t>(1, static_cast<std::int64_t>(m));
}

void require_colors(std::size_t num_colors) {
    if (num_colors == 0) throw ValidationError("product formula needs at least one color class");
}

}  // namespace

std::vector<double> ProductFormula::coefficient_sums() const {
    std::vector<double> sums(num_colors, 0.0);
    for (const Stage& s : stages) {
        sums.at(s.color) += s.coeff;
    }
    return sums;
}

double suzuki_p(int q) {
    if (q < 2) throw ValidationError("suzuki_p requires q >= 2");
    return 1.0 / (4.0 - std::pow(4.0, 1.0 / (2.0 * q - 1.0)));
}

std::size_t unmerged_stage_count(int order, std::size_t num_colors) {
    if (order == 1) return num_colors;
    if (order < 2 || order % 2 != 0) throw ValidationError("order must be 1 or even");
    std::size_t count = 2 * num_colors;
    for (int q = 2; q <= order / 2; ++q) count *= 5;
    return count;
}

std::vector<Stage> merge_adjacent(const std::vector<Stage>& stages) {
    std::vector<Stage> merged;
    for (const Stage& s : stages) {
        if (!merged.empty() && merged.back().color == s.color) {
            merged.back().coeff += s.coeff;
        } else {
            merged.push_back(s);
        }
    }
    return merged;
}

ProductFormula first_order(std::size_t num_colors) {
    require_colors(num_colors);
    ProductFormula f{1, num_colors, {}};
    for (std::size_t k = 0; k < num_colors; ++k) {
        f.stages.push_back({k, 1.0});
    }
    return f;
}

ProductFormula second_order(std::size_t num_colors, bool merge) {
    require_colors(num_colors);
    ProductFormula f{2, num_colors, {}};
    for (std::size_t k = 0; k < num_colors; ++k) {
        f.stages.push_back({k, 0.5});
    }
    for (std::size_t k = num_colors; k-- > 0;) {
        f.stages.push_back({k, 0.5});
    }
    if (merge) f.stages = merge_adjacent(f.stages);
    return f;
}

ProductFormula suzuki(int q, std::size_t num_colors, bool merge) {
    if (q < 2) throw ValidationError("suzuki recursion requires q >= 2");
    ProductFormula lower = q == 2 ? second_order(num_colors, merge) : suzuki(q - 1, num_colors, merge);
    const double p = suzuki_p(q);
    const double weights[5] = {p, p, 1.0 - 4.0 * p, p, p};
    ProductFormula f{2 * q, num_colors, {}};
    for (double w : weights) {
        for (const Stage& s : lower.stages) {
            f.stages.push_back({s.color, w * s.coeff});
        }
    }
    if (merge) f.stages = merge_adjacent(f.stages);
    return f;
}

ProductFormula product_formula(int order, std::size_t num_colors) {
    if (order == 1) return first_order(num_colors);
    if (order == 2) return second_order(num_colors);
    if (order >= 4 && order % 2 == 0) return suzuki(order / 2, num_colors);
    throw ValidationError("unsupported product-formula order " + std::to_string(order) + " (use 1 or an even order)");
}

std::string to_string(BoundKind kind) {
    return kind == BoundKind::first_order_explicit ? "first_order_explicit" : "higher_order_scaling";
}

double first_order_error_bound(std::size_t num_colors, std::size_t n, double j, double t, std::int64_t m) {
    if (m < 1) throw ValidationError("step count must be >= 1");
    const double k = static_cast<double>(num_colors);
    return 3.0 / 16.0 * k * (k - 1.0) * t * t * static_cast<double>(n) * j * j / static_cast<double>(m);
}

StepPlan steps_for_accuracy(int order, std::size_t num_colors, std::size_t n, double j, double t, double epsilon,
                            double c3) {
    if (!(epsilon > 0.0)) throw ValidationError("epsilon must be positive");
    if (!(c3 > 0.0)) throw ValidationError("c3 must be positive");
    if (!(t >= 0.0)) throw ValidationError("simulated time must be nonnegative");
    require_colors(num_colors);
    StepPlan plan;
    plan.order = order;
    plan.t = t;
    plan.epsilon = epsilon;
    plan.c3 = c3;
    const double k = static_cast<double>(num_colors);
    const double sites = static_cast<double>(n);
    if (order == 1) {
        plan.bound_used = BoundKind::first_order_explicit;
        plan.raw_bound = 3.0 / 16.0 * k * (k - 1.0) * t * t / epsilon * sites * j * j;
    } else if (order >= 2 && order % 2 == 0) {
        plan.bound_used = BoundKind::higher_order_scaling;
        const double inv = 1.0 / static_cast<double>(order);  // 1/2q
        plan.raw_bound = c3 * std::pow(k * t, 1.0 + inv) * std::pow(sites, inv) / std::pow(epsilon, inv);
    } else {
        throw ValidationError("unsupported product-formula order " + std::to_string(order));
    }
    plan.m = ceil_steps(plan.raw_bound);
    return plan;
}

std::vector<TimedStage> expand(const StepPlan& plan, const ProductFormula& formula, const TimeProfile& profile) {
    if (plan.m < 1) throw ValidationError("step count must be >= 1");
    const std::size_t m = static_cast<std::size_t>(plan.m);
    const double dt = plan.t / static_cast<double>(plan.m);
    std::vector<TimedStage> out;
    out.reserve(m * formula.stages.size());
    for (std::size_t step = 0; step < m; ++step) {
        const double scale = profile.factor_for_step(step, m);
        for (std::size_t s = 0; s < formula.stages.size(); ++s) {
            const Stage& stage = formula.stages[s];
            const double duration = stage.coeff * dt;
            if (s == 0 && !out.empty() && out.back().color == stage.color && out.back().scale == scale) {
                out.back().duration += duration;
            } else {
                out.push_back({stage.color, duration, scale, step});
            }
        }
    }
    return out;
}

}  // namespace trottersmith
