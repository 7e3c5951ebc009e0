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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails. Every tolerance and time budget is
// pinned below; none is derived from the measured values.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "test_util.hpp"
#include "trottersmith/coloring.hpp"
#include "trottersmith/oracle.hpp"
#include "trottersmith/resources.hpp"
#include "trottersmith/synth.hpp"
#include "trottersmith/trotter.hpp"

using namespace trottersmith;

namespace {

constexpr double kColoringBudgetSeconds = 1.0;
constexpr double kCommutatorBudgetSeconds = 30.0;
constexpr double kSynthesisBudgetSeconds = 10.0;
constexpr double kConvergenceBudgetSeconds = 120.0;

constexpr double kCommutingTolerance = 1e-12;
constexpr double kSynthesisTolerance = 1e-9;
constexpr double kEquivalenceTolerance = 1e-9;

constexpr double kSlopeOrder1 = -1.0, kSlopeTolOrder1 = 0.15;
constexpr double kSlopeOrder2 = -2.0, kSlopeTolOrder2 = 0.2;
constexpr double kSlopeOrder4 = -4.0, kSlopeTolOrder4 = 0.3;

const std::vector<std::int64_t> kGrid{4, 8, 16, 32, 64};

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool condition, const std::string& what) {
        if (!condition && pass) detail = what;
        pass = pass && condition;
    }
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

const CouplingTensor kHeis = CouplingTensor::heisenberg(1.0);

SpinModel heisenberg_chain6() { return build_lattice(LatticeKind::chain, {6}, Boundary::open, kHeis); }

// Criterion 1 ---------------------------------------------------------------

Outcome chromatic_indices() {
    Outcome o;
    struct Case {
        LatticeKind kind;
        std::vector<std::size_t> dims;
        Boundary boundary;
        std::size_t expected;
    };
    const std::vector<Case> cases = {
        {LatticeKind::chain, {6}, Boundary::periodic, 2},      {LatticeKind::chain, {10}, Boundary::periodic, 2},
        {LatticeKind::chain, {7}, Boundary::open, 2},          {LatticeKind::chain, {8}, Boundary::open, 2},
        {LatticeKind::square, {4, 4}, Boundary::periodic, 4},  {LatticeKind::square, {6, 4}, Boundary::periodic, 4},
        {LatticeKind::hexagonal, {2, 2}, Boundary::periodic, 3}, {LatticeKind::hexagonal, {3, 4}, Boundary::periodic, 3},
        {LatticeKind::hexagonal, {4, 4}, Boundary::open, 3},
    };
    std::ostringstream summary;
    for (const auto& c : cases) {
        const SpinModel m = build_lattice(c.kind, c.dims, c.boundary, kHeis);
        const EdgeColoring col = color(m);
        const auto violation = validate(col, m);
        o.require(!violation.has_value(), to_string(c.kind) + " coloring invalid: " +
                                              (violation ? violation->message : std::string()));
        o.require(col.num_colors() == c.expected,
                  to_string(c.kind) + " K=" + std::to_string(col.num_colors()) + " expected " + std::to_string(c.expected));
    }
    if (o.pass) o.detail = "chain K=2, square K=4, honeycomb K=3; all colorings valid";
    return o;
}

// Criterion 2 ---------------------------------------------------------------

std::vector<SpinModel> small_builtin_lattices() {
    std::vector<SpinModel> out;
    for (std::size_t n = 2; n <= 8; ++n) out.push_back(build_lattice(LatticeKind::chain, {n}, Boundary::open, kHeis));
    for (std::size_t n = 3; n <= 8; ++n)
        out.push_back(build_lattice(LatticeKind::chain, {n}, Boundary::periodic, kHeis));
    for (std::size_t lx = 1; lx <= 8; ++lx) {
        for (std::size_t ly = 1; lx * ly <= 8; ++ly) {
            if (lx * ly < 2) continue;
            out.push_back(build_lattice(LatticeKind::square, {lx, ly}, Boundary::open, kHeis));
            if (lx >= 2 && ly >= 2)
                out.push_back(build_lattice(LatticeKind::square, {lx, ly}, Boundary::periodic, kHeis));
            if (2 * lx * ly <= 8)
                out.push_back(build_lattice(LatticeKind::hexagonal, {lx, ly}, Boundary::open, kHeis));
        }
    }
    out.push_back(build_lattice(LatticeKind::hexagonal, {2, 2}, Boundary::periodic, kHeis));
    return out;
}

Outcome commuting_classes() {
    Outcome o;
    double worst_inside = 0.0;
    double worst_ratio = 0.0;
    std::size_t lattices = 0;
    for (const SpinModel& m : small_builtin_lattices()) {
        ++lattices;
        const EdgeColoring col = color(m);
        for (const auto& cls : col.classes) {
            for (std::size_t a = 0; a < cls.size(); ++a) {
                for (std::size_t b = a + 1; b < cls.size(); ++b) {
                    const auto& ea = m.edges()[cls[a]];
                    const auto& eb = m.edges()[cls[b]];
                    const DenseOperator ha = embed_two_site(term_hamiltonian(ea), m.n(), ea.i, ea.j);
                    const DenseOperator hb = embed_two_site(term_hamiltonian(eb), m.n(), eb.i, eb.j);
                    const double c = spectral_norm(ha * hb - hb * ha);
                    worst_inside = std::max(worst_inside, c);
                    o.require(c <= kCommutingTolerance, "edges in one class do not commute: " + fmt(c));
                }
            }
        }
        const StageExponentiator stages(m, col);
        const double bound = 0.75 * static_cast<double>(m.n()) * m.j_max() * m.j_max();
        for (std::size_t k = 0; k < col.num_colors(); ++k) {
            for (std::size_t l = k + 1; l < col.num_colors(); ++l) {
                const double c = stages.commutator_norm(k, l);
                worst_ratio = std::max(worst_ratio, c / bound);
                o.require(c <= bound, "||[H_k,H_l]|| = " + fmt(c) + " exceeds (3/4) n J^2 = " + fmt(bound));
            }
        }
    }
    if (o.pass)
        o.detail = std::to_string(lattices) + " lattices; max in-class commutator " + fmt(worst_inside) +
                   ", max class-pair ratio to (3/4)nJ^2 " + fmt(worst_ratio);
    return o;
}

// Criterion 3 ---------------------------------------------------------------

Outcome synthesis_exactness() {
    Outcome o;
    std::mt19937_64 rng(cli::kDefaultSeed);
    std::uniform_real_distribution<double> tau(-1.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const EdgeTerm e{0, 1, reference::random_coupling(rng), reference::random_vec3(rng), reference::random_vec3(rng)};
        const double t = tau(rng);
        const Circuit c = synth_general(e, t);
        const double d = reference::distance_up_to_phase(circuit_unitary(c),
                                                       reference::pade_expm(reference::edge_operator(2, e), t));
        worst = std::max(worst, d);
        o.require(d <= kSynthesisTolerance, "general edge distance " + fmt(d));
        o.require(counts(c).cnots == 6, "general template CNOTs = " + std::to_string(counts(c).cnots));
    }
    std::uniform_real_distribution<double> angle(-2.0 * M_PI, 2.0 * M_PI);
    const EdgeTerm heis{0, 1, kHeis};
    for (int trial = 0; trial < 50; ++trial) {
        const double a = angle(rng);
        const Circuit c = synth_heisenberg(a);
        const double d = reference::distance_up_to_phase(circuit_unitary(c),
                                                       reference::pade_expm(reference::edge_operator(2, heis), a));
        worst = std::max(worst, d);
        o.require(d <= kSynthesisTolerance, "Heisenberg distance " + fmt(d));
        o.require(counts(c).cnots == 3, "Heisenberg template CNOTs = " + std::to_string(counts(c).cnots));
    }
    if (o.pass) o.detail = "250 circuits; worst phase-aligned distance " + fmt(worst) + "; CNOTs 6 and 3";
    return o;
}

// Criteria 4 and 5 ----------------------------------------------------------

Outcome convergence_orders() {
    Outcome o;
    const SpinModel m = heisenberg_chain6();
    const struct {
        int order;
        double slope;
        double tol;
    } rows[] = {{1, kSlopeOrder1, kSlopeTolOrder1}, {2, kSlopeOrder2, kSlopeTolOrder2}, {4, kSlopeOrder4, kSlopeTolOrder4}};
    std::ostringstream detail;
    for (const auto& row : rows) {
        const cli::VerifyResult r = cli::run_verify(m, row.order, 1.0, kGrid);
        detail << "order " << row.order << " slope " << fmt(r.slope) << "; ";
        o.require(std::abs(r.slope - row.slope) <= row.tol,
                  "order " + std::to_string(row.order) + " slope " + fmt(r.slope));
    }
    if (o.pass) o.detail = detail.str();
    return o;
}

Outcome bound_dominance() {
    Outcome o;
    const std::vector<std::pair<std::string, SpinModel>> instances = {
        {"chain n=6 open", heisenberg_chain6()},
        {"ring n=6", build_lattice(LatticeKind::chain, {6}, Boundary::periodic, kHeis)},
        {"square 2x3 open", build_lattice(LatticeKind::square, {2, 3}, Boundary::open, kHeis)},
        {"honeycomb 2x2 open", build_lattice(LatticeKind::hexagonal, {2, 2}, Boundary::open, kHeis)},
    };
    double worst = 0.0;
    for (const auto& [name, m] : instances) {
        const cli::VerifyResult r = cli::run_verify(m, 1, 1.0, kGrid);
        for (const auto& row : r.rows) {
            worst = std::max(worst, row.error / row.bound);
            o.require(row.error <= row.bound, name + " m=" + std::to_string(row.m) + ": error " + fmt(row.error) +
                                                  " > bound " + fmt(row.bound));
        }
    }
    if (o.pass) o.detail = std::to_string(instances.size()) + " instances; max error/bound " + fmt(worst);
    return o;
}

// Criterion 6 ---------------------------------------------------------------

Outcome resource_audit() {
    Outcome o;
    const SpinModel m = build_lattice(LatticeKind::square, {4, 4}, Boundary::periodic, kHeis);
    const EdgeColoring col = color(m);
    StepPlan plan;
    plan.m = 10;
    plan.t = 1.0;
    const auto schedule = expand(plan, first_order(col.num_colors()));
    const Circuit scaled = build_trotter_circuit(m, col, schedule, GateMode::scaled);
    const Circuit decomposed = build_trotter_circuit(m, col, schedule, GateMode::decomposed, TemplateChoice::heisenberg);
    const std::size_t expected_gates = 10 * 16 * 4 / 2;
    o.require(expected_gates == 320, "formula arithmetic");
    o.require(counts(scaled).interaction_gates == 320,
              "scaled interaction gates " + std::to_string(counts(scaled).interaction_gates));
    o.require(scaled.depth() == 40, "scaled depth " + std::to_string(scaled.depth()));
    o.require(counts(decomposed).cnots == 960, "Heisenberg CNOTs " + std::to_string(counts(decomposed).cnots));
    o.require(counts(decomposed).interaction_gates == 320, "decomposed interaction gates");

    ResourceReport predicted = estimate_for_model(m, col, 1, 1.0, 1.0);
    predicted.m = 10;
    predicted.interaction_gates = 10.0 * 16 * 4 / 2;
    predicted.depth = 10.0 * 4;
    predicted.cnots = 3.0 * predicted.interaction_gates;
    o.require(audit(predicted, scaled).empty(), "audit reports a discrepancy on the scaled circuit");
    o.require(audit(predicted, decomposed).empty(), "audit reports a discrepancy on the decomposed circuit");
    if (o.pass) o.detail = "N=320, depth=40, Heisenberg CNOTs=960";
    return o;
}

// Criterion 7 ---------------------------------------------------------------

Outcome worked_estimate() {
    Outcome o;
    const ResourceReport r = estimate_first_order(4, 2, 1.0, 1.0, 0.01);
    o.require(r.m == 150, "m=" + std::to_string(r.m));
    o.require(r.interaction_gates == 600.0, "N=" + fmt(r.interaction_gates));
    o.require(r.closed_form_gates == static_cast<double>(r.m) * 4 * 2 / 2,
              "closed form " + fmt(r.closed_form_gates) + " != m n K / 2");
    const double reference = estimate_scaled(2, 0.3, 1.5);
    o.require(reference == 2 * 0.3 * 1.5, "K s t = " + fmt(reference));
    // The scaled-gate time takes no epsilon or n; the first-order estimates around it change with both.
    for (double eps : {0.1, 0.01, 0.001}) {
        for (std::size_t n : {4u, 16u, 64u}) {
            const ResourceReport fixed = estimate_first_order(n, 2, 1.0, 1.5, eps, GateTimingModel{1.0, 0.3});
            o.require(fixed.m > 0, "first-order estimate");
            o.require(estimate_scaled(2, 0.3, 1.5) == reference, "scaled estimate changed");
        }
    }
    if (o.pass) o.detail = "m=150, N=600 = closed form; K s t = " + fmt(reference);
    return o;
}

// Criterion 8 ---------------------------------------------------------------

Outcome end_to_end() {
    Outcome o;
    std::mt19937_64 rng(cli::kDefaultSeed);
    std::vector<EdgeTerm> edges;
    for (std::size_t i = 0; i + 1 < 6; ++i)
        edges.push_back(EdgeTerm{i, i + 1, reference::random_coupling(rng), reference::random_vec3(rng), Vec3::Zero()});
    const std::vector<std::pair<std::string, SpinModel>> models = {
        {"Heisenberg chain", heisenberg_chain6()},
        {"random chain", SpinModel(6, edges, LatticeKind::chain)},
    };
    double worst = 0.0;
    for (const auto& [name, m] : models) {
        const EdgeColoring col = color(m);
        StepPlan plan;
        plan.m = 8;
        plan.t = 1.0;
        const auto schedule = expand(plan, first_order(col.num_colors()));
        const DenseOperator oracle = StageExponentiator(m, col).product(schedule);
        for (GateMode mode : {GateMode::scaled, GateMode::decomposed}) {
            const Circuit c = build_trotter_circuit(m, col, schedule, mode);
            const double d = reference::distance_up_to_phase(circuit_unitary(c), oracle);
            worst = std::max(worst, d);
            o.require(d <= kEquivalenceTolerance, name + " " + to_string(mode) + " distance " + fmt(d));
        }
    }
    if (o.pass) o.detail = "n=6, m=8, both modes; worst distance " + fmt(worst);
    return o;
}

// Criterion 9 ---------------------------------------------------------------

Outcome determinism() {
    Outcome o;
    const SpinModel m = heisenberg_chain6();
    const std::string a = cli::run_verify(m, 2, 1.0, kGrid, cli::kDefaultSeed, 1).csv();
    const std::string b = cli::run_verify(m, 2, 1.0, kGrid, cli::kDefaultSeed, 1).csv();
    const std::string c = cli::run_verify(m, 2, 1.0, kGrid, cli::kDefaultSeed, 4).csv();
    o.require(a == b, "two runs differ");
    o.require(a == c, "threaded run differs");
    if (o.pass) o.detail = "byte-identical CSV (" + std::to_string(a.size()) + " bytes) across runs and --jobs";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
        double budget_seconds;  // 0 = no budget
    };
    const std::vector<Criterion> criteria = {
        {1, "chromatic indices", chromatic_indices, kColoringBudgetSeconds},
        {2, "commuting classes", commuting_classes, kCommutatorBudgetSeconds},
        {3, "synthesis exactness", synthesis_exactness, kSynthesisBudgetSeconds},
        {4, "convergence orders", convergence_orders, kConvergenceBudgetSeconds},
        {5, "first-order bound dominance", bound_dominance, 0.0},
        {6, "resource audit", resource_audit, 0.0},
        {7, "worked estimate", worked_estimate, 0.0},
        {8, "end-to-end equivalence", end_to_end, 0.0},
        {9, "determinism", determinism, 0.0},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
            outcome.pass = false;
            outcome.detail += " [over time budget " + fmt(c.budget_seconds) + " s]";
        }
        failures += outcome.pass ? 0 : 1;
        std::printf("%s criterion %d (%s): %s (%.2f s)\n", outcome.pass ? "PASS" : "FAIL", c.id, c.name,
                    outcome.detail.c_str(), seconds);
    }
    std::fflush(stdout);
    return failures == 0 ? 0 : 1;
}
