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

#include "commands.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <future>
#include <iostream>
#include <limits>
#include <sstream>

#include "trottersmith/coloring.hpp"
#include "trottersmith/error.hpp"
#include "trottersmith/io.hpp"
#include "trottersmith/oracle.hpp"
#include "trottersmith/resources.hpp"
#include "trottersmith/synth.hpp"
#include "trottersmith/trotter.hpp"

namespace trottersmith::cli {

using io::format_double;
using io::json;

std::string VerifyResult::csv() const {
    std::ostringstream out;
    out << "m,error,bound,order\n";
    for (const VerifyRow& row : rows) {
        out << row.m << ',' << format_double(row.error) << ',' << (std::isnan(row.bound) ? "" : format_double(row.bound))
            << ',' << order << '\n';
    }
    return out.str();
}

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw ValidationError("slope fit needs at least two points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double lx = std::log(x[k]);
        const double ly = std::log(y[k]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

VerifyResult run_verify(const SpinModel& model, int order, double t, const std::vector<std::int64_t>& grid,
                        std::uint64_t seed, int jobs) {
    require_oracle_size(model.n());
    const EdgeColoring coloring = color(model);
    const ProductFormula formula = product_formula(order, coloring.num_colors());
    PowerIterationOptions options;
    options.seed = seed;
    VerifyResult result;
    result.order = order;
    result.rows.resize(grid.size());
    auto point = [&](std::size_t k) {
        VerifyRow row;
        row.m = grid[k];
        row.error = trotter_error(model, coloring, formula, grid[k], t, options);
        row.bound = order == 1 ? first_order_error_bound(coloring.num_colors(), model.n(), model.j_max(), t, grid[k])
                               : std::numeric_limits<double>::quiet_NaN();
        return row;
    };
    const std::size_t workers = static_cast<std::size_t>(std::max(1, jobs));
    for (std::size_t begin = 0; begin < grid.size(); begin += workers) {
        std::vector<std::future<VerifyRow>> futures;
        const std::size_t end = std::min(grid.size(), begin + workers);
        for (std::size_t k = begin; k < end; ++k) {
            futures.push_back(std::async(workers > 1 ? std::launch::async : std::launch::deferred, point, k));
        }
        for (std::size_t k = begin; k < end; ++k) result.rows[k] = futures[k - begin].get();
    }
    std::vector<double> ms, errors;
    for (const VerifyRow& row : result.rows) {
        ms.push_back(static_cast<double>(row.m));
        errors.push_back(row.error);
    }
    result.slope = grid.size() >= 2 ? log_log_slope(ms, errors) : std::numeric_limits<double>::quiet_NaN();
    return result;
}

namespace {

struct Options {
    // lattice
    std::string kind = "chain";
    std::vector<std::size_t> dims;
    std::string boundary = "open";
    std::string coupling = "heisenberg";
    double j = 1.0;
    std::vector<double> jxyz;
    std::vector<double> field{0.0, 0.0, 0.0};
    // shared
    std::string model_path;
    std::string coloring_path;
    std::string out_path;
    std::string emit;
    int order = 1;
    double epsilon = 0.01;
    double time = 1.0;
    double c3 = 1.0, c4 = 1.0, c5 = 1.0, c6 = 1.0;
    std::int64_t steps = 0;
    std::string mode = "decomposed";
    double t_inf = 1.0;
    double s = 0.0;
    std::string compare_orders;
    std::size_t n = 0;
    std::size_t k = 0;
    bool heisenberg = false;
    std::vector<std::int64_t> m_grid{4, 8, 16, 32, 64};
    std::uint64_t seed = kDefaultSeed;
    int jobs = 1;
};

/// Writes the artifact to --out (summary to `out`) or to `out` (summary to `err`).
void emit_artifact(const Options& o, const std::string& artifact, const std::string& summary, std::ostream& out,
                   std::ostream& err) {
    if (!o.out_path.empty()) {
        io::write_file(o.out_path, artifact);
        out << summary;
    } else {
        out << artifact;
        err << summary;
    }
}

SpinModel load_model(const Options& o) {
    if (o.model_path.empty()) throw ValidationError("--model is required");
    return io::model_from_json(json::parse(io::read_file(o.model_path)));
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

CouplingTensor coupling_from(const Options& o) {
    if (!o.jxyz.empty()) {
        if (o.jxyz.size() != 3) throw ValidationError("--jxyz takes three values");
        return CouplingTensor::diagonal(o.jxyz[0], o.jxyz[1], o.jxyz[2]);
    }
    if (o.coupling == "heisenberg") return CouplingTensor::heisenberg(o.j);
    if (o.coupling == "xy") return CouplingTensor::diagonal(o.j, o.j, 0.0);
    if (o.coupling == "ising") return CouplingTensor::diagonal(0.0, 0.0, o.j);
    throw ValidationError("unknown coupling '" + o.coupling + "' (heisenberg, xy, ising, or --jxyz)");
}

int cmd_lattice(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.field.size() != 3) throw ValidationError("--field takes three values");
    const SpinModel model = build_lattice(lattice_kind_from_string(o.kind), o.dims, boundary_from_string(o.boundary),
                                          coupling_from(o), Vec3(o.field[0], o.field[1], o.field[2]));
    std::ostringstream summary;
    summary << to_string(model.lattice_kind()) << " " << to_string(model.boundary()) << ": n=" << model.n()
            << " edges=" << model.edges().size() << " degree=" << model.degree() << "\n";
    emit_artifact(o, dump(io::model_to_json(model)), summary.str(), out, err);
    return 0;
}

int cmd_color(const Options& o, std::ostream& out, std::ostream& err) {
    const SpinModel model = load_model(o);
    const bool builtin = color_builtin(model).has_value();
    if (!builtin && model.lattice_kind() != LatticeKind::custom) {
        err << "note: no direction coloring for this geometry; using Misra-Gries\n";
    }
    const EdgeColoring coloring = color(model);
    std::ostringstream summary;
    summary << "K=" << coloring.num_colors() << "\n";
    for (std::size_t k = 0; k < coloring.num_colors(); ++k) {
        summary << "  class " << k << " [" << coloring.labels[k] << "]: " << coloring.classes[k].size() << " edges\n";
    }
    if (o.emit == "json") {
        emit_artifact(o, dump(io::coloring_to_json(coloring, model)), summary.str(), out, err);
    } else {
        out << summary.str();
    }
    return 0;
}

int cmd_plan(const Options& o, std::ostream& out, std::ostream& err) {
    const SpinModel model = load_model(o);
    const EdgeColoring coloring = color(model);
    const StepPlan plan =
        steps_for_accuracy(o.order, coloring.num_colors(), model.n(), model.j_max(), o.time, o.epsilon, o.c3);
    std::ostringstream summary;
    summary << "K=" << coloring.num_colors() << " m=" << plan.m << " bound=" << to_string(plan.bound_used) << "\n";
    emit_artifact(o, dump(io::plan_to_json(plan, coloring.num_colors())), summary.str(), out, err);
    return 0;
}

int cmd_synth(const Options& o, std::ostream& out, std::ostream& err) {
    const SpinModel model = load_model(o);
    EdgeColoring coloring;
    if (!o.coloring_path.empty()) {
        coloring = io::coloring_from_json(json::parse(io::read_file(o.coloring_path)));
        if (auto violation = validate(coloring, model)) {
            throw ValidationError("coloring file rejected: " + violation->message);
        }
    } else {
        coloring = color(model);
    }
    StepPlan plan =
        steps_for_accuracy(o.order, coloring.num_colors(), model.n(), model.j_max(), o.time, o.epsilon, o.c3);
    if (o.steps > 0) plan.m = o.steps;
    const ProductFormula formula = product_formula(o.order, coloring.num_colors());
    const auto schedule = expand(plan, formula, model.profile());
    GateMode mode = GateMode::decomposed;
    TemplateChoice choice = TemplateChoice::automatic;
    if (o.mode == "scaled") {
        mode = GateMode::scaled;
    } else if (o.mode == "heisenberg") {
        choice = TemplateChoice::heisenberg;
    } else if (o.mode == "general") {
        choice = TemplateChoice::general;
    } else if (o.mode != "decomposed") {
        throw ValidationError("unknown mode '" + o.mode + "'");
    }
    const Circuit circuit = build_trotter_circuit(model, coloring, schedule, mode, choice);
    const CircuitCounts c = counts(circuit);
    std::ostringstream summary;
    summary << "m=" << plan.m << " interaction_gates=" << c.interaction_gates << " cnots=" << c.cnots
            << " depth=" << c.depth << " blocks=" << c.blocks << "\n";
    const std::string artifact = o.emit == "json" ? dump(io::circuit_to_json(circuit)) : to_qasm(circuit);
    emit_artifact(o, artifact, summary.str(), out, err);
    return 0;
}

std::vector<int> parse_orders(const std::string& list) {
    std::vector<int> orders;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) orders.push_back(std::stoi(item));
    }
    if (orders.empty()) throw ValidationError("--compare-orders needs a comma-separated list");
    return orders;
}

int cmd_estimate(const Options& o, std::ostream& out, std::ostream& err) {
    const GateTimingModel timing{o.t_inf, o.s};
    const ScalingConstants constants{o.c3, o.c4, o.c5, o.c6};
    auto estimate = [&](int order) -> ResourceReport {
        if (!o.model_path.empty()) {
            const SpinModel model = load_model(o);
            return estimate_for_model(model, color(model), order, o.time, o.epsilon, constants, timing);
        }
        if (o.n == 0 || o.k == 0) throw ValidationError("estimate needs --model or both --n and --K");
        const InteractionKind kind = o.heisenberg ? InteractionKind::heisenberg : InteractionKind::general;
        if (order == 1) return estimate_first_order(o.n, o.k, o.j, o.time, o.epsilon, timing, kind);
        if (order % 2 != 0) throw ValidationError("order must be 1 or even");
        return estimate_higher_order(order / 2, o.n, o.k, o.j, o.time, o.epsilon, constants, timing, kind);
    };
    if (!o.compare_orders.empty()) {
        std::ostringstream csv;
        csv << "order,m,N,T\n";
        for (int order : parse_orders(o.compare_orders)) {
            const ResourceReport r = estimate(order);
            csv << order << ',' << r.m << ',' << format_double(r.interaction_gates) << ','
                << format_double(r.simulation_time) << '\n';
        }
        emit_artifact(o, csv.str(), "", out, err);
        return 0;
    }
    const ResourceReport r = estimate(o.order);
    std::ostringstream table;
    table << "order             " << r.order << "\n"
          << "steps m           " << r.m << "\n"
          << "interaction gates " << format_double(r.interaction_gates) << "\n"
          << "CNOTs             " << format_double(r.cnots) << "\n"
          << "depth (blocks)    " << format_double(r.depth) << "\n"
          << "simulation time T " << format_double(r.simulation_time) << "\n"
          << "closed-form N     " << format_double(r.closed_form_gates) << "\n";
    if (o.s > 0.0 && o.k > 0) {
        table << "all-scaled T=Kst  " << format_double(estimate_scaled(o.k, o.s, o.time)) << "\n";
    }
    emit_artifact(o, dump(io::report_to_json(r)), table.str(), out, err);
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    const SpinModel model = load_model(o);
    const VerifyResult result = run_verify(model, o.order, o.time, o.m_grid, o.seed, o.jobs);
    std::ostringstream summary;
    summary << "order=" << result.order << " slope=" << format_double(result.slope) << "\n";
    emit_artifact(o, result.csv(), summary.str(), out, err);
    return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"trottersmith: Trotter circuits for lattice spin-1/2 models"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--seed", o.seed, "seed for power-iteration start vectors")->capture_default_str();
    app.add_option("--jobs", o.jobs, "worker threads for sweeps")->capture_default_str();

    auto* lattice = app.add_subcommand("lattice", "build a chain/square/hexagonal model file");
    lattice->add_option("--kind", o.kind, "chain, square or hexagonal")->capture_default_str();
    lattice->add_option("--dims", o.dims, "n for chain; Lx,Ly otherwise")->delimiter(',')->required();
    lattice->add_option("--boundary", o.boundary, "open or periodic")->capture_default_str();
    lattice->add_option("--coupling", o.coupling, "heisenberg, xy or ising")->capture_default_str();
    lattice->add_option("--J", o.j, "coupling strength")->capture_default_str();
    lattice->add_option("--jxyz", o.jxyz, "diagonal couplings Jx,Jy,Jz")->delimiter(',');
    lattice->add_option("--field", o.field, "uniform field hx,hy,hz")->delimiter(',');

    auto* color_cmd = app.add_subcommand("color", "edge-color the interaction graph");
    auto* plan = app.add_subcommand("plan", "choose the Trotter step count");
    auto* synth = app.add_subcommand("synth", "synthesize the Trotter circuit");
    auto* estimate = app.add_subcommand("estimate", "closed-form resource estimates");
    auto* verify = app.add_subcommand("verify", "measure Trotter error against the dense oracle");

    for (auto* sub : {lattice, color_cmd, plan, synth, estimate, verify}) {
        sub->add_option("--out,-o", o.out_path, "output file");
        // CLI11 accepts the global flags after the subcommand too
        sub->fallthrough();
    }
    for (auto* sub : {color_cmd, plan, synth, verify}) {
        sub->add_option("--model", o.model_path, "model JSON file")->required();
    }
    estimate->add_option("--model", o.model_path, "model JSON file");
    for (auto* sub : {plan, synth, estimate, verify}) {
        sub->add_option("--order", o.order, "1 or an even order 2q")->capture_default_str();
        sub->add_option("--time", o.time, "simulated time t")->capture_default_str();
    }
    for (auto* sub : {plan, synth, estimate}) {
        sub->add_option("--epsilon", o.epsilon, "target accuracy")->capture_default_str();
        sub->add_option("--c3", o.c3, "higher-order step constant")->capture_default_str();
    }
    color_cmd->add_option("--emit", o.emit, "json")->check(CLI::IsMember({"json"}));
    synth->add_option("--mode", o.mode, "decomposed, scaled, heisenberg or general")
        ->check(CLI::IsMember({"decomposed", "scaled", "heisenberg", "general"}))
        ->capture_default_str();
    synth->add_option("--emit", o.emit, "qasm or json")->check(CLI::IsMember({"qasm", "json"}));
    synth->add_option("--coloring", o.coloring_path, "coloring JSON to use instead of computing one");
    synth->add_option("--steps", o.steps, "override the planned step count m");
    estimate->add_option("--n", o.n, "site count (without --model)");
    estimate->add_option("--K", o.k, "color count (without --model)");
    estimate->add_option("--J", o.j, "coupling bound (without --model)")->capture_default_str();
    estimate->add_flag("--heisenberg", o.heisenberg, "count 3 CNOTs per interaction gate");
    estimate->add_option("--t-inf", o.t_inf, "fixed gate time")->capture_default_str();
    estimate->add_option("--s", o.s, "scaled-gate slope")->capture_default_str();
    estimate->add_option("--c4", o.c4)->capture_default_str();
    estimate->add_option("--c5", o.c5)->capture_default_str();
    estimate->add_option("--c6", o.c6)->capture_default_str();
    estimate->add_option("--compare-orders", o.compare_orders, "CSV of m, N, T for orders, e.g. 1,2,4");
    verify->add_option("--m-grid", o.m_grid, "step counts to sweep")->delimiter(',');
    verify->add_option("--emit", o.emit, "csv")->check(CLI::IsMember({"csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*lattice) return cmd_lattice(o, out, err);
        if (*color_cmd) return cmd_color(o, out, err);
        if (*plan) return cmd_plan(o, out, err);
        if (*synth) return cmd_synth(o, out, err);
        if (*estimate) return cmd_estimate(o, out, err);
        if (*verify) return cmd_verify(o, out, err);
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const OracleLimitError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << "error: invalid JSON: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace trottersmith::cli
