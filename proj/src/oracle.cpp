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

#include "trottersmith/oracle.hpp"

#include <cmath>
#include <cstdlib>
#include <random>
#include <string>

#include "trottersmith/error.hpp"

namespace trottersmith {

int oracle_limit() {
    if (const char* env = std::getenv("TROTTERSMITH_ORACLE_LIMIT")) {
        try {
            int value = std::stoi(env);
            if (value > 0) return value;
        } catch (const std::exception&) {
        }
        throw ValidationError(std::string("TROTTERSMITH_ORACLE_LIMIT must be a positive integer, got '") + env + "'");
    }
    return kDefaultOracleLimit;
}

void require_oracle_size(std::size_t n) {
    const int limit = oracle_limit();
    if (n > static_cast<std::size_t>(limit)) {
        throw OracleLimitError(static_cast<int>(n), limit);
    }
}

DenseOperator embed_two_site(const Mat4& op, std::size_t n, std::size_t first, std::size_t second) {
    require_oracle_size(n);
    const std::size_t dim = std::size_t{1} << n;
    DenseOperator out = DenseOperator::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    const std::size_t bf = std::size_t{1} << first;
    const std::size_t bs = std::size_t{1} << second;
    for (std::size_t x = 0; x < dim; ++x) {
        const int in = 2 * static_cast<int>((x & bf) != 0) + static_cast<int>((x & bs) != 0);
        const std::size_t base = x & ~(bf | bs);
        for (int o = 0; o < 4; ++o) {
            const Complex v = op(o, in);
            if (v == Complex(0, 0)) continue;
            const std::size_t y = base | ((o & 2) ? bf : 0) | ((o & 1) ? bs : 0);
            out(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) += v;
        }
    }
    return out;
}

namespace {

DenseOperator sum_terms(const SpinModel& model, const std::vector<std::size_t>& edge_indices, double scale) {
    require_oracle_size(model.n());
    const Eigen::Index dim = Eigen::Index{1} << model.n();
    DenseOperator h = DenseOperator::Zero(dim, dim);
    for (std::size_t e : edge_indices) {
        const EdgeTerm& edge = model.edges().at(e);
        h += embed_two_site(scale * term_hamiltonian(edge), model.n(), edge.i, edge.j);
    }
    return h;
}

std::vector<std::size_t> all_edges(const SpinModel& model) {
    std::vector<std::size_t> idx(model.edges().size());
    for (std::size_t e = 0; e < idx.size(); ++e) idx[e] = e;
    return idx;
}

DenseOperator matrix_power(DenseOperator base, std::int64_t exponent) {
    DenseOperator result = DenseOperator::Identity(base.rows(), base.cols());
    while (exponent > 0) {
        if (exponent & 1) result = base * result;
        exponent >>= 1;
        if (exponent > 0) base = base * base;
    }
    return result;
}

}  // namespace

DenseOperator total_hamiltonian(const SpinModel& model, double scale) { return sum_terms(model, all_edges(model), scale); }

DenseOperator class_hamiltonian(const SpinModel& model, const std::vector<std::size_t>& edge_indices) {
    return sum_terms(model, edge_indices, 1.0);
}

DenseOperator exact_evolution(const SpinModel& model, double t) {
    if (!model.profile().is_constant()) {
        throw ValidationError("exact_evolution needs a constant time profile; use reference_evolution");
    }
    return expm_hermitian(total_hamiltonian(model), t);
}

DenseOperator reference_evolution(const SpinModel& model, double t, std::int64_t m_ref) {
    if (m_ref < 1) throw ValidationError("reference step count must be >= 1");
    const DenseOperator h = total_hamiltonian(model);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    const double dt = t / static_cast<double>(m_ref);
    const auto steps = static_cast<std::size_t>(m_ref);
    if (model.profile().is_constant()) {
        return matrix_power(expm_from_eigen(solver.eigenvectors(), solver.eigenvalues(), dt), m_ref);
    }
    DenseOperator u = DenseOperator::Identity(h.rows(), h.cols());
    std::size_t p = 0;
    while (p < steps) {
        // consecutive steps with the same factor share one exponential
        const double s = model.profile().factor_for_step(p, steps);
        std::size_t run = 1;
        while (p + run < steps && model.profile().factor_for_step(p + run, steps) == s) ++run;
        u = expm_from_eigen(solver.eigenvectors(), solver.eigenvalues(), dt * s * static_cast<double>(run)) * u;
        p += run;
    }
    return u;
}

double spectral_norm(const DenseOperator& a, const PowerIterationOptions& options) {
    if (a.size() == 0) return 0.0;
    const DenseOperator gram = a.adjoint() * a;
    std::mt19937_64 rng(options.seed);
    std::normal_distribution<double> normal;
    Eigen::VectorXcd x(gram.cols());
    for (Eigen::Index k = 0; k < x.size(); ++k) x(k) = Complex(normal(rng), normal(rng));
    x.normalize();

    // Near-degenerate top singular values make plain iteration crawl. When it
    // stalls, iterate with the squared (rescaled) operator instead: one step of
    // (A^dagger A)^(2^s) is 2^s steps of the original recurrence.
    DenseOperator step = gram;
    int squarings = 0;
    double previous = 0.0;
    for (int it = 0; it < options.max_iterations; ++it) {
        if (it > 0 && it % options.stall_window == 0 && squarings < options.max_squarings) {
            step = step * step;
            const double scale = step.norm();
            if (scale == 0.0) return 0.0;
            step /= scale;
            ++squarings;
        }
        Eigen::VectorXcd y = step * x;
        const double ynorm = y.norm();
        if (ynorm == 0.0) return 0.0;
        x = y / ynorm;
        const double lambda = std::real(x.dot(gram * x));  // Rayleigh quotient of A^dagger A
        if (it > 0 && std::abs(lambda - previous) <= options.relative_tolerance * std::abs(lambda)) {
            return std::sqrt(std::max(lambda, 0.0));
        }
        previous = lambda;
    }
    throw ConvergenceError("spectral_norm: power iteration did not converge in " +
                           std::to_string(options.max_iterations) + " iterations");
}

StageExponentiator::StageExponentiator(const SpinModel& model, const EdgeColoring& coloring)
    : dim_(std::size_t{1} << model.n()) {
    require_oracle_size(model.n());
    for (const auto& members : coloring.classes) {
        hamiltonians_.push_back(class_hamiltonian(model, members));
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hamiltonians_.back());
        vectors_.push_back(solver.eigenvectors());
        values_.push_back(solver.eigenvalues());
    }
}

DenseOperator StageExponentiator::stage(std::size_t color, double duration) const {
    return expm_from_eigen(vectors_.at(color), values_.at(color), duration);
}

DenseOperator StageExponentiator::product(const std::vector<TimedStage>& schedule) const {
    const auto dim = static_cast<Eigen::Index>(dim_);
    DenseOperator u = DenseOperator::Identity(dim, dim);
    for (const TimedStage& s : schedule) {
        u = stage(s.color, s.duration * s.scale) * u;
    }
    return u;
}

double StageExponentiator::commutator_norm(std::size_t k, std::size_t l, const PowerIterationOptions& options) const {
    const DenseOperator& a = hamiltonians_.at(k);
    const DenseOperator& b = hamiltonians_.at(l);
    return spectral_norm(a * b - b * a, options);
}

double trotter_error(const SpinModel& model, const EdgeColoring& coloring, const ProductFormula& formula,
                     std::int64_t m, double t, const PowerIterationOptions& options, std::int64_t m_ref) {
    if (m < 1) throw ValidationError("step count must be >= 1");
    if (formula.num_colors != coloring.num_colors()) {
        throw ValidationError("formula has " + std::to_string(formula.num_colors) + " colors, coloring has " +
                              std::to_string(coloring.num_colors()));
    }
    const StageExponentiator stages(model, coloring);
    StepPlan plan;
    plan.t = t;
    plan.order = formula.order;
    if (model.profile().is_constant()) {
        // one step of length t/m, raised to the m-th power
        plan.m = 1;
        plan.t = t / static_cast<double>(m);
        const DenseOperator approx = matrix_power(stages.product(expand(plan, formula)), m);
        return spectral_norm(exact_evolution(model, t) - approx, options);
    }
    plan.m = m;
    const DenseOperator approx = stages.product(expand(plan, formula, model.profile()));
    const std::int64_t reference_steps = m_ref > 0 ? m_ref : 100 * m;
    return spectral_norm(reference_evolution(model, t, reference_steps) - approx, options);
}

StateVector::StateVector(std::size_t n) : n_(n) {
    if (n_ > static_cast<std::size_t>(kStateVectorLimit)) {
        throw OracleLimitError(static_cast<int>(n_), kStateVectorLimit);
    }
    amps_ = Eigen::VectorXcd::Zero(Eigen::Index{1} << n_);
    amps_(0) = 1.0;
}

StateVector::StateVector(std::size_t n, Eigen::VectorXcd amplitudes) : n_(n), amps_(std::move(amplitudes)) {
    if (n_ > static_cast<std::size_t>(kStateVectorLimit)) {
        throw OracleLimitError(static_cast<int>(n_), kStateVectorLimit);
    }
    if (amps_.size() != (Eigen::Index{1} << n_)) {
        throw ValidationError("state vector needs 2^n amplitudes");
    }
}

StateVector StateVector::basis_state(std::size_t n, std::uint64_t index) {
    StateVector s(n);
    if (index >= (std::uint64_t{1} << n)) throw ValidationError("basis index out of range");
    s.amps_.setZero();
    s.amps_(static_cast<Eigen::Index>(index)) = 1.0;
    return s;
}

void StateVector::check_qubit(std::size_t q) const {
    if (q >= n_) {
        throw ValidationError("qubit index " + std::to_string(q) + " out of range for " + std::to_string(n_) +
                              " qubits");
    }
}

void StateVector::apply_one_qubit(const Mat2& u, std::size_t q) {
    check_qubit(q);
    const std::size_t stride = std::size_t{1} << q;
    const std::size_t dim = static_cast<std::size_t>(amps_.size());
    Complex* a = amps_.data();
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
        for (std::size_t k = block; k < block + stride; ++k) {
            const Complex a0 = a[k];
            const Complex a1 = a[k + stride];
            a[k] = u(0, 0) * a0 + u(0, 1) * a1;
            a[k + stride] = u(1, 0) * a0 + u(1, 1) * a1;
        }
    }
}

void StateVector::apply_two_qubit(const Mat4& u, std::size_t first, std::size_t second) {
    check_qubit(first);
    check_qubit(second);
    if (first == second) throw ValidationError("two-qubit gate needs distinct qubits");
    const std::size_t bf = std::size_t{1} << first;
    const std::size_t bs = std::size_t{1} << second;
    const std::size_t dim = static_cast<std::size_t>(amps_.size());
    Complex* a = amps_.data();
    for (std::size_t k = 0; k < dim; ++k) {
        if (k & (bf | bs)) continue;
        const std::size_t idx[4] = {k, k | bs, k | bf, k | bf | bs};
        Complex in[4];
        for (int r = 0; r < 4; ++r) in[r] = a[idx[r]];
        for (int r = 0; r < 4; ++r) {
            a[idx[r]] = u(r, 0) * in[0] + u(r, 1) * in[1] + u(r, 2) * in[2] + u(r, 3) * in[3];
        }
    }
}

void StateVector::apply(const Gate& gate) {
    if (gate.arity() == 1) {
        apply_one_qubit(gate.one_qubit_matrix(), gate.qubits[0]);
    } else {
        apply_two_qubit(gate.two_qubit_matrix(), gate.qubits[0], gate.qubits[1]);
    }
}

void StateVector::run(const Circuit& circuit) {
    if (circuit.n != n_) throw ValidationError("circuit width does not match the state");
    for (const auto& layer : circuit.layers) {
        for (const Gate& g : layer) apply(g);
    }
}

}  // namespace trottersmith
