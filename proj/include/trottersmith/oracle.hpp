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
#include <vector>

#include "trottersmith/coloring.hpp"
#include "trottersmith/model.hpp"
#include "trottersmith/synth.hpp"
#include "trottersmith/trotter.hpp"

namespace trottersmith {

inline constexpr int kDefaultOracleLimit = 12;
inline constexpr int kStateVectorLimit = 20;

/// Dense-operator size cap: TROTTERSMITH_ORACLE_LIMIT if set, else 12.
int oracle_limit();
/// Throws OracleLimitError when n exceeds oracle_limit().
void require_oracle_size(std::size_t n);

/// Embeds a 4x4 operator on (first, second) into the 2^n space; `first` is the high bit of the 4x4 index.
DenseOperator embed_two_site(const Mat4& op, std::size_t n, std::size_t first, std::size_t second);

/// Sum of embedded edge terms, each multiplied by `scale`.
DenseOperator total_hamiltonian(const SpinModel& model, double scale = 1.0);

/// H_k = sum of the edge terms in one color class.
DenseOperator class_hamiltonian(const SpinModel& model, const std::vector<std::size_t>& edge_indices);

/// exp(-i t H); the model's profile must be constant.
DenseOperator exact_evolution(const SpinModel& model, double t);

/// Left-endpoint product prod_p exp(-i (t/m_ref) s_p H) over the model's profile.
DenseOperator reference_evolution(const SpinModel& model, double t, std::int64_t m_ref);

struct PowerIterationOptions {
    double relative_tolerance = 1e-10;
    int max_iterations = 1000;
    /// Iterations without convergence before the iterated operator is squared.
    int stall_window = 20;
    int max_squarings = 24;
    std::uint64_t seed = 0xC0FFEE;
};

/// Largest singular value by power iteration on A^dagger A. Throws
/// ConvergenceError when the iteration cap is reached.
double spectral_norm(const DenseOperator& a, const PowerIterationOptions& options = {});

/// Oracle product of per-class exponentials over an expanded schedule (time
/// order, first stage applied first). Each class exponential comes from a dense
/// eigendecomposition of H_k.
class StageExponentiator {
   public:
    StageExponentiator(const SpinModel& model, const EdgeColoring& coloring);

    DenseOperator stage(std::size_t color, double duration) const;
    DenseOperator product(const std::vector<TimedStage>& schedule) const;
    /// ||[H_k, H_l]|| for two classes.
    double commutator_norm(std::size_t k, std::size_t l, const PowerIterationOptions& options = {}) const;
    const DenseOperator& hamiltonian(std::size_t color) const { return hamiltonians_[color]; }
    std::size_t num_colors() const { return hamiltonians_.size(); }

   private:
    std::size_t dim_;
    std::vector<DenseOperator> hamiltonians_;
    std::vector<Eigen::MatrixXcd> vectors_;
    std::vector<Eigen::VectorXd> values_;
};

/// ||exp(-i t H) - (one-step product)^m|| for a constant profile. With a
/// piecewise profile the reference is reference_evolution with `m_ref` steps
/// and the product runs step by step.
double trotter_error(const SpinModel& model, const EdgeColoring& coloring, const ProductFormula& formula,
                     std::int64_t m, double t, const PowerIterationOptions& options = {},
                     std::int64_t m_ref = 0);

/// Statevector of n <= 20 qubits; gates update amplitudes in place via bit strides.
class StateVector {
   public:
    /// |0...0>.
    explicit StateVector(std::size_t n);
    StateVector(std::size_t n, Eigen::VectorXcd amplitudes);
    static StateVector basis_state(std::size_t n, std::uint64_t index);

    std::size_t num_qubits() const { return n_; }
    const Eigen::VectorXcd& amplitudes() const { return amps_; }
    double norm() const { return amps_.norm(); }

    void apply_one_qubit(const Mat2& u, std::size_t q);
    void apply_two_qubit(const Mat4& u, std::size_t first, std::size_t second);
    void apply(const Gate& gate);
    void run(const Circuit& circuit);

   private:
    void check_qubit(std::size_t q) const;

    std::size_t n_;
    Eigen::VectorXcd amps_;
};

}  // namespace trottersmith
