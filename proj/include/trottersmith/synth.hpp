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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trottersmith/coloring.hpp"
#include "trottersmith/model.hpp"
#include "trottersmith/trotter.hpp"

namespace trottersmith {

enum class GateKind { hadamard, cnot, rx, ry, rz, u1q, scaled_two_qubit };

std::string to_string(GateKind kind);
GateKind gate_kind_from_string(const std::string& s);

/// A gate of the circuit IR. Rotations are R_a(theta) = exp(-i theta sigma_a / 2).
/// CNOT uses qubits = {control, target}. A scaled two-qubit gate is the native
/// exp(-i tau H_ij) for `edge` on qubits {edge.i, edge.j}.
struct Gate {
    GateKind kind = GateKind::hadamard;
    std::vector<std::size_t> qubits;
    double theta = 0.0;
    Mat2 matrix = Mat2::Identity();
    EdgeTerm edge;
    double tau = 0.0;

    static Gate h(std::size_t q);
    static Gate cnot(std::size_t control, std::size_t target);
    static Gate rx(std::size_t q, double theta);
    static Gate ry(std::size_t q, double theta);
    static Gate rz(std::size_t q, double theta);
    static Gate u1q(std::size_t q, const Mat2& u);
    static Gate scaled(const EdgeTerm& edge, double tau);

    std::size_t arity() const { return qubits.size(); }
    /// 2x2 matrix for one-qubit kinds.
    Mat2 one_qubit_matrix() const;
    /// 4x4 matrix on |a b> with qubits[0] on the high bit, for two-qubit kinds.
    Mat4 two_qubit_matrix() const;

    bool operator==(const Gate&) const = default;
};

/// Layered circuit. Gates within a layer act on pairwise-disjoint qubits.
struct Circuit {
    std::size_t n = 0;
    std::vector<std::vector<Gate>> layers;
    /// Number of interaction gates U_ij the circuit realizes.
    std::size_t interaction_gates = 0;
    /// Number of parallel interaction blocks (one per expanded schedule stage).
    std::size_t blocks = 0;

    std::size_t depth() const { return layers.size(); }
    /// Appends `other`'s layers; qubit counts must agree.
    void append(const Circuit& other);

    bool operator==(const Circuit&) const = default;
};

/// Checks layer disjointness and qubit ranges; returns a message for the first problem.
std::optional<std::string> check_structure(const Circuit& circuit);

/// Cartan form U = phase * (V1 x V2) exp(-i(a Sx Sx + b Sy Sy + c Sz Sz)) (U1 x U2), S = sigma/2.
struct CartanCoefficients {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    Mat2 u1 = Mat2::Identity();
    Mat2 u2 = Mat2::Identity();
    Mat2 v1 = Mat2::Identity();
    Mat2 v2 = Mat2::Identity();
    Complex global_phase{1.0, 0.0};

    Mat4 reconstruct() const;
};

/// exp(-i(a Sx Sx + b Sy Sy + c Sz Sz)) with S = sigma/2.
Mat4 cartan_core(double alpha, double beta, double gamma);

/// KAK decomposition through the magic basis, canonicalized to the Weyl chamber
/// pi >= alpha >= beta >= |gamma| (gamma >= 0 when alpha = pi). Throws
/// ValidationError if U is not unitary within 1e-10.
CartanCoefficients kak_decompose(const Mat4& u);

/// Angles below this count as zero when eliding an interaction template.
inline constexpr double kZeroAngle = 1e-12;

/// exp(-i tau H_ij) as a 6-CNOT circuit: local unitaries around the XX, YY and
/// ZZ sections, with the Hadamard pair between the XX and YY sections cancelled.
/// Circuit width is max(i,j)+1.
Circuit synth_general(const EdgeTerm& edge, double tau);

/// exp(-i alpha S_a.S_b) as a 3-CNOT circuit on qubits {a, b}.
Circuit synth_heisenberg(double alpha, std::size_t a = 0, std::size_t b = 1);

enum class GateMode { decomposed, scaled };
/// Interaction template choice in decomposed mode. `automatic` uses the
/// Heisenberg template for Heisenberg-form edges and the general one otherwise.
enum class TemplateChoice { automatic, general, heisenberg };

std::string to_string(GateMode mode);

/// Synthesizes one interaction gate exp(-i tau H_ij) with the requested template.
Circuit synth_interaction(const EdgeTerm& edge, double tau, std::size_t n, TemplateChoice choice);

/// One parallel block per expanded stage. Throws ValidationError if the coloring
/// is invalid for the model or a stage names a color the coloring does not have.
Circuit build_trotter_circuit(const SpinModel& model, const EdgeColoring& coloring,
                              const std::vector<TimedStage>& schedule, GateMode mode,
                              TemplateChoice choice = TemplateChoice::automatic);

struct CircuitCounts {
    std::map<GateKind, std::size_t> by_kind;
    std::size_t total_gates = 0;
    std::size_t cnots = 0;
    std::size_t interaction_gates = 0;
    std::size_t depth = 0;
    std::size_t blocks = 0;
};

CircuitCounts counts(const Circuit& circuit);

/// Exact 2^n unitary of the circuit; n must be within the oracle limit.
DenseOperator circuit_unitary(const Circuit& circuit);

/// (theta, phi, lambda) with U = e^{i g} U3(theta, phi, lambda) in the OpenQASM convention.
struct EulerAngles {
    double theta = 0.0;
    double phi = 0.0;
    double lambda = 0.0;
    double global_phase = 0.0;
};
EulerAngles u3_angles(const Mat2& u);

/// OpenQASM 3 text for the circuit.
std::string to_qasm(const Circuit& circuit);

}  // namespace trottersmith
