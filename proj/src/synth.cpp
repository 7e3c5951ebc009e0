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

#include "trottersmith/synth.hpp"

#include <Eigen/Sparse>
#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "trottersmith/error.hpp"
#include "trottersmith/io.hpp"
#include "trottersmith/oracle.hpp"

namespace trottersmith {

using std::numbers::pi;

namespace {

Mat2 rotation(int axis, double theta) {
    return std::cos(theta / 2) * Mat2::Identity() - Complex(0, std::sin(theta / 2)) * pauli::by_axis(axis);
}

Mat4 cnot_matrix() {
    Mat4 m = Mat4::Zero();
    m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
    return m;
}

}  // namespace

std::string to_string(GateKind kind) {
    switch (kind) {
        case GateKind::hadamard:
            return "h";
        case GateKind::cnot:
            return "cx";
        case GateKind::rx:
            return "rx";
        case GateKind::ry:
            return "ry";
        case GateKind::rz:
            return "rz";
        case GateKind::u1q:
            return "u1q";
        case GateKind::scaled_two_qubit:
            return "uij";
    }
    return "?";
}

GateKind gate_kind_from_string(const std::string& s) {
    static const std::map<std::string, GateKind> kinds{
        {"h", GateKind::hadamard}, {"cx", GateKind::cnot}, {"rx", GateKind::rx},  {"ry", GateKind::ry},
        {"rz", GateKind::rz},      {"u1q", GateKind::u1q}, {"uij", GateKind::scaled_two_qubit}};
    auto it = kinds.find(s);
    if (it == kinds.end()) throw ValidationError("unknown gate kind '" + s + "'");
    return it->second;
}

namespace {

Gate make_gate(GateKind kind, std::vector<std::size_t> qubits, double theta = 0.0) {
    Gate g;
    g.kind = kind;
    g.qubits = std::move(qubits);
    g.theta = theta;
    return g;
}

}  // namespace

Gate Gate::h(std::size_t q) { return make_gate(GateKind::hadamard, {q}); }
Gate Gate::cnot(std::size_t control, std::size_t target) {
    if (control == target) throw ValidationError("cnot control and target must differ");
    return make_gate(GateKind::cnot, {control, target});
}
Gate Gate::rx(std::size_t q, double theta) { return make_gate(GateKind::rx, {q}, theta); }
Gate Gate::ry(std::size_t q, double theta) { return make_gate(GateKind::ry, {q}, theta); }
Gate Gate::rz(std::size_t q, double theta) { return make_gate(GateKind::rz, {q}, theta); }
Gate Gate::u1q(std::size_t q, const Mat2& u) {
    if (unitarity_deviation(u) > 1e-12) throw ValidationError("u1q matrix is not unitary");
    Gate g = make_gate(GateKind::u1q, {q});
    g.matrix = u;
    return g;
}
Gate Gate::scaled(const EdgeTerm& edge, double tau) {
    Gate g = make_gate(GateKind::scaled_two_qubit, {edge.i, edge.j});
    g.edge = edge;
    g.tau = tau;
    return g;
}

Mat2 Gate::one_qubit_matrix() const {
    switch (kind) {
        case GateKind::hadamard:
            return (pauli::x() + pauli::z()) / std::sqrt(2.0);
        case GateKind::rx:
            return rotation(0, theta);
        case GateKind::ry:
            return rotation(1, theta);
        case GateKind::rz:
            return rotation(2, theta);
        case GateKind::u1q:
            return matrix;
        default:
            throw Error(to_string(kind) + " is not a one-qubit gate");
    }
}

Mat4 Gate::two_qubit_matrix() const {
    switch (kind) {
        case GateKind::cnot:
            return cnot_matrix();
        case GateKind::scaled_two_qubit:
            return expm_hermitian(term_hamiltonian(edge), tau);
        default:
            throw Error(to_string(kind) + " is not a two-qubit gate");
    }
}

void Circuit::append(const Circuit& other) {
    if (other.n != n) throw ValidationError("cannot append circuits of different width");
    layers.insert(layers.end(), other.layers.begin(), other.layers.end());
    interaction_gates += other.interaction_gates;
    blocks += other.blocks;
}

std::optional<std::string> check_structure(const Circuit& circuit) {
    for (std::size_t l = 0; l < circuit.layers.size(); ++l) {
        std::set<std::size_t> touched;
        for (const Gate& g : circuit.layers[l]) {
            for (std::size_t q : g.qubits) {
                if (q >= circuit.n) {
                    return "layer " + std::to_string(l) + ": qubit " + std::to_string(q) + " out of range";
                }
                if (!touched.insert(q).second) {
                    return "layer " + std::to_string(l) + ": qubit " + std::to_string(q) + " used twice";
                }
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// KAK decomposition
// ---------------------------------------------------------------------------

Mat4 cartan_core(double alpha, double beta, double gamma) {
    // XX, YY and ZZ are simultaneously diagonal in the Bell basis.
    const double s = 1.0 / std::sqrt(2.0);
    Mat4 bell;
    bell << s, 0, 0, s,  //
        0, s, s, 0,      //
        0, s, -s, 0,     //
        s, 0, 0, -s;
    // columns: |00>+|11>, |01>+|10>, |01>-|10>, |00>-|11>; (XX, YY, ZZ) eigenvalues below
    const std::array<std::array<int, 3>, 4> signs{{{1, -1, 1}, {1, 1, -1}, {-1, -1, -1}, {-1, 1, 1}}};
    Eigen::Vector4cd phases;
    for (int k = 0; k < 4; ++k) {
        double angle = (alpha * signs[k][0] + beta * signs[k][1] + gamma * signs[k][2]) / 4.0;
        phases(k) = std::polar(1.0, -angle);
    }
    return bell * phases.asDiagonal() * bell.adjoint();
}

Mat4 CartanCoefficients::reconstruct() const {
    return global_phase * kron(v1, v2) * cartan_core(alpha, beta, gamma) * kron(u1, u2);
}

namespace {

Mat4 magic_basis() {
    const double s = 1.0 / std::sqrt(2.0);
    const Complex i(0, s);
    Mat4 m;
    m << s, 0, 0, i,  //
        0, i, s, 0,   //
        0, i, -s, 0,  //
        s, 0, 0, -i;
    return m;
}

/// Splits an (exactly) local 4x4 unitary into first (x) second.
std::pair<Mat2, Mat2> factor_local(const Mat4& l) {
    int best_r = 0, best_c = 0;
    double best = -1.0;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            double w = l.block<2, 2>(2 * r, 2 * c).norm();
            if (w > best) {
                best = w;
                best_r = r;
                best_c = c;
            }
        }
    }
    Mat2 second = l.block<2, 2>(2 * best_r, 2 * best_c) * (std::sqrt(2.0) / best);
    Mat2 first;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            first(r, c) = (second.adjoint() * l.block<2, 2>(2 * r, 2 * c)).trace() / 2.0;
        }
    }
    return {first, second};
}

/// Real orthogonal P (det +1) with P^T m P diagonal, for symmetric unitary m.
Eigen::Matrix4d diagonalize_symmetric_unitary(const Mat4& m) {
    const Eigen::Matrix4d re = m.real();
    const Eigen::Matrix4d im = m.imag();
    std::mt19937_64 rng(0x5EED);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int attempt = 0; attempt < 64; ++attempt) {
        // Re and Im commute; a generic real combination separates their joint eigenspaces.
        const double r = attempt == 0 ? 0.6180339887498949 : dist(rng);
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(re + r * im);
        Eigen::Matrix4d p = solver.eigenvectors();
        Mat4 d = p.transpose().cast<Complex>() * m * p.cast<Complex>();
        Mat4 off = d;
        off.diagonal().setZero();
        if (off.cwiseAbs().maxCoeff() < 1e-9) {
            if (p.determinant() < 0) p.col(0) *= -1.0;
            return p;
        }
    }
    throw ConvergenceError("kak: failed to diagonalize the magic-basis Gram matrix");
}

/// Tracks U = phase * pre * core(v) * post while moving v into the Weyl chamber.
struct CanonicalForm {
    std::array<double, 3> v{};
    Mat4 pre = Mat4::Identity();
    Mat4 post = Mat4::Identity();

    static Mat2 pauli_of(int axis) { return pauli::by_axis(axis); }

    // core(v + 2 pi e_k) = (-i P_k P_k) core(v).
    void shift(int k, int turns) {
        const Mat4 pp = kron(pauli_of(k), pauli_of(k));
        const Complex minus_i(0, -1);
        while (turns > 0) {
            // v = v' + 2pi e_k  ->  core(v) = (-i PP) core(v')
            pre = pre * (minus_i * pp);
            v[k] -= 2 * pi;
            --turns;
        }
        while (turns < 0) {
            pre = pre * (-minus_i * pp);
            v[k] += 2 * pi;
            ++turns;
        }
    }

    // Conjugation c with c core(v) c^dagger = core(v with k and l swapped).
    void swap(int k, int l) {
        if (k == l) return;
        if (k > l) std::swap(k, l);
        Mat2 c1;
        if (k == 0 && l == 1) {
            c1 << 1, 0, 0, Complex(0, 1);  // S
        } else if (k == 0 && l == 2) {
            c1 = (pauli::x() + pauli::z()) / std::sqrt(2.0);  // H
        } else {
            c1 = rotation(0, pi / 2);  // sqrt(X)
        }
        const Mat4 c = kron(c1, c1);
        pre = pre * c.adjoint();
        post = c * post;
        std::swap(v[k], v[l]);
    }

    // Conjugation by a Pauli on the first qubit negates the two other axes.
    void flip_pair(int k, int l) {
        const int keep = 3 - k - l;
        const Mat4 d = kron(pauli_of(keep), Mat2::Identity());
        pre = pre * d;
        post = d * post;
        v[k] = -v[k];
        v[l] = -v[l];
    }

    void canonicalize() {
        for (int k = 0; k < 3; ++k) {
            // into (-pi, pi]
            int turns = static_cast<int>(std::ceil((v[k] - pi) / (2 * pi)));
            shift(k, turns);
        }
        // sort by magnitude, descending
        for (int pass = 0; pass < 2; ++pass) {
            for (int k = 0; k < 2; ++k) {
                if (std::abs(v[k]) < std::abs(v[k + 1])) swap(k, k + 1);
            }
        }
        if (v[0] < 0) flip_pair(0, 2);
        if (v[1] < 0) flip_pair(1, 2);
        if (std::abs(v[0] - pi) < 1e-12 && v[2] < 0) {
            shift(0, 1);
            flip_pair(0, 2);
        }
    }
};

}  // namespace

CartanCoefficients kak_decompose(const Mat4& u) {
    const double deviation = unitarity_deviation(u);
    if (!(deviation <= 1e-10)) {
        std::ostringstream msg;
        msg << "kak_decompose: input is not unitary (max |U^dagger U - I| = " << deviation << ")";
        throw ValidationError(msg.str());
    }
    const Complex det = u.determinant();
    const Complex root = std::pow(det, 0.25);
    const Mat4 special = u / root;

    const Mat4 magic = magic_basis();
    const Mat4 up = magic.adjoint() * special * magic;
    const Mat4 gram = up.transpose() * up;
    const Eigen::Matrix4d p = diagonalize_symmetric_unitary(gram);
    const Mat4 pc = p.cast<Complex>();
    const Mat4 d = pc.transpose() * gram * pc;

    std::array<double, 4> theta{};
    double total = 0.0;
    for (int k = 0; k < 4; ++k) {
        theta[k] = std::arg(d(k, k)) / 2.0;
        total += theta[k];
    }
    // det(up) = 1 forces sum(theta) to a multiple of pi; make it exactly zero.
    theta[0] -= pi * std::round(total / pi);

    Eigen::Vector4cd inv_phase;
    for (int k = 0; k < 4; ++k) inv_phase(k) = std::polar(1.0, -theta[k]);
    const Mat4 k1 = up * pc * inv_phase.asDiagonal();

    CanonicalForm form;
    // magic-basis phases theta = (a-b+c, a+b-c, -a-b-c, -a+b+c) of exp(i(a XX + b YY + c ZZ))
    const double a = (theta[0] + theta[1]) / 2.0;
    const double b = (theta[1] + theta[3]) / 2.0;
    const double c = (theta[0] + theta[3]) / 2.0;
    form.v = {-4.0 * a, -4.0 * b, -4.0 * c};
    form.pre = magic * Mat4(k1.real().cast<Complex>()) * magic.adjoint();
    form.post = magic * pc.transpose() * magic.adjoint();
    form.canonicalize();

    CartanCoefficients out;
    out.alpha = form.v[0];
    out.beta = form.v[1];
    out.gamma = form.v[2];
    std::tie(out.v1, out.v2) = factor_local(form.pre);
    std::tie(out.u1, out.u2) = factor_local(form.post);
    out.global_phase = root;

    // With a degenerate spectrum the locals are not unique (e.g. any W x W commutes
    // with S.S). Prefer identity locals whenever the bare core already matches.
    const Mat4 core = cartan_core(out.alpha, out.beta, out.gamma);
    const Complex overlap = (core.adjoint() * u).trace() / 4.0;
    if (std::abs(std::abs(overlap) - 1.0) < 1e-12) {
        const Complex phase = overlap / std::abs(overlap);
        if ((phase * core - u).cwiseAbs().maxCoeff() < 1e-10) {
            out.u1 = out.u2 = out.v1 = out.v2 = Mat2::Identity();
            out.global_phase = phase;
        }
    }

    const double error = (out.reconstruct() - u).cwiseAbs().maxCoeff();
    if (error > 1e-8) {
        std::ostringstream msg;
        msg << "kak_decompose: reconstruction error " << error;
        throw Error(msg.str());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Templates
// ---------------------------------------------------------------------------

namespace {

std::size_t width_for(std::size_t a, std::size_t b) { return std::max(a, b) + 1; }

Circuit locals_only(std::size_t n, std::size_t a, const Mat2& ua, std::size_t b, const Mat2& ub) {
    Circuit c{n, {{Gate::u1q(a, ua), Gate::u1q(b, ub)}}, 1, 0};
    return c;
}

}  // namespace

Circuit synth_general(const EdgeTerm& edge, double tau) {
    const std::size_t a = edge.i;
    const std::size_t b = edge.j;
    const Mat4 target = expm_hermitian(term_hamiltonian(edge), tau);
    const CartanCoefficients kak = kak_decompose(target);
    const std::size_t n = width_for(a, b);
    if (std::max({std::abs(kak.alpha), std::abs(kak.beta), std::abs(kak.gamma)}) < kZeroAngle) {
        return locals_only(n, a, kak.v1 * kak.u1, b, kak.v2 * kak.u2);
    }
    Circuit c{n, {}, 1, 0};
    auto zz_section = [&](double angle) {
        c.layers.push_back({Gate::cnot(a, b)});
        c.layers.push_back({Gate::rz(b, angle / 2.0)});
        c.layers.push_back({Gate::cnot(a, b)});
    };
    c.layers.push_back({Gate::u1q(a, kak.u1), Gate::u1q(b, kak.u2)});
    // XX section: H H, ZZ core, H H
    c.layers.push_back({Gate::h(a), Gate::h(b)});
    zz_section(kak.alpha);
    // YY section would open with H H; it cancels the XX section's closing pair.
    c.layers.push_back({Gate::rx(a, -pi / 2), Gate::rx(b, -pi / 2)});
    zz_section(kak.beta);
    c.layers.push_back({Gate::rx(a, pi / 2), Gate::rx(b, pi / 2)});
    c.layers.push_back({Gate::h(a), Gate::h(b)});
    // ZZ section
    zz_section(kak.gamma);
    c.layers.push_back({Gate::u1q(a, kak.v1), Gate::u1q(b, kak.v2)});
    return c;
}

Circuit synth_heisenberg(double alpha, std::size_t a, std::size_t b) {
    if (a == b) throw ValidationError("synth_heisenberg needs two distinct qubits");
    Circuit c{width_for(a, b), {}, 1, 0};
    c.layers.push_back({Gate::rz(b, pi / 2)});
    c.layers.push_back({Gate::cnot(b, a)});
    c.layers.push_back({Gate::rz(a, alpha / 2 + pi / 2), Gate::ry(b, alpha / 2 + pi / 2)});
    c.layers.push_back({Gate::cnot(a, b)});
    c.layers.push_back({Gate::ry(b, -alpha / 2 - pi / 2)});
    c.layers.push_back({Gate::cnot(b, a)});
    c.layers.push_back({Gate::rz(a, -pi / 2)});
    return c;
}

std::string to_string(GateMode mode) { return mode == GateMode::scaled ? "scaled" : "decomposed"; }

Circuit synth_interaction(const EdgeTerm& edge, double tau, std::size_t n, TemplateChoice choice) {
    const bool heisenberg = choice == TemplateChoice::heisenberg ||
                            (choice == TemplateChoice::automatic && edge.is_heisenberg_form());
    Circuit local;
    if (heisenberg) {
        if (!edge.is_heisenberg_form()) {
            throw ValidationError("edge (" + std::to_string(edge.i) + "," + std::to_string(edge.j) +
                                  ") is not of Heisenberg form; the 3-CNOT template does not apply");
        }
        const double angle = tau * edge.coupling.isotropic_value();
        // exp(-i tau (J S.S + h.(S_i + S_j))) = exp(-i tau J S.S) (R x R), the factors commute.
        Mat2 field = Mat2::Zero();
        for (int k = 0; k < 3; ++k) field += (0.5 * edge.hi_share(k)) * pauli::by_axis(k);
        const Mat2 r = expm_hermitian(field, tau);
        const bool has_field = !edge.hi_share.isZero(0.0);
        if (std::abs(angle) < kZeroAngle) {
            local = locals_only(width_for(edge.i, edge.j), edge.i, r, edge.j, r);
        } else {
            local = synth_heisenberg(angle, edge.i, edge.j);
            if (has_field) local.layers.push_back({Gate::u1q(edge.i, r), Gate::u1q(edge.j, r)});
        }
    } else {
        local = synth_general(edge, tau);
    }
    local.n = n;
    return local;
}

Circuit build_trotter_circuit(const SpinModel& model, const EdgeColoring& coloring,
                              const std::vector<TimedStage>& schedule, GateMode mode, TemplateChoice choice) {
    if (auto violation = validate(coloring, model)) {
        throw ValidationError("invalid coloring: " + violation->message);
    }
    Circuit circuit{model.n(), {}, 0, 0};
    std::map<std::pair<std::size_t, double>, Circuit> cache;
    for (const TimedStage& stage : schedule) {
        if (stage.color >= coloring.num_colors()) {
            throw ValidationError("schedule names color " + std::to_string(stage.color) + " but the coloring has " +
                                  std::to_string(coloring.num_colors()));
        }
        const double tau = stage.duration * stage.scale;
        const auto& members = coloring.classes[stage.color];
        ++circuit.blocks;
        circuit.interaction_gates += members.size();
        if (mode == GateMode::scaled) {
            std::vector<Gate> layer;
            for (std::size_t e : members) layer.push_back(Gate::scaled(model.edges()[e], tau));
            circuit.layers.push_back(std::move(layer));
            continue;
        }
        std::vector<const Circuit*> parts;
        std::size_t block_depth = 0;
        for (std::size_t e : members) {
            auto key = std::make_pair(e, tau);
            auto it = cache.find(key);
            if (it == cache.end()) {
                it = cache.emplace(key, synth_interaction(model.edges()[e], tau, model.n(), choice)).first;
            }
            parts.push_back(&it->second);
            block_depth = std::max(block_depth, it->second.depth());
        }
        for (std::size_t l = 0; l < block_depth; ++l) {
            std::vector<Gate> layer;
            for (const Circuit* part : parts) {
                if (l < part->layers.size()) {
                    layer.insert(layer.end(), part->layers[l].begin(), part->layers[l].end());
                }
            }
            circuit.layers.push_back(std::move(layer));
        }
    }
    return circuit;
}

CircuitCounts counts(const Circuit& circuit) {
    CircuitCounts out;
    for (const auto& layer : circuit.layers) {
        for (const Gate& g : layer) {
            ++out.by_kind[g.kind];
            ++out.total_gates;
            if (g.kind == GateKind::cnot) ++out.cnots;
        }
    }
    out.interaction_gates = circuit.interaction_gates;
    out.depth = circuit.depth();
    out.blocks = circuit.blocks;
    return out;
}

// ---------------------------------------------------------------------------
// Dense unitary of a circuit
// ---------------------------------------------------------------------------

namespace {

using Sparse = Eigen::SparseMatrix<Complex>;

/// Explicit 2^n embedding of a k-qubit gate as a sparse matrix.
Sparse embed(const Eigen::MatrixXcd& local, const std::vector<std::size_t>& qubits, std::size_t n) {
    const std::size_t dim = std::size_t{1} << n;
    const std::size_t k = qubits.size();
    const std::size_t local_dim = std::size_t{1} << k;
    std::vector<Eigen::Triplet<Complex>> triplets;
    triplets.reserve(dim * local_dim);
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t in = 0;
        std::size_t rest = col;
        for (std::size_t pos = 0; pos < k; ++pos) {
            std::size_t bit = (col >> qubits[pos]) & 1u;
            in |= bit << (k - 1 - pos);
            rest &= ~(std::size_t{1} << qubits[pos]);
        }
        for (std::size_t out = 0; out < local_dim; ++out) {
            Complex v = local(static_cast<Eigen::Index>(out), static_cast<Eigen::Index>(in));
            if (v == Complex(0, 0)) continue;
            std::size_t row = rest;
            for (std::size_t pos = 0; pos < k; ++pos) {
                row |= ((out >> (k - 1 - pos)) & 1u) << qubits[pos];
            }
            triplets.emplace_back(static_cast<int>(row), static_cast<int>(col), v);
        }
    }
    Sparse s(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    s.setFromTriplets(triplets.begin(), triplets.end());
    return s;
}

}  // namespace

DenseOperator circuit_unitary(const Circuit& circuit) {
    require_oracle_size(circuit.n);
    if (auto problem = check_structure(circuit)) throw ValidationError(*problem);
    const Eigen::Index dim = Eigen::Index{1} << circuit.n;
    DenseOperator u = DenseOperator::Identity(dim, dim);
    for (const auto& layer : circuit.layers) {
        for (const Gate& g : layer) {
            Eigen::MatrixXcd local = g.arity() == 1 ? Eigen::MatrixXcd(g.one_qubit_matrix())
                                                    : Eigen::MatrixXcd(g.two_qubit_matrix());
            u = embed(local, g.qubits, circuit.n) * u;
        }
    }
    return u;
}

// ---------------------------------------------------------------------------
// OpenQASM 3
// ---------------------------------------------------------------------------

EulerAngles u3_angles(const Mat2& u) {
    EulerAngles e;
    const double c = std::abs(u(0, 0));
    const double s = std::abs(u(1, 0));
    e.theta = 2.0 * std::atan2(s, c);
    constexpr double kTiny = 1e-14;
    if (c > kTiny) {
        e.global_phase = std::arg(u(0, 0));
        if (s > kTiny) {
            e.phi = std::arg(u(1, 0)) - e.global_phase;
            e.lambda = std::arg(-u(0, 1)) - e.global_phase;
        } else {
            e.phi = 0.0;
            e.lambda = std::arg(u(1, 1)) - e.global_phase;
        }
    } else {
        e.lambda = 0.0;
        e.global_phase = std::arg(-u(0, 1));
        e.phi = std::arg(u(1, 0)) - e.global_phase;
    }
    return e;
}

std::string to_qasm(const Circuit& circuit) {
    using io::format_double;
    std::ostringstream out;
    out << "OPENQASM 3.0;\n";
    out << "include \"stdgates.inc\";\n";
    bool has_scaled = false;
    for (const auto& layer : circuit.layers) {
        for (const Gate& g : layer) has_scaled = has_scaled || g.kind == GateKind::scaled_two_qubit;
    }
    if (has_scaled) {
        out << "// uij(tau) is the native scaled interaction exp(-i tau H_ij) of the target device\n";
    }
    out << "qubit[" << circuit.n << "] q;\n";
    auto q = [](std::size_t i) { return "q[" + std::to_string(i) + "]"; };
    for (std::size_t l = 0; l < circuit.layers.size(); ++l) {
        for (const Gate& g : circuit.layers[l]) {
            switch (g.kind) {
                case GateKind::hadamard:
                    out << "h " << q(g.qubits[0]) << ";\n";
                    break;
                case GateKind::cnot:
                    out << "cx " << q(g.qubits[0]) << ", " << q(g.qubits[1]) << ";\n";
                    break;
                case GateKind::rx:
                case GateKind::ry:
                case GateKind::rz:
                    out << to_string(g.kind) << "(" << format_double(g.theta) << ") " << q(g.qubits[0]) << ";\n";
                    break;
                case GateKind::u1q: {
                    EulerAngles e = u3_angles(g.matrix);
                    out << "U(" << format_double(e.theta) << ", " << format_double(e.phi) << ", "
                        << format_double(e.lambda) << ") " << q(g.qubits[0]) << ";\n";
                    break;
                }
                case GateKind::scaled_two_qubit: {
                    const auto& j = g.edge.coupling.entries();
                    out << "// J=[";
                    for (int r = 0; r < 3; ++r) {
                        out << (r ? ", " : "") << "[" << format_double(j(r, 0)) << ", " << format_double(j(r, 1))
                            << ", " << format_double(j(r, 2)) << "]";
                    }
                    out << "] hi=[" << format_double(g.edge.hi_share(0)) << ", " << format_double(g.edge.hi_share(1))
                        << ", " << format_double(g.edge.hi_share(2)) << "] hj=[" << format_double(g.edge.hj_share(0))
                        << ", " << format_double(g.edge.hj_share(1)) << ", " << format_double(g.edge.hj_share(2))
                        << "]\n";
                    out << "uij(" << format_double(g.tau) << ") " << q(g.qubits[0]) << ", " << q(g.qubits[1])
                        << ";\n";
                    break;
                }
            }
        }
    }
    return out.str();
}

}  // namespace trottersmith
