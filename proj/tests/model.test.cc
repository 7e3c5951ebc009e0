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

#include "trottersmith/model.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "gtest/gtest.h"

#include "test_util.hpp"
#include "trottersmith/error.hpp"

using namespace trottersmith;

namespace {

std::set<std::pair<std::size_t, std::size_t>> pairs_of(const SpinModel& m) {
    std::set<std::pair<std::size_t, std::size_t>> out;
    for (const auto& e : m.edges()) out.emplace(e.i, e.j);
    return out;
}

std::vector<std::size_t> degrees(const SpinModel& m) {
    std::vector<std::size_t> d(m.n(), 0);
    for (const auto& e : m.edges()) ++d[e.i], ++d[e.j];
    return d;
}

}  // namespace

TEST(CouplingTensor, isotropy_flag) {
    ASSERT_TRUE(CouplingTensor::heisenberg(0.7).is_isotropic());
    ASSERT_FALSE(CouplingTensor::diagonal(1, 1, 0).is_isotropic());
    Eigen::Matrix3d j = Eigen::Matrix3d::Identity();
    j(0, 1) = 1e-13;
    ASSERT_TRUE(CouplingTensor(j).is_isotropic());
    j(0, 1) = 1e-11;
    ASSERT_FALSE(CouplingTensor(j).is_isotropic());
}

TEST(CouplingTensor, rejects_non_finite) {
    Eigen::Matrix3d j = Eigen::Matrix3d::Zero();
    j(2, 1) = std::numeric_limits<double>::quiet_NaN();
    ASSERT_THROW(CouplingTensor{j}, ValidationError);
    j(2, 1) = std::numeric_limits<double>::infinity();
    ASSERT_THROW(CouplingTensor{j}, ValidationError);
}

TEST(SpinModel, validates_edges) {
    const auto c = CouplingTensor::heisenberg(1);
    ASSERT_THROW(SpinModel(3, {EdgeTerm{1, 1, c}}), ValidationError);
    ASSERT_THROW(SpinModel(3, {EdgeTerm{2, 1, c}}), ValidationError);
    ASSERT_THROW(SpinModel(3, {EdgeTerm{1, 3, c}}), ValidationError);
    ASSERT_THROW(SpinModel(3, {EdgeTerm{0, 1, c}, EdgeTerm{0, 1, c}}), ValidationError);
    ASSERT_NO_THROW(SpinModel(3, {EdgeTerm{0, 1, c}, EdgeTerm{1, 2, c}}));
}

TEST(SpinModel, j_max_dominates_entries) {
    std::mt19937_64 rng(11);
    std::vector<EdgeTerm> edges;
    for (std::size_t k = 0; k + 1 < 6; ++k) edges.push_back(EdgeTerm{k, k + 1, reference::random_coupling(rng)});
    SpinModel m(6, edges);
    double max_entry = 0;
    double max_norm = 0;
    for (const auto& e : m.edges()) {
        max_entry = std::max(max_entry, e.coupling.max_abs_entry());
        max_norm = std::max(max_norm, reference::svd_norm(e.coupling.entries().cast<std::complex<double>>()));
    }
    ASSERT_GE(m.j_max(), max_entry);
    ASSERT_NEAR(m.j_max(), max_norm, 1e-12);
}

TEST(build_lattice, open_chain) {
    auto m = build_lattice(LatticeKind::chain, {4}, Boundary::open, CouplingTensor::heisenberg(1));
    ASSERT_EQ(m.n(), 4u);
    ASSERT_EQ(pairs_of(m), (std::set<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}, {2, 3}}));
}

TEST(build_lattice, periodic_chain) {
    auto m = build_lattice(LatticeKind::chain, {5}, Boundary::periodic, CouplingTensor::heisenberg(1));
    ASSERT_EQ(m.edges().size(), 5u);
    ASSERT_TRUE(pairs_of(m).count({0, 4}));
    ASSERT_THROW(build_lattice(LatticeKind::chain, {2}, Boundary::periodic, CouplingTensor::heisenberg(1)),
                 ValidationError);
}

TEST(build_lattice, periodic_square) {
    auto m = build_lattice(LatticeKind::square, {3, 3}, Boundary::periodic, CouplingTensor::heisenberg(1));
    ASSERT_EQ(m.n(), 9u);
    ASSERT_EQ(m.edges().size(), 18u);
    for (auto d : degrees(m)) ASSERT_EQ(d, 4u);

    auto big = build_lattice(LatticeKind::square, {4, 4}, Boundary::periodic, CouplingTensor::heisenberg(1));
    ASSERT_EQ(big.edges().size(), 32u);
}

TEST(build_lattice, open_square) {
    auto m = build_lattice(LatticeKind::square, {2, 3}, Boundary::open, CouplingTensor::heisenberg(1));
    ASSERT_EQ(m.n(), 6u);
    ASSERT_EQ(m.edges().size(), 7u);  // 3 horizontal + 4 vertical
    ASSERT_TRUE(pairs_of(m).count({0, 1}));
    ASSERT_TRUE(pairs_of(m).count({0, 2}));
}

TEST(build_lattice, periodic_side_of_two_is_not_doubled) {
    auto m = build_lattice(LatticeKind::square, {2, 4}, Boundary::periodic, CouplingTensor::heisenberg(1));
    ASSERT_EQ(m.edges().size(), 4u + 8u);
    ASSERT_EQ(pairs_of(m).size(), m.edges().size());
}

TEST(build_lattice, honeycomb_degrees) {
    for (auto dims : {std::vector<std::size_t>{2, 2}, {3, 2}, {3, 4}}) {
        auto m = build_lattice(LatticeKind::hexagonal, dims, Boundary::periodic, CouplingTensor::heisenberg(1));
        ASSERT_EQ(m.n(), 2 * dims[0] * dims[1]);
        ASSERT_EQ(m.edges().size(), 3 * dims[0] * dims[1]);
        for (auto d : degrees(m)) ASSERT_EQ(d, 3u);
    }
    ASSERT_THROW(build_lattice(LatticeKind::hexagonal, {1, 3}, Boundary::periodic, CouplingTensor::heisenberg(1)),
                 ValidationError);
    auto open = build_lattice(LatticeKind::hexagonal, {2, 2}, Boundary::open, CouplingTensor::heisenberg(1));
    for (auto d : degrees(open)) ASSERT_LE(d, 3u);
}

TEST(build_lattice, rejects_bad_dims) {
    const auto c = CouplingTensor::heisenberg(1);
    ASSERT_THROW(build_lattice(LatticeKind::square, {4}, Boundary::open, c), ValidationError);
    ASSERT_THROW(build_lattice(LatticeKind::chain, {0}, Boundary::open, c), ValidationError);
    ASSERT_THROW(build_lattice(LatticeKind::custom, {4}, Boundary::open, c), ValidationError);
}

TEST(assign_fields, chain_of_three) {
    const Vec3 h0(0.1, 0, 0), h1(0, 0.2, 0), h2(0, 0, 0.3);
    const auto c = CouplingTensor::heisenberg(1);
    auto edges = assign_fields(3, {EdgeTerm{0, 1, c}, EdgeTerm{1, 2, c}}, {h0, h1, h2});
    ASSERT_EQ(edges[0].hi_share, h0);
    ASSERT_EQ(edges[0].hj_share, Vec3::Zero());
    ASSERT_EQ(edges[1].hi_share, h1);
    ASSERT_EQ(edges[1].hj_share, h2);
}

TEST(assign_fields, zero_fields_give_zero_shares) {
    auto m = build_lattice(LatticeKind::square, {3, 3}, Boundary::open, CouplingTensor::heisenberg(1));
    for (const auto& e : m.edges()) {
        ASSERT_EQ(e.hi_share, Vec3::Zero());
        ASSERT_EQ(e.hj_share, Vec3::Zero());
    }
}

TEST(assign_fields, each_field_housed_once) {
    const Vec3 h(0.3, -0.2, 0.5);
    for (auto kind : {LatticeKind::square, LatticeKind::hexagonal}) {
        auto m = build_lattice(kind, {2, 2}, Boundary::periodic, CouplingTensor::heisenberg(1), h);
        std::vector<int> housed(m.n(), 0);
        std::vector<Vec3> sum(m.n(), Vec3::Zero());
        for (const auto& e : m.edges()) {
            if (e.hi_share != Vec3::Zero()) ++housed[e.i];
            if (e.hj_share != Vec3::Zero()) ++housed[e.j];
            sum[e.i] += e.hi_share;
            sum[e.j] += e.hj_share;
        }
        for (std::size_t s = 0; s < m.n(); ++s) {
            ASSERT_EQ(housed[s], 1) << "site " << s;
            ASSERT_EQ(sum[s], h);
            ASSERT_EQ(m.site_fields()[s], h);
        }
    }
}

TEST(assign_fields, isolated_site_with_field) {
    const auto c = CouplingTensor::heisenberg(1);
    ASSERT_THROW(assign_fields(3, {EdgeTerm{0, 1, c}}, {Vec3::Zero(), Vec3::Zero(), Vec3(0, 0, 1)}), ValidationError);
    ASSERT_NO_THROW(assign_fields(3, {EdgeTerm{0, 1, c}}, {Vec3::Zero(), Vec3::Zero(), Vec3::Zero()}));
}

TEST(term_hamiltonian, heisenberg_spectrum) {
    const Mat4 h = term_hamiltonian(EdgeTerm{0, 1, CouplingTensor::heisenberg(1)});
    Eigen::Matrix4cd expected = Eigen::Matrix4cd::Zero();
    for (int a = 0; a < 3; ++a) expected += 0.25 * reference::kron(reference::pauli(a), reference::pauli(a));
    ASSERT_LT((h - expected).norm(), 1e-15);
    Eigen::SelfAdjointEigenSolver<Mat4> es(h);
    ASSERT_NEAR(es.eigenvalues()(0), -0.75, 1e-14);
    for (int k = 1; k < 4; ++k) ASSERT_NEAR(es.eigenvalues()(k), 0.25, 1e-14);
}

TEST(term_hamiltonian, field_only) {
    const Mat4 h = term_hamiltonian(EdgeTerm{0, 1, CouplingTensor(), Vec3(0, 0, 1), Vec3::Zero()});
    const Eigen::MatrixXcd expected = 0.5 * reference::kron(reference::pauli(2), reference::pauli(3));
    ASSERT_LT((h - expected).norm(), 1e-15);
}

TEST(term_hamiltonian, random_edges_match_kronecker_reference) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        EdgeTerm e{0, 1, reference::random_coupling(rng), reference::random_vec3(rng), reference::random_vec3(rng)};
        const Mat4 h = term_hamiltonian(e);
        ASSERT_LT((h - h.adjoint()).cwiseAbs().maxCoeff(), 1e-14);
        // Site i is the high bit of the 4x4 index, i.e. qubit 1 of a two-qubit register.
        EdgeTerm swapped = e;
        swapped.i = 1;
        swapped.j = 0;
        ASSERT_LT((h - reference::edge_operator(2, swapped)).norm(), 1e-14);
        const double bound = 2.25 * e.coupling.spectral_norm() + 0.5 * (e.hi_share.norm() + e.hj_share.norm());
        ASSERT_LE(reference::svd_norm(h), bound + 1e-12);
    }
}

TEST(TimeProfile, constant_equals_all_ones) {
    auto c = TimeProfile::constant();
    auto ones = TimeProfile::piecewise({1.0, 1.0, 1.0});
    ASSERT_TRUE(c.is_constant());
    ASSERT_TRUE(ones.is_constant());
    for (std::size_t p = 0; p < 10; ++p) ASSERT_EQ(ones.factor_for_step(p, 10), c.factor_for_step(p, 10));
}

TEST(TimeProfile, left_endpoint_segments) {
    auto prof = TimeProfile::piecewise({1.0, 2.0});
    ASSERT_FALSE(prof.is_constant());
    ASSERT_EQ(prof.factor_for_step(0, 4), 1.0);
    ASSERT_EQ(prof.factor_for_step(1, 4), 1.0);
    ASSERT_EQ(prof.factor_for_step(2, 4), 2.0);
    ASSERT_EQ(prof.factor_for_step(3, 4), 2.0);
    ASSERT_EQ(prof.factor_for_step(0, 1), 1.0);
    ASSERT_THROW(TimeProfile::piecewise({}), ValidationError);
}

TEST(LatticeKind, string_round_trip) {
    for (auto k : {LatticeKind::chain, LatticeKind::square, LatticeKind::hexagonal, LatticeKind::custom})
        ASSERT_EQ(lattice_kind_from_string(to_string(k)), k);
    ASSERT_EQ(lattice_kind_from_string("honeycomb"), LatticeKind::hexagonal);
    ASSERT_THROW(lattice_kind_from_string("kagome"), ValidationError);
    ASSERT_EQ(boundary_from_string("periodic"), Boundary::periodic);
}
