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
#include <string>
#include <vector>

#include "trottersmith/linalg.hpp"

namespace trottersmith {

/// 3x3 real coupling tensor J^{ab}, a,b in {x,y,z}.
class CouplingTensor {
   public:
    CouplingTensor() : entries_(Eigen::Matrix3d::Zero()) {}
    explicit CouplingTensor(const Eigen::Matrix3d& entries);

    static CouplingTensor heisenberg(double j) { return CouplingTensor(j * Eigen::Matrix3d::Identity()); }
    static CouplingTensor diagonal(double jx, double jy, double jz) {
        return CouplingTensor(Vec3(jx, jy, jz).asDiagonal().toDenseMatrix());
    }

    const Eigen::Matrix3d& entries() const { return entries_; }
    double operator()(int a, int b) const { return entries_(a, b); }

    /// True iff J^{ab} = J delta_{ab} within 1e-12.
    bool is_isotropic() const;
    /// The scalar J of an isotropic tensor (the (0,0) entry).
    double isotropic_value() const { return entries_(0, 0); }
    double spectral_norm() const;
    double max_abs_entry() const { return entries_.cwiseAbs().maxCoeff(); }

    bool operator==(const CouplingTensor&) const = default;

   private:
    Eigen::Matrix3d entries_;
};

/// One pair term H_ij = sum_ab J^{ab} S_i^a S_j^b + h_i.S_i + h_j.S_j with S = sigma/2.
struct EdgeTerm {
    std::size_t i = 0;
    std::size_t j = 0;
    CouplingTensor coupling;
    Vec3 hi_share = Vec3::Zero();
    Vec3 hj_share = Vec3::Zero();

    /// Isotropic coupling with identical field shares on both sites. Such a term
    /// factorizes into exp(-i tau J S_i.S_j) times a product of equal one-qubit rotations.
    bool is_heisenberg_form() const;

    bool operator==(const EdgeTerm&) const = default;
};

enum class LatticeKind { chain, square, hexagonal, custom };
enum class Boundary { open, periodic };

std::string to_string(LatticeKind kind);
std::string to_string(Boundary boundary);
LatticeKind lattice_kind_from_string(const std::string& s);
Boundary boundary_from_string(const std::string& s);

/// Piecewise-constant global scale factor applied to every coupling and field.
///
/// The table splits [0, t] into equal segments. A product-formula step p out of
/// m samples the segment containing its left endpoint p t / m, so a table with
/// exactly m entries is one factor per Trotter step.
class TimeProfile {
   public:
    TimeProfile() = default;
    static TimeProfile constant() { return {}; }
    static TimeProfile piecewise(std::vector<double> factors);

    bool is_constant() const;
    const std::vector<double>& factors() const { return factors_; }
    /// Scale factor for step `step` of a `steps`-step discretization.
    double factor_for_step(std::size_t step, std::size_t steps) const;

    bool operator==(const TimeProfile&) const = default;

   private:
    std::vector<double> factors_;  // empty means constant 1
};

/// Spin-1/2 lattice Hamiltonian as a list of pair terms.
///
/// Immutable after construction. Site indexing: chain sites are 0..n-1; square
/// sites are row-major (x + Lx*y); honeycomb sites are 2*(x + Lx*y) + s with
/// sublattice s in {0,1}.
class SpinModel {
   public:
    /// Validates site ranges, i < j ordering, and duplicate pairs.
    SpinModel(std::size_t n, std::vector<EdgeTerm> edges, LatticeKind kind = LatticeKind::custom,
              Boundary boundary = Boundary::open, std::vector<std::size_t> dims = {},
              TimeProfile profile = TimeProfile::constant());

    std::size_t n() const { return n_; }
    const std::vector<EdgeTerm>& edges() const { return edges_; }
    LatticeKind lattice_kind() const { return kind_; }
    Boundary boundary() const { return boundary_; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    const TimeProfile& profile() const { return profile_; }
    /// Max over edges of the coupling tensor's spectral norm.
    double j_max() const { return j_max_; }

    /// Max number of edges touching a single site.
    std::size_t degree() const;
    /// Sum of all edge field shares per site.
    std::vector<Vec3> site_fields() const;
    bool all_heisenberg_form() const;

    SpinModel with_profile(TimeProfile profile) const;

    bool operator==(const SpinModel&) const = default;

   private:
    std::size_t n_;
    std::vector<EdgeTerm> edges_;
    LatticeKind kind_;
    Boundary boundary_;
    std::vector<std::size_t> dims_;
    TimeProfile profile_;
    double j_max_ = 0.0;
};

/// Builds a chain (dims = {n}), square (dims = {Lx, Ly}) or honeycomb
/// (dims = {Lx, Ly} unit cells) lattice with the same coupling on every bond
/// and `field` on every site, housed via assign_fields.
///
/// A periodic dimension of length 2 would duplicate its bond and contributes it once.
SpinModel build_lattice(LatticeKind kind, const std::vector<std::size_t>& dims, Boundary boundary,
                        const CouplingTensor& coupling, const Vec3& field = Vec3::Zero());

/// Houses each site's field vector, whole, in exactly one incident edge: the
/// lowest-indexed edge in which the site is the lower endpoint, else the
/// lowest-indexed incident edge. Existing shares in `edges` are discarded.
std::vector<EdgeTerm> assign_fields(std::size_t n, std::vector<EdgeTerm> edges, const std::vector<Vec3>& fields);

/// Hermitian 4x4 H_ij on |a_i a_j> (site i on the high bit).
Mat4 term_hamiltonian(const EdgeTerm& edge);

}  // namespace trottersmith
