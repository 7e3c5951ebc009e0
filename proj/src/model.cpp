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
#include <cmath>
#include <limits>
#include <set>
#include <utility>

#include "trottersmith/error.hpp"

namespace trottersmith {

namespace {

constexpr double kIsotropyTolerance = 1e-12;

std::string pair_name(std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace

CouplingTensor::CouplingTensor(const Eigen::Matrix3d& entries) : entries_(entries) {
    if (!entries_.allFinite()) {
        throw ValidationError("coupling tensor has non-finite entries");
    }
}

bool CouplingTensor::is_isotropic() const {
    double j = entries_(0, 0);
    return (entries_ - j * Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() <= kIsotropyTolerance;
}

double CouplingTensor::spectral_norm() const {
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(entries_);
    return svd.singularValues()(0);
}

bool EdgeTerm::is_heisenberg_form() const {
    return coupling.is_isotropic() && (hi_share - hj_share).cwiseAbs().maxCoeff() <= kIsotropyTolerance;
}

std::string to_string(LatticeKind kind) {
    switch (kind) {
        case LatticeKind::chain:
            return "chain";
        case LatticeKind::square:
            return "square";
        case LatticeKind::hexagonal:
            return "hexagonal";
        case LatticeKind::custom:
            return "custom";
    }
    return "custom";
}

std::string to_string(Boundary boundary) { return boundary == Boundary::open ? "open" : "periodic"; }

LatticeKind lattice_kind_from_string(const std::string& s) {
    if (s == "chain") return LatticeKind::chain;
    if (s == "square") return LatticeKind::square;
    if (s == "hexagonal" || s == "honeycomb") return LatticeKind::hexagonal;
    if (s == "custom") return LatticeKind::custom;
    throw ValidationError("unknown lattice kind '" + s + "'");
}

Boundary boundary_from_string(const std::string& s) {
    if (s == "open") return Boundary::open;
    if (s == "periodic") return Boundary::periodic;
    throw ValidationError("unknown boundary '" + s + "'");
}

TimeProfile TimeProfile::piecewise(std::vector<double> factors) {
    if (factors.empty()) {
        throw ValidationError("piecewise time profile needs at least one factor");
    }
    for (double f : factors) {
        if (!std::isfinite(f)) {
            throw ValidationError("time profile factor is not finite");
        }
    }
    TimeProfile profile;
    profile.factors_ = std::move(factors);
    return profile;
}

bool TimeProfile::is_constant() const {
    return std::all_of(factors_.begin(), factors_.end(), [](double f) { return f == 1.0; });
}

double TimeProfile::factor_for_step(std::size_t step, std::size_t steps) const {
    if (factors_.empty()) {
        return 1.0;
    }
    // Integer arithmetic keeps segment lookup exact.
    std::size_t segment = static_cast<std::size_t>((static_cast<unsigned __int128>(step) * factors_.size()) / steps);
    return factors_[std::min(segment, factors_.size() - 1)];
}

SpinModel::SpinModel(std::size_t n, std::vector<EdgeTerm> edges, LatticeKind kind, Boundary boundary,
                     std::vector<std::size_t> dims, TimeProfile profile)
    : n_(n),
      edges_(std::move(edges)),
      kind_(kind),
      boundary_(boundary),
      dims_(std::move(dims)),
      profile_(std::move(profile)) {
    if (n_ == 0) {
        throw ValidationError("model needs at least one site");
    }
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const EdgeTerm& e : edges_) {
        if (e.i >= e.j) {
            throw ValidationError("edge " + pair_name(e.i, e.j) + " must satisfy i < j");
        }
        if (e.j >= n_) {
            throw ValidationError("edge " + pair_name(e.i, e.j) + " references a site >= n=" + std::to_string(n_));
        }
        if (!seen.emplace(e.i, e.j).second) {
            throw ValidationError("duplicate edge " + pair_name(e.i, e.j));
        }
        if (!e.hi_share.allFinite() || !e.hj_share.allFinite()) {
            throw ValidationError("edge " + pair_name(e.i, e.j) + " has non-finite field entries");
        }
        j_max_ = std::max(j_max_, e.coupling.spectral_norm());
    }
}

std::size_t SpinModel::degree() const {
    std::vector<std::size_t> deg(n_, 0);
    for (const EdgeTerm& e : edges_) {
        ++deg[e.i];
        ++deg[e.j];
    }
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

std::vector<Vec3> SpinModel::site_fields() const {
    std::vector<Vec3> fields(n_, Vec3::Zero());
    for (const EdgeTerm& e : edges_) {
        fields[e.i] += e.hi_share;
        fields[e.j] += e.hj_share;
    }
    return fields;
}

bool SpinModel::all_heisenberg_form() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const EdgeTerm& e) { return e.is_heisenberg_form(); });
}

SpinModel SpinModel::with_profile(TimeProfile profile) const {
    return SpinModel(n_, edges_, kind_, boundary_, dims_, std::move(profile));
}

std::vector<EdgeTerm> assign_fields(std::size_t n, std::vector<EdgeTerm> edges, const std::vector<Vec3>& fields) {
    if (fields.size() != n) {
        throw ValidationError("expected " + std::to_string(n) + " field vectors, got " + std::to_string(fields.size()));
    }
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> as_lower(n, kNone);
    std::vector<std::size_t> any_edge(n, kNone);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        edges[e].hi_share.setZero();
        edges[e].hj_share.setZero();
        std::size_t i = edges[e].i;
        std::size_t j = edges[e].j;
        if (i >= n || j >= n) {
            throw ValidationError("edge " + pair_name(i, j) + " references a site >= n=" + std::to_string(n));
        }
        if (as_lower[i] == kNone) as_lower[i] = e;
        if (any_edge[i] == kNone) any_edge[i] = e;
        if (any_edge[j] == kNone) any_edge[j] = e;
    }
    for (std::size_t site = 0; site < n; ++site) {
        if (!fields[site].allFinite()) {
            throw ValidationError("field on site " + std::to_string(site) + " is not finite");
        }
        if (fields[site].isZero(0.0)) {
            continue;
        }
        std::size_t e = as_lower[site] != kNone ? as_lower[site] : any_edge[site];
        if (e == kNone) {
            throw ValidationError("site " + std::to_string(site) + " carries a field but touches no edge");
        }
        if (edges[e].i == site) {
            edges[e].hi_share = fields[site];
        } else {
            edges[e].hj_share = fields[site];
        }
    }
    return edges;
}

namespace {

struct BondList {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    std::vector<EdgeTerm> edges;

    void add(std::size_t a, std::size_t b, const CouplingTensor& coupling) {
        if (a == b) return;
        std::size_t i = std::min(a, b);
        std::size_t j = std::max(a, b);
        if (!seen.emplace(i, j).second) return;
        // Coupling is stored for the ordered pair (i, j); flip it for (b, a).
        Eigen::Matrix3d entries = coupling.entries();
        if (a > b) entries.transposeInPlace();
        edges.push_back(EdgeTerm{i, j, CouplingTensor(entries), Vec3::Zero(), Vec3::Zero()});
    }
};

void require_positive(const std::vector<std::size_t>& dims) {
    for (std::size_t d : dims) {
        if (d == 0) throw ValidationError("lattice dimensions must be positive");
    }
}

}  // namespace

SpinModel build_lattice(LatticeKind kind, const std::vector<std::size_t>& dims, Boundary boundary,
                        const CouplingTensor& coupling, const Vec3& field) {
    require_positive(dims);
    const bool periodic = boundary == Boundary::periodic;
    BondList bonds;
    std::size_t n = 0;
    switch (kind) {
        case LatticeKind::chain: {
            if (dims.size() != 1) throw ValidationError("chain lattice takes one dimension");
            n = dims[0];
            if (periodic && n < 3) throw ValidationError("periodic chain requires n >= 3");
            for (std::size_t s = 0; s + 1 < n; ++s) bonds.add(s, s + 1, coupling);
            if (periodic) bonds.add(n - 1, 0, coupling);
            break;
        }
        case LatticeKind::square: {
            if (dims.size() != 2) throw ValidationError("square lattice takes two dimensions");
            const std::size_t lx = dims[0];
            const std::size_t ly = dims[1];
            n = lx * ly;
            auto site = [lx](std::size_t x, std::size_t y) { return x + lx * y; };
            for (std::size_t y = 0; y < ly; ++y) {
                for (std::size_t x = 0; x < lx; ++x) {
                    if (x + 1 < lx) {
                        bonds.add(site(x, y), site(x + 1, y), coupling);
                    } else if (periodic && lx > 1) {
                        bonds.add(site(x, y), site(0, y), coupling);
                    }
                }
            }
            for (std::size_t y = 0; y < ly; ++y) {
                for (std::size_t x = 0; x < lx; ++x) {
                    if (y + 1 < ly) {
                        bonds.add(site(x, y), site(x, y + 1), coupling);
                    } else if (periodic && ly > 1) {
                        bonds.add(site(x, y), site(x, 0), coupling);
                    }
                }
            }
            break;
        }
        case LatticeKind::hexagonal: {
            if (dims.size() != 2) throw ValidationError("hexagonal lattice takes two dimensions (unit cells)");
            const std::size_t lx = dims[0];
            const std::size_t ly = dims[1];
            if (periodic && (lx < 2 || ly < 2)) {
                throw ValidationError("periodic honeycomb needs at least 2x2 unit cells");
            }
            n = 2 * lx * ly;
            auto site = [lx](std::size_t x, std::size_t y, std::size_t sub) { return 2 * (x + lx * y) + sub; };
            // Brick-wall honeycomb: A(x,y) bonds to B(x,y), B(x-1,y) and B(x,y-1).
            for (int orientation = 0; orientation < 3; ++orientation) {
                for (std::size_t y = 0; y < ly; ++y) {
                    for (std::size_t x = 0; x < lx; ++x) {
                        std::size_t a = site(x, y, 0);
                        if (orientation == 0) {
                            bonds.add(a, site(x, y, 1), coupling);
                        } else if (orientation == 1) {
                            if (x > 0) {
                                bonds.add(a, site(x - 1, y, 1), coupling);
                            } else if (periodic) {
                                bonds.add(a, site(lx - 1, y, 1), coupling);
                            }
                        } else {
                            if (y > 0) {
                                bonds.add(a, site(x, y - 1, 1), coupling);
                            } else if (periodic) {
                                bonds.add(a, site(x, ly - 1, 1), coupling);
                            }
                        }
                    }
                }
            }
            break;
        }
        case LatticeKind::custom:
            throw ValidationError("custom lattices are built from an explicit edge list");
    }
    std::vector<Vec3> fields(n, field);
    if (bonds.edges.empty() && !field.isZero(0.0)) {
        throw ValidationError("lattice has no bonds to house the site fields");
    }
    auto edges = assign_fields(n, std::move(bonds.edges), fields);
    return SpinModel(n, std::move(edges), kind, boundary, dims);
}

Mat4 term_hamiltonian(const EdgeTerm& edge) {
    Mat4 h = Mat4::Zero();
    const Mat2 id = Mat2::Identity();
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            double j = edge.coupling(a, b);
            if (j != 0.0) {
                h += (0.25 * j) * kron(pauli::by_axis(a), pauli::by_axis(b));
            }
        }
        if (edge.hi_share(a) != 0.0) h += (0.5 * edge.hi_share(a)) * kron(pauli::by_axis(a), id);
        if (edge.hj_share(a) != 0.0) h += (0.5 * edge.hj_share(a)) * kron(id, pauli::by_axis(a));
    }
    return h;
}

}  // namespace trottersmith
