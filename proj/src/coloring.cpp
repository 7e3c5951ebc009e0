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

#include "trottersmith/coloring.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <map>

#include "trottersmith/error.hpp"

namespace trottersmith {

namespace {

constexpr int kUncolored = -1;

/// Groups edges by a direction label, dropping empty groups and keeping label order.
EdgeColoring from_labelled(const std::vector<std::string>& order, const std::vector<std::string>& edge_labels) {
    EdgeColoring coloring;
    for (const std::string& label : order) {
        std::vector<std::size_t> members;
        for (std::size_t e = 0; e < edge_labels.size(); ++e) {
            if (edge_labels[e] == label) members.push_back(e);
        }
        if (!members.empty()) {
            coloring.classes.push_back(std::move(members));
            coloring.labels.push_back(label);
        }
    }
    return coloring;
}

std::optional<EdgeColoring> color_chain(const SpinModel& model) {
    const std::size_t n = model.n();
    if (model.boundary() == Boundary::periodic && n % 2 == 1) {
        return std::nullopt;
    }
    std::vector<std::string> labels;
    for (const EdgeTerm& e : model.edges()) {
        // bond (s, s+1) or the wrap bond (0, n-1), which starts at s = n-1
        std::size_t s = (e.i == 0 && e.j == n - 1 && n > 2) ? n - 1 : e.i;
        labels.push_back(s % 2 == 0 ? "even" : "odd");
    }
    return from_labelled({"even", "odd"}, labels);
}

std::optional<EdgeColoring> color_square(const SpinModel& model) {
    const std::size_t lx = model.dims()[0];
    const std::size_t ly = model.dims()[1];
    const bool periodic = model.boundary() == Boundary::periodic;
    // Odd periodic sides (>= 3) close an odd cycle of same-direction bonds.
    if (periodic && ((lx > 2 && lx % 2 == 1) || (ly > 2 && ly % 2 == 1))) {
        return std::nullopt;
    }
    std::vector<std::string> labels;
    for (const EdgeTerm& e : model.edges()) {
        std::size_t xi = e.i % lx, yi = e.i / lx;
        std::size_t xj = e.j % lx, yj = e.j / lx;
        if (yi == yj) {
            // x bond starting at the site whose right neighbour is the other end
            std::size_t start = (xj == (xi + 1) % lx) ? xi : xj;
            labels.push_back(start % 2 == 0 ? "x-even" : "x-odd");
        } else {
            std::size_t start = (yj == (yi + 1) % ly) ? yi : yj;
            labels.push_back(start % 2 == 0 ? "y-even" : "y-odd");
        }
    }
    return from_labelled({"x-even", "x-odd", "y-even", "y-odd"}, labels);
}

std::optional<EdgeColoring> color_honeycomb(const SpinModel& model) {
    const std::size_t lx = model.dims()[0];
    const std::size_t ly = model.dims()[1];
    std::vector<std::string> labels;
    for (const EdgeTerm& e : model.edges()) {
        std::size_t a = e.i % 2 == 0 ? e.i : e.j;
        std::size_t b = e.i % 2 == 0 ? e.j : e.i;
        std::size_t ca = a / 2, cb = b / 2;
        std::size_t xa = ca % lx, ya = ca / lx;
        std::size_t xb = cb % lx, yb = cb / lx;
        if (ca == cb) {
            labels.push_back("a");
        } else if (ya == yb && xb == (xa + lx - 1) % lx) {
            labels.push_back("b");
        } else if (xa == xb && yb == (ya + ly - 1) % ly) {
            labels.push_back("c");
        } else {
            return std::nullopt;
        }
    }
    return from_labelled({"a", "b", "c"}, labels);
}

/// Misra-Gries state: per-edge colors plus incidence lists.
class MisraGries {
   public:
    explicit MisraGries(const SpinModel& model)
        : edges_(model.edges()), incident_(model.n()), color_(model.edges().size(), kUncolored) {
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            incident_[edges_[e].i].push_back(e);
            incident_[edges_[e].j].push_back(e);
        }
        palette_ = static_cast<int>(model.degree()) + 1;
    }

    std::vector<int> run() {
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            color_edge(e);
        }
        return color_;
    }

   private:
    std::size_t other(std::size_t e, std::size_t v) const { return edges_[e].i == v ? edges_[e].j : edges_[e].i; }

    std::size_t edge_between(std::size_t u, std::size_t v) const {
        for (std::size_t e : incident_[u]) {
            if (other(e, u) == v) return e;
        }
        assert(false);
        return 0;
    }

    bool is_free(std::size_t v, int c) const {
        return std::none_of(incident_[v].begin(), incident_[v].end(), [&](std::size_t e) { return color_[e] == c; });
    }

    int free_color(std::size_t v) const {
        for (int c = 0; c < palette_; ++c) {
            if (is_free(v, c)) return c;
        }
        throw Error("misra-gries: no free color (palette exhausted)");
    }

    /// Maximal fan of u starting at v: colored edges (u, f_{k+1}) whose color is free on f_k.
    std::vector<std::size_t> build_fan(std::size_t u, std::size_t v) const {
        std::vector<std::size_t> fan{v};
        std::vector<bool> used(incident_.size(), false);
        used[v] = true;
        bool extended = true;
        while (extended) {
            extended = false;
            for (std::size_t e : incident_[u]) {
                std::size_t w = other(e, u);
                if (used[w] || color_[e] == kUncolored) continue;
                if (is_free(fan.back(), color_[e])) {
                    fan.push_back(w);
                    used[w] = true;
                    extended = true;
                    break;
                }
            }
        }
        return fan;
    }

    /// Swaps colors c and d along the maximal c/d alternating path starting at u.
    void invert_path(std::size_t u, int c, int d) {
        std::vector<std::size_t> path;
        std::size_t v = u;
        int want = d;
        std::size_t prev_edge = std::numeric_limits<std::size_t>::max();
        while (true) {
            std::size_t next = std::numeric_limits<std::size_t>::max();
            for (std::size_t e : incident_[v]) {
                if (e != prev_edge && color_[e] == want) {
                    next = e;
                    break;
                }
            }
            if (next == std::numeric_limits<std::size_t>::max()) break;
            path.push_back(next);
            prev_edge = next;
            v = other(next, v);
            want = want == d ? c : d;
        }
        for (std::size_t e : path) {
            color_[e] = color_[e] == c ? d : c;
        }
    }

    bool is_fan(std::size_t u, const std::vector<std::size_t>& fan, std::size_t length) const {
        for (std::size_t k = 0; k + 1 < length; ++k) {
            int c = color_[edge_between(u, fan[k + 1])];
            if (c == kUncolored || !is_free(fan[k], c)) return false;
        }
        return true;
    }

    void color_edge(std::size_t edge) {
        const std::size_t u = edges_[edge].i;
        const std::size_t v = edges_[edge].j;
        std::vector<std::size_t> fan = build_fan(u, v);
        const int c = free_color(u);
        const int d = free_color(fan.back());
        if (c != d) {
            invert_path(u, c, d);
        }
        // Rotate the longest-needed prefix of the fan ending at a vertex where d is free.
        std::size_t w = fan.size();
        for (std::size_t k = 0; k < fan.size(); ++k) {
            if (is_free(fan[k], d) && is_fan(u, fan, k + 1)) {
                w = k;
                break;
            }
        }
        if (w == fan.size()) {
            throw Error("misra-gries: no rotation point found");
        }
        for (std::size_t k = 0; k < w; ++k) {
            std::size_t e_here = edge_between(u, fan[k]);
            std::size_t e_next = edge_between(u, fan[k + 1]);
            color_[e_here] = color_[e_next];
        }
        color_[edge_between(u, fan[w])] = d;
    }

    const std::vector<EdgeTerm>& edges_;
    std::vector<std::vector<std::size_t>> incident_;
    std::vector<int> color_;
    int palette_ = 1;
};

}  // namespace

std::optional<EdgeColoring> color_builtin(const SpinModel& model) {
    switch (model.lattice_kind()) {
        case LatticeKind::chain:
            return color_chain(model);
        case LatticeKind::square:
            if (model.dims().size() != 2) return std::nullopt;
            return color_square(model);
        case LatticeKind::hexagonal:
            if (model.dims().size() != 2) return std::nullopt;
            return color_honeycomb(model);
        case LatticeKind::custom:
            return std::nullopt;
    }
    return std::nullopt;
}

EdgeColoring color_general(const SpinModel& model) {
    std::vector<int> colors = MisraGries(model).run();
    std::map<int, std::vector<std::size_t>> by_color;
    for (std::size_t e = 0; e < colors.size(); ++e) {
        by_color[colors[e]].push_back(e);
    }
    std::vector<std::vector<std::size_t>> classes;
    for (auto& [c, members] : by_color) {
        classes.push_back(std::move(members));
    }
    // Deterministic order: by lowest edge index.
    std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    EdgeColoring coloring;
    coloring.classes = std::move(classes);
    for (std::size_t k = 0; k < coloring.classes.size(); ++k) {
        coloring.labels.push_back("c" + std::to_string(k));
    }
    return coloring;
}

EdgeColoring color(const SpinModel& model) {
    if (auto builtin = color_builtin(model)) {
        return *builtin;
    }
    return color_general(model);
}

std::optional<ColoringViolation> validate(const EdgeColoring& coloring, const SpinModel& model) {
    using Kind = ColoringViolation::Kind;
    const auto& edges = model.edges();
    auto name = [&](std::size_t e) {
        return "edge " + std::to_string(e) + " (" + std::to_string(edges[e].i) + "," + std::to_string(edges[e].j) + ")";
    };
    if (coloring.num_colors() > model.degree() + 1) {
        return ColoringViolation{Kind::too_many_colors, 0, 0,
                                 "coloring uses " + std::to_string(coloring.num_colors()) + " colors, more than deg+1 = " +
                                     std::to_string(model.degree() + 1)};
    }
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> owner(edges.size(), kNone);
    for (std::size_t k = 0; k < coloring.classes.size(); ++k) {
        std::map<std::size_t, std::size_t> site_user;
        for (std::size_t e : coloring.classes[k]) {
            if (e >= edges.size()) {
                return ColoringViolation{Kind::bad_edge_index, e, 0,
                                         "class " + std::to_string(k) + " names edge index " + std::to_string(e) +
                                             " but the model has " + std::to_string(edges.size()) + " edges"};
            }
            if (owner[e] != kNone) {
                return ColoringViolation{Kind::duplicate_edge, e, 0, name(e) + " appears in more than one class"};
            }
            owner[e] = k;
            for (std::size_t site : {edges[e].i, edges[e].j}) {
                auto [it, inserted] = site_user.emplace(site, e);
                if (!inserted) {
                    return ColoringViolation{Kind::shared_vertex, it->second, e,
                                             name(it->second) + " and " + name(e) + " share site " +
                                                 std::to_string(site) + " in class " + std::to_string(k)};
                }
            }
        }
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (owner[e] == kNone) {
            return ColoringViolation{Kind::uncovered_edge, e, 0, "uncovered edge: " + name(e)};
        }
    }
    return std::nullopt;
}

}  // namespace trottersmith
