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
#include <optional>
#include <string>
#include <vector>

#include "trottersmith/model.hpp"

namespace trottersmith {

/// Partition of a model's edges into K classes of vertex-disjoint edges.
/// Every class's pair terms commute, so exp(-i tau H_k) factorizes per edge.
struct EdgeColoring {
    /// Edge indices (into SpinModel::edges()) per class, each sorted ascending.
    std::vector<std::vector<std::size_t>> classes;
    /// One label per class ("even", "x-odd", "b", "c3", ...).
    std::vector<std::string> labels;

    std::size_t num_colors() const { return classes.size(); }

    bool operator==(const EdgeColoring&) const = default;
};

/// Direction-based coloring for the built-in lattices. Returns nullopt when the
/// geometry admits no direction coloring with K = z (odd periodic chain, odd
/// periodic square side) and the caller has to fall back to color_general.
std::optional<EdgeColoring> color_builtin(const SpinModel& model);

/// Misra-Gries edge coloring; uses at most deg(G) + 1 colors on any simple graph.
EdgeColoring color_general(const SpinModel& model);

/// color_builtin when applicable, color_general otherwise.
EdgeColoring color(const SpinModel& model);

struct ColoringViolation {
    enum class Kind { shared_vertex, uncovered_edge, duplicate_edge, bad_edge_index, too_many_colors };
    Kind kind;
    std::size_t edge_a = 0;
    std::size_t edge_b = 0;
    std::string message;
};

/// Checks the coloring invariants; returns the first violation found, nullopt when valid.
std::optional<ColoringViolation> validate(const EdgeColoring& coloring, const SpinModel& model);

}  // namespace trottersmith
