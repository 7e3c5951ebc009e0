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

#include <string>

#include <nlohmann/json.hpp>

#include "trottersmith/coloring.hpp"
#include "trottersmith/model.hpp"
#include "trottersmith/resources.hpp"
#include "trottersmith/synth.hpp"
#include "trottersmith/trotter.hpp"

namespace trottersmith::io {

using nlohmann::json;

// Model file: {n, lattice, boundary, dims, edges: [{i, j, J, hi, hj}], profile}.
// Doubles are written in shortest round-trip form, so reading back is exact.
json model_to_json(const SpinModel& model);
SpinModel model_from_json(const json& doc);

json coloring_to_json(const EdgeColoring& coloring, const SpinModel& model);
EdgeColoring coloring_from_json(const json& doc);

json plan_to_json(const StepPlan& plan, std::size_t num_colors);
json report_to_json(const ResourceReport& report);

json circuit_to_json(const Circuit& circuit);
Circuit circuit_from_json(const json& doc);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

/// "%.17g" with the C locale.
std::string format_double(double value);

}  // namespace trottersmith::io
