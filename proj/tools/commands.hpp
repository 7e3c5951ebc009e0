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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "trottersmith/model.hpp"

namespace trottersmith::cli {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

struct VerifyRow {
    std::int64_t m = 0;
    double error = 0.0;
    double bound = 0.0;  // NaN for orders without an explicit bound
};

struct VerifyResult {
    int order = 1;
    std::vector<VerifyRow> rows;
    /// Least-squares slope of log(error) against log(m).
    double slope = 0.0;

    /// CSV with header m,error,bound,order and 17 significant digits.
    std::string csv() const;
};

/// Sweeps m over `grid`, measuring the oracle Trotter error at each point. Points
/// run on up to `jobs` threads; rows keep grid order.
VerifyResult run_verify(const SpinModel& model, int order, double t, const std::vector<std::int64_t>& grid,
                        std::uint64_t seed = kDefaultSeed, int jobs = 1);

/// Least-squares slope of log(y) against log(x).
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Parses argv and runs the selected subcommand. Returns the process exit code:
/// 0 success, 2 validation failure, 1 internal error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace trottersmith::cli
