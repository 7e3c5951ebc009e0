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

#include <stdexcept>
#include <string>

namespace trottersmith {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Input rejected by a precondition check (bad dims, non-unitary matrix,
/// invalid coloring, ...). The CLI maps this to exit code 2.
class ValidationError : public Error {
   public:
    using Error::Error;
};

/// A dense 2^n object was requested above the configured oracle size cap.
class OracleLimitError : public Error {
   public:
    OracleLimitError(int n, int limit)
        : Error("oracle size limit exceeded: n=" + std::to_string(n) + " > limit=" + std::to_string(limit) +
                " (set TROTTERSMITH_ORACLE_LIMIT to raise it)"),
          n_(n),
          limit_(limit) {}

    int n() const { return n_; }
    int limit() const { return limit_; }

   private:
    int n_;
    int limit_;
};

/// An iterative method hit its iteration cap before reaching tolerance.
class ConvergenceError : public Error {
   public:
    using Error::Error;
};

}  // namespace trottersmith
