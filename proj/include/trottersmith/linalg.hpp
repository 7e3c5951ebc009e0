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

#include <complex>

#include <Eigen/Dense>

namespace trottersmith {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Vec3 = Eigen::Vector3d;

/// Dense 2^n x 2^n operator. Qubit q is bit q of the basis index.
using DenseOperator = Eigen::MatrixXcd;

namespace pauli {
Mat2 identity();
Mat2 x();
Mat2 y();
Mat2 z();
/// Pauli matrix by Cartesian index 0,1,2 -> x,y,z.
Mat2 by_axis(int axis);
}  // namespace pauli

/// Kronecker product of two one-qubit operators. `first` acts on the high
/// bit of the two-qubit index (|a b> -> 2a + b).
Mat4 kron(const Mat2& first, const Mat2& second);

/// exp(-i t H) for Hermitian H via eigendecomposition.
Eigen::MatrixXcd expm_hermitian(const Eigen::MatrixXcd& hermitian, double t);

/// Same, using a precomputed decomposition H = V diag(w) V^dagger.
Eigen::MatrixXcd expm_from_eigen(const Eigen::MatrixXcd& vectors, const Eigen::VectorXd& values, double t);

/// Global phase e^{i phi} with phi = arg tr(target^dagger actual); returns 1 if the trace vanishes.
Complex phase_alignment(const Eigen::MatrixXcd& actual, const Eigen::MatrixXcd& target);

/// Spectral-norm distance between `actual` and `target` after global phase alignment.
double phase_aligned_distance(const Eigen::MatrixXcd& actual, const Eigen::MatrixXcd& target);

/// Largest entrywise deviation of U^dagger U from the identity.
double unitarity_deviation(const Eigen::MatrixXcd& u);

/// Exact largest singular value through a full SVD. Used for small matrices and as a cross-check.
double spectral_norm_svd(const Eigen::MatrixXcd& a);

}  // namespace trottersmith
