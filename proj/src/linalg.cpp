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

#include "trottersmith/linalg.hpp"

#include <cmath>

namespace trottersmith {

namespace pauli {
Mat2 identity() { return Mat2::Identity(); }
Mat2 x() {
    Mat2 m;
    m << 0, 1, 1, 0;
    return m;
}
Mat2 y() {
    Mat2 m;
    m << 0, Complex(0, -1), Complex(0, 1), 0;
    return m;
}
Mat2 z() {
    Mat2 m;
    m << 1, 0, 0, -1;
    return m;
}
Mat2 by_axis(int axis) {
    switch (axis) {
        case 0:
            return x();
        case 1:
            return y();
        default:
            return z();
    }
}
}  // namespace pauli

Mat4 kron(const Mat2& first, const Mat2& second) {
    Mat4 out;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            out.block<2, 2>(2 * a, 2 * b) = first(a, b) * second;
        }
    }
    return out;
}

Eigen::MatrixXcd expm_hermitian(const Eigen::MatrixXcd& hermitian, double t) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian);
    return expm_from_eigen(solver.eigenvectors(), solver.eigenvalues(), t);
}

Eigen::MatrixXcd expm_from_eigen(const Eigen::MatrixXcd& vectors, const Eigen::VectorXd& values, double t) {
    Eigen::VectorXcd phases(values.size());
    for (Eigen::Index k = 0; k < values.size(); ++k) {
        phases(k) = std::polar(1.0, -t * values(k));
    }
    return vectors * phases.asDiagonal() * vectors.adjoint();
}

Complex phase_alignment(const Eigen::MatrixXcd& actual, const Eigen::MatrixXcd& target) {
    Complex overlap = (target.adjoint() * actual).trace();
    if (std::abs(overlap) < 1e-300) {
        return {1.0, 0.0};
    }
    return overlap / std::abs(overlap);
}

double phase_aligned_distance(const Eigen::MatrixXcd& actual, const Eigen::MatrixXcd& target) {
    // actual ~ e^{i phi} target
    Complex phase = phase_alignment(actual, target);
    return spectral_norm_svd(actual - phase * target);
}

double unitarity_deviation(const Eigen::MatrixXcd& u) {
    Eigen::MatrixXcd diff = u.adjoint() * u - Eigen::MatrixXcd::Identity(u.cols(), u.cols());
    return diff.cwiseAbs().maxCoeff();
}

double spectral_norm_svd(const Eigen::MatrixXcd& a) {
    if (a.size() == 0) {
        return 0.0;
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
    return svd.singularValues()(0);
}

}  // namespace trottersmith
