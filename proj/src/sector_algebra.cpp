// Copyright 2026 The ampbell Authors
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

#include "ampbell/sector_algebra.hpp"

#include <cmath>
#include <complex>

namespace ampbell::sector {

Matrix raise_a(std::size_t N) {
    Matrix m = Matrix::Zero(N + 1, N + 1);
    // a^dag b |k, N-k> = sqrt((k+1)(N-k)) |k+1, N-k-1>
    for (std::size_t k = 0; k < N; ++k) {
        m(k + 1, k) = std::sqrt(static_cast<double>((k + 1) * (N - k)));
    }
    return m;
}

Matrix j0(std::size_t N) {
    return Matrix::Identity(N + 1, N + 1) * (0.5 * static_cast<double>(N));
}

Matrix j1(std::size_t N) {
    const Matrix up = raise_a(N);
    return 0.5 * (up + up.adjoint());
}

Matrix j2(std::size_t N) {
    const Matrix up = raise_a(N);
    return std::complex<double>(0.0, -0.5) * (up - up.adjoint());
}

Matrix j3(std::size_t N) {
    Matrix m = Matrix::Zero(N + 1, N + 1);
    for (std::size_t k = 0; k <= N; ++k) {
        m(k, k) = 0.5 * (static_cast<double>(k) - static_cast<double>(N - k));
    }
    return m;
}

Matrix exp_i(const Matrix& hermitian, double angle) {
    Eigen::SelfAdjointEigenSolver<Matrix> eig(hermitian);
    const Eigen::VectorXd& lambda = eig.eigenvalues();
    Eigen::VectorXcd phases(lambda.size());
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
        phases(i) = std::polar(1.0, angle * lambda(i));
    }
    const Matrix& v = eig.eigenvectors();
    return v * phases.asDiagonal() * v.adjoint();
}

Matrix commutator(const Matrix& x, const Matrix& y) { return x * y - y * x; }

double max_abs_diff(const Matrix& x, const Matrix& y) {
    return (x - y).cwiseAbs().maxCoeff();
}

}  // namespace ampbell::sector
