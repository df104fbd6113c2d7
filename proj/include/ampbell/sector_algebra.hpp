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

#ifndef AMPBELL_SECTOR_ALGEBRA_HPP
#define AMPBELL_SECTOR_ALGEBRA_HPP

#include <cstddef>

#include <Eigen/Dense>

namespace ampbell::sector {

// Dense operators restricted to the total-photon-number sector N. Basis
// vector k (0 <= k <= N) is |k, N-k>: k photons in mode a, N-k in mode b.
// Every two-mode operator used here conserves N, so these blocks are exact.

using Matrix = Eigen::MatrixXcd;

/// a^dag b restricted to sector N.
Matrix raise_a(std::size_t N);

/// J0 = (a^dag a + b^dag b)/2.
Matrix j0(std::size_t N);
/// J1 = (a^dag b + b^dag a)/2.
Matrix j1(std::size_t N);
/// J2 = -i(a^dag b - b^dag a)/2.
Matrix j2(std::size_t N);
/// J3 = (a^dag a - b^dag b)/2.
Matrix j3(std::size_t N);

/// exp(i * angle * H) for Hermitian H, via the eigendecomposition of H.
Matrix exp_i(const Matrix& hermitian, double angle);

Matrix commutator(const Matrix& x, const Matrix& y);

/// Largest elementwise modulus of x - y.
double max_abs_diff(const Matrix& x, const Matrix& y);

}  // namespace ampbell::sector

#endif
