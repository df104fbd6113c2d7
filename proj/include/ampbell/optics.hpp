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

#ifndef AMPBELL_OPTICS_HPP
#define AMPBELL_OPTICS_HPP

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "ampbell/fock.hpp"

namespace ampbell {

/// Single-mode squeezer S(r, theta) = exp[(r/2)(e^{-i theta} c^2 - e^{i theta} c^dag^2)].
struct SqueezeParams {
    /// Throws DomainError for r < 0 or non-finite arguments. theta is
    /// reduced to [0, 2 pi).
    explicit SqueezeParams(double r, double theta = 0.0);

    double r;
    double theta;
};

enum class Mode { a, b };

/// S(r, theta)|0>. Only even photon numbers are populated. Amplitudes come
/// from the ratio recurrence C_{n+1}/C_n = -e^{i theta} tanh r sqrt(2n+1)/sqrt(2n+2),
/// switching to log-magnitudes for r > 3.
SingleModeState squeezed_vacuum(const SqueezeParams& p, ModeCutoff cutoff);

/// S(r, theta)|1>, supported on odd photon numbers:
/// amps[2m+1] = sech r * sqrt(2m+1) * C_m.
SingleModeState squeezed_one_photon(const SqueezeParams& p, ModeCutoff cutoff);

/// Largest input photon number the column recurrence is trusted for. Rounding
/// error grows roughly geometrically with n; at n = 16 and r = 1.5 it is still
/// below 1e-13 relative.
inline constexpr std::size_t kMaxSqueezeInput = 16;

/// Matrix elements <k|S(r, theta)|n> for 0 <= k <= n_max and
/// 0 <= n <= min(input_max, n_max), built column by column with the
/// three-term squeezing recurrence. Truncation only drops rows k > n_max.
/// Throws DomainError when input_max > kMaxSqueezeInput.
Eigen::MatrixXcd squeeze_matrix(const SqueezeParams& p, ModeCutoff cutoff,
                                std::size_t input_max = kMaxSqueezeInput);

/// (S_a (x) S_b)|psi>, keeping the input cutoff. The input must have no
/// support above kMaxSqueezeInput photons in either mode.
TwoModeState squeeze_modes(const TwoModeState& s, const SqueezeParams& pa,
                           const SqueezeParams& pb);

/// 50:50 beam splitter B = exp[i (pi/4)(a^dag b + b^dag a)] on sector N,
/// columns indexed by input |k, N-k>. Built from the Heisenberg images
/// B a^dag B^dag = (a^dag + i b^dag)/sqrt2 and B b^dag B^dag = (i a^dag + b^dag)/sqrt2
/// one sector at a time.
Eigen::MatrixXcd beam_splitter_sector(std::size_t N);

/// Applies B sector by sector. The output cutoff is the larger of the input
/// cutoff and the highest occupied photon-number sector, so no amplitude is
/// dropped and the map is exactly unitary.
TwoModeState beam_splitter(const TwoModeState& s);

/// Same as beam_splitter on each input, sharing the sector matrices across
/// the batch. Inputs must share a cutoff; outputs share one too.
std::vector<TwoModeState> beam_splitter(std::span<const TwoModeState> batch);

/// exp(i phi_a a^dag a + i phi_b b^dag b).
TwoModeState phase_shift(const TwoModeState& s, double phi_a, double phi_b);

/// Pi = (-1)^{photons in `mode`} applied to the state.
TwoModeState apply_parity(const TwoModeState& s, Mode mode);

/// <Pi> on the retained amplitudes. Callers bound the truncation error with
/// tail_mass(s).
double parity_expectation(const TwoModeState& s, Mode mode);

struct JMoments {
    double j3;     ///< <J3>
    double j3_sq;  ///< <J3^2>
    double j0;     ///< <J0>

    double j3_variance() const noexcept { return j3_sq - j3 * j3; }
};

JMoments j_moments(const TwoModeState& s);

/// exp(i pi J2): |n>_a|m>_b -> (-1)^n |m>_a|n>_b.
TwoModeState mode_swap_with_sign(const TwoModeState& s);

}  // namespace ampbell

#endif
