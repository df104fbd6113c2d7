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

#ifndef AMPBELL_ESTIMATION_HPP
#define AMPBELL_ESTIMATION_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ampbell {

// Monte Carlo parity readout. Each measurement shot yields +1 or -1 with
// <Pi> = S(r, phi); a trial averages `shots` outcomes and inverts the mean
// on the monotone branch around phi = 0.
//
// Random numbers: std::mt19937_64 (its output sequence is fixed by the C++
// standard). Uniform deviates are the top 53 bits of each draw scaled by
// 2^-53, so no implementation-defined distribution is involved. Trial i of a
// run with master seed s uses the seed splitmix64(s + (i + 1) * 0x9E3779B97F4A7C15).

struct OutcomeProbabilities {
    double p_plus;
    double p_minus;
};

/// p(+1) = (1 + S)/2, p(-1) = (1 - S)/2. Throws DomainError for |S| > 1 + 1e-12.
OutcomeProbabilities outcome_probabilities(double signal);

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t trial);

/// Mean of `shots` sampled parity outcomes at S(r, phi).
double sample_parities(double r, double phi, std::size_t shots, std::uint64_t seed);

/// Position of the first maximum of S(r, .) on (0, pi]. The estimator works on
/// (-branch_half_width, branch_half_width), where S is strictly increasing.
double branch_half_width(double r);

struct Inversion {
    double phi;
    bool clamped;  ///< mean parity was outside the branch's signal range
};

/// Solves S(r, phi) = mean_parity on the central branch by bisection.
Inversion invert_estimate(double mean_parity, double r);

struct EstimationRun {
    double r;
    double phi_true;
    std::size_t shots_per_trial;
    std::size_t trials;
    std::uint64_t seed;
    std::vector<double> estimates;
    std::vector<double> mean_parities;
    std::vector<bool> clamped;
    std::size_t clamped_trials;
    double empirical_rmse;
    double predicted_rmse;  ///< delta_phi_parity(r, phi_true)/sqrt(shots)
    bool rmse_degenerate;   ///< fewer than two trials
    bool low_shots;         ///< below 100 shots the linear error model is unreliable
};

/// Throws DomainError when phi_true is outside the central branch or shots
/// or trials is zero.
EstimationRun run_experiment(double r, double phi_true, std::size_t shots, std::size_t trials,
                             std::uint64_t seed);

}  // namespace ampbell

#endif
