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

#include "ampbell/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "ampbell/errors.hpp"
#include "ampbell/metrology.hpp"

namespace ampbell {

namespace {

constexpr double kBisectionTolerance = 1e-12;

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

OutcomeProbabilities outcome_probabilities(double signal) {
    if (!(std::abs(signal) <= 1.0 + 1e-12)) {
        throw DomainError("parity expectation " + std::to_string(signal) + " outside [-1, 1]");
    }
    const double s = std::clamp(signal, -1.0, 1.0);
    return {0.5 * (1.0 + s), 0.5 * (1.0 - s)};
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::size_t trial) {
    return splitmix64(master_seed + (static_cast<std::uint64_t>(trial) + 1) * 0x9E3779B97F4A7C15ull);
}

double sample_parities(double r, double phi, std::size_t shots, std::uint64_t seed) {
    if (shots == 0) throw DomainError("shots must be positive");
    const double p_plus = outcome_probabilities(signal_closed(r, phi)).p_plus;
    std::mt19937_64 rng(seed);
    std::int64_t total = 0;
    for (std::size_t i = 0; i < shots; ++i) total += uniform01(rng) < p_plus ? 1 : -1;
    return static_cast<double>(total) / static_cast<double>(shots);
}

double branch_half_width(double r) {
    // S' = 0 where cos(phi) [(1 - t^2)^2 - 8 t^2 sin^2(phi)] = 0.
    const double t = std::tanh(r);
    if (t == 0.0) return std::numbers::pi / 2.0;
    const double s = (1.0 - t * t) / (2.0 * std::numbers::sqrt2 * t);
    return s >= 1.0 ? std::numbers::pi / 2.0 : std::asin(s);
}

Inversion invert_estimate(double mean_parity, double r) {
    double lo = -branch_half_width(r);
    double hi = -lo;
    const double s_max = signal_closed(r, hi);
    if (mean_parity >= s_max) return {hi, mean_parity > s_max};
    if (mean_parity <= -s_max) return {lo, mean_parity < -s_max};
    while (hi - lo > kBisectionTolerance) {
        const double mid = 0.5 * (lo + hi);
        if (signal_closed(r, mid) < mean_parity) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return {0.5 * (lo + hi), false};
}

EstimationRun run_experiment(double r, double phi_true, std::size_t shots, std::size_t trials,
                             std::uint64_t seed) {
    if (shots == 0 || trials == 0) throw DomainError("shots and trials must be positive");
    const double width = branch_half_width(r);
    if (!(std::abs(phi_true) < width)) {
        throw DomainError("phi_true must lie in (-" + std::to_string(width) + ", " +
                          std::to_string(width) + "), the central branch for r = " +
                          std::to_string(r));
    }
    EstimationRun run{
        .r = r,
        .phi_true = phi_true,
        .shots_per_trial = shots,
        .trials = trials,
        .seed = seed,
        .estimates = {},
        .mean_parities = {},
        .clamped = {},
        .clamped_trials = 0,
        .empirical_rmse = 0.0,
        .predicted_rmse = delta_phi_parity(r, phi_true) / std::sqrt(static_cast<double>(shots)),
        .rmse_degenerate = trials < 2,
        .low_shots = shots < 100,
    };
    run.estimates.reserve(trials);
    run.mean_parities.reserve(trials);
    double sq = 0.0;
    for (std::size_t i = 0; i < trials; ++i) {
        const double mean = sample_parities(r, phi_true, shots, trial_seed(seed, i));
        const Inversion inv = invert_estimate(mean, r);
        run.mean_parities.push_back(mean);
        run.estimates.push_back(inv.phi);
        run.clamped.push_back(inv.clamped);
        if (inv.clamped) ++run.clamped_trials;
        sq += (inv.phi - phi_true) * (inv.phi - phi_true);
    }
    run.empirical_rmse = std::sqrt(sq / static_cast<double>(trials));
    return run;
}

}  // namespace ampbell
