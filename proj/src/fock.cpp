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

#include "ampbell/fock.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ampbell {

namespace {

double sum_norm(std::span<const Complex> amps) {
    double total = 0.0;
    for (const auto& c : amps) total += std::norm(c);
    return total;
}

void check_norm(double n2) {
    if (!(n2 > 0.0) || n2 > 1.0 + kNormSlack) {
        throw std::invalid_argument("state squared norm " + std::to_string(n2) +
                                    " outside (0, 1]");
    }
}

}  // namespace

ModeCutoff::ModeCutoff(std::size_t n_max) : n_max_(n_max) {
    if (n_max < 1) throw std::invalid_argument("mode cutoff must be at least 1");
}

SingleModeState::SingleModeState(ModeCutoff cutoff, std::vector<Complex> amps)
    : cutoff_(cutoff), amps_(std::move(amps)) {
    if (amps_.size() != cutoff_.dim()) {
        throw std::invalid_argument("single-mode amplitude count does not match cutoff");
    }
    check_norm(norm_squared());
}

double SingleModeState::norm_squared() const noexcept { return sum_norm(amps_); }

TwoModeState::TwoModeState(ModeCutoff cutoff, std::vector<Complex> amps)
    : cutoff_(cutoff), amps_(std::move(amps)) {
    if (amps_.size() != cutoff_.dim() * cutoff_.dim()) {
        throw std::invalid_argument("two-mode amplitude count does not match cutoff");
    }
    check_norm(norm_squared());
}

Complex TwoModeState::at(std::size_t n, std::size_t m) const {
    if (n >= dim() || m >= dim()) throw CutoffViolation("photon number exceeds cutoff");
    return amps_[n * dim() + m];
}

double TwoModeState::norm_squared() const noexcept { return sum_norm(amps_); }

TwoModeState make_fock(std::size_t n, std::size_t m, ModeCutoff cutoff) {
    if (n > cutoff.n_max() || m > cutoff.n_max()) {
        throw CutoffViolation("Fock state |" + std::to_string(n) + "," + std::to_string(m) +
                              "> exceeds cutoff " + std::to_string(cutoff.n_max()));
    }
    std::vector<Complex> amps(cutoff.dim() * cutoff.dim());
    amps[n * cutoff.dim() + m] = 1.0;
    return TwoModeState(cutoff, std::move(amps));
}

TwoModeState product_state(const SingleModeState& sa, const SingleModeState& sb) {
    if (sa.cutoff() != sb.cutoff()) throw DimensionMismatch("product_state: cutoffs differ");
    const std::size_t d = sa.cutoff().dim();
    std::vector<Complex> amps(d * d);
    for (std::size_t n = 0; n < d; ++n) {
        for (std::size_t m = 0; m < d; ++m) amps[n * d + m] = sa[n] * sb[m];
    }
    return TwoModeState(sa.cutoff(), std::move(amps));
}

Complex inner(const TwoModeState& x, const TwoModeState& y) {
    if (x.cutoff() != y.cutoff()) throw DimensionMismatch("inner: cutoffs differ");
    Complex acc = 0.0;
    auto xa = x.amps();
    auto ya = y.amps();
    for (std::size_t i = 0; i < xa.size(); ++i) acc += std::conj(xa[i]) * ya[i];
    return acc;
}

Complex inner(const SingleModeState& x, const SingleModeState& y) {
    if (x.cutoff() != y.cutoff()) throw DimensionMismatch("inner: cutoffs differ");
    Complex acc = 0.0;
    for (std::size_t i = 0; i < x.cutoff().dim(); ++i) acc += std::conj(x[i]) * y[i];
    return acc;
}

double tail_mass(const SingleModeState& s) { return std::max(0.0, 1.0 - s.norm_squared()); }
double tail_mass(const TwoModeState& s) { return std::max(0.0, 1.0 - s.norm_squared()); }

ModeCutoff resolve_cutoff(const std::function<double(ModeCutoff)>& tail, double epsilon,
                          std::size_t start, std::size_t max_n) {
    std::size_t lo = 0;  // largest cutoff known to fail, 0 if none
    std::size_t hi = std::max<std::size_t>(start, 1);
    while (!(tail(ModeCutoff(hi)) < epsilon)) {
        if (hi >= max_n) {
            throw DomainError("no cutoff up to " + std::to_string(max_n) +
                              " reaches tail tolerance");
        }
        lo = hi;
        hi = std::min(max_n, hi + std::max<std::size_t>(1, hi / 4));
    }
    while (hi - lo > 1) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (mid >= 1 && tail(ModeCutoff(mid)) < epsilon) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return ModeCutoff(hi);
}

}  // namespace ampbell
