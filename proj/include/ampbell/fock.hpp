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

#ifndef AMPBELL_FOCK_HPP
#define AMPBELL_FOCK_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "ampbell/errors.hpp"

namespace ampbell {

using Complex = std::complex<double>;

/// Slack allowed above unit squared norm before a state is rejected.
inline constexpr double kNormSlack = 1e-12;

/// Maximum photon number retained per mode. Always at least 1.
class ModeCutoff {
   public:
    explicit ModeCutoff(std::size_t n_max);

    std::size_t n_max() const noexcept { return n_max_; }
    /// Number of amplitudes per mode, n_max + 1.
    std::size_t dim() const noexcept { return n_max_ + 1; }

    friend bool operator==(ModeCutoff, ModeCutoff) = default;

   private:
    std::size_t n_max_;
};

/// Pure state of one optical mode in the photon-number basis.
class SingleModeState {
   public:
    /// Throws std::invalid_argument if amps.size() != cutoff.dim() or the
    /// squared norm is outside (0, 1 + kNormSlack].
    SingleModeState(ModeCutoff cutoff, std::vector<Complex> amps);

    ModeCutoff cutoff() const noexcept { return cutoff_; }
    std::span<const Complex> amps() const noexcept { return amps_; }
    Complex operator[](std::size_t n) const { return amps_.at(n); }
    double norm_squared() const noexcept;

   private:
    ModeCutoff cutoff_;
    std::vector<Complex> amps_;
};

/// Pure state of two modes a and b. Amplitudes are stored densely, row-major
/// in (n, m) where n counts photons in mode a and m photons in mode b.
class TwoModeState {
   public:
    TwoModeState(ModeCutoff cutoff, std::vector<Complex> amps);

    ModeCutoff cutoff() const noexcept { return cutoff_; }
    std::size_t dim() const noexcept { return cutoff_.dim(); }
    std::span<const Complex> amps() const noexcept { return amps_; }
    Complex at(std::size_t n, std::size_t m) const;
    double norm_squared() const noexcept;

   private:
    ModeCutoff cutoff_;
    std::vector<Complex> amps_;
};

/// |n, m> = |n>_a (x) |m>_b.
TwoModeState make_fock(std::size_t n, std::size_t m, ModeCutoff cutoff);

TwoModeState product_state(const SingleModeState& sa, const SingleModeState& sb);

/// <x|y>, antilinear in x.
Complex inner(const TwoModeState& x, const TwoModeState& y);
Complex inner(const SingleModeState& x, const SingleModeState& y);

/// Probability weight lost to truncation, 1 - <s|s>, clamped at zero.
double tail_mass(const SingleModeState& s);
double tail_mass(const TwoModeState& s);

/// Smallest cutoff >= `start` whose tail (as reported by `tail`) is below
/// `epsilon`. The cutoff is grown geometrically until the tolerance is met,
/// then the last bracket is bisected; `tail` must be non-increasing in the
/// cutoff. Throws DomainError if `max_n` is reached first.
ModeCutoff resolve_cutoff(const std::function<double(ModeCutoff)>& tail, double epsilon,
                          std::size_t start = 8, std::size_t max_n = 1u << 14);

}  // namespace ampbell

#endif
