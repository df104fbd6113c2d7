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

#ifndef AMPBELL_METROLOGY_HPP
#define AMPBELL_METROLOGY_HPP

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ampbell/fock.hpp"
#include "ampbell/optics.hpp"

namespace ampbell {

inline constexpr double kDefaultEpsilonTail = 1e-10;

/// Amplified Bell probe (S_a (x) S_b)(|1,0> + i|0,1>)/sqrt2.
///
/// Both squeezers default to theta = 0. The cutoff is chosen lazily: the
/// smallest n_max whose probe tail mass is below epsilon_tail.
struct ProbeSpec {
    double r = 0.0;
    double theta_a = 0.0;
    double theta_b = 0.0;
    double epsilon_tail = kDefaultEpsilonTail;
    std::optional<ModeCutoff> resolved_cutoff;

    /// Throws DomainError unless r >= 0 and epsilon_tail in (0, 1e-4].
    void validate() const;
};

/// Fills in resolved_cutoff if absent.
ProbeSpec resolve(ProbeSpec spec);

/// (|Phi_1>|Phi_0> + i|Phi_0>|Phi_1>)/sqrt2 from the squeezed coefficient
/// formulas, at the resolved cutoff.
TwoModeState prepare_probe(const ProbeSpec& spec);

/// The same probe built the long way: beam splitter on |1,0>, then the
/// squeezing matrices on each mode.
TwoModeState prepare_probe_via_beam_splitter(const ProbeSpec& spec);

/// <a^dag a + b^dag b>.
double mean_photon_number(const TwoModeState& s);

/// nbar = 1 + 4 sinh^2 r.
double nbar_closed(double r);
/// Inverse of nbar_closed. Throws DomainError for nbar < 1.
double r_from_nbar(double nbar);

/// QFI = 4 Var(J3).
double qfi_variance(const TwoModeState& probe);

/// QFI from F = 4(<psi'|psi'> - |<psi'|psi>|^2), with |psi'> taken by central
/// differences of the differential phase around `phi`. Requires
/// 1e-6 <= h <= 1e-2.
double qfi_finite_difference(const TwoModeState& probe, double h, double phi = 0.0);

/// Cramer-Rao bound on delta phi for the probe: 2/sqrt(3 nbar^2 + 6 nbar - 5).
double crb_closed(double nbar);

/// Parity signal S(r, phi) = <Pi> at differential phase phi + pi/2:
/// sin(phi) cosh(2r) sech^6(r) / (1 - 2 cos(2 phi) tanh^2 r + tanh^4 r)^{3/2}.
double signal_closed(double r, double phi);

/// dS/dphi of signal_closed, differentiated by hand.
double signal_derivative_closed(double r, double phi);

/// Full interferometer: probe, phase shift with differential phase
/// phi + pi/2 (the same shift baked into signal_closed), beam splitter, then
/// parity of mode b. `sum_phase` is phi_a + phi_b and must not matter.
double signal_bruteforce(const ProbeSpec& spec, double phi, double sum_phase = 0.0);

/// Batched beam-splitter implementation used by the brute-force pipeline.
using BeamSplitterFn =
    std::function<std::vector<TwoModeState>(std::span<const TwoModeState>)>;

/// signal_bruteforce over many phases with one shared probe. Output order
/// matches `phis`. `bs` replaces the beam splitter (verification fixtures).
std::vector<double> signal_bruteforce_sweep(const ProbeSpec& spec, std::span<const double> phis,
                                            double sum_phase = 0.0,
                                            const BeamSplitterFn& bs = {});

/// (nbar + 1)/2.
double slope_at_origin_closed(double r);

/// ((nbar + 1)/2)(phi - k pi).
double linear_approx(double r, double phi, int k);

/// sqrt(1 - S^2)/|dS/dphi| using the analytic derivative. Uses
/// Var(Pi) = 1 - <Pi>^2, valid because Pi^2 = 1. Throws DegeneratePoint
/// where |dS/dphi| < 1e-12.
double delta_phi_parity(double r, double phi);

/// 2/(nbar + 1), the value of delta_phi_parity at phi = k pi.
double delta_phi_parity_closed(double nbar);

/// 1/sqrt(nbar). Throws DomainError for nbar <= 0.
double shot_noise_limit(double nbar);
/// 1/n. Throws DomainError for n <= 0.
double heisenberg_limit(double n);

struct MetrologyReport {
    double r;
    ModeCutoff cutoff;
    double tail_mass;
    double nbar;          ///< closed form
    double nbar_numeric;  ///< number operator on the constructed probe
    double qfi;           ///< 4 Var(J3)
    double qfi_finite_difference;
    double crb_delta_phi;  ///< 1/sqrt(qfi)
    double slope_at_origin;
    double delta_phi_parity;  ///< at phi = 0
};

MetrologyReport metrology_report(const ProbeSpec& spec);

}  // namespace ampbell

#endif
