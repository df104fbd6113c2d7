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

#include "ampbell/metrology.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace ampbell {

namespace {

constexpr double kDegenerateSlope = 1e-12;
constexpr std::size_t kSweepChunk = 16;

double probe_tail(const ProbeSpec& spec, ModeCutoff cutoff) {
    // Phi_0 and Phi_1 have disjoint parity support, so the probe norm is the
    // product of the single-mode norms.
    const double n0a = squeezed_vacuum(SqueezeParams(spec.r, spec.theta_a), cutoff).norm_squared();
    const double n1a =
        squeezed_one_photon(SqueezeParams(spec.r, spec.theta_a), cutoff).norm_squared();
    const double n0b = squeezed_vacuum(SqueezeParams(spec.r, spec.theta_b), cutoff).norm_squared();
    const double n1b =
        squeezed_one_photon(SqueezeParams(spec.r, spec.theta_b), cutoff).norm_squared();
    return std::max(0.0, 1.0 - 0.5 * (n1a * n0b + n0a * n1b));
}

TwoModeState pipeline_input(const TwoModeState& probe, double phi, double sum_phase) {
    const double diff = phi + std::numbers::pi / 2.0;
    return phase_shift(probe, 0.5 * (sum_phase + diff), 0.5 * (sum_phase - diff));
}

double parity_b_checked(const TwoModeState& out) {
    const Complex value = inner(out, apply_parity(out, Mode::b));
    if (std::abs(value.imag()) >= 1e-12) {
        throw std::logic_error("parity expectation has imaginary residue");
    }
    return parity_expectation(out, Mode::b);
}

}  // namespace

void ProbeSpec::validate() const {
    SqueezeParams(r, theta_a);
    SqueezeParams(r, theta_b);
    if (!(epsilon_tail > 0.0 && epsilon_tail <= 1e-4)) {
        throw DomainError("epsilon_tail must lie in (0, 1e-4]");
    }
}

ProbeSpec resolve(ProbeSpec spec) {
    spec.validate();
    if (!spec.resolved_cutoff) {
        spec.resolved_cutoff = resolve_cutoff(
            [&spec](ModeCutoff c) { return probe_tail(spec, c); }, spec.epsilon_tail);
    }
    return spec;
}

TwoModeState prepare_probe(const ProbeSpec& in) {
    const ProbeSpec spec = resolve(in);
    const ModeCutoff cut = *spec.resolved_cutoff;
    const SqueezeParams pa(spec.r, spec.theta_a);
    const SqueezeParams pb(spec.r, spec.theta_b);
    const auto phi0_a = squeezed_vacuum(pa, cut);
    const auto phi1_a = squeezed_one_photon(pa, cut);
    const auto phi0_b = squeezed_vacuum(pb, cut);
    const auto phi1_b = squeezed_one_photon(pb, cut);

    const std::size_t d = cut.dim();
    const double h = std::numbers::sqrt2 / 2.0;
    const Complex ih(0.0, h);
    std::vector<Complex> amps(d * d);
    for (std::size_t n = 0; n < d; ++n) {
        for (std::size_t m = 0; m < d; ++m) {
            amps[n * d + m] = h * phi1_a[n] * phi0_b[m] + ih * phi0_a[n] * phi1_b[m];
        }
    }
    return TwoModeState(cut, std::move(amps));
}

TwoModeState prepare_probe_via_beam_splitter(const ProbeSpec& in) {
    const ProbeSpec spec = resolve(in);
    const TwoModeState bell = beam_splitter(make_fock(1, 0, *spec.resolved_cutoff));
    return squeeze_modes(bell, SqueezeParams(spec.r, spec.theta_a),
                         SqueezeParams(spec.r, spec.theta_b));
}

double mean_photon_number(const TwoModeState& s) { return 2.0 * j_moments(s).j0; }

double nbar_closed(double r) {
    if (!(r >= 0.0)) throw DomainError("r must be non-negative");
    const double sh = std::sinh(r);
    return 1.0 + 4.0 * sh * sh;
}

double r_from_nbar(double nbar) {
    if (!(nbar >= 1.0)) throw DomainError("mean photon number must be at least 1");
    return std::asinh(std::sqrt((nbar - 1.0) / 4.0));
}

double qfi_variance(const TwoModeState& probe) { return 4.0 * j_moments(probe).j3_variance(); }

double qfi_finite_difference(const TwoModeState& probe, double h, double phi) {
    if (!(h >= 1e-6 && h <= 1e-2)) throw DomainError("finite-difference step must lie in [1e-6, 1e-2]");
    // U = exp(i J0 sum) exp(i J3 phi); hold the sum phase at zero.
    auto evolve = [&](double p) { return phase_shift(probe, 0.5 * p, -0.5 * p); };
    const TwoModeState centre = evolve(phi);
    const TwoModeState plus = evolve(phi + 0.5 * h);
    const TwoModeState minus = evolve(phi - 0.5 * h);

    auto c = centre.amps();
    auto p = plus.amps();
    auto mi = minus.amps();
    double dd = 0.0;
    Complex dc = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Complex deriv = (p[i] - mi[i]) / h;
        dd += std::norm(deriv);
        dc += std::conj(deriv) * c[i];
    }
    return 4.0 * (dd - std::norm(dc));
}

double crb_closed(double nbar) {
    if (!(nbar >= 1.0)) throw DomainError("mean photon number must be at least 1");
    return 2.0 / std::sqrt(3.0 * nbar * nbar + 6.0 * nbar - 5.0);
}

double signal_closed(double r, double phi) {
    const double t2 = std::tanh(r) * std::tanh(r);
    const double sech = 1.0 / std::cosh(r);
    const double sech2 = sech * sech;
    const double amp = std::cosh(2.0 * r) * sech2 * sech2 * sech2;
    const double den = 1.0 - 2.0 * std::cos(2.0 * phi) * t2 + t2 * t2;
    return std::sin(phi) * amp / (den * std::sqrt(den));
}

double signal_derivative_closed(double r, double phi) {
    // S = A sin(phi) D^{-3/2}, D' = 4 t^2 sin(2 phi)
    // S' = A [cos(phi) D - 6 t^2 sin(phi) sin(2 phi)] D^{-5/2}
    const double t2 = std::tanh(r) * std::tanh(r);
    const double sech = 1.0 / std::cosh(r);
    const double sech2 = sech * sech;
    const double amp = std::cosh(2.0 * r) * sech2 * sech2 * sech2;
    const double den = 1.0 - 2.0 * std::cos(2.0 * phi) * t2 + t2 * t2;
    const double num = std::cos(phi) * den - 6.0 * t2 * std::sin(phi) * std::sin(2.0 * phi);
    return amp * num / (den * den * std::sqrt(den));
}

double signal_bruteforce(const ProbeSpec& spec, double phi, double sum_phase) {
    const TwoModeState probe = prepare_probe(spec);
    return parity_b_checked(beam_splitter(pipeline_input(probe, phi, sum_phase)));
}

std::vector<double> signal_bruteforce_sweep(const ProbeSpec& spec, std::span<const double> phis,
                                            double sum_phase, const BeamSplitterFn& bs) {
    const TwoModeState probe = prepare_probe(spec);
    std::vector<double> out;
    out.reserve(phis.size());
    for (std::size_t start = 0; start < phis.size(); start += kSweepChunk) {
        const std::size_t stop = std::min(phis.size(), start + kSweepChunk);
        std::vector<TwoModeState> batch;
        batch.reserve(stop - start);
        for (std::size_t i = start; i < stop; ++i) {
            batch.push_back(pipeline_input(probe, phis[i], sum_phase));
        }
        const std::span<const TwoModeState> view(batch);
        for (const auto& s : bs ? bs(view) : beam_splitter(view)) {
            out.push_back(parity_b_checked(s));
        }
    }
    return out;
}

double slope_at_origin_closed(double r) { return 0.5 * (nbar_closed(r) + 1.0); }

double linear_approx(double r, double phi, int k) {
    return slope_at_origin_closed(r) * (phi - static_cast<double>(k) * std::numbers::pi);
}

double delta_phi_parity(double r, double phi) {
    const double slope = signal_derivative_closed(r, phi);
    if (std::abs(slope) < kDegenerateSlope) {
        throw DegeneratePoint("signal slope vanishes at phi = " + std::to_string(phi));
    }
    const double s = signal_closed(r, phi);
    return std::sqrt(std::max(0.0, 1.0 - s * s)) / std::abs(slope);
}

double delta_phi_parity_closed(double nbar) {
    if (!(nbar >= 1.0)) throw DomainError("mean photon number must be at least 1");
    return 2.0 / (nbar + 1.0);
}

double shot_noise_limit(double nbar) {
    if (!(nbar > 0.0)) throw DomainError("mean photon number must be positive");
    return 1.0 / std::sqrt(nbar);
}

double heisenberg_limit(double n) {
    if (!(n > 0.0)) throw DomainError("photon number must be positive");
    return 1.0 / n;
}

MetrologyReport metrology_report(const ProbeSpec& in) {
    const ProbeSpec spec = resolve(in);
    const TwoModeState probe = prepare_probe(spec);
    const double qfi = qfi_variance(probe);
    return MetrologyReport{
        .r = spec.r,
        .cutoff = *spec.resolved_cutoff,
        .tail_mass = tail_mass(probe),
        .nbar = nbar_closed(spec.r),
        .nbar_numeric = mean_photon_number(probe),
        .qfi = qfi,
        .qfi_finite_difference = qfi_finite_difference(probe, 1e-4),
        .crb_delta_phi = 1.0 / std::sqrt(qfi),
        .slope_at_origin = slope_at_origin_closed(spec.r),
        .delta_phi_parity = delta_phi_parity(spec.r, 0.0),
    };
}

}  // namespace ampbell
