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

#include "ampbell/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "ampbell/optics.hpp"
#include "ampbell/sector_algebra.hpp"

namespace ampbell {

namespace {

using sector::Matrix;

constexpr double kMomentTail = 1e-13;

struct Ranges {
    std::size_t algebra_sectors;
    std::size_t beam_splitter_sectors;
    std::vector<double> squeezings;
};

Ranges ranges_for(VerifyLevel level) {
    if (level == VerifyLevel::fast) return {6, 6, {0.25, 0.5}};
    return {10, 20, {0.25, 0.5, 1.0, 1.5}};
}

std::vector<double> phase_grid(std::size_t count) {
    std::vector<double> phis(count);
    for (std::size_t i = 0; i < count; ++i) {
        phis[i] = -std::numbers::pi + 2.0 * std::numbers::pi * static_cast<double>(i) /
                                          static_cast<double>(count);
    }
    return phis;
}

class Recorder {
   public:
    void add(std::string group, double max_error, double tolerance, std::string detail = {}) {
        results_.push_back({std::move(group), max_error <= tolerance, max_error, tolerance,
                            std::move(detail)});
    }
    std::vector<CheckResult> take() { return std::move(results_); }

   private:
    std::vector<CheckResult> results_;
};

// Uniform in [-1, 1) from the top 53 bits, independent of the standard
// library's distribution implementations.
double symmetric_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0;
}

TwoModeState random_state(std::mt19937_64& rng, ModeCutoff cutoff) {
    const std::size_t d = cutoff.dim();
    std::vector<Complex> amps(d * d);
    double total = 0.0;
    for (auto& c : amps) {
        c = {symmetric_unit(rng), symmetric_unit(rng)};
        total += std::norm(c);
    }
    for (auto& c : amps) c /= std::sqrt(total);
    return TwoModeState(cutoff, std::move(amps));
}

// Sector-N block of a state: entries (k, N-k), k from 0 to N (zero beyond the grid).
Eigen::VectorXcd sector_block(const TwoModeState& s, std::size_t N) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(N + 1));
    for (std::size_t k = 0; k <= N; ++k) {
        if (k < s.dim() && N - k < s.dim()) v(static_cast<Eigen::Index>(k)) = s.at(k, N - k);
    }
    return v;
}

void check_algebra(Recorder& rec, std::size_t max_sector) {
    double comm = 0.0;
    double j0_comm = 0.0;
    double conj = 0.0;
    double swap = 0.0;
    for (std::size_t N = 0; N <= max_sector; ++N) {
        const Matrix a = sector::j1(N), b = sector::j2(N), c = sector::j3(N), z = sector::j0(N);
        const Complex i(0.0, 1.0);
        comm = std::max({comm, sector::max_abs_diff(sector::commutator(a, b), i * c),
                         sector::max_abs_diff(sector::commutator(b, c), i * a),
                         sector::max_abs_diff(sector::commutator(c, a), i * b)});
        const Matrix zero = Matrix::Zero(a.rows(), a.cols());
        j0_comm = std::max({j0_comm, sector::max_abs_diff(sector::commutator(z, a), zero),
                            sector::max_abs_diff(sector::commutator(z, b), zero),
                            sector::max_abs_diff(sector::commutator(z, c), zero)});

        const Matrix fwd = sector::exp_i(a, std::numbers::pi / 2.0);
        const Matrix back = sector::exp_i(a, -std::numbers::pi / 2.0);
        conj = std::max({conj, sector::max_abs_diff(back * c * fwd, -b),
                         sector::max_abs_diff(back * sector::exp_i(c, -std::numbers::pi) * fwd,
                                              sector::exp_i(b, std::numbers::pi))});

        // exp(i pi J2) against mode_swap_with_sign, column by column.
        const Matrix rot = sector::exp_i(b, std::numbers::pi);
        const ModeCutoff cut(std::max<std::size_t>(N, 1));
        for (std::size_t k = 0; k <= N; ++k) {
            const auto out = sector_block(mode_swap_with_sign(make_fock(k, N - k, cut)), N);
            swap = std::max(swap, (out - rot.col(static_cast<Eigen::Index>(k))).cwiseAbs().maxCoeff());
        }
    }
    rec.add("su2-commutators", comm, 1e-12);
    rec.add("j0-commutes", j0_comm, 1e-12);
    rec.add("conjugation-identities", conj, 1e-10);
    rec.add("swap-relation", swap, 1e-10);
}

void check_beam_splitter_sectors(Recorder& rec, std::size_t max_sector) {
    double err = 0.0;
    for (std::size_t N = 0; N <= max_sector; ++N) {
        const Matrix gen = 2.0 * sector::j1(N);  // a^dag b + b^dag a
        err = std::max(err, sector::max_abs_diff(beam_splitter_sector(N),
                                                 sector::exp_i(gen, std::numbers::pi / 4.0)));
    }
    rec.add("beam-splitter-sectors", err, 1e-10);
}

void check_bell_state(Recorder& rec, const BeamSplitterFn& bs) {
    const TwoModeState in = make_fock(1, 0, ModeCutoff(4));
    const TwoModeState out = bs(std::span<const TwoModeState>(&in, 1)).front();
    const double h = std::numbers::sqrt2 / 2.0;
    double err = 0.0;
    for (std::size_t n = 0; n < out.dim(); ++n) {
        for (std::size_t m = 0; m < out.dim(); ++m) {
            Complex want = 0.0;
            if (n == 1 && m == 0) want = h;
            if (n == 0 && m == 1) want = Complex(0.0, h);
            err = std::max(err, std::abs(out.at(n, m) - want));
        }
    }
    rec.add("single-photon-bell-state", err, 1e-12, "B|1,0> = (|1,0> + i|0,1>)/sqrt2");
}

void check_norms(Recorder& rec, const BeamSplitterFn& bs) {
    std::mt19937_64 rng(20260101);
    double err = 0.0;
    double involution = 0.0;
    for (int trial = 0; trial < 8; ++trial) {
        const TwoModeState s = random_state(rng, ModeCutoff(6));
        const double n0 = s.norm_squared();
        const TwoModeState b = bs(std::span<const TwoModeState>(&s, 1)).front();
        for (double n1 : {b.norm_squared(), phase_shift(s, 0.3, -1.7).norm_squared(),
                          mode_swap_with_sign(s).norm_squared()}) {
            err = std::max(err, std::abs(n1 - n0) / n0);
        }
        const TwoModeState pb = apply_parity(s, Mode::b);
        involution = std::max(involution, std::abs(inner(pb, pb) - 1.0));
    }
    rec.add("norm-preservation", err, 1e-12);
    rec.add("parity-involution", involution, 1e-12, "<Pi^2> = 1");
}

void check_probes(Recorder& rec, const Ranges& rg, double eps, const BeamSplitterFn& bs) {
    double paths = 0.0;
    double nbar = 0.0;
    double var = 0.0;
    double qfi = 0.0;
    double fd = 0.0;
    for (double r : rg.squeezings) {
        ProbeSpec spec = resolve(ProbeSpec{.r = r, .epsilon_tail = eps});
        const TwoModeState probe = prepare_probe(spec);

        const TwoModeState bell = bs(std::span<const TwoModeState>(
                                         std::vector{make_fock(1, 0, *spec.resolved_cutoff)}))
                                      .front();
        const TwoModeState other =
            squeeze_modes(bell, SqueezeParams(r), SqueezeParams(r));
        if (other.cutoff() == probe.cutoff()) {
            for (std::size_t i = 0; i < probe.amps().size(); ++i) {
                paths = std::max(paths, std::abs(probe.amps()[i] - other.amps()[i]));
            }
        } else {
            paths = std::max(paths, 1.0);
        }

        const double nb = nbar_closed(r);
        nbar = std::max(nbar, std::abs(mean_photon_number(probe) - nb) / nb);
        const double closed_qfi = (3.0 * nb * nb + 6.0 * nb - 5.0) / 4.0;
        // Var(J3) weights the truncated tail by ~(n_max/2)^2; compare it on a
        // probe with a tighter tail.
        const TwoModeState tight =
            prepare_probe(ProbeSpec{.r = r, .epsilon_tail = std::min(eps, kMomentTail)});
        var = std::max(var, std::abs(j_moments(tight).j3_variance() - closed_qfi / 4.0) /
                                (closed_qfi / 4.0));
        const double qv = qfi_variance(probe);
        qfi = std::max(qfi, std::abs(qv - closed_qfi) / closed_qfi);
        fd = std::max(fd, std::abs(qfi_finite_difference(probe, 1e-4) - qv) / qv);
    }
    rec.add("probe-construction-paths", paths, 1e-10);
    rec.add("mean-photon-number", nbar, 1e-8);
    rec.add("j3-variance", var, 1e-8);
    rec.add("qfi-closed-form", qfi, 1e-6);
    rec.add("qfi-finite-difference", fd, 1e-4);
}

void check_signals(Recorder& rec, const Ranges& rg, double eps, const BeamSplitterFn& bs,
                   bool long_run) {
    const auto phis = phase_grid(64);
    {
        const auto got = signal_bruteforce_sweep(ProbeSpec{.r = 0.0, .epsilon_tail = eps}, phis,
                                                 0.0, bs);
        double err = 0.0;
        for (std::size_t i = 0; i < phis.size(); ++i) {
            err = std::max(err, std::abs(got[i] - std::sin(phis[i])));
        }
        rec.add("single-photon-signal", err, 1e-10, "r = 0 gives sin(phi)");
    }
    double err = 0.0;
    for (double r : rg.squeezings) {
        const auto got =
            signal_bruteforce_sweep(ProbeSpec{.r = r, .epsilon_tail = eps}, phis, 0.0, bs);
        for (std::size_t i = 0; i < phis.size(); ++i) {
            err = std::max(err, std::abs(got[i] - signal_closed(r, phis[i])));
        }
    }
    rec.add("closed-vs-bruteforce-signal", err, 1e-7);

    {
        const ProbeSpec spec{.r = 0.5, .epsilon_tail = eps};
        const std::vector<double> at{0.3, -1.2, 2.5};
        const auto base = signal_bruteforce_sweep(spec, at, 0.0, bs);
        const auto shifted = signal_bruteforce_sweep(spec, at, 1.9, bs);
        double diff = 0.0;
        for (std::size_t i = 0; i < at.size(); ++i) diff = std::max(diff, std::abs(base[i] - shifted[i]));
        rec.add("sum-phase-invariance", diff, 1e-12);
    }

    if (long_run) {
        const double r = r_from_nbar(60.0);
        const auto coarse = phase_grid(8);
        const auto got =
            signal_bruteforce_sweep(ProbeSpec{.r = r, .epsilon_tail = eps}, coarse, 0.0, bs);
        double e60 = 0.0;
        for (std::size_t i = 0; i < coarse.size(); ++i) {
            e60 = std::max(e60, std::abs(got[i] - signal_closed(r, coarse[i])));
        }
        rec.add("bruteforce-signal-nbar60", e60, 1e-7);
        const TwoModeState probe = prepare_probe(ProbeSpec{.r = r, .epsilon_tail = eps});
        rec.add("mean-photon-number-nbar60", std::abs(mean_photon_number(probe) - 60.0) / 60.0,
                1e-8);
    }
}

void check_closed_forms(Recorder& rec) {
    double slope = 0.0;
    for (double nb : {1.0, 6.0, 60.0}) {
        const double r = r_from_nbar(nb);
        const double h = 1e-5;
        const double fd = (signal_closed(r, h) - signal_closed(r, -h)) / (2.0 * h);
        const double want = (nb + 1.0) / 2.0;
        slope = std::max(slope, std::abs(fd - want) / want);
    }
    rec.add("slope-at-origin", slope, 1e-6, "(nbar + 1)/2");

    // crb <= parity <= shot noise on a log grid over [3, 1e4]; report the worst
    // violation margin (0 when ordered).
    double violation = 0.0;
    for (int i = 0; i <= 200; ++i) {
        const double nb = 3.0 * std::pow(1e4 / 3.0, i / 200.0);
        const double crb = crb_closed(nb);
        const double par = delta_phi_parity_closed(nb);
        const double sn = shot_noise_limit(nb);
        violation = std::max({violation, crb - par, par - sn});
    }
    rec.add("sensitivity-ordering", std::max(0.0, violation), 0.0);
}

}  // namespace

VerifyLevel parse_verify_level(const std::string& name) {
    if (name == "fast") return VerifyLevel::fast;
    if (name == "full") return VerifyLevel::full;
    if (name == "long") return VerifyLevel::long_;
    throw std::invalid_argument("unknown verify level '" + name + "' (fast, full, long)");
}

std::string to_string(VerifyLevel level) {
    switch (level) {
        case VerifyLevel::fast:
            return "fast";
        case VerifyLevel::full:
            return "full";
        case VerifyLevel::long_:
            return "long";
    }
    return "unknown";
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
    const BeamSplitterFn bs =
        options.beam_splitter
            ? options.beam_splitter
            : BeamSplitterFn([](std::span<const TwoModeState> b) { return beam_splitter(b); });
    const Ranges rg = ranges_for(options.level);
    Recorder rec;
    check_algebra(rec, rg.algebra_sectors);
    check_beam_splitter_sectors(rec, rg.beam_splitter_sectors);
    check_bell_state(rec, bs);
    check_norms(rec, bs);
    check_probes(rec, rg, options.epsilon_tail, bs);
    check_signals(rec, rg, options.epsilon_tail, bs, options.level == VerifyLevel::long_);
    check_closed_forms(rec);
    return rec.take();
}

}  // namespace ampbell
