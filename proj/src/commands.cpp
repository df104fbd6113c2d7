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

#include "ampbell/commands.hpp"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "ampbell/estimation.hpp"

namespace ampbell::cli {

namespace {

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

}  // namespace

double Squeezing::resolve_r() const {
    if (r && nbar) throw UsageError("--r and --nbar are mutually exclusive");
    if (r) {
        if (!(*r >= 0.0)) throw UsageError("--r must be non-negative");
        return *r;
    }
    if (nbar) {
        if (!(*nbar >= 1.0)) throw UsageError("--nbar must be at least 1");
        return r_from_nbar(*nbar);
    }
    throw UsageError("one of --r or --nbar is required");
}

SweepMode parse_sweep_mode(const std::string& name) {
    if (name == "closed") return SweepMode::closed;
    if (name == "bruteforce") return SweepMode::bruteforce;
    if (name == "both") return SweepMode::both;
    throw UsageError("unknown mode '" + name + "' (closed, bruteforce, both)");
}

int cmd_signal_sweep(const SweepConfig& cfg, std::ostream& csv, std::ostream& report) {
    const double r = cfg.squeezing.resolve_r();
    const double nbar = nbar_closed(r);
    if (cfg.phi_steps < 2) throw UsageError("--steps must be at least 2");
    if (!(cfg.phi_max > cfg.phi_min)) throw UsageError("--phi-max must exceed --phi-min");
    const bool brute = cfg.mode != SweepMode::closed;
    if (brute && nbar > cfg.bruteforce_nbar_ceiling * (1.0 + 1e-12) && !cfg.allow_long) {
        throw UsageError("brute force is limited to nbar <= " + num(cfg.bruteforce_nbar_ceiling) +
                         " (requested " + num(nbar) + "); pass --allow-long to override");
    }

    std::vector<double> phis(cfg.phi_steps);
    for (std::size_t i = 0; i < phis.size(); ++i) {
        phis[i] = cfg.phi_min + (cfg.phi_max - cfg.phi_min) * static_cast<double>(i) /
                                    static_cast<double>(cfg.phi_steps - 1);
    }
    const ProbeSpec spec = brute ? resolve(ProbeSpec{.r = r, .epsilon_tail = cfg.epsilon_tail})
                                 : ProbeSpec{.r = r, .epsilon_tail = cfg.epsilon_tail};
    std::vector<double> bf;
    if (brute) bf = signal_bruteforce_sweep(spec, phis);

    csv << "# parity signal S(r,phi) = <Pi_b> at differential phase phi + pi/2; phi in radians\n";
    csv << "# r = " << num(r) << ", nbar = " << num(nbar);
    if (brute) csv << ", cutoff = " << spec.resolved_cutoff->n_max();
    csv << "\n";
    csv << (cfg.mode == SweepMode::closed       ? "phi,signal_closed\n"
            : cfg.mode == SweepMode::bruteforce ? "phi,signal_closed,signal_bruteforce\n"
                                                : "phi,signal_closed,signal_bruteforce,abs_diff\n");
    double max_diff = 0.0;
    for (std::size_t i = 0; i < phis.size(); ++i) {
        const double closed = signal_closed(r, phis[i]);
        csv << num(phis[i]) << ',' << num(closed);
        if (brute) {
            csv << ',' << num(bf[i]);
            const double diff = std::abs(bf[i] - closed);
            max_diff = std::max(max_diff, diff);
            if (cfg.mode == SweepMode::both) csv << ',' << num(diff);
        }
        csv << '\n';
    }
    if (cfg.mode == SweepMode::both) report << "# max_abs_diff = " << sci(max_diff) << '\n';
    return brute && !(max_diff < 1e-7) ? kExitFailure : kExitOk;
}

int cmd_sensitivity_curve(const SweepConfig& cfg, std::ostream& csv) {
    if (!(cfg.nbar_min >= 1.0)) throw UsageError("--nbar-min must be at least 1");
    if (cfg.points < 2) throw UsageError("--points must be at least 2");
    if (!(cfg.nbar_max > cfg.nbar_min)) throw UsageError("--nbar-max must exceed --nbar-min");

    csv << "# delta phi in radians; nbar is the mean photon number of the probe\n";
    csv << "# crb: Cramer-Rao bound; parity_delta_phi: parity readout at phi = k pi\n";
    csv << "nbar,crb,parity_delta_phi,shot_noise,heisenberg\n";
    for (std::size_t i = 0; i < cfg.points; ++i) {
        const double frac = static_cast<double>(i) / static_cast<double>(cfg.points - 1);
        double nb = cfg.log_spacing ? cfg.nbar_min * std::pow(cfg.nbar_max / cfg.nbar_min, frac)
                                    : cfg.nbar_min + (cfg.nbar_max - cfg.nbar_min) * frac;
        if (i == 0) nb = cfg.nbar_min;
        if (i + 1 == cfg.points) nb = cfg.nbar_max;
        csv << num(nb) << ',' << num(crb_closed(nb)) << ',' << num(delta_phi_parity_closed(nb))
            << ',' << num(shot_noise_limit(nb)) << ',' << num(heisenberg_limit(nb)) << '\n';
    }
    return kExitOk;
}

int cmd_verify(const VerifyOptions& options, std::ostream& report) {
    const auto results = run_verification(options);
    std::size_t passed = 0;
    for (const auto& c : results) {
        char line[160];
        std::snprintf(line, sizeof line, "%-4s  %-30s max_err=%-10s tol=%s", c.passed ? "PASS" : "FAIL",
                      c.group.c_str(), sci(c.max_error).c_str(), sci(c.tolerance).c_str());
        report << line;
        if (!c.detail.empty()) report << "  (" << c.detail << ')';
        report << '\n';
        if (c.passed) ++passed;
    }
    report << "verify " << to_string(options.level) << ": " << passed << '/' << results.size()
           << " groups passed\n";
    for (const auto& c : results) {
        if (!c.passed) report << "failed group: " << c.group << '\n';
    }
    return passed == results.size() ? kExitOk : kExitFailure;
}

int cmd_estimate(const EstimateConfig& cfg, std::ostream& report, std::ostream& csv) {
    const double r = cfg.squeezing.resolve_r();
    if (cfg.shots == 0) throw UsageError("--shots must be positive");
    if (cfg.trials == 0) throw UsageError("--trials must be positive");
    const double width = branch_half_width(r);
    if (!(std::abs(cfg.phi_true) < width)) {
        throw UsageError("--phi must lie on the central branch |phi| < " + num(width) +
                         " (branch width " + num(2.0 * width) + " rad)");
    }
    const EstimationRun run = run_experiment(r, cfg.phi_true, cfg.shots, cfg.trials, cfg.seed);

    report << "# single-shot parity readout, moment estimator, error scaled by 1/sqrt(shots)\n";
    report << "r = " << num(r) << '\n';
    report << "nbar = " << num(nbar_closed(r)) << '\n';
    report << "phi_true = " << num(run.phi_true) << '\n';
    report << "shots = " << run.shots_per_trial << '\n';
    report << "trials = " << run.trials << '\n';
    report << "seed = " << run.seed << '\n';
    report << "empirical_rmse = " << num(run.empirical_rmse) << '\n';
    report << "predicted_rmse = " << num(run.predicted_rmse) << '\n';
    report << "ratio = " << num(run.empirical_rmse / run.predicted_rmse) << '\n';
    report << "clamped_trials = " << run.clamped_trials << '\n';
    if (run.rmse_degenerate) report << "warning: fewer than two trials, rmse is degenerate\n";
    if (run.low_shots) report << "warning: fewer than 100 shots, linear error model unreliable\n";

    csv << "# phi in radians\n";
    csv << "trial,mean_parity,estimate,clamped\n";
    for (std::size_t i = 0; i < run.estimates.size(); ++i) {
        csv << i << ',' << num(run.mean_parities[i]) << ',' << num(run.estimates[i]) << ','
            << (run.clamped[i] ? 1 : 0) << '\n';
    }
    return kExitOk;
}

int cmd_probe_info(const Squeezing& squeezing, double epsilon_tail, std::ostream& report) {
    const double r = squeezing.resolve_r();
    if (!(epsilon_tail > 0.0 && epsilon_tail <= 1e-4)) {
        throw UsageError("--epsilon-tail must lie in (0, 1e-4]");
    }
    const MetrologyReport m = metrology_report(ProbeSpec{.r = r, .epsilon_tail = epsilon_tail});
    report << "r = " << num(m.r) << '\n';
    report << "nbar_closed = " << num(m.nbar) << '\n';
    report << "nbar_numeric = " << num(m.nbar_numeric) << '\n';
    report << "cutoff = " << m.cutoff.n_max() << '\n';
    report << "tail_mass = " << sci(m.tail_mass) << '\n';
    report << "qfi_variance = " << num(m.qfi) << '\n';
    report << "qfi_finite_difference = " << num(m.qfi_finite_difference) << '\n';
    report << "crb_delta_phi = " << num(m.crb_delta_phi) << '\n';
    report << "crb_delta_phi_closed = " << num(crb_closed(m.nbar)) << '\n';
    report << "slope_at_origin = " << num(m.slope_at_origin) << '\n';
    report << "delta_phi_parity = " << num(m.delta_phi_parity) << '\n';
    report << "shot_noise_limit = " << num(shot_noise_limit(m.nbar)) << '\n';
    return kExitOk;
}

}  // namespace ampbell::cli
