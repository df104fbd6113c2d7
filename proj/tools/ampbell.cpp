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

// Command-line front end: signal sweeps, sensitivity curves, verification,
// Monte Carlo estimation and probe summaries. Angles are radians throughout.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "ampbell/commands.hpp"

namespace {

using namespace ampbell;

void add_squeezing(CLI::App* cmd, cli::Squeezing& sq) {
    cmd->add_option_function<double>("--r", [&sq](double v) { sq.r = v; },
                                     "Squeezing strength r (exclusive with --nbar)");
    cmd->add_option_function<double>("--nbar", [&sq](double v) { sq.nbar = v; },
                                     "Mean photon number of the probe (exclusive with --r)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Amplified Bell-state phase estimation simulator"};
    app.require_subcommand(1);
    app.fallthrough();

    double epsilon_tail = kDefaultEpsilonTail;
    std::string output;
    bool allow_long = false;
    app.add_option("--epsilon-tail", epsilon_tail, "Fock truncation tolerance on probe tail mass");
    app.add_option("--output", output, "CSV output path (default: standard output)");
    app.add_flag("--allow-long", allow_long, "Permit long-running brute-force runs");

    cli::SweepConfig sweep;
    std::string mode = "closed";
    auto* signal = app.add_subcommand("signal-sweep", "Parity signal versus phase");
    add_squeezing(signal, sweep.squeezing);
    signal->add_option("--phi-min", sweep.phi_min, "First phase (rad)");
    signal->add_option("--phi-max", sweep.phi_max, "Last phase (rad)");
    signal->add_option("--steps", sweep.phi_steps, "Number of phase points");
    signal->add_option("--mode", mode, "closed, bruteforce or both");
    signal->add_option("--nbar-ceiling", sweep.bruteforce_nbar_ceiling,
                       "Largest nbar allowed for brute force without --allow-long");

    cli::SweepConfig curve;
    bool linear = false;
    auto* sensitivity = app.add_subcommand("sensitivity-curve", "Phase sensitivity versus nbar");
    sensitivity->add_option("--nbar-min", curve.nbar_min, "Smallest mean photon number");
    sensitivity->add_option("--nbar-max", curve.nbar_max, "Largest mean photon number");
    sensitivity->add_option("--points", curve.points, "Number of grid points");
    sensitivity->add_flag("--linear", linear, "Linear instead of logarithmic spacing");

    std::string level = "fast";
    auto* verify = app.add_subcommand("verify", "Run the invariant suites");
    verify->add_option("level", level, "fast, full or long");

    cli::EstimateConfig est;
    auto* estimate = app.add_subcommand("estimate", "Monte Carlo parity phase estimation");
    add_squeezing(estimate, est.squeezing);
    estimate->add_option("--phi", est.phi_true, "True differential phase (rad)");
    estimate->add_option("--shots", est.shots, "Parity measurements per trial");
    estimate->add_option("--trials", est.trials, "Number of trials");
    estimate->add_option("--seed", est.seed, "Master RNG seed");

    cli::Squeezing info_sq;
    auto* info = app.add_subcommand("probe-info", "Metrology summary of one probe");
    add_squeezing(info, info_sq);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return cli::kExitUsage;
    }

    std::unique_ptr<std::ofstream> file;
    if (!output.empty()) {
        file = std::make_unique<std::ofstream>(output, std::ios::binary);
        if (!*file) {
            std::cerr << "error: cannot open " << output << " for writing\n";
            return cli::kExitUsage;
        }
    }
    std::ostream& csv = file ? *file : std::cout;

    try {
        if (*signal) {
            sweep.mode = cli::parse_sweep_mode(mode);
            sweep.epsilon_tail = epsilon_tail;
            sweep.allow_long = allow_long;
            return cli::cmd_signal_sweep(sweep, csv, std::cout);
        }
        if (*sensitivity) {
            curve.log_spacing = !linear;
            return cli::cmd_sensitivity_curve(curve, csv);
        }
        if (*verify) {
            VerifyOptions opts;
            try {
                opts.level = parse_verify_level(level);
            } catch (const std::invalid_argument& e) {
                throw cli::UsageError(e.what());
            }
            if (opts.level == VerifyLevel::long_ && !allow_long) {
                throw cli::UsageError("verify long needs --allow-long");
            }
            opts.epsilon_tail = epsilon_tail;
            return cli::cmd_verify(opts, std::cout);
        }
        if (*estimate) return cli::cmd_estimate(est, std::cout, csv);
        if (*info) return cli::cmd_probe_info(info_sq, epsilon_tail, std::cout);
    } catch (const cli::UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return cli::kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return cli::kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kExitFailure;
    }
    return cli::kExitUsage;
}
