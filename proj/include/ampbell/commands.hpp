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

#ifndef AMPBELL_COMMANDS_HPP
#define AMPBELL_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "ampbell/metrology.hpp"
#include "ampbell/verify.hpp"

namespace ampbell::cli {

/// Exit codes shared by all subcommands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Invalid flags or flag combinations.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Exactly one of r and nbar.
struct Squeezing {
    std::optional<double> r;
    std::optional<double> nbar;

    double resolve_r() const;
};

enum class SweepMode { closed, bruteforce, both };

SweepMode parse_sweep_mode(const std::string& name);

struct SweepConfig {
    Squeezing squeezing;
    double phi_min = -2.0 * 3.141592653589793;
    double phi_max = 2.0 * 3.141592653589793;
    std::size_t phi_steps = 201;
    double nbar_min = 1.0;
    double nbar_max = 1e4;
    std::size_t points = 100;
    bool log_spacing = true;
    SweepMode mode = SweepMode::closed;
    double epsilon_tail = kDefaultEpsilonTail;
    double bruteforce_nbar_ceiling = 20.0;
    bool allow_long = false;
};

/// CSV `phi,signal_closed[,signal_bruteforce,abs_diff]`. In mode both, a
/// `# max_abs_diff` line goes to `report`. Returns 1 if the brute-force and
/// closed forms disagree by 1e-7 or more.
int cmd_signal_sweep(const SweepConfig& cfg, std::ostream& csv, std::ostream& report);

/// CSV `nbar,crb,parity_delta_phi,shot_noise,heisenberg`.
int cmd_sensitivity_curve(const SweepConfig& cfg, std::ostream& csv);

/// One line per invariant group; returns 0 iff all pass.
int cmd_verify(const VerifyOptions& options, std::ostream& report);

struct EstimateConfig {
    Squeezing squeezing;
    double phi_true = 0.0;
    std::size_t shots = 10000;
    std::size_t trials = 200;
    std::uint64_t seed = 1;
};

/// Summary to `report`, per-trial CSV `trial,mean_parity,estimate,clamped` to `csv`.
int cmd_estimate(const EstimateConfig& cfg, std::ostream& report, std::ostream& csv);

int cmd_probe_info(const Squeezing& squeezing, double epsilon_tail, std::ostream& report);

}  // namespace ampbell::cli

#endif
