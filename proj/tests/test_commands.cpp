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

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "ampbell/commands.hpp"
#include "ampbell/errors.hpp"
#include "doctest.h"

using namespace ampbell;
using namespace ampbell::cli;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<std::vector<double>> data_rows(const std::string& csv, std::string* header = nullptr) {
    std::istringstream in(csv);
    std::string line;
    std::vector<std::vector<double>> rows;
    bool seen_header = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!seen_header) {
            seen_header = true;
            if (header) *header = line;
            continue;
        }
        std::vector<double> row;
        std::istringstream fields(line);
        std::string f;
        while (std::getline(fields, f, ',')) row.push_back(std::stod(f));
        rows.push_back(row);
    }
    return rows;
}

double report_value(const std::string& report, const std::string& key) {
    std::istringstream in(report);
    std::string line;
    const std::string prefix = key + " = ";
    while (std::getline(in, line)) {
        if (line.rfind(prefix, 0) == 0) return std::stod(line.substr(prefix.size()));
    }
    FAIL("missing key " << key);
    return NAN;
}

}  // namespace

TEST_CASE("squeezing flags") {
    CHECK(Squeezing{.r = 0.7}.resolve_r() == 0.7);
    CHECK(std::abs(Squeezing{.nbar = 6.0}.resolve_r() - std::asinh(std::sqrt(5.0) / 2.0)) < 1e-14);
    CHECK_THROWS_AS(Squeezing{}.resolve_r(), UsageError);
    CHECK_THROWS_AS((Squeezing{.r = 0.5, .nbar = 3.0}.resolve_r()), UsageError);
    CHECK_THROWS_AS(Squeezing{.r = -0.1}.resolve_r(), UsageError);
    CHECK_THROWS_AS(Squeezing{.nbar = 0.5}.resolve_r(), UsageError);
    CHECK(parse_sweep_mode("both") == SweepMode::both);
    CHECK_THROWS_AS(parse_sweep_mode("fast"), UsageError);
}

TEST_CASE("signal sweep at nbar 1 is sin(phi)") {
    SweepConfig cfg;
    cfg.squeezing.nbar = 1.0;
    cfg.phi_min = -kPi;
    cfg.phi_max = kPi;
    cfg.phi_steps = 5;
    std::ostringstream csv, report;
    REQUIRE(cmd_signal_sweep(cfg, csv, report) == kExitOk);
    std::string header;
    const auto rows = data_rows(csv.str(), &header);
    CHECK(header == "phi,signal_closed");
    REQUIRE(rows.size() == 5);
    for (const auto& row : rows) CHECK(std::abs(row[1] - std::sin(row[0])) < 1e-15);
    CHECK(rows.front()[0] == -kPi);
    CHECK(rows.back()[0] == kPi);
}

TEST_CASE("signal sweep in mode both at nbar 6") {
    SweepConfig cfg;
    cfg.squeezing.nbar = 6.0;
    cfg.phi_steps = 41;
    cfg.mode = SweepMode::both;
    std::ostringstream csv, report;
    CHECK(cmd_signal_sweep(cfg, csv, report) == kExitOk);
    std::string header;
    const auto rows = data_rows(csv.str(), &header);
    CHECK(header == "phi,signal_closed,signal_bruteforce,abs_diff");
    REQUIRE(rows.size() == 41);
    double worst = 0.0;
    for (const auto& row : rows) {
        CHECK(row[3] == std::abs(row[2] - row[1]));
        worst = std::max(worst, row[3]);
    }
    CHECK(worst < 1e-7);
    CHECK(report.str().rfind("# max_abs_diff = ", 0) == 0);
}

TEST_CASE("brute force above the ceiling needs allow_long") {
    SweepConfig cfg;
    cfg.squeezing.nbar = 60.0;
    cfg.mode = SweepMode::bruteforce;
    std::ostringstream csv, report;
    CHECK_THROWS_AS(cmd_signal_sweep(cfg, csv, report), UsageError);
    CHECK(csv.str().empty());
    cfg.mode = SweepMode::closed;
    CHECK(cmd_signal_sweep(cfg, csv, report) == kExitOk);
}

TEST_CASE("signal sweep rejects a degenerate grid") {
    SweepConfig cfg;
    cfg.squeezing.r = 0.2;
    cfg.phi_steps = 1;
    std::ostringstream csv, report;
    CHECK_THROWS_AS(cmd_signal_sweep(cfg, csv, report), UsageError);
    cfg.phi_steps = 3;
    cfg.phi_max = cfg.phi_min;
    CHECK_THROWS_AS(cmd_signal_sweep(cfg, csv, report), UsageError);
}

TEST_CASE("sensitivity curve rows") {
    SweepConfig cfg;
    cfg.nbar_min = 1.0;
    cfg.nbar_max = 60.0;
    cfg.points = 2;
    std::ostringstream csv;
    REQUIRE(cmd_sensitivity_curve(cfg, csv) == kExitOk);
    std::string header;
    const auto rows = data_rows(csv.str(), &header);
    CHECK(header == "nbar,crb,parity_delta_phi,shot_noise,heisenberg");
    REQUIRE(rows.size() == 2);
    // nbar = 1: 3 + 6 - 5 = 4, so the bound is 1; parity gives 2/2 = 1.
    CHECK(rows[0] == std::vector<double>{1.0, 1.0, 1.0, 1.0, 1.0});
    CHECK(rows[1][0] == 60.0);
    CHECK(std::abs(rows[1][1] - 2.0 / std::sqrt(3.0 * 3600 + 360 - 5)) < 1e-15);
    CHECK(std::abs(rows[1][2] - 2.0 / 61.0) < 1e-15);
    CHECK(std::abs(rows[1][3] - 1.0 / std::sqrt(60.0)) < 1e-15);
    CHECK(std::abs(rows[1][4] - 1.0 / 60.0) < 1e-15);
}

TEST_CASE("sensitivity curve ordering on the default grid") {
    SweepConfig cfg;
    cfg.nbar_min = 3.0;
    std::ostringstream csv;
    REQUIRE(cmd_sensitivity_curve(cfg, csv) == kExitOk);
    const auto rows = data_rows(csv.str());
    REQUIRE(rows.size() == 100);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        CHECK(row[4] < row[3]);
        CHECK(row[1] < row[2]);
        CHECK(row[2] < row[3]);
        if (i > 0) CHECK(row[0] > rows[i - 1][0]);
    }
}

TEST_CASE("sensitivity curve linear spacing") {
    SweepConfig cfg;
    cfg.nbar_min = 1.0;
    cfg.nbar_max = 5.0;
    cfg.points = 5;
    cfg.log_spacing = false;
    std::ostringstream csv;
    cmd_sensitivity_curve(cfg, csv);
    const auto rows = data_rows(csv.str());
    REQUIRE(rows.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) CHECK(rows[i][0] == 1.0 + static_cast<double>(i));
    cfg.nbar_min = 0.5;
    CHECK_THROWS_AS(cmd_sensitivity_curve(cfg, csv), UsageError);
}

TEST_CASE("verify fast reports every group") {
    std::ostringstream report;
    CHECK(cmd_verify({}, report) == kExitOk);
    const std::string out = report.str();
    CHECK(out.find("FAIL") == std::string::npos);
    CHECK(out.find("verify fast: ") != std::string::npos);
    CHECK(out.find("PASS  single-photon-bell-state") != std::string::npos);
}

TEST_CASE("estimate matches the linear error model") {
    for (double nbar : {1.0, 6.0}) {
        EstimateConfig cfg;
        cfg.squeezing.nbar = nbar;
        cfg.seed = 7;
        std::ostringstream report, csv;
        REQUIRE(cmd_estimate(cfg, report, csv) == kExitOk);
        const double ratio = report_value(report.str(), "ratio");
        INFO("nbar=" << nbar << " ratio=" << ratio);
        CHECK(ratio >= 0.85);
        CHECK(ratio <= 1.15);
        CHECK(report_value(report.str(), "clamped_trials") == 0.0);
        std::string header;
        const auto rows = data_rows(csv.str(), &header);
        CHECK(header == "trial,mean_parity,estimate,clamped");
        CHECK(rows.size() == 200);

        std::ostringstream report2, csv2;
        cmd_estimate(cfg, report2, csv2);
        CHECK(report.str() == report2.str());
        CHECK(csv.str() == csv2.str());
    }
}

TEST_CASE("estimate seeds differ") {
    EstimateConfig cfg;
    cfg.squeezing.nbar = 6.0;
    cfg.trials = 5;
    std::ostringstream r1, c1, r2, c2;
    cmd_estimate(cfg, r1, c1);
    cfg.seed = 2;
    cmd_estimate(cfg, r2, c2);
    CHECK(c1.str() != c2.str());
}

TEST_CASE("estimate flags") {
    EstimateConfig cfg;
    cfg.squeezing.nbar = 6.0;
    std::ostringstream report, csv;
    cfg.phi_true = 1.0;  // beyond the central branch at nbar = 6
    try {
        cmd_estimate(cfg, report, csv);
        FAIL("expected a usage error");
    } catch (const UsageError& e) {
        CHECK(std::string(e.what()).find("branch width") != std::string::npos);
    }
    cfg.phi_true = 0.0;
    cfg.shots = 0;
    CHECK_THROWS_AS(cmd_estimate(cfg, report, csv), UsageError);
    cfg.shots = 10;
    cfg.trials = 1;
    CHECK(cmd_estimate(cfg, report, csv) == kExitOk);
    CHECK(report.str().find("warning: fewer than two trials") != std::string::npos);
    CHECK(report.str().find("warning: fewer than 100 shots") != std::string::npos);
}

TEST_CASE("probe info") {
    SUBCASE("unsqueezed probe") {
        std::ostringstream out;
        REQUIRE(cmd_probe_info(Squeezing{.r = 0.0}, 1e-10, out) == kExitOk);
        const auto s = out.str();
        CHECK(report_value(s, "nbar_closed") == 1.0);
        CHECK(std::abs(report_value(s, "nbar_numeric") - 1.0) < 1e-14);
        CHECK(std::abs(report_value(s, "qfi_variance") - 1.0) < 1e-14);
        CHECK(std::abs(report_value(s, "slope_at_origin") - 1.0) < 1e-14);
        CHECK(std::abs(report_value(s, "delta_phi_parity") - 1.0) < 1e-14);
    }
    SUBCASE("nbar 60") {
        std::ostringstream out;
        REQUIRE(cmd_probe_info(Squeezing{.nbar = 60.0}, 1e-10, out) == kExitOk);
        const auto s = out.str();
        CHECK(std::abs(report_value(s, "nbar_numeric") - 60.0) / 60.0 < 1e-8);
        const double qfi = (3.0 * 3600 + 360 - 5) / 4.0;
        CHECK(std::abs(report_value(s, "qfi_variance") - qfi) / qfi < 1e-6);
        CHECK(std::abs(report_value(s, "qfi_finite_difference") - qfi) / qfi < 1e-4);
        CHECK(std::abs(report_value(s, "crb_delta_phi") / report_value(s, "crb_delta_phi_closed") -
                       1.0) < 1e-6);
        CHECK(std::abs(report_value(s, "delta_phi_parity") - 2.0 / 61.0) < 1e-10);
    }
    SUBCASE("bad tail") {
        std::ostringstream out;
        CHECK_THROWS_AS(cmd_probe_info(Squeezing{.r = 1.0}, 0.1, out), UsageError);
    }
}
