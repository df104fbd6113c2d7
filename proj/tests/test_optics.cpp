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
#include <random>

#include "ampbell/optics.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace ampbell;

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

TwoModeState random_state(std::mt19937_64& rng, std::size_t n_max) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const std::size_t d = n_max + 1;
    std::vector<Complex> amps(d * d);
    double total = 0.0;
    for (auto& c : amps) {
        c = {u(rng), u(rng)};
        total += std::norm(c);
    }
    for (auto& c : amps) c /= std::sqrt(total);
    return TwoModeState(ModeCutoff(n_max), std::move(amps));
}

Eigen::VectorXcd sector_of(const TwoModeState& s, std::size_t N) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(N + 1));
    for (std::size_t k = 0; k <= N; ++k) {
        if (k < s.dim() && N - k < s.dim()) v(static_cast<Eigen::Index>(k)) = s.at(k, N - k);
    }
    return v;
}

double max_diff(const TwoModeState& x, const TwoModeState& y) {
    REQUIRE(x.cutoff() == y.cutoff());
    double e = 0.0;
    for (std::size_t i = 0; i < x.amps().size(); ++i) e = std::max(e, std::abs(x.amps()[i] - y.amps()[i]));
    return e;
}

TwoModeState from_entries(std::size_t n_max,
                          std::initializer_list<std::tuple<std::size_t, std::size_t, Complex>> e) {
    const std::size_t d = n_max + 1;
    std::vector<Complex> amps(d * d);
    for (const auto& [n, m, c] : e) amps[n * d + m] = c;
    return TwoModeState(ModeCutoff(n_max), std::move(amps));
}

}  // namespace

TEST_CASE("SqueezeParams validation") {
    CHECK_THROWS_AS(SqueezeParams(-0.1), DomainError);
    CHECK_THROWS_AS(SqueezeParams(std::nan("")), DomainError);
    CHECK(SqueezeParams(0.3, -kPi / 2).theta == doctest::Approx(3 * kPi / 2));
    CHECK(SqueezeParams(0.3, 5 * kPi).theta == doctest::Approx(kPi));
    CHECK(SqueezeParams(0.3, 2 * kPi).theta == 0.0);
}

TEST_CASE("squeezed_vacuum") {
    SUBCASE("r = 0 is the vacuum") {
        const auto s = squeezed_vacuum(SqueezeParams(0.0), ModeCutoff(6));
        CHECK(s[0] == Complex(1.0));
        for (std::size_t n = 1; n <= 6; ++n) CHECK(s[n] == Complex(0.0));
    }
    SUBCASE("vacuum weight is sech r") {
        const auto s = squeezed_vacuum(SqueezeParams(0.5), ModeCutoff(6));
        CHECK(std::abs(std::norm(s[0]) - 1.0 / std::cosh(0.5)) < 1e-12);
    }
    SUBCASE("coefficients match the factorial formula, odd entries vanish") {
        const auto s = squeezed_vacuum(SqueezeParams(0.7), ModeCutoff(41));
        for (int n = 0; n <= 20; ++n) {
            CHECK(std::abs(s[2 * n] - oracle::squeezed_coefficient(0.7, n)) < 1e-14);
            CHECK(s[2 * n + 1] == Complex(0.0));
        }
    }
    SUBCASE("mean photon number sinh^2 r at r = 1") {
        const auto cut = resolve_cutoff(
            [](ModeCutoff c) { return tail_mass(squeezed_vacuum(SqueezeParams(1.0), c)); }, 1e-12);
        const auto s = squeezed_vacuum(SqueezeParams(1.0), cut);
        double mean = 0.0;
        for (std::size_t n = 0; n < cut.dim(); ++n) mean += static_cast<double>(n) * std::norm(s[n]);
        CHECK(std::abs(mean - std::sinh(1.0) * std::sinh(1.0)) < 1e-8);
    }
    SUBCASE("theta rotates the n-th coefficient by n theta") {
        const auto s0 = squeezed_vacuum(SqueezeParams(0.6), ModeCutoff(12));
        const auto s1 = squeezed_vacuum(SqueezeParams(0.6, 0.9), ModeCutoff(12));
        for (std::size_t n = 0; n <= 6; ++n) {
            CHECK(std::abs(s1[2 * n] - s0[2 * n] * std::polar(1.0, 0.9 * n)) < 1e-14);
        }
    }
    SUBCASE("log-domain branch for large r agrees with the ratio recurrence") {
        const double r = 3.4;
        const auto s = squeezed_vacuum(SqueezeParams(r), ModeCutoff(400));
        Complex c = std::sqrt(1.0 / std::cosh(r));
        for (int n = 0; n <= 200; ++n) {
            CHECK(std::abs(s[2 * n] - c) <= 1e-11 * std::abs(c) + 1e-300);
            c *= -std::tanh(r) * std::sqrt((2.0 * n + 1.0) / (2.0 * n + 2.0));
        }
    }
}

TEST_CASE("squeezed_one_photon") {
    SUBCASE("r = 0 is |1>") {
        const auto s = squeezed_one_photon(SqueezeParams(0.0), ModeCutoff(5));
        for (std::size_t n = 0; n <= 5; ++n) CHECK(s[n] == Complex(n == 1 ? 1.0 : 0.0));
    }
    SUBCASE("mean photon number 1 + 3 sinh^2 r and normalization at r = 0.8") {
        const double eps = 1e-12;
        const auto cut = resolve_cutoff(
            [](ModeCutoff c) { return tail_mass(squeezed_one_photon(SqueezeParams(0.8), c)); }, eps);
        const auto s = squeezed_one_photon(SqueezeParams(0.8), cut);
        double mean = 0.0;
        for (std::size_t n = 0; n < cut.dim(); ++n) {
            mean += static_cast<double>(n) * std::norm(s[n]);
            if (n % 2 == 0) CHECK(s[n] == Complex(0.0));
        }
        CHECK(std::abs(mean - (1.0 + 3.0 * std::sinh(0.8) * std::sinh(0.8))) < 1e-8);
        CHECK(s.norm_squared() >= 1.0 - eps);
        CHECK(s.norm_squared() <= 1.0 + kNormSlack);
    }
}

TEST_CASE("squeeze_matrix columns reproduce the coefficient formulas") {
    for (double theta : {0.0, 1.1}) {
        const SqueezeParams p(0.9, theta);
        const ModeCutoff cut(30);
        const auto s = squeeze_matrix(p, cut);
        const auto v0 = squeezed_vacuum(p, cut);
        const auto v1 = squeezed_one_photon(p, cut);
        for (std::size_t k = 0; k < cut.dim(); ++k) {
            CHECK(std::abs(s(k, 0) - v0[k]) < 1e-14);
            CHECK(std::abs(s(k, 1) - v1[k]) < 1e-14);
        }
    }
    // Columns for low input photon numbers are orthonormal once the cutoff
    // captures their tails.
    const auto s = squeeze_matrix(SqueezeParams(0.4, 0.3), ModeCutoff(80));
    const Eigen::MatrixXcd block = s.leftCols(6);
    CHECK((block.adjoint() * block - Eigen::MatrixXcd::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("squeeze_matrix stays orthonormal over its whole input range") {
    const auto s = squeeze_matrix(SqueezeParams(1.5, 0.7), ModeCutoff(800));
    const auto n = s.cols();
    CHECK(n == static_cast<Eigen::Index>(kMaxSqueezeInput) + 1);
    CHECK((s.adjoint() * s - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("squeezing rejects inputs beyond the trusted range") {
    const ModeCutoff cut(20);
    CHECK_THROWS_AS(squeeze_matrix(SqueezeParams(0.5), cut, kMaxSqueezeInput + 1), DomainError);
    CHECK_THROWS_AS(squeeze_modes(make_fock(kMaxSqueezeInput + 1, 0, cut), SqueezeParams(0.5),
                                  SqueezeParams(0.5)),
                    DomainError);
    CHECK_NOTHROW(squeeze_modes(make_fock(0, kMaxSqueezeInput, cut), SqueezeParams(0.5),
                                SqueezeParams(0.5)));
}

TEST_CASE("beam_splitter on Fock inputs") {
    const double h = std::sqrt(0.5);
    SUBCASE("single photon gives the path-entangled Bell state") {
        const auto out = beam_splitter(make_fock(1, 0, ModeCutoff(4)));
        CHECK(out.cutoff().n_max() == 4);
        CHECK(max_diff(out, from_entries(4, {{1, 0, h}, {0, 1, kI * h}})) < 1e-15);
    }
    SUBCASE("vacuum is invariant") {
        const auto out = beam_splitter(make_fock(0, 0, ModeCutoff(2)));
        CHECK(max_diff(out, make_fock(0, 0, ModeCutoff(2))) == 0.0);
    }
    SUBCASE("|1,1> against the dense N = 2 exponential") {
        const auto out = beam_splitter(make_fock(1, 1, ModeCutoff(2)));
        const auto want = from_entries(2, {{2, 0, kI * h}, {0, 2, kI * h}});
        CHECK(max_diff(out, want) < 1e-15);
        const Eigen::MatrixXcd u = oracle::expm(kI * (kPi / 4) * oracle::hopping(2));
        const Eigen::VectorXcd got = sector_of(out, 2);
        CHECK((got - u.col(1)).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("beam splitter sector recurrence matches the dense exponential up to N = 20") {
    double worst = 0.0;
    for (int N = 0; N <= 20; ++N) {
        const Eigen::MatrixXcd want = oracle::expm(kI * (kPi / 4) * oracle::hopping(N));
        worst = std::max(worst, (beam_splitter_sector(N) - want).cwiseAbs().maxCoeff());
    }
    CHECK(worst < 1e-10);

    // B^2 = exp(i (pi/2)(a^dag b + b^dag a)).
    for (int N : {3, 8, 15}) {
        const Eigen::MatrixXcd u = beam_splitter_sector(N);
        const Eigen::MatrixXcd want = oracle::expm(kI * (kPi / 2) * oracle::hopping(N));
        CHECK((u * u - want).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("beam_splitter grows the cutoff to hold whole sectors") {
    const auto in = make_fock(3, 3, ModeCutoff(3));
    const auto out = beam_splitter(in);
    CHECK(out.cutoff().n_max() == 6);
    CHECK(std::abs(out.norm_squared() - 1.0) < 1e-14);
    const Eigen::VectorXcd got = sector_of(out, 6);
    const Eigen::MatrixXcd u = oracle::expm(kI * (kPi / 4) * oracle::hopping(6));
    CHECK((got - u.col(3)).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("batched beam splitter equals the single-state path") {
    std::mt19937_64 rng(5);
    std::vector<TwoModeState> batch;
    for (int i = 0; i < 3; ++i) batch.push_back(random_state(rng, 5));
    const auto out = beam_splitter(std::span<const TwoModeState>(batch));
    REQUIRE(out.size() == 3);
    for (std::size_t i = 0; i < batch.size(); ++i) {
        CHECK(max_diff(out[i], beam_splitter(batch[i])) < 1e-15);
    }
    batch.push_back(make_fock(0, 0, ModeCutoff(2)));
    CHECK_THROWS_AS(beam_splitter(std::span<const TwoModeState>(batch)), DimensionMismatch);
}

TEST_CASE("unitary elements preserve the norm of random states") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n_max = 1 + trial % 9;
        const auto s = random_state(rng, n_max);
        const double n0 = s.norm_squared();
        CHECK(std::abs(beam_splitter(s).norm_squared() - n0) / n0 < 1e-12);
        CHECK(std::abs(phase_shift(s, 0.37 * trial, -1.3).norm_squared() - n0) / n0 < 1e-12);
        CHECK(std::abs(mode_swap_with_sign(s).norm_squared() - n0) / n0 < 1e-12);
    }
}

TEST_CASE("phase_shift") {
    std::mt19937_64 rng(7);
    const auto s = random_state(rng, 4);
    CHECK(max_diff(phase_shift(s, 0.0, 0.0), s) == 0.0);
    const auto flipped = phase_shift(make_fock(1, 0, ModeCutoff(3)), kPi, 0.0);
    CHECK(std::abs(flipped.at(1, 0) - Complex(-1.0)) < 1e-15);
    const auto shifted = phase_shift(s, 0.2, 0.5);
    for (std::size_t n = 0; n <= 4; ++n) {
        for (std::size_t m = 0; m <= 4; ++m) {
            CHECK(std::abs(shifted.at(n, m) - std::polar(1.0, 0.2 * n + 0.5 * m) * s.at(n, m)) < 1e-15);
        }
    }
}

TEST_CASE("parity_expectation") {
    const double h = std::sqrt(0.5);
    CHECK(parity_expectation(make_fock(0, 0, ModeCutoff(2)), Mode::b) == 1.0);
    CHECK(parity_expectation(make_fock(0, 1, ModeCutoff(2)), Mode::b) == -1.0);
    CHECK(parity_expectation(make_fock(0, 1, ModeCutoff(2)), Mode::a) == 1.0);
    const auto bell = from_entries(2, {{1, 0, h}, {0, 1, kI * h}});
    CHECK(std::abs(parity_expectation(bell, Mode::b)) < 1e-16);

    // Pi^2 = 1: <Pi psi|Pi psi> = <psi|psi> on random states.
    std::mt19937_64 rng(9);
    for (int i = 0; i < 5; ++i) {
        const auto s = random_state(rng, 5);
        const auto ps = apply_parity(s, Mode::b);
        CHECK(std::abs(inner(ps, ps) - inner(s, s)) < 1e-14);
        CHECK(std::abs(inner(s, ps).real() - parity_expectation(s, Mode::b)) < 1e-14);
    }
}

TEST_CASE("j_moments") {
    const auto m10 = j_moments(make_fock(1, 0, ModeCutoff(2)));
    CHECK(m10.j3 == 0.5);
    CHECK(m10.j3_sq == 0.25);
    CHECK(m10.j0 == 0.5);
    const double h = std::sqrt(0.5);
    const auto bell = j_moments(from_entries(2, {{1, 0, h}, {0, 1, kI * h}}));
    CHECK(std::abs(bell.j3) < 1e-15);
    CHECK(std::abs(bell.j3_sq - 0.25) < 1e-15);
    CHECK(std::abs(bell.j0 - 0.5) < 1e-15);
    CHECK(std::abs(bell.j3_variance() - 0.25) < 1e-15);
}

TEST_CASE("mode_swap_with_sign") {
    const auto out = mode_swap_with_sign(make_fock(1, 0, ModeCutoff(2)));
    CHECK(out.at(0, 1) == Complex(-1.0));
    CHECK(out.at(1, 0) == Complex(0.0));
    CHECK(mode_swap_with_sign(make_fock(0, 0, ModeCutoff(1))).at(0, 0) == Complex(1.0));

    // Against the dense exp(i pi J2) on every sector N <= 10.
    double worst = 0.0;
    for (int N = 0; N <= 10; ++N) {
        const Eigen::MatrixXcd u = oracle::expm(kI * kPi * oracle::j2(N));
        const ModeCutoff cut(std::max(N, 1));
        for (int k = 0; k <= N; ++k) {
            const auto got = sector_of(mode_swap_with_sign(make_fock(k, N - k, cut)), N);
            worst = std::max(worst, (got - u.col(k)).cwiseAbs().maxCoeff());
        }
    }
    CHECK(worst < 1e-10);
}
