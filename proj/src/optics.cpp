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

#include "ampbell/optics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace ampbell {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kLogDomainThreshold = 3.0;

Complex times_i(Complex z) { return {-z.imag(), z.real()}; }

// C_n for n = 0 .. count-1.
std::vector<Complex> vacuum_coefficients(const SqueezeParams& p, std::size_t count) {
    std::vector<Complex> c(count);
    if (count == 0) return c;
    const double t = std::tanh(p.r);
    const double sech = 1.0 / std::cosh(p.r);
    if (p.r > kLogDomainThreshold) {
        // log|C_n| = (1/2) log sech + (1/2) lgamma(2n+1) - lgamma(n+1) - n log 2 + n log tanh
        const double log_sech = std::log(sech);
        const double log_t = std::log(t);
        for (std::size_t n = 0; n < count; ++n) {
            const double dn = static_cast<double>(n);
            const double log_mag = 0.5 * log_sech + 0.5 * std::lgamma(2.0 * dn + 1.0) -
                                   std::lgamma(dn + 1.0) - dn * std::numbers::ln2 + dn * log_t;
            c[n] = std::polar(std::exp(log_mag), dn * (p.theta + std::numbers::pi));
        }
        return c;
    }
    const Complex ratio = -std::polar(t, p.theta);
    c[0] = std::sqrt(sech);
    for (std::size_t n = 0; n + 1 < count; ++n) {
        const double dn = static_cast<double>(n);
        c[n + 1] = c[n] * ratio * std::sqrt((2.0 * dn + 1.0) / (2.0 * dn + 2.0));
    }
    return c;
}

std::size_t highest_occupied_sector(const TwoModeState& s) {
    const std::size_t d = s.dim();
    auto amps = s.amps();
    std::size_t top = 0;
    for (std::size_t n = 0; n < d; ++n) {
        for (std::size_t m = 0; m < d; ++m) {
            if (amps[n * d + m] != Complex{}) top = std::max(top, n + m);
        }
    }
    return top;
}

// Builds U_N from U_{N-1} in place. With N|k, N-k> = sqrt(k) a^dag|k-1, N-k> +
// sqrt(N-k) b^dag|k, N-k-1>, column k of U_N (= B|k, N-k>) is
//   (sqrt(k) a'^dag U_{N-1}[:, k-1] + sqrt(N-k) b'^dag U_{N-1}[:, k]) / N,
// where a'^dag = B a^dag B^dag = (a^dag + i b^dag)/sqrt2 and
// b'^dag = B b^dag B^dag = (i a^dag + b^dag)/sqrt2.
// As a map on U_{N-1} this is E -> (a'^dag E a + b'^dag E b)/N, whose norm is
// at most 1, so rounding errors add up linearly in N instead of compounding.
void advance_beam_splitter(Eigen::MatrixXcd& u, std::size_t N) {
    Eigen::MatrixXcd next(N + 1, N + 1);
    const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
    std::vector<double> sq(N + 1);
    for (std::size_t j = 0; j <= N; ++j) sq[j] = std::sqrt(static_cast<double>(j));
    std::vector<Complex> up_a(N + 1), up_b(N + 1);

    // On a sector N-1 vector v: (a^dag v)[j] = sqrt(j) v[j-1], (b^dag v)[j] = sqrt(N-j) v[j].
    for (std::size_t k = 0; k <= N; ++k) {
        std::fill(up_a.begin(), up_a.end(), Complex{});
        std::fill(up_b.begin(), up_b.end(), Complex{});
        if (k >= 1) {
            const Complex* v = u.col(static_cast<Eigen::Index>(k - 1)).data();
            const double w = sq[k];
            for (std::size_t j = 0; j <= N; ++j) {
                const Complex a = j >= 1 ? sq[j] * v[j - 1] : Complex{};
                const Complex b = j < N ? sq[N - j] * v[j] : Complex{};
                up_a[j] += w * (a + times_i(b));
            }
        }
        if (k < N) {
            const Complex* v = u.col(static_cast<Eigen::Index>(k)).data();
            const double w = sq[N - k];
            for (std::size_t j = 0; j <= N; ++j) {
                const Complex a = j >= 1 ? sq[j] * v[j - 1] : Complex{};
                const Complex b = j < N ? sq[N - j] * v[j] : Complex{};
                up_b[j] += w * (times_i(a) + b);
            }
        }
        const double scale = inv_sqrt2 / static_cast<double>(N);
        Complex* out = next.col(static_cast<Eigen::Index>(k)).data();
        for (std::size_t j = 0; j <= N; ++j) out[j] = scale * (up_a[j] + up_b[j]);
    }
    u.swap(next);
}

}  // namespace

SqueezeParams::SqueezeParams(double r_in, double theta_in) : r(r_in), theta(theta_in) {
    if (!std::isfinite(r) || !std::isfinite(theta)) {
        throw DomainError("squeezing parameters must be finite");
    }
    if (r < 0.0) throw DomainError("squeezing strength r must be non-negative");
    theta = std::fmod(theta, kTwoPi);
    if (theta < 0.0) theta += kTwoPi;
    if (theta >= kTwoPi) theta = 0.0;
}

SingleModeState squeezed_vacuum(const SqueezeParams& p, ModeCutoff cutoff) {
    const auto coeff = vacuum_coefficients(p, cutoff.n_max() / 2 + 1);
    std::vector<Complex> amps(cutoff.dim());
    for (std::size_t n = 0; n < coeff.size(); ++n) amps[2 * n] = coeff[n];
    return SingleModeState(cutoff, std::move(amps));
}

SingleModeState squeezed_one_photon(const SqueezeParams& p, ModeCutoff cutoff) {
    const auto coeff = vacuum_coefficients(p, (cutoff.n_max() + 1) / 2);
    const double sech = 1.0 / std::cosh(p.r);
    std::vector<Complex> amps(cutoff.dim());
    for (std::size_t m = 0; m < coeff.size(); ++m) {
        amps[2 * m + 1] = sech * std::sqrt(2.0 * static_cast<double>(m) + 1.0) * coeff[m];
    }
    return SingleModeState(cutoff, std::move(amps));
}

Eigen::MatrixXcd squeeze_matrix(const SqueezeParams& p, ModeCutoff cutoff,
                                std::size_t input_max) {
    if (input_max > kMaxSqueezeInput)
        throw DomainError("squeeze_matrix: input photon number above " +
                          std::to_string(kMaxSqueezeInput));
    const auto d = static_cast<Eigen::Index>(cutoff.dim());
    const auto cols = std::min<Eigen::Index>(d, static_cast<Eigen::Index>(input_max) + 1);
    const double t = std::tanh(p.r);
    const double sech = 1.0 / std::cosh(p.r);
    const Complex r00 = -std::polar(t, p.theta);
    const Complex r11 = std::polar(t, -p.theta);
    auto sq = [](Eigen::Index x) { return std::sqrt(static_cast<double>(x)); };

    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(d, cols);
    s(0, 0) = std::sqrt(sech);
    for (Eigen::Index k = 2; k < d; k += 2) s(k, 0) = sq(k - 1) / sq(k) * r00 * s(k - 2, 0);
    for (Eigen::Index n = 1; n < cols; ++n) {
        // k + n odd is forbidden by parity conservation.
        for (Eigen::Index k = (n % 2); k < d; k += 2) {
            Complex v = 0.0;
            if (n >= 2) v += sq(n - 1) / sq(n) * r11 * s(k, n - 2);
            if (k >= 1) v += sq(k) / sq(n) * sech * s(k - 1, n - 1);
            s(k, n) = v;
        }
    }
    return s;
}

TwoModeState squeeze_modes(const TwoModeState& s, const SqueezeParams& pa,
                           const SqueezeParams& pb) {
    const auto d = static_cast<Eigen::Index>(s.dim());
    using RowMajor = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    Eigen::Map<const RowMajor> in(s.amps().data(), d, d);
    Eigen::Index top_a = 0, top_b = 0;
    for (Eigen::Index n = 0; n < d; ++n)
        for (Eigen::Index m = 0; m < d; ++m)
            if (in(n, m) != Complex{}) {
                top_a = std::max(top_a, n);
                top_b = std::max(top_b, m);
            }
    const auto sa = squeeze_matrix(pa, s.cutoff(), static_cast<std::size_t>(top_a));
    const auto sb = squeeze_matrix(pb, s.cutoff(), static_cast<std::size_t>(top_b));
    const RowMajor out = sa * in.topLeftCorner(top_a + 1, top_b + 1) * sb.transpose();
    return TwoModeState(s.cutoff(), std::vector<Complex>(out.data(), out.data() + out.size()));
}

Eigen::MatrixXcd beam_splitter_sector(std::size_t N) {
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Ones(1, 1);
    for (std::size_t n = 1; n <= N; ++n) advance_beam_splitter(u, n);
    return u;
}

std::vector<TwoModeState> beam_splitter(std::span<const TwoModeState> batch) {
    if (batch.empty()) return {};
    const ModeCutoff in_cut = batch.front().cutoff();
    std::size_t top = 0;
    for (const auto& s : batch) {
        if (s.cutoff() != in_cut) throw DimensionMismatch("beam_splitter: batch cutoffs differ");
        top = std::max(top, highest_occupied_sector(s));
    }
    const std::size_t k_in = in_cut.n_max();
    const ModeCutoff out_cut(std::max(k_in, top));
    const std::size_t d_in = in_cut.dim();
    const std::size_t d_out = out_cut.dim();
    const auto count = static_cast<Eigen::Index>(batch.size());

    std::vector<std::vector<Complex>> out(batch.size(), std::vector<Complex>(d_out * d_out));
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Ones(1, 1);
    for (std::size_t N = 0; N <= top; ++N) {
        if (N > 0) advance_beam_splitter(u, N);
        const std::size_t lo = N > k_in ? N - k_in : 0;
        const std::size_t hi = std::min(N, k_in);
        const auto len = static_cast<Eigen::Index>(hi - lo + 1);

        Eigen::MatrixXcd in(len, count);
        for (Eigen::Index b = 0; b < count; ++b) {
            auto amps = batch[static_cast<std::size_t>(b)].amps();
            for (std::size_t k = lo; k <= hi; ++k) {
                in(static_cast<Eigen::Index>(k - lo), b) = amps[k * d_in + (N - k)];
            }
        }
        if (in.isZero(0.0)) continue;
        const Eigen::MatrixXcd res = u.middleCols(static_cast<Eigen::Index>(lo), len) * in;
        for (Eigen::Index b = 0; b < count; ++b) {
            auto& dst = out[static_cast<std::size_t>(b)];
            for (std::size_t k = 0; k <= N; ++k) {
                dst[k * d_out + (N - k)] = res(static_cast<Eigen::Index>(k), b);
            }
        }
    }

    std::vector<TwoModeState> states;
    states.reserve(batch.size());
    for (auto& amps : out) states.emplace_back(out_cut, std::move(amps));
    return states;
}

TwoModeState beam_splitter(const TwoModeState& s) {
    return std::move(beam_splitter(std::span<const TwoModeState>(&s, 1)).front());
}

TwoModeState phase_shift(const TwoModeState& s, double phi_a, double phi_b) {
    const std::size_t d = s.dim();
    std::vector<Complex> ea(d), eb(d);
    for (std::size_t n = 0; n < d; ++n) {
        ea[n] = std::polar(1.0, phi_a * static_cast<double>(n));
        eb[n] = std::polar(1.0, phi_b * static_cast<double>(n));
    }
    auto in = s.amps();
    std::vector<Complex> amps(in.size());
    for (std::size_t n = 0; n < d; ++n) {
        for (std::size_t m = 0; m < d; ++m) amps[n * d + m] = ea[n] * eb[m] * in[n * d + m];
    }
    return TwoModeState(s.cutoff(), std::move(amps));
}

TwoModeState apply_parity(const TwoModeState& s, Mode mode) {
    const std::size_t d = s.dim();
    std::vector<Complex> amps(s.amps().begin(), s.amps().end());
    for (std::size_t n = 0; n < d; ++n) {
        for (std::size_t m = 0; m < d; ++m) {
            const std::size_t count = mode == Mode::a ? n : m;
            if (count % 2 == 1) amps[n * d + m] = -amps[n * d + m];
        }
    }
    return TwoModeState(s.cutoff(), std::move(amps));
}

double parity_expectation(const TwoModeState& s, Mode mode) {
    const std::size_t d = s.dim();
    auto amps = s.amps();
    double even = 0.0;
    double odd = 0.0;
    for (std::size_t n = 0; n < d; ++n) {
        for (std::size_t m = 0; m < d; ++m) {
            const std::size_t count = mode == Mode::a ? n : m;
            (count % 2 == 0 ? even : odd) += std::norm(amps[n * d + m]);
        }
    }
    return even - odd;
}

JMoments j_moments(const TwoModeState& s) {
    const std::size_t d = s.dim();
    auto amps = s.amps();
    JMoments mom{0.0, 0.0, 0.0};
    for (std::size_t n = 0; n < d; ++n) {
        for (std::size_t m = 0; m < d; ++m) {
            const double w = std::norm(amps[n * d + m]);
            const double diff = 0.5 * (static_cast<double>(n) - static_cast<double>(m));
            mom.j3 += diff * w;
            mom.j3_sq += diff * diff * w;
            mom.j0 += 0.5 * static_cast<double>(n + m) * w;
        }
    }
    return mom;
}

TwoModeState mode_swap_with_sign(const TwoModeState& s) {
    const std::size_t d = s.dim();
    auto in = s.amps();
    std::vector<Complex> amps(in.size());
    for (std::size_t n = 0; n < d; ++n) {
        for (std::size_t m = 0; m < d; ++m) {
            const Complex c = in[m * d + n];
            amps[n * d + m] = (m % 2 == 0) ? c : -c;
        }
    }
    return TwoModeState(s.cutoff(), std::move(amps));
}

}  // namespace ampbell
