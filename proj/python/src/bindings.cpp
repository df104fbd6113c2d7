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

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ampbell/estimation.hpp"
#include "ampbell/metrology.hpp"
#include "ampbell/verify.hpp"

namespace py = pybind11;
using namespace ampbell;

namespace {

ProbeSpec resolved(double r, double epsilon_tail) {
    return resolve(ProbeSpec{.r = r, .epsilon_tail = epsilon_tail});
}

py::array_t<double> to_array(const std::vector<double>& v) {
    py::array_t<double> out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Squeezed single-photon Bell-state interferometry";

    m.def("nbar_closed", &nbar_closed, py::arg("r"));
    m.def("r_from_nbar", &r_from_nbar, py::arg("nbar"));
    m.def("signal_closed", &signal_closed, py::arg("r"), py::arg("phi"));
    m.def("signal_derivative_closed", &signal_derivative_closed, py::arg("r"), py::arg("phi"));
    m.def("slope_at_origin_closed", &slope_at_origin_closed, py::arg("r"));
    m.def("crb_closed", &crb_closed, py::arg("nbar"));
    m.def("delta_phi_parity", &delta_phi_parity, py::arg("r"), py::arg("phi"));
    m.def("delta_phi_parity_closed", &delta_phi_parity_closed, py::arg("nbar"));
    m.def("shot_noise_limit", &shot_noise_limit, py::arg("nbar"));
    m.def("heisenberg_limit", &heisenberg_limit, py::arg("n"));
    m.def("branch_half_width", &branch_half_width, py::arg("r"));

    m.def(
        "resolve_cutoff",
        [](double r, double epsilon_tail) { return resolved(r, epsilon_tail).resolved_cutoff->n_max(); },
        py::arg("r"), py::arg("epsilon_tail") = kDefaultEpsilonTail,
        "Smallest per-mode cutoff whose dropped probe mass is below epsilon_tail.");

    m.def(
        "probe_amplitudes",
        [](double r, double epsilon_tail) {
            const TwoModeState s = prepare_probe(resolved(r, epsilon_tail));
            const auto d = static_cast<py::ssize_t>(s.cutoff().dim());
            py::array_t<Complex> out({d, d});
            std::copy(s.amps().begin(), s.amps().end(), out.mutable_data());
            return out;
        },
        py::arg("r"), py::arg("epsilon_tail") = kDefaultEpsilonTail,
        "Probe amplitudes c[n, m] for n photons in mode a and m in mode b.");

    m.def(
        "signal_bruteforce",
        [](double r, double phi, double epsilon_tail, double sum_phase) {
            return signal_bruteforce(resolved(r, epsilon_tail), phi, sum_phase);
        },
        py::arg("r"), py::arg("phi"), py::arg("epsilon_tail") = kDefaultEpsilonTail,
        py::arg("sum_phase") = 0.0);

    m.def(
        "signal_bruteforce_sweep",
        [](double r, const std::vector<double>& phis, double epsilon_tail, double sum_phase) {
            return to_array(signal_bruteforce_sweep(resolved(r, epsilon_tail), phis, sum_phase));
        },
        py::arg("r"), py::arg("phis"), py::arg("epsilon_tail") = kDefaultEpsilonTail,
        py::arg("sum_phase") = 0.0);

    m.def(
        "metrology_report",
        [](double r, double epsilon_tail) {
            const MetrologyReport rep = metrology_report(ProbeSpec{.r = r, .epsilon_tail = epsilon_tail});
            py::dict d;
            d["r"] = rep.r;
            d["cutoff"] = rep.cutoff.n_max();
            d["tail_mass"] = rep.tail_mass;
            d["nbar"] = rep.nbar;
            d["nbar_numeric"] = rep.nbar_numeric;
            d["qfi"] = rep.qfi;
            d["qfi_finite_difference"] = rep.qfi_finite_difference;
            d["crb_delta_phi"] = rep.crb_delta_phi;
            d["slope_at_origin"] = rep.slope_at_origin;
            d["delta_phi_parity"] = rep.delta_phi_parity;
            return d;
        },
        py::arg("r"), py::arg("epsilon_tail") = kDefaultEpsilonTail);

    m.def(
        "invert_estimate",
        [](double mean_parity, double r) {
            const Inversion inv = invert_estimate(mean_parity, r);
            return py::make_tuple(inv.phi, inv.clamped);
        },
        py::arg("mean_parity"), py::arg("r"), "Returns (phi, clamped).");

    m.def(
        "run_experiment",
        [](double r, double phi_true, std::size_t shots, std::size_t trials, std::uint64_t seed) {
            const EstimationRun run = run_experiment(r, phi_true, shots, trials, seed);
            py::dict d;
            d["r"] = run.r;
            d["phi_true"] = run.phi_true;
            d["shots"] = run.shots_per_trial;
            d["trials"] = run.trials;
            d["seed"] = run.seed;
            d["estimates"] = to_array(run.estimates);
            d["mean_parities"] = to_array(run.mean_parities);
            d["clamped_trials"] = run.clamped_trials;
            d["empirical_rmse"] = run.empirical_rmse;
            d["predicted_rmse"] = run.predicted_rmse;
            return d;
        },
        py::arg("r"), py::arg("phi_true"), py::arg("shots") = 10000, py::arg("trials") = 200,
        py::arg("seed") = 1);

    m.def(
        "run_verification",
        [](const std::string& level, double epsilon_tail) {
            VerifyOptions opt;
            opt.level = parse_verify_level(level);
            opt.epsilon_tail = epsilon_tail;
            py::list out;
            for (const auto& c : run_verification(opt)) {
                py::dict d;
                d["group"] = c.group;
                d["passed"] = c.passed;
                d["max_error"] = c.max_error;
                d["tolerance"] = c.tolerance;
                d["detail"] = c.detail;
                out.append(d);
            }
            return out;
        },
        py::arg("level") = "fast", py::arg("epsilon_tail") = kDefaultEpsilonTail);
}
