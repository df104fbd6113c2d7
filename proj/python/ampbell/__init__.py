"""Squeezed single-photon Bell-state interferometry.

Phases are in radians. ``phi`` is measured from the working point, so the
parity signal at ``phi`` is taken at a differential phase of ``phi + pi/2``.
"""

from ._core import (
    branch_half_width,
    crb_closed,
    delta_phi_parity,
    delta_phi_parity_closed,
    heisenberg_limit,
    invert_estimate,
    metrology_report,
    nbar_closed,
    probe_amplitudes,
    r_from_nbar,
    resolve_cutoff,
    run_experiment,
    run_verification,
    shot_noise_limit,
    signal_bruteforce,
    signal_bruteforce_sweep,
    signal_closed,
    signal_derivative_closed,
    slope_at_origin_closed,
)

__all__ = [
    "branch_half_width",
    "crb_closed",
    "delta_phi_parity",
    "delta_phi_parity_closed",
    "heisenberg_limit",
    "invert_estimate",
    "metrology_report",
    "nbar_closed",
    "probe_amplitudes",
    "r_from_nbar",
    "resolve_cutoff",
    "run_experiment",
    "run_verification",
    "shot_noise_limit",
    "signal_bruteforce",
    "signal_bruteforce_sweep",
    "signal_closed",
    "signal_derivative_closed",
    "slope_at_origin_closed",
]
__version__ = "0.1.0"
