"""CMUP states from the scaled eigenvalue equation."""

from .problem import Regime, ScaledProblem, control_to_problem, problem_to_control
from .series import SeriesSolution, even_coefficients, first_stationary_point, series_solution
from .state import (
    FLAT_DELTA_PHI,
    CmupState,
    achievable_range,
    build_state,
    solve_for_delta_phi,
    state_for_control,
    uncertainty_bound,
    wavefunction_phi,
)
from .sweep import SweepRecord, sweep

__all__ = [
    "FLAT_DELTA_PHI",
    "CmupState",
    "Regime",
    "ScaledProblem",
    "SeriesSolution",
    "SweepRecord",
    "achievable_range",
    "build_state",
    "control_to_problem",
    "even_coefficients",
    "first_stationary_point",
    "problem_to_control",
    "series_solution",
    "solve_for_delta_phi",
    "state_for_control",
    "sweep",
    "uncertainty_bound",
    "wavefunction_phi",
]
