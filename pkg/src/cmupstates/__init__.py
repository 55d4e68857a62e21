"""Constrained minimum uncertainty product states for angle and angular momentum."""

__version__ = "0.1.0"

from .airyapprox import AiryState, airy_state, airy_uncertainty_product
from .cmup import (
    FLAT_DELTA_PHI,
    CmupState,
    Regime,
    ScaledProblem,
    SweepRecord,
    build_state,
    solve_for_delta_phi,
    sweep,
    uncertainty_bound,
)
from .config import DEFAULT_CONFIG, SolverConfig, load_config
from .errors import (
    BracketError,
    CmupError,
    ConsistencyError,
    ConvergenceError,
    DomainError,
    IntegrationError,
    RangeError,
    RegimeError,
    SearchError,
    ShootingOverflow,
)

__all__ = [
    "__version__",
    "AiryState",
    "airy_state",
    "airy_uncertainty_product",
    "FLAT_DELTA_PHI",
    "CmupState",
    "Regime",
    "ScaledProblem",
    "SweepRecord",
    "build_state",
    "solve_for_delta_phi",
    "sweep",
    "uncertainty_bound",
    "DEFAULT_CONFIG",
    "SolverConfig",
    "load_config",
    "BracketError",
    "CmupError",
    "ConsistencyError",
    "ConvergenceError",
    "DomainError",
    "IntegrationError",
    "RangeError",
    "RegimeError",
    "SearchError",
    "ShootingOverflow",
]
