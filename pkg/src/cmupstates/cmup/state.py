"""Physical CMUP states: scaling back to angle variables and uncertainties."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..config import DEFAULT_CONFIG, SolverConfig
from ..errors import ConsistencyError, ConvergenceError, DomainError, RangeError
from ..numerics import find_root, gauss_legendre_grid
from .problem import Regime, ScaledProblem, control_to_problem
from .series import SeriesSolution, series_solution

__all__ = [
    "FLAT_DELTA_PHI",
    "CmupState",
    "build_state",
    "uncertainty_bound",
    "wavefunction_phi",
    "achievable_range",
    "solve_for_delta_phi",
    "state_for_control",
]

FLAT_DELTA_PHI = math.pi / math.sqrt(3.0)
_PI2 = math.pi * math.pi


def uncertainty_bound(p_boundary: float) -> float:
    """Right-hand side ``|1 - 2 pi P(pi)| / 2`` of the angular uncertainty relation."""
    return 0.5 * abs(1.0 - 2.0 * math.pi * p_boundary)


@dataclass(frozen=True, eq=False)
class CmupState:
    """A resolved state with zero mean angle and angular momentum.

    ``lam`` and ``mu`` are the signed Lagrange multipliers (positive in the
    small regime, negative in the large regime, zero for the flat state).
    ``norm`` scales the series solution to unit norm on ``[-pi, pi]``:
    ``psi(phi) = norm * series.psi(x0 * phi / pi)``.
    """

    problem: ScaledProblem
    x0: float
    lam: float
    mu: float
    norm: float
    phi_variance: float
    lz_variance: float
    product: float
    p_boundary: float
    bound: float
    x2_mean: float = math.nan
    series: SeriesSolution | None = None

    @property
    def regime(self) -> Regime:
        return self.problem.regime

    @property
    def delta_phi(self) -> float:
        return math.sqrt(self.phi_variance)

    @property
    def delta_lz(self) -> float:
        return math.sqrt(self.lz_variance)

    @property
    def mu_over_lambda(self) -> float:
        """``mu / lambda``; the flat state reports its limit ``pi**2 / 3``."""
        if self.regime is Regime.FLAT:
            return _PI2 / 3.0
        return self.mu / self.lam

    def psi(self, phi):
        return wavefunction_phi(self, phi)


def _flat_state() -> CmupState:
    p = 1.0 / (2.0 * math.pi)
    return CmupState(
        problem=ScaledProblem.flat(),
        x0=0.0,
        lam=0.0,
        mu=0.0,
        norm=1.0 / math.sqrt(2.0 * math.pi),
        phi_variance=_PI2 / 3.0,
        lz_variance=0.0,
        product=0.0,
        p_boundary=p,
        bound=uncertainty_bound(p),
    )


def build_state(problem: ScaledProblem, config: SolverConfig = DEFAULT_CONFIG) -> CmupState:
    """Solve, scale and normalise the state for ``problem``.

    Raises
    ------
    RangeError
        If the first stationary point is reached only after a node of psi
        (no admissible ground state, e.g. small regime with ``a >= 1/2``).
    ConsistencyError
        If ``mu - lambda <phi^2>`` comes out below ``-1e-10``.
    """
    if problem.regime is Regime.FLAT:
        return _flat_state()
    sol = series_solution(problem, config=config)
    x0 = sol.x0
    nodes, weights = gauss_legendre_grid(0.0, x0, config.quadrature)
    p = sol.psi(nodes)
    if p.min() <= 0.0 or sol.psi(x0) <= 0.0:
        raise RangeError(
            f"{problem.regime.value} a={problem.a!r}: psi changes sign before x0={x0:.6g}; "
            "no nodeless state (small regime requires 0 < a < 1/2)"
        )
    p2 = p * p
    i0 = float(np.dot(weights, p2))
    x2_mean = float(np.dot(weights, nodes * nodes * p2)) / i0

    lam_mag = x0 ** 4 / (4.0 * math.pi ** 4)
    if lam_mag == 0.0:
        raise RangeError(f"a={problem.a!r} is too close to the flat state to resolve (lambda underflows)")
    mu_mag = 2.0 * problem.a * math.sqrt(lam_mag)
    s = problem.sign  # +1 small, -1 large
    lam, mu = s * lam_mag, s * mu_mag

    norm = 1.0 / math.sqrt(2.0 * (math.pi / x0) * i0)
    phi_var = _PI2 * x2_mean / (x0 * x0)
    lz_var = mu - lam * phi_var
    if lz_var < -1e-10:
        raise ConsistencyError(f"negative angular-momentum variance {lz_var!r}")
    lz_var = max(lz_var, 0.0)
    p_boundary = (norm * float(sol.psi(x0))) ** 2
    return CmupState(
        problem=problem,
        x0=x0,
        lam=lam,
        mu=mu,
        norm=norm,
        phi_variance=phi_var,
        lz_variance=lz_var,
        product=math.sqrt(phi_var * lz_var),
        p_boundary=p_boundary,
        bound=uncertainty_bound(p_boundary),
        x2_mean=x2_mean,
        series=sol,
    )


def wavefunction_phi(state: CmupState, phi):
    """Normalised, even, real angle wavefunction on ``[-pi, pi]``."""
    phi_arr = np.asarray(phi, dtype=float)
    if not np.all(np.abs(phi_arr) <= math.pi * (1 + 1e-12)):
        raise DomainError("phi must lie in [-pi, pi]")
    if state.series is None:
        out = np.full(phi_arr.shape, state.norm)
    else:
        out = state.norm * state.series.psi(np.abs(phi_arr) * (state.x0 / math.pi))
    return float(out) if np.ndim(phi) == 0 else out


def state_for_control(c: float, config: SolverConfig = DEFAULT_CONFIG) -> CmupState:
    return build_state(control_to_problem(c), config)


def achievable_range(config: SolverConfig = DEFAULT_CONFIG) -> tuple[float, float]:
    """Angle uncertainties reached at the control floor and at ``a_max``."""
    lo = state_for_control(config.small_control_floor, config).delta_phi
    hi = state_for_control(config.a_max, config).delta_phi
    return lo, hi


def solve_for_delta_phi(
    target: float, tol: float = 1e-8, config: SolverConfig = DEFAULT_CONFIG
) -> CmupState:
    """State whose angle uncertainty is ``target`` to within ``tol``.

    Delta-phi increases monotonically with the signed control, so a bracketed
    root search on the control suffices.
    """
    if not tol > 0:
        raise DomainError("tol must be positive")
    if abs(target - FLAT_DELTA_PHI) <= tol:
        return _flat_state()
    lo, hi = achievable_range(config)
    if not lo < target < hi:
        raise RangeError(
            f"delta_phi={target!r} outside the achievable range ({lo:.10g}, {hi:.10g})",
            (lo, hi),
        )
    cache: dict[float, CmupState] = {}

    def mismatch(c: float) -> float:
        if c not in cache:
            cache[c] = state_for_control(c, config)
        return cache[c].delta_phi - target

    if target < FLAT_DELTA_PHI:
        bracket = (config.small_control_floor, 0.0)
    else:
        bracket = (0.0, config.a_max)
    c = find_root(mismatch, *bracket, tol=1e-15, ftol=tol)
    mismatch(c)
    state = cache[c]
    if abs(state.delta_phi - target) > tol:
        raise ConvergenceError(
            f"control search stalled at c={c!r} with delta_phi={state.delta_phi!r}"
        )
    return state
