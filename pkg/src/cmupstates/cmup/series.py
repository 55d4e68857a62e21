"""Even power-series solution of the scaled equation psi'' = s (x**2/4 - a) psi."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

from ..config import DEFAULT_CONFIG, SolverConfig
from ..errors import ConvergenceError, DomainError, SearchError
from ..numerics import find_root
from .problem import Regime, ScaledProblem

__all__ = ["SeriesSolution", "series_solution", "first_stationary_point", "even_coefficients"]


def even_coefficients(
    sign: int, a: float, radius: float, tol: float, max_terms: int
) -> np.ndarray:
    """Coefficients ``c_0, c_2, c_4, ...`` with ``c_0 = 1``.

    Substituting ``sum c_2k x**2k`` gives
    ``(2k+2)(2k+1) c_{2k+2} = s (c_{2k-2}/4 - a c_2k)``. Terms are generated
    until ``|c_2k| radius**2k <= tol`` three times in a row on the decaying
    side of the tail (``psi(0) = 1`` bounds the sup from below).
    """
    coeffs = [1.0, -sign * a / 2.0]
    log_r2 = 2.0 * math.log(radius)
    prev = math.inf
    quiet = 0
    k = 1
    while k < max_terms:
        nxt = sign * (coeffs[k - 1] / 4.0 - a * coeffs[k]) / ((2 * k + 2) * (2 * k + 1))
        coeffs.append(nxt)
        k += 1
        size = math.exp(min(math.log(abs(nxt)) + k * log_r2, 700.0)) if nxt else 0.0
        if size <= tol and size <= prev:
            quiet += 1
            if quiet >= 3:
                return np.array(coeffs)
        else:
            quiet = 0
        prev = size
    raise ConvergenceError(
        f"series tail still above {tol!r} after {max_terms} terms at radius {radius!r}"
    )


def _eval(coeffs: np.ndarray, x):
    x = np.asarray(x, dtype=float)
    return npoly.polyval(x * x, coeffs)


def _deriv_coeffs(coeffs: np.ndarray) -> np.ndarray:
    # psi' = x * sum_k 2(k+1) c_{2k+2} x**2k
    k = np.arange(len(coeffs) - 1)
    return 2.0 * (k + 1) * coeffs[1:]


def _second_coeffs(coeffs: np.ndarray) -> np.ndarray:
    k = np.arange(len(coeffs) - 1)
    return (2.0 * k + 2) * (2.0 * k + 1) * coeffs[1:]


@dataclass(frozen=True, eq=False)
class SeriesSolution:
    """Truncated Maclaurin series of the even solution with ``psi(0) = 1``.

    ``coefficients[k]`` multiplies ``x**(2k)``; odd orders vanish
    identically and are not stored. ``radius`` is the largest ``x`` at which
    the truncation has been certified.
    """

    problem: ScaledProblem
    coefficients: np.ndarray
    truncation_order: int
    x0: float
    sign: int
    radius: float

    def psi(self, x):
        return _eval(self.coefficients, x)

    def dpsi(self, x):
        x = np.asarray(x, dtype=float)
        return x * npoly.polyval(x * x, _deriv_coeffs(self.coefficients))

    def d2psi(self, x):
        x = np.asarray(x, dtype=float)
        return npoly.polyval(x * x, _second_coeffs(self.coefficients))

    def residual(self, points: int = 50) -> float:
        """Max ODE residual on ``[0, x0]`` relative to the sup of ``|psi|`` there."""
        x = np.linspace(0.0, self.x0, points)
        p = self.psi(x)
        lhs = self.d2psi(x)
        rhs = self.sign * (x * x / 4.0 - self.problem.a) * p
        return float(np.max(np.abs(lhs - rhs)) / np.max(np.abs(p)))


def _scan_for_stationary(coeffs, sign, limit, points, root_tol) -> float | None:
    dcoeffs = _deriv_coeffs(coeffs)

    def dpsi(t):
        return t * npoly.polyval(t * t, dcoeffs)

    # geometric head resolves the tiny x0 ~ sqrt(12 a) of near-flat states
    a = 2.0 * abs(coeffs[1])
    head = min(1e-9, 0.1 * math.sqrt(12.0 * a)) if a > 0 else 1e-9
    grid = np.union1d(np.geomspace(head, limit, points // 8), np.linspace(0.0, limit, points)[1:])
    values = dpsi(grid)
    initial = -sign  # psi''(0) = -s a fixes the sign of psi' just right of 0
    flipped = np.nonzero(np.sign(values) != initial)[0]
    if flipped.size == 0:
        return None
    i = int(flipped[0])
    if values[i] == 0.0:
        return float(grid[i])
    # relative floor keeps tiny x0 (near-flat states) accurate to full precision
    tol = min(root_tol, 1e-15 * float(grid[i]))
    return find_root(lambda t: float(dpsi(t)), float(grid[i - 1]), float(grid[i]), tol)


def first_stationary_point(sol: SeriesSolution, config: SolverConfig = DEFAULT_CONFIG) -> float:
    """Smallest ``x > 0`` with ``psi'(x) = 0`` within the certified radius.

    For the large regime this is a maximum of ``psi``; for the small regime a
    minimum. The first sign change is taken either way.
    """
    limit = sol.radius / 1.5
    x0 = _scan_for_stationary(sol.coefficients, sol.sign, limit, config.scan_points, config.root_tol)
    if x0 is None:
        raise SearchError(f"psi' keeps its sign up to x={limit:.6g}", limit)
    return x0


def series_solution(
    problem: ScaledProblem,
    tol: float | None = None,
    config: SolverConfig = DEFAULT_CONFIG,
) -> SeriesSolution:
    """Solve the scaled equation by power series and locate ``x0``.

    The certified radius starts at ``1.5 (2 sqrt(a) + 2)`` and grows by 1.5x
    until the first stationary point lies inside ``radius / 1.5``.

    Raises
    ------
    DomainError
        For the flat problem (no scaling exists) or ``a`` above the ceiling.
    SearchError
        If no stationary point exists below ``config.max_series_radius / 1.5``.
    ConvergenceError
        If the truncation cap is hit or the ODE residual check fails.
    """
    if problem.regime is Regime.FLAT:
        raise DomainError("the flat state has no scaled series solution")
    if problem.a > config.a_max:
        raise DomainError(f"a={problem.a!r} exceeds the configured ceiling {config.a_max!r}")
    tol = config.series_tail_tol if tol is None else tol
    if not tol > 0:
        raise DomainError("tol must be positive")
    sign = problem.sign
    radius = 1.5 * (2.0 * math.sqrt(problem.a) + 2.0)
    while True:
        radius = min(radius, config.max_series_radius)
        coeffs = even_coefficients(sign, problem.a, radius, tol, config.max_series_terms)
        x0 = _scan_for_stationary(coeffs, sign, radius / 1.5, config.scan_points, config.root_tol)
        if x0 is not None:
            break
        if radius >= config.max_series_radius:
            raise SearchError(
                f"no stationary point of psi for {problem.regime.value} a={problem.a!r} "
                f"up to x={radius / 1.5:.6g}",
                radius / 1.5,
            )
        radius *= 1.5
    sol = SeriesSolution(problem, coeffs, 2 * (len(coeffs) - 1), x0, sign, radius)
    res = sol.residual()
    if res > config.residual_tol:
        raise ConvergenceError(
            f"ODE residual {res:.3e} on [0, x0={x0:.6g}] exceeds {config.residual_tol:.1e} "
            f"(order {sol.truncation_order}, radius {radius:.6g})"
        )
    return sol
