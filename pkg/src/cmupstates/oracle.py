"""Brute-force cross-checks for the series solver and the Airy closed forms.

Nothing here evaluates the power series: the ODE is re-integrated with
classical fixed-step RK4, and moments are taken with a quadrature rule at
twice the production resolution.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .cmup.problem import Regime, ScaledProblem
from .cmup.state import CmupState
from .errors import DomainError, ShootingOverflow
from .numerics import DEFAULT_RULE, QuadratureRule, find_root, integrate, kummer_m

__all__ = [
    "ORACLE_STEP",
    "ShootingProfile",
    "rk4_shoot",
    "rk4_stationary_point",
    "lz_by_parts",
    "moment_quadrature",
    "kummer_profile",
]

ORACLE_STEP = 1e-4


@dataclass(frozen=True, eq=False)
class ShootingProfile:
    """Samples ``(x, psi, dpsi)`` of an RK4 run starting at ``psi(0)=1, psi'(0)=0``."""

    problem: ScaledProblem
    step: float
    x: np.ndarray
    psi: np.ndarray
    dpsi: np.ndarray

    @property
    def samples(self) -> list[tuple[float, float, float]]:
        return list(zip(self.x.tolist(), self.psi.tolist(), self.dpsi.tolist()))

    def d2psi(self, x, psi):
        return self.problem.sign * (x * x / 4.0 - self.problem.a) * psi


def _check_problem(problem: ScaledProblem) -> None:
    if problem.regime is Regime.FLAT:
        raise DomainError("the flat state has nothing to integrate")


def _rk4(problem: ScaledProblem, x_max: float, step: float, extra: bool):
    """Fixed-step RK4; the final step is shortened to land on ``x_max``.

    With ``extra`` the state also carries ``int psi**2`` and ``int psi'**2``.
    """
    s, a = problem.sign, problem.a
    n = max(1, math.ceil(x_max / step - 1e-9))
    xs = [0.0]
    ps = [1.0]
    ds = [0.0]
    p, d, i0, i1 = 1.0, 0.0, 0.0, 0.0
    cp = cd = 0.0  # Kahan compensation for the state updates
    for j in range(n):
        x = j * step
        xe = (j + 1) * step if j < n - 1 else x_max
        h = xe - x
        xm = x + 0.5 * h
        q0 = s * (x * x / 4.0 - a)
        qm = s * (xm * xm / 4.0 - a)
        qe = s * (xe * xe / 4.0 - a)
        k1p, k1d = d, q0 * p
        p2, d2 = p + 0.5 * h * k1p, d + 0.5 * h * k1d
        k2p, k2d = d2, qm * p2
        p3, d3 = p + 0.5 * h * k2p, d + 0.5 * h * k2d
        k3p, k3d = d3, qm * p3
        p4, d4 = p + h * k3p, d + h * k3d
        k4p, k4d = d4, qe * p4
        if extra:
            i0 += h * (p * p + 2 * p2 * p2 + 2 * p3 * p3 + p4 * p4) / 6.0
            i1 += h * (d * d + 2 * d2 * d2 + 2 * d3 * d3 + d4 * d4) / 6.0
        inc = h * (k1p + 2 * k2p + 2 * k3p + k4p) / 6.0 - cp
        t = p + inc
        cp = (t - p) - inc
        p = t
        inc = h * (k1d + 2 * k2d + 2 * k3d + k4d) / 6.0 - cd
        t = d + inc
        cd = (t - d) - inc
        d = t
        if not (math.isfinite(p) and math.isfinite(d)):
            raise ShootingOverflow(f"RK4 overflow after x={xs[-1]!r}", xs[-1])
        xs.append(xe)
        ps.append(p)
        ds.append(d)
    return xs, ps, ds, i0, i1


def rk4_shoot(problem: ScaledProblem, x_max: float, step: float = ORACLE_STEP) -> ShootingProfile:
    """Integrate ``psi'' = s (x**2/4 - a) psi`` from 0 to ``x_max``."""
    _check_problem(problem)
    if not (step > 0 and x_max > 0):
        raise DomainError("step and x_max must be positive")
    xs, ps, ds, _, _ = _rk4(problem, x_max, step, extra=False)
    return ShootingProfile(problem, step, np.array(xs), np.array(ps), np.array(ds))


def rk4_stationary_point(profile: ShootingProfile, tol: float = 1e-13) -> float:
    """First sign change of ``psi'`` refined on a cubic Hermite interpolant.

    The interpolant uses ``psi'`` and ``psi'' = s (x**2/4 - a) psi`` at the
    ends of the bracketing step.
    """
    d = profile.dpsi
    initial = np.sign(d[1])
    flipped = np.nonzero(np.sign(d[1:]) != initial)[0]
    if flipped.size == 0:
        raise DomainError("psi' does not change sign on the profile")
    i = int(flipped[0]) + 1
    x0, x1 = profile.x[i - 1], profile.x[i]
    f0, f1 = d[i - 1], d[i]
    g0 = profile.d2psi(x0, profile.psi[i - 1])
    g1 = profile.d2psi(x1, profile.psi[i])
    h = x1 - x0

    def hermite(x: float) -> float:
        t = (x - x0) / h
        h00 = 2 * t ** 3 - 3 * t ** 2 + 1
        h10 = t ** 3 - 2 * t ** 2 + t
        h01 = -2 * t ** 3 + 3 * t ** 2
        h11 = t ** 3 - t ** 2
        return h00 * f0 + h10 * h * g0 + h01 * f1 + h11 * h * g1

    if f1 == 0.0:
        return float(x1)
    return find_root(hermite, float(x0), float(x1), tol)


def lz_by_parts(state: CmupState, step: float = ORACLE_STEP) -> float:
    """``<L_z**2> = int psi'(phi)**2 dphi`` for the normalised state.

    Valid because the state is continuously differentiable at the interval
    edges. Uses RK4 on ``[0, x0]`` with the two integrals carried along, so
    ``<L_z**2> = (x0/pi)**2 * int psi_x**2 / int psi**2``.
    """
    if state.regime is Regime.FLAT:
        return 0.0
    _, _, _, i0, i1 = _rk4(state.problem, state.x0, step, extra=True)
    return (state.x0 / math.pi) ** 2 * i1 / i0


def moment_quadrature(
    state_profile: Callable,
    lo: float,
    hi: float,
    power: int,
    rule: QuadratureRule = DEFAULT_RULE,
) -> float:
    """``int phi**power * psi(phi)**2`` over ``[lo, hi]`` at twice the panel count of ``rule``."""
    if power not in (0, 2):
        raise DomainError("power must be 0 or 2")
    if not lo < hi:
        raise DomainError("lo must be below hi")

    def integrand(phi):
        v = np.asarray(state_profile(phi), dtype=float)
        return phi ** power * v * v

    return integrate(integrand, lo, hi, rule.refined(2))


def kummer_profile(lambda_mag: float, mu_mag: float, phi) -> complex | np.ndarray:
    """Unnormalised closed form of the large-regime wavefunction.

    ``exp(-i sqrt|l| phi**2 / 2) M(1/4 - i |m| / (4 sqrt|l|), 1/2, i sqrt|l| phi**2)``
    is a constant multiple of the real, even solution; its phase is global.
    """
    root = math.sqrt(lambda_mag)
    a = 0.25 - 0.25j * mu_mag / root

    def one(p: float) -> complex:
        w = root * p * p
        return cmath.exp(-0.5j * w) * kummer_m(a, 0.5, 1j * w)

    if np.ndim(phi) == 0:
        return one(float(phi))
    return np.array([one(float(p)) for p in np.ravel(phi)]).reshape(np.shape(phi))
