"""Airy-function approximation of large-uncertainty states near delta_phi -> pi.

Near the turning point ``phi_t = sqrt(mu/lambda)`` the coefficient
``lambda phi**2 - mu`` is linearised, giving

    psi(phi) = C Ai(-k (phi - phi_t)),    k = (2 sqrt(mu lambda))**(1/3).

The boundary condition ``psi'(pi) = 0`` pins ``-k (pi - phi_t)`` to the first
zero ``a1`` of Ai'. All quantities here use magnitudes ``|lambda|``, ``|mu|``;
signs (both negative) are reattached only for the angular-momentum variance.
Normalisation and the angle variance extend the decaying tail to infinity,
which makes closed forms possible via antiderivatives of ``t**n Ai(t)**2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cmup.state import uncertainty_bound
from .errors import DomainError, RegimeError
from .numerics import airy_ai, airy_ai_and_prime, find_root, first_zero_ai_prime

__all__ = [
    "AiryState",
    "validity_threshold",
    "ratio_from_lambda_exact",
    "ratio_from_lambda_approx",
    "normalization_constant",
    "delta_phi_sq_analytic",
    "airy_state",
    "airy_wavefunction",
    "boundary_argument",
    "airy_uncertainty_product",
    "airy_bound",
    "albright_primitives",
    "lambda_for_delta_phi",
]

_PI = math.pi


def _zero(a1: float | None) -> float:
    return first_zero_ai_prime() if a1 is None else float(a1)


def _scale(lambda_mag: float, mu_mag: float) -> float:
    return (2.0 * math.sqrt(mu_mag * lambda_mag)) ** (1.0 / 3.0)


@dataclass(frozen=True)
class AiryState:
    lambda_mag: float
    ratio_sqrt: float
    c_norm: float
    k: float
    phi_variance: float
    a1: float

    @property
    def mu_mag(self) -> float:
        return self.lambda_mag * self.ratio_sqrt ** 2

    @property
    def delta_phi(self) -> float:
        return math.sqrt(self.phi_variance)

    @property
    def lz_variance(self) -> float:
        # mu - lambda <phi^2> with lambda = -|lambda|, mu = -|mu|
        return self.lambda_mag * self.phi_variance - self.mu_mag

    @property
    def p_boundary(self) -> float:
        return (self.c_norm * float(airy_ai(-self.k * (_PI - self.ratio_sqrt)))) ** 2

    def psi(self, phi):
        return airy_wavefunction(self, phi)


def validity_threshold(a1: float | None = None) -> float:
    """Smallest ``|lambda|`` for which the boundary condition has a root.

    ``(2 lambda r)**(1/3) (pi - r)`` peaks at ``r = pi/4``.
    """
    q = abs(_zero(a1)) / (0.75 * _PI)
    return 2.0 * q ** 3 / _PI


def ratio_from_lambda_exact(lambda_mag: float, a1: float | None = None) -> float:
    """Turning-point angle ``sqrt(mu/lambda)`` solving the boundary condition exactly.

    Solves ``(2 lambda r)**(1/3) (pi - r) = |a1|`` for the root in
    ``(pi/4, pi)``, the one nearest ``pi``.
    """
    a1 = _zero(a1)
    threshold = validity_threshold(a1)
    if not lambda_mag > threshold:
        raise RegimeError(
            f"|lambda|={lambda_mag!r} is below the Airy validity threshold {threshold:.6g}",
            threshold,
        )
    target = abs(a1)

    def residual(r: float) -> float:
        return (2.0 * lambda_mag * r) ** (1.0 / 3.0) * (_PI - r) - target

    return find_root(residual, 0.25 * _PI, _PI, tol=1e-15)


def ratio_from_lambda_approx(lambda_mag: float, a1: float | None = None) -> float:
    """Leading-order root ``pi - |a1| (2 lambda pi)**(-1/3)``.

    Obtained by freezing ``r = pi`` inside the cube root of the boundary
    condition; the neglected relative correction is ``O((pi - r) / pi)``.
    """
    if not lambda_mag > 0:
        raise DomainError("lambda_mag must be positive")
    return _PI - abs(_zero(a1)) / (2.0 * lambda_mag * _PI) ** (1.0 / 3.0)


def normalization_constant(lambda_mag: float, mu_mag: float, a1: float | None = None) -> float:
    """``C = (mu lambda)**(1/12) / (|a1|**(1/2) Ai(a1) 2**(1/3))``."""
    if not (lambda_mag > 0 and mu_mag > 0):
        raise DomainError("multipliers must be positive magnitudes")
    a1 = _zero(a1)
    return (mu_mag * lambda_mag) ** (1.0 / 12.0) / (
        math.sqrt(abs(a1)) * float(airy_ai(a1)) * 2.0 ** (1.0 / 3.0)
    )


def delta_phi_sq_analytic(lambda_mag: float, mu_mag: float, a1: float | None = None) -> float:
    """Closed-form ``<phi**2>`` with the tail extended to infinity."""
    if not (lambda_mag > 0 and mu_mag > 0):
        raise DomainError("multipliers must be positive magnitudes")
    z = abs(_zero(a1))
    k = _scale(lambda_mag, mu_mag)
    return (
        mu_mag / lambda_mag
        + (2.0 / 3.0) * z * math.sqrt(mu_mag / lambda_mag) / k
        + 0.2 * (1.0 / z + z * z) / (k * k)
    )


def airy_state(lambda_mag: float, a1: float | None = None) -> AiryState:
    """Assemble the Airy state for a given ``|lambda|``."""
    a1 = _zero(a1)
    r = ratio_from_lambda_exact(lambda_mag, a1)
    mu_mag = lambda_mag * r * r
    var = delta_phi_sq_analytic(lambda_mag, mu_mag, a1)
    if not var < _PI * _PI:
        raise RegimeError(
            f"|lambda|={lambda_mag!r}: analytic <phi^2>={var:.6g} is not below pi^2",
            validity_threshold(a1),
        )
    return AiryState(
        lambda_mag=lambda_mag,
        ratio_sqrt=r,
        c_norm=normalization_constant(lambda_mag, mu_mag, a1),
        k=_scale(lambda_mag, mu_mag),
        phi_variance=var,
        a1=a1,
    )


def airy_wavefunction(state: AiryState, phi):
    """``C Ai(-k (|phi| - phi_t))`` on ``[-pi, pi]`` (even extension)."""
    phi_arr = np.asarray(phi, dtype=float)
    if not np.all(np.abs(phi_arr) <= _PI * (1 + 1e-12)):
        raise DomainError("phi must lie in [-pi, pi]")
    out = state.c_norm * airy_ai(-state.k * (np.abs(phi_arr) - state.ratio_sqrt))
    return float(out) if np.ndim(phi) == 0 else out


def boundary_argument(state: AiryState) -> float:
    """Airy argument at ``phi = pi``; equals ``a1`` when the boundary condition holds."""
    return -state.k * (_PI - state.ratio_sqrt)


def airy_uncertainty_product(lambda_mag: float, a1: float | None = None) -> tuple[float, float]:
    """``(delta_phi, delta_phi * delta_lz)`` in the Airy approximation.

    Raises :class:`RegimeError` when the angular-momentum variance comes out
    negative (``|lambda|`` too small for the approximation).
    """
    st = airy_state(lambda_mag, a1)
    lz = st.lz_variance
    if lz < -1e-12 * st.mu_mag:
        raise RegimeError(f"negative angular-momentum variance at |lambda|={lambda_mag!r}")
    return st.delta_phi, st.delta_phi * math.sqrt(max(lz, 0.0))


def airy_bound(state: AiryState) -> float:
    """State-dependent bound evaluated with the Airy boundary density."""
    return uncertainty_bound(state.p_boundary)


def albright_primitives(t):
    """Antiderivatives of ``Ai**2``, ``t Ai**2`` and ``t**2 Ai**2``.

    Returns ``(p0, p1, p2)`` with

    * ``p0 = t Ai**2 - Ai'**2``
    * ``p1 = (t**2 Ai**2 - t Ai'**2 + Ai Ai') / 3``
    * ``p2 = (t**3 Ai**2 - t**2 Ai'**2 + 2 t Ai Ai' - Ai**2) / 5``

    each following from ``Ai'' = t Ai``. All three vanish as ``t -> inf``.
    """
    ai, aip = airy_ai_and_prime(t)
    ai2, aip2, cross = ai * ai, aip * aip, ai * aip
    p0 = t * ai2 - aip2
    p1 = (t * t * ai2 - t * aip2 + cross) / 3.0
    p2 = (t ** 3 * ai2 - t * t * aip2 + 2.0 * t * cross - ai2) / 5.0
    return p0, p1, p2


def lambda_for_delta_phi(target: float, a1: float | None = None, lambda_hi: float = 1e12) -> float:
    """``|lambda|`` whose Airy angle uncertainty equals ``target``."""
    a1 = _zero(a1)
    lo = validity_threshold(a1) * 1.0001

    def mismatch(lam: float) -> float:
        r = ratio_from_lambda_exact(lam, a1)
        return math.sqrt(delta_phi_sq_analytic(lam, lam * r * r, a1)) - target

    if not mismatch(lo) < 0 < mismatch(lambda_hi):
        raise RegimeError(f"delta_phi={target!r} not reachable in the Airy approximation", lo)
    # log-space search keeps the bracket well scaled over many decades
    u = find_root(lambda s: mismatch(math.exp(s)), math.log(lo), math.log(lambda_hi), tol=1e-13)
    return math.exp(u)
