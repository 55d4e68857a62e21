"""Airy function Ai and its derivative on the real line.

Three evaluation routes cover ``|y| <= 200``:

* ``|y| <= 1``: Maclaurin series about the origin.
* ``1 < |y| <= 12``: Taylor series about the nearest anchor of a table
  spaced 1/4 apart. The negative half of the table is built by stepping
  outward from the exact values at the origin (Ai oscillates there, so the
  stepping is stable); the positive half is built by stepping inward from
  the asymptotic values at ``y = 12`` (Ai is recessive for ``y > 0`` and only
  inward stepping is stable).
* ``|y| > 12``: the standard asymptotic expansions, truncated at their
  smallest term.

A plain Maclaurin sum at ``|y| = 8`` cancels terms of size ``~e**15`` and
cannot reach 1e-12 absolute accuracy, hence the anchored continuation.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from ..errors import DomainError
from .roots import find_root

__all__ = [
    "AI0",
    "AIP0",
    "airy_ai",
    "airy_ai_prime",
    "airy_ai_and_prime",
    "first_zero_ai_prime",
]

AI0 = 0.355028053887817239260063186  # 3**(-2/3) / Gamma(2/3)
AIP0 = -0.258819403792806798405183560  # -3**(-1/3) / Gamma(1/3)

MAX_ABS_Y = 200.0
MACLAURIN_RADIUS = 1.0
ASYMPTOTIC_START = 12.0
ANCHOR_SPACING = 0.25

_SQRT_PI = math.sqrt(math.pi)


def _taylor_step(y0: float, v0: float, d0: float, h: float) -> tuple[float, float]:
    """Advance (Ai, Ai') from ``y0`` to ``y0 + h`` via the Taylor series of Ai'' = y Ai."""
    # Ai(y0 + h) = sum b_m h**m with m (m-1) b_m = y0 b_{m-2} + b_{m-3}
    b3, b2, b1 = 0.0, v0, d0
    value = v0 + d0 * h
    deriv = d0
    hpow = h  # h**(m-1)
    quiet = 0
    for m in range(2, 400):
        bm = (y0 * b2 + b3) / (m * (m - 1))
        b3, b2, b1 = b2, b1, bm
        dterm = m * bm * hpow
        hpow *= h
        vterm = bm * hpow
        value += vterm
        deriv += dterm
        scale = abs(value) + abs(deriv) + 1e-300
        if abs(vterm) + abs(dterm) <= 1e-18 * scale:
            quiet += 1
            if quiet >= 3:
                break
        else:
            quiet = 0
    return value, deriv


def _asymptotic_positive(y: float) -> tuple[float, float]:
    zeta = 2.0 / 3.0 * y ** 1.5
    u = 1.0
    su = sv = 1.0
    last = math.inf
    k = 0
    while True:
        k += 1
        u *= (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216.0 * k)
        vk = -(6 * k + 1) / (6 * k - 1) * u
        tu = (-1) ** k * u / zeta ** k
        tv = (-1) ** k * vk / zeta ** k
        if abs(tu) >= last or abs(tu) < 1e-17:
            break
        last = abs(tu)
        su += tu
        sv += tv
    pref = math.exp(-zeta) / (2.0 * _SQRT_PI)
    return pref * su / y ** 0.25, -pref * sv * y ** 0.25


def _asymptotic_negative(y: float) -> tuple[float, float]:
    z = -y
    zeta = 2.0 / 3.0 * z ** 1.5
    # even/odd partial sums of u_k and v_k series in 1/zeta with alternating signs
    ue = [1.0]
    uo = []
    ve = [1.0]
    vo = []
    u = 1.0
    last = math.inf
    k = 0
    while True:
        k += 1
        u *= (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / ((2 * k - 1) * 216.0 * k)
        vk = -(6 * k + 1) / (6 * k - 1) * u
        mag = u / zeta ** k
        if mag >= last or mag < 1e-17:
            break
        last = mag
        sign = (-1) ** (k // 2)
        if k % 2 == 0:
            ue.append(sign * u / zeta ** k)
            ve.append(sign * vk / zeta ** k)
        else:
            uo.append(sign * u / zeta ** k)
            vo.append(sign * vk / zeta ** k)
    theta = zeta + math.pi / 4.0
    s, c = math.sin(theta), math.cos(theta)
    P, Q = math.fsum(ue), math.fsum(uo)
    R, S = math.fsum(ve), math.fsum(vo)
    ai = (s * P - c * Q) / (_SQRT_PI * z ** 0.25)
    aip = -(z ** 0.25) * (c * R + s * S) / _SQRT_PI
    return ai, aip


@lru_cache(maxsize=1)
def _anchor_table() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    count = int(round(ASYMPTOTIC_START / ANCHOR_SPACING))
    ys = ANCHOR_SPACING * np.arange(-count, count + 1)
    vals = np.empty_like(ys)
    ders = np.empty_like(ys)
    mid = count
    vals[mid], ders[mid] = AI0, AIP0
    for i in range(mid - 1, -1, -1):
        vals[i], ders[i] = _taylor_step(ys[i + 1], vals[i + 1], ders[i + 1], -ANCHOR_SPACING)
    vals[-1], ders[-1] = _asymptotic_positive(float(ys[-1]))
    for i in range(len(ys) - 2, mid, -1):
        vals[i], ders[i] = _taylor_step(ys[i + 1], vals[i + 1], ders[i + 1], -ANCHOR_SPACING)
    for arr in (ys, vals, ders):
        arr.setflags(write=False)
    return ys, vals, ders


def _ai_scalar(y: float) -> tuple[float, float]:
    if not math.isfinite(y):
        raise DomainError(f"Airy argument must be finite, got {y!r}")
    if abs(y) > MAX_ABS_Y:
        raise DomainError(f"|y|={abs(y)!r} exceeds {MAX_ABS_Y}")
    if abs(y) <= MACLAURIN_RADIUS:
        return _taylor_step(0.0, AI0, AIP0, y)
    if y > ASYMPTOTIC_START:
        return _asymptotic_positive(y)
    if y < -ASYMPTOTIC_START:
        return _asymptotic_negative(y)
    ys, vals, ders = _anchor_table()
    i = int(round((y - ys[0]) / ANCHOR_SPACING))
    y0 = float(ys[i])
    return _taylor_step(y0, float(vals[i]), float(ders[i]), y - y0)


def airy_ai_and_prime(y):
    """Return ``(Ai(y), Ai'(y))``; accepts scalars or arrays."""
    if np.ndim(y) == 0:
        return _ai_scalar(float(y))
    arr = np.asarray(y, dtype=float)
    out = np.array([_ai_scalar(float(t)) for t in arr.ravel()])
    if out.size == 0:
        return np.empty(arr.shape), np.empty(arr.shape)
    return out[:, 0].reshape(arr.shape), out[:, 1].reshape(arr.shape)


def airy_ai(y):
    """Airy function Ai(y), accurate to about 1e-14 absolute for ``|y| <= 12``.

    Raises :class:`DomainError` for non-finite input or ``|y| > 200``.
    """
    return airy_ai_and_prime(y)[0]


def airy_ai_prime(y):
    """Derivative Ai'(y); same domain and accuracy as :func:`airy_ai`."""
    return airy_ai_and_prime(y)[1]


@lru_cache(maxsize=1)
def first_zero_ai_prime() -> float:
    """Largest (first) negative zero of Ai', approximately -1.0187929716."""
    return find_root(lambda t: _ai_scalar(t)[1], -2.0, -0.5, tol=1e-15)
