"""Bracketed scalar root finding (bisection safeguarding secant steps)."""

from __future__ import annotations

import math
from typing import Callable

from ..errors import BracketError, DomainError, ConvergenceError

__all__ = ["find_root"]


def find_root(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-12,
    *,
    ftol: float = 0.0,
    max_iter: int = 400,
) -> float:
    """Locate a root of ``f`` inside ``[lo, hi]``.

    Secant steps are taken while they make progress; a bisection step is
    forced whenever two consecutive iterations fail to halve the bracket.
    Iteration stops when the bracket is no wider than ``tol`` or when
    ``|f| <= ftol`` at the current iterate.

    Parameters
    ----------
    f : callable
        Continuous real function with ``f(lo) * f(hi) < 0``.
    lo, hi : float
        Bracket endpoints (either order).
    tol : float
        Target bracket width. Values below the floating-point spacing are
        allowed; iteration then stops at adjacent doubles.
    ftol : float, optional
        Early exit once the residual is this small.

    Returns
    -------
    float
        The bracket endpoint with the smaller residual; always inside the
        initial bracket.
    """
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol!r}")
    a, b = (float(lo), float(hi)) if lo <= hi else (float(hi), float(lo))
    fa, fb = f(a), f(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if not (math.isfinite(fa) and math.isfinite(fb)) or (fa > 0) == (fb > 0):
        raise BracketError(f"no sign change on [{a!r}, {b!r}]: f={fa!r}, {fb!r}")

    width_two_ago = width_prev = b - a
    for _ in range(max_iter):
        width = b - a
        if width <= tol or not a < 0.5 * (a + b) < b:
            break  # converged, or the bracket is down to adjacent doubles
        force_bisect = width > 0.5 * width_two_ago
        x = b - fb * (b - a) / (fb - fa)
        if force_bisect or not (a < x < b):
            x = 0.5 * (a + b)
        else:
            # keep secant iterates from sticking to one endpoint
            nudge = 0.5 * tol
            if x - a < nudge:
                x = a + nudge
            elif b - x < nudge:
                x = b - nudge
        fx = f(x)
        if not math.isfinite(fx):
            raise BracketError(f"non-finite residual at x={x!r}")
        if fx == 0.0 or abs(fx) <= ftol:
            return x
        if (fx > 0) == (fa > 0):
            a, fa = x, fx
        else:
            b, fb = x, fx
        width_two_ago, width_prev = width_prev, width
    else:
        raise ConvergenceError(f"bracket [{a!r}, {b!r}] still wider than {tol!r}")
    return a if abs(fa) <= abs(fb) else b
