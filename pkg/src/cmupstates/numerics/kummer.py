"""Kummer's confluent hypergeometric function M(a, b, z) for complex data."""

from __future__ import annotations

import cmath

from ..errors import ConvergenceError, DomainError

__all__ = ["kummer_m"]

MAX_ABS_Z = 50.0
MAX_TERMS = 10_000
TAIL_RTOL = 1e-15


def _is_nonpositive_integer(b: complex) -> bool:
    return b.imag == 0.0 and b.real <= 0.0 and float(b.real).is_integer()


def kummer_m(a: complex, b: complex, z: complex) -> complex:
    """Sum ``sum_n (a)_n z**n / ((b)_n n!)`` directly.

    The sum stops once the tail is decreasing and the latest term is below
    ``1e-15`` of the partial sum. Only intended for ``|z| <= 50``; no
    asymptotic or Kummer-transformation branch is provided.
    """
    a, b, z = complex(a), complex(b), complex(z)
    for v in (a, b, z):
        if not cmath.isfinite(v):
            raise DomainError("arguments must be finite")
    if _is_nonpositive_integer(b):
        raise DomainError(f"b={b!r} is a non-positive integer")
    if abs(z) > MAX_ABS_Z:
        raise DomainError(f"|z|={abs(z):.6g} exceeds the series envelope {MAX_ABS_Z}")
    if z == 0:
        return 1.0 + 0.0j

    total = term = 1.0 + 0.0j
    quiet = 0
    for n in range(MAX_TERMS):
        ratio = (a + n) * z / ((b + n) * (n + 1))
        term *= ratio
        total += term
        if term == 0:
            return total
        if abs(term) <= TAIL_RTOL * abs(total) and abs(ratio) < 1.0:
            quiet += 1
            # two small terms in a row guards against an accidental dip
            if quiet >= 2:
                return total
        else:
            quiet = 0
    raise ConvergenceError(
        f"M({a}, {b}, {z}) not converged after {MAX_TERMS} terms "
        f"(last term {abs(term):.3e}, sum {abs(total):.3e})"
    )
