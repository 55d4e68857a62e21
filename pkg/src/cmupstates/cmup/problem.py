"""Scaled eigenvalue problem and the signed control parameter."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from ..errors import DomainError

__all__ = ["Regime", "ScaledProblem", "control_to_problem", "problem_to_control"]


class Regime(str, enum.Enum):
    SMALL = "small"
    FLAT = "flat"
    LARGE = "large"

    @property
    def sign(self) -> int:
        """Orientation ``s`` of psi'' = s (x**2/4 - a) psi (0 for the flat state)."""
        return {"small": 1, "flat": 0, "large": -1}[self.value]


@dataclass(frozen=True)
class ScaledProblem:
    """Regime tag plus the scaled eigenvalue ``a = |mu| / (2 |lambda|**0.5)``."""

    regime: Regime
    a: float

    def __post_init__(self):
        object.__setattr__(self, "regime", Regime(self.regime))
        a = float(self.a)
        object.__setattr__(self, "a", a)
        if not math.isfinite(a) or a < 0:
            raise DomainError(f"a must be finite and non-negative, got {a!r}")
        if (self.regime is Regime.FLAT) != (a == 0.0):
            raise DomainError(f"regime {self.regime.value!r} is inconsistent with a={a!r}")

    @property
    def sign(self) -> int:
        return self.regime.sign

    @classmethod
    def flat(cls) -> "ScaledProblem":
        return cls(Regime.FLAT, 0.0)


def control_to_problem(c: float) -> ScaledProblem:
    """Map the signed control onto a scaled problem.

    ``c > 0`` is the large-uncertainty branch with ``a = c``; ``c = 0`` is
    the flat state. Nodeless small-uncertainty states exist only for
    ``0 < a < 1/2``, so ``c < 0`` maps through ``a = tanh(-c) / 2``, which
    sends ``c -> -inf`` to the Gaussian limit ``a -> 1/2``.
    """
    c = float(c)
    if not math.isfinite(c):
        raise DomainError(f"control must be finite, got {c!r}")
    if c > 0:
        return ScaledProblem(Regime.LARGE, c)
    if c == 0:
        return ScaledProblem.flat()
    a = 0.5 * math.tanh(-c)
    if a == 0.0:
        return ScaledProblem.flat()  # |c| below the smallest normal double
    if not a < 0.5:
        raise DomainError(f"control {c!r} saturates the small branch (a rounds to 1/2)")
    return ScaledProblem(Regime.SMALL, a)


def problem_to_control(problem: ScaledProblem) -> float:
    """Inverse of :func:`control_to_problem`."""
    if problem.regime is Regime.LARGE:
        return problem.a
    if problem.regime is Regime.FLAT:
        return 0.0
    if not problem.a < 0.5:
        raise DomainError(f"small-regime a={problem.a!r} has no control value")
    return -math.atanh(2.0 * problem.a)
