"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class CmupError(Exception):
    """Base class for all errors raised by :mod:`cmupstates`."""


class DomainError(CmupError, ValueError):
    """An argument lies outside the domain of the operation."""


class ConvergenceError(CmupError, RuntimeError):
    """A series or iteration did not converge within its cap."""


class IntegrationError(CmupError, ArithmeticError):
    """The integrand produced a non-finite sample."""

    def __init__(self, message: str, abscissa: float):
        super().__init__(message)
        self.abscissa = abscissa


class BracketError(CmupError, ValueError):
    """The supplied interval does not bracket a sign change."""


class SearchError(CmupError, RuntimeError):
    """A scan for a stationary point ran out of room."""

    def __init__(self, message: str, largest_scanned: float):
        super().__init__(message)
        self.largest_scanned = largest_scanned


class RangeError(CmupError, ValueError):
    """A requested target lies outside what the solver can reach.

    ``achievable`` holds the reachable ``(low, high)`` interval when known.
    """

    def __init__(self, message: str, achievable: tuple[float, float] | None = None):
        super().__init__(message)
        self.achievable = achievable


class RegimeError(RangeError):
    """The Airy approximation is not valid for the requested multiplier."""

    def __init__(self, message: str, threshold: float | None = None):
        super().__init__(message)
        self.threshold = threshold


class ConsistencyError(CmupError, RuntimeError):
    """An internal identity was violated beyond its tolerance."""


class ShootingOverflow(CmupError, OverflowError):
    """An ODE integration left the floating-point range."""

    def __init__(self, message: str, last_x: float):
        super().__init__(message)
        self.last_x = last_x
