"""Dependency-light numerics: Airy functions, Kummer's M, quadrature, roots."""

from .airy import AI0, AIP0, airy_ai, airy_ai_and_prime, airy_ai_prime, first_zero_ai_prime
from .kummer import kummer_m
from .quadrature import DEFAULT_RULE, QuadratureRule, gauss_legendre_grid, integrate
from .roots import find_root

__all__ = [
    "AI0",
    "AIP0",
    "DEFAULT_RULE",
    "QuadratureRule",
    "airy_ai",
    "airy_ai_and_prime",
    "airy_ai_prime",
    "find_root",
    "first_zero_ai_prime",
    "gauss_legendre_grid",
    "integrate",
    "kummer_m",
]
