"""Uniform sweeps over the signed control parameter."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from ..config import DEFAULT_CONFIG, SolverConfig
from ..errors import CmupError, DomainError
from .problem import control_to_problem
from .state import build_state

__all__ = ["SweepRecord", "sweep"]


@dataclass(frozen=True)
class SweepRecord:
    control: float
    a: float
    regime: str
    x0: float
    lam: float
    mu: float
    mu_over_lambda: float
    delta_phi: float
    delta_lz: float
    product: float
    bound: float
    status: str = "ok"

    @property
    def ok(self) -> bool:
        return self.status == "ok"

    def as_dict(self) -> dict:
        return asdict(self)


def _record(c: float, config: SolverConfig) -> SweepRecord:
    nan = math.nan
    try:
        problem = control_to_problem(c)
    except DomainError as exc:
        return SweepRecord(c, nan, "", nan, nan, nan, nan, nan, nan, nan, nan, type(exc).__name__)
    try:
        st = build_state(problem, config)
    except CmupError as exc:
        return SweepRecord(
            c, problem.a, problem.regime.value, nan, nan, nan, nan, nan, nan, nan, nan,
            type(exc).__name__,
        )
    return SweepRecord(
        control=c,
        a=problem.a,
        regime=problem.regime.value,
        x0=st.x0,
        lam=st.lam,
        mu=st.mu,
        mu_over_lambda=st.mu_over_lambda,
        delta_phi=st.delta_phi,
        delta_lz=st.delta_lz,
        product=st.product,
        bound=st.bound,
    )


def sweep(
    c_lo: float, c_hi: float, points: int, config: SolverConfig = DEFAULT_CONFIG
) -> list[SweepRecord]:
    """Evaluate states on ``points`` equally spaced controls in ``[c_lo, c_hi]``.

    A failing grid point yields a row whose ``status`` names the exception
    instead of aborting the sweep.
    """
    if not c_lo < c_hi:
        raise DomainError("c_lo must be smaller than c_hi")
    if points < 2:
        raise DomainError("a sweep needs at least two points")
    controls = np.linspace(c_lo, c_hi, int(points))
    if points % 2 == 1 and c_lo == -c_hi:
        controls[points // 2] = 0.0  # exact flat point on symmetric grids
    return [_record(float(c), config) for c in controls]
