"""Invariant and oracle-equivalence suite behind ``cmup check``.

Each check is a small function returning ``(passed, detail)``. The suite can
be run with a perturbed Ai' zero to confirm that the boundary-condition check
is sensitive to it.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import airyapprox, oracle
from .cmup import (
    FLAT_DELTA_PHI,
    ScaledProblem,
    build_state,
    first_stationary_point,
    series_solution,
    solve_for_delta_phi,
    sweep,
)
from .config import DEFAULT_CONFIG, SolverConfig
from .numerics import (
    QuadratureRule,
    airy_ai,
    airy_ai_and_prime,
    first_zero_ai_prime,
    integrate,
)

__all__ = ["CheckContext", "CheckResult", "CHECKS", "run_checks", "format_table"]


@dataclass(frozen=True)
class CheckContext:
    config: SolverConfig = DEFAULT_CONFIG
    quick: bool = False
    a1_perturbation: float = 0.0  # test-only mutation hook

    @property
    def a1(self) -> float:
        return first_zero_ai_prime() + self.a1_perturbation


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


@dataclass(frozen=True)
class _Check:
    name: str
    run: Callable[[CheckContext], tuple[bool, str]]
    quick: bool


def _printed_constants(ctx: CheckContext) -> tuple[bool, str]:
    a1 = ctx.a1
    ai = float(airy_ai(a1))
    ok = round(a1, 4) == -1.0188 and round(ai, 4) == 0.5357
    return ok, f"a1={a1:.10f}, Ai(a1)={ai:.10f}"


def _airy_ode(ctx: CheckContext) -> tuple[bool, str]:
    y = np.linspace(-10.0, 10.0, 401)
    h = 1e-4
    worst = 0.0
    for v in y:
        _, dp = airy_ai_and_prime(v + h)
        _, dm = airy_ai_and_prime(v - h)
        second = (dp - dm) / (2 * h)
        worst = max(worst, abs(second - v * float(airy_ai(v))))
    return worst <= 1e-7, f"max |Ai'' - y Ai| = {worst:.2e}"


def _quadrature(ctx: CheckContext) -> tuple[bool, str]:
    rule = QuadratureRule(8, 4)
    got = integrate(lambda x: x ** 15 - 3 * x ** 4, -1.0, 2.0, rule)
    exact = (2.0 ** 16 - 1.0) / 16.0 - 3.0 * (32.0 + 1.0) / 5.0
    err = abs(got - exact) / abs(exact)
    return err <= 1e-13, f"relative error {err:.1e}"


def _flat_point(ctx: CheckContext) -> tuple[bool, str]:
    st = solve_for_delta_phi(FLAT_DELTA_PHI, 1e-10, ctx.config)
    ok = st.delta_lz <= 1e-8 and st.product <= 1e-8 and st.bound <= 1e-8
    return ok, f"delta_lz={st.delta_lz:.1e}, bound={st.bound:.1e}"


def _boundary_condition(ctx: CheckContext) -> tuple[bool, str]:
    worst = 0.0
    for lam in (100.0, 400.0, 1e4):
        st = airyapprox.airy_state(lam, ctx.a1)
        _, slope = airy_ai_and_prime(airyapprox.boundary_argument(st))
        worst = max(worst, abs(float(slope)))
    return worst <= 1e-10, f"max |Ai'(arg at pi)| = {worst:.2e}"


def _albright_variance(ctx: CheckContext) -> tuple[bool, str]:
    worst = 0.0
    lams = (400.0,) if ctx.quick else (100.0, 400.0, 1e4)
    for lam in lams:
        st = airyapprox.airy_state(lam, ctx.a1)
        # matched convention: the decaying tail runs to t = 30 (Ai ~ 1e-46)
        lo = st.ratio_sqrt - 30.0 / st.k
        edge = math.pi

        def prof(phi):
            return st.c_norm * airy_ai(-st.k * (phi - st.ratio_sqrt))

        m0 = 2.0 * oracle.moment_quadrature(prof, lo, edge, 0)
        m2 = 2.0 * oracle.moment_quadrature(prof, lo, edge, 2)
        worst = max(worst, abs(m2 - st.phi_variance) / st.phi_variance, abs(m0 - 1.0))
    return worst <= 1e-6, f"max relative deviation {worst:.1e}"


def _uncertainty_relation(ctx: CheckContext) -> tuple[bool, str]:
    rows = sweep(-6.0, 8.0, 40 if ctx.quick else 200, ctx.config)
    bad = [r for r in rows if not r.ok or r.product < r.bound - 1e-8]
    margin = min(r.product - r.bound for r in rows if r.ok)
    return not bad, f"{len(rows) - len(bad)}/{len(rows)} rows, min margin {margin:.2e}"


def _small_ceiling(ctx: CheckContext) -> tuple[bool, str]:
    rows = [r for r in sweep(-6.0, 8.0, 200, ctx.config) if r.ok and r.regime == "small"]
    sel = [r for r in rows if r.delta_phi <= 1.0]
    ok = bool(sel) and all(0.0 < r.product < 0.5 for r in sel)
    top = max(r.product for r in sel) if sel else math.nan
    return ok, f"{len(sel)} rows, max product {top:.8f}"


def _limit_ratios(ctx: CheckContext) -> tuple[bool, str]:
    st = build_state(ScaledProblem("large", 0.05), ctx.config)
    near = abs(st.mu_over_lambda - math.pi ** 2 / 3.0)
    rows = [r for r in sweep(0.05, ctx.config.a_max, 60, ctx.config) if r.ok]
    ratios = np.array([r.mu_over_lambda for r in rows])
    mono = bool(np.all(np.diff(ratios) > 0))
    ok = near <= 0.05 and mono and ratios.max() <= math.pi ** 2 + 1e-6
    return ok, f"|mu/lambda - pi^2/3| at a=0.05: {near:.4f}; max ratio {ratios.max():.4f}"


def _oracle_states(ctx: CheckContext):
    if ctx.quick:
        return [("large", 1.0)]
    return [("large", a) for a in (0.5, 1.0, 2.0, 5.0)] + [
        ("small", a) for a in (0.1, 0.25, 0.4, 0.49)
    ]


def _series_vs_rk4(ctx: CheckContext) -> tuple[bool, str]:
    worst = 0.0
    for regime, a in _oracle_states(ctx):
        sol = series_solution(ScaledProblem(regime, a), config=ctx.config)
        x0 = first_stationary_point(sol, ctx.config)
        prof = oracle.rk4_shoot(sol.problem, x0)
        worst = max(worst, float(np.max(np.abs(prof.psi - sol.psi(prof.x)))))
    return worst <= 1e-8, f"sup |series - RK4| = {worst:.1e}"


def _lz_identity(ctx: CheckContext) -> tuple[bool, str]:
    worst = 0.0
    for regime, a in _oracle_states(ctx):
        st = build_state(ScaledProblem(regime, a), ctx.config)
        ref = oracle.lz_by_parts(st)
        worst = max(worst, abs(ref - st.lz_variance) / st.lz_variance)
    return worst <= 1e-6, f"max relative deviation {worst:.1e}"


def _kummer(ctx: CheckContext) -> tuple[bool, str]:
    phi = np.linspace(0.1, 3.0, 59)
    worst = 0.0
    for a in (0.5, 1.0):
        st = build_state(ScaledProblem("large", a), ctx.config)
        ratio = oracle.kummer_profile(abs(st.lam), abs(st.mu), phi) / st.psi(phi)
        worst = max(worst, float(np.ptp(np.abs(ratio)) / np.mean(np.abs(ratio))))
        worst = max(worst, float(np.max(np.abs(ratio.imag)) / np.mean(np.abs(ratio))))
    return worst <= 1e-6, f"relative spread {worst:.1e}"


def _airy_agreement(ctx: CheckContext) -> tuple[bool, str]:
    num = solve_for_delta_phi(3.0, 1e-10, ctx.config)
    approx = airyapprox.airy_state(abs(num.lam), ctx.a1)
    phi = np.linspace(0.0, math.pi, 721)
    sup = float(np.max(np.abs(num.psi(phi) - approx.psi(phi))))
    gap = abs(approx.delta_phi - num.delta_phi)
    return sup <= 0.05 and gap <= 0.02, f"sup distance {sup:.4f}, delta_phi gap {gap:.1e}"


def _unbounded(ctx: CheckContext) -> tuple[bool, str]:
    lo = airyapprox.lambda_for_delta_phi(3.0, ctx.a1)
    hi = airyapprox.lambda_for_delta_phi(3.12, ctx.a1)
    p_lo = airyapprox.airy_uncertainty_product(lo, ctx.a1)[1]
    p_hi = airyapprox.airy_uncertainty_product(hi, ctx.a1)[1]
    prods = [airyapprox.airy_uncertainty_product(float(l), ctx.a1)[1] for l in np.geomspace(100, 1e4, 41)]
    mono = bool(np.all(np.diff(prods) > 0))
    return p_hi / p_lo >= 1.5 and mono, f"product ratio {p_hi / p_lo:.3f}"


CHECKS: tuple[_Check, ...] = (
    _Check("printed_constants", _printed_constants, True),
    _Check("airy_ode_residual", _airy_ode, True),
    _Check("quadrature_exactness", _quadrature, True),
    _Check("flat_dividing_point", _flat_point, True),
    _Check("boundary_condition", _boundary_condition, True),
    _Check("albright_variance", _albright_variance, True),
    _Check("uncertainty_relation", _uncertainty_relation, True),
    _Check("series_vs_rk4", _series_vs_rk4, True),
    _Check("lz_identity", _lz_identity, True),
    _Check("small_branch_ceiling", _small_ceiling, False),
    _Check("limit_ratios", _limit_ratios, False),
    _Check("kummer_consistency", _kummer, False),
    _Check("airy_agreement", _airy_agreement, False),
    _Check("unbounded_product", _unbounded, False),
)


def run_checks(
    quick: bool = False,
    config: SolverConfig = DEFAULT_CONFIG,
    a1_perturbation: float = 0.0,
) -> list[CheckResult]:
    """Run the suite; exceptions inside a check count as a failure."""
    ctx = CheckContext(config=config, quick=quick, a1_perturbation=a1_perturbation)
    results = []
    for chk in CHECKS:
        if quick and not chk.quick:
            continue
        t0 = time.perf_counter()
        try:
            passed, detail = chk.run(ctx)
        except Exception as exc:  # noqa: BLE001 - reported, not swallowed
            passed, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(chk.name, bool(passed), detail, time.perf_counter() - t0))
    return results


def format_table(results: list[CheckResult]) -> str:
    width = max(len(r.name) for r in results)
    lines = [f"{'check':<{width}}  result  seconds  detail"]
    for r in results:
        flag = "PASS" if r.passed else "FAIL"
        lines.append(f"{r.name:<{width}}  {flag:<6}  {r.seconds:7.2f}  {r.detail}")
    return "\n".join(lines)
