import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cmupstates.cmup import FLAT_DELTA_PHI, ScaledProblem, build_state, series_solution, solve_for_delta_phi
from cmupstates.errors import DomainError, ShootingOverflow
from cmupstates.oracle import (
    ORACLE_STEP,
    kummer_profile,
    lz_by_parts,
    moment_quadrature,
    rk4_shoot,
    rk4_stationary_point,
)

UNIFORM = lambda p: np.full_like(np.asarray(p, dtype=float), (2 * math.pi) ** -0.5)


def test_endpoint_matches_series():
    prob = ScaledProblem("large", 1.0)
    prof = rk4_shoot(prob, 4.0, 1e-4)
    assert prof.x[-1] == 4.0 and prof.step == 1e-4
    assert abs(prof.psi[-1] - series_solution(prob).psi(4.0)) <= 1e-8
    xs = [s[0] for s in prof.samples]
    assert all(b > a for a, b in zip(xs, xs[1:]))


@pytest.mark.parametrize("problem", [("large", 1.0), ("large", 3.0), ("small", 0.3)])
def test_fourth_order_convergence(problem):
    prob = ScaledProblem(*problem)
    ends = [rk4_shoot(prob, 3.0, h).psi[-1] for h in (0.1, 0.05, 0.025)]
    ratio = (ends[0] - ends[1]) / (ends[1] - ends[2])
    assert ratio == pytest.approx(16.0, rel=0.3)


def test_small_regime_decreasing_start():
    prof = rk4_shoot(ScaledProblem("small", 1.0), 1.5, 1e-3)
    assert np.all(np.diff(prof.psi) < 0)


def test_overflow_reports_last_x():
    with pytest.raises(ShootingOverflow) as info:
        rk4_shoot(ScaledProblem("small", 0.1), 80.0, 1e-2)
    assert 30.0 < info.value.last_x < 80.0


def test_argument_checks():
    with pytest.raises(DomainError):
        rk4_shoot(ScaledProblem.flat(), 1.0)
    with pytest.raises(DomainError):
        rk4_shoot(ScaledProblem("large", 1.0), 1.0, 0.0)
    with pytest.raises(DomainError):
        rk4_stationary_point(rk4_shoot(ScaledProblem("large", 1.0), 1.0))


@settings(max_examples=8)
@given(st.floats(0.05, 20.0))
def test_stationary_point_agrees_with_series(a):
    sol = series_solution(ScaledProblem("large", a))
    prof = rk4_shoot(sol.problem, sol.x0 * 1.05, ORACLE_STEP)
    assert rk4_stationary_point(prof) == pytest.approx(sol.x0, abs=1e-8)


def test_lz_by_parts_examples():
    assert lz_by_parts(build_state(ScaledProblem.flat())) == 0.0
    mid = solve_for_delta_phi(2.5, 1e-6)
    assert lz_by_parts(mid) == pytest.approx(mid.mu - mid.lam * mid.phi_variance, rel=1e-6)
    narrow = solve_for_delta_phi(1.0, 1e-8)
    lz = lz_by_parts(narrow)
    assert lz > 0
    assert math.sqrt(narrow.phi_variance * lz) >= narrow.bound


def test_lz_by_parts_at_delta_phi_three():
    st_ = solve_for_delta_phi(3.0, 1e-8)
    assert lz_by_parts(st_) == pytest.approx(st_.lz_variance, rel=1e-6)


def test_moment_quadrature_uniform():
    assert moment_quadrature(UNIFORM, -math.pi, math.pi, 0) == pytest.approx(1.0, abs=1e-14)
    assert moment_quadrature(UNIFORM, -math.pi, math.pi, 2) == pytest.approx(math.pi ** 2 / 3, rel=1e-14)
    with pytest.raises(DomainError):
        moment_quadrature(UNIFORM, 0.0, 1.0, 1)
    with pytest.raises(DomainError):
        moment_quadrature(UNIFORM, 1.0, 1.0, 0)


def test_moment_quadrature_matches_state():
    st_ = build_state(ScaledProblem("large", 2.0))
    assert moment_quadrature(st_.psi, -math.pi, math.pi, 0) == pytest.approx(1.0, abs=1e-12)
    assert moment_quadrature(st_.psi, -math.pi, math.pi, 2) == pytest.approx(st_.phi_variance, rel=1e-12)


@pytest.mark.parametrize("a", [0.5, 1.0])
def test_kummer_profile_is_multiple_of_state(a):
    st_ = build_state(ScaledProblem("large", a))
    phi = np.linspace(0.1, 3.0, 59)
    ratio = kummer_profile(abs(st_.lam), abs(st_.mu), phi) / st_.psi(phi)
    assert np.ptp(ratio.real) / abs(ratio.real.mean()) <= 1e-6
    assert np.max(np.abs(ratio.imag)) <= 1e-10 * abs(ratio.real.mean())
    assert kummer_profile(abs(st_.lam), abs(st_.mu), 0.0) == 1.0
