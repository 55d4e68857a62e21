import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cmupstates.cmup import ScaledProblem, even_coefficients, first_stationary_point, series_solution
from cmupstates.config import DEFAULT_CONFIG
from cmupstates.errors import ConvergenceError, DomainError, SearchError
from cmupstates.oracle import rk4_shoot, rk4_stationary_point

# first stationary points of the large-regime solution, verified against RK4
X0_LARGE = {0.5: 2.26410, 1.0: 2.90289, 2.0: 3.68236, 5.0: 5.22595, 20.0: 9.55448}


def test_recurrence_initial_terms():
    c = even_coefficients(-1, 1.0, 5.0, 1e-16, 5000)
    assert c[0] == 1.0
    assert c[1] == pytest.approx(0.5)  # c2 = -s a / 2
    # 4*3 c4 = s (c0/4 - a c2)
    assert c[2] == pytest.approx(-(0.25 - 0.5) / 12.0)


@given(st.sampled_from([-1, 1]), st.floats(0.01, 10.0))
def test_coefficients_satisfy_recurrence(s, a):
    c = even_coefficients(s, a, 4.0, 1e-16, 5000)
    assert c[1] == -s * a / 2
    for k in range(1, len(c) - 1):
        lhs = (2 * k + 2) * (2 * k + 1) * c[k + 1]
        rhs = s * (c[k - 1] / 4.0 - a * c[k])
        assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-300)


def test_truncation_cap():
    with pytest.raises(ConvergenceError):
        even_coefficients(-1, 1.0, 25.0, 1e-16, 20)


def test_central_curvature_signs():
    large = series_solution(ScaledProblem("large", 1.0))
    small = series_solution(ScaledProblem("small", 0.3))
    assert large.psi(0.0) == 1.0 and large.dpsi(0.0) == 0.0
    assert large.d2psi(0.0) == pytest.approx(1.0)
    assert small.d2psi(0.0) == pytest.approx(-0.3)
    assert even_coefficients(1, 1.0, 3.0, 1e-16, 5000)[1] == -0.5  # psi''(0) = -1 for small a=1


@pytest.mark.parametrize("a, x0", sorted(X0_LARGE.items()))
def test_large_stationary_points(a, x0):
    sol = series_solution(ScaledProblem("large", a))
    assert sol.x0 == pytest.approx(x0, abs=1e-5)
    assert abs(sol.dpsi(sol.x0)) <= 1e-9 * max(1.0, abs(sol.psi(sol.x0)))
    assert sol.d2psi(sol.x0) < 0  # a maximum
    assert sol.residual() <= 1e-10
    assert first_stationary_point(sol, DEFAULT_CONFIG) == sol.x0


def test_matches_rk4_stationary_point_and_profile():
    sol = series_solution(ScaledProblem("large", 1.0))
    prof = rk4_shoot(sol.problem, 4.0, 1e-4)
    assert abs(prof.psi[-1] - sol.psi(4.0)) <= 1e-8
    assert rk4_stationary_point(prof) == pytest.approx(sol.x0, abs=1e-8)
    assert np.max(np.abs(prof.psi - sol.psi(prof.x))[prof.x <= sol.x0]) <= 1e-8


def test_small_regime_stationary_point_is_minimum():
    sol = series_solution(ScaledProblem("small", 0.25))
    assert sol.d2psi(sol.x0) > 0
    assert sol.psi(sol.x0) > 0


def test_small_a4_stationary_point_follows_a_node():
    # psi'(x0) = 0 is found, but psi has already crossed zero there
    sol = series_solution(ScaledProblem("small", 4.0))
    assert abs(sol.dpsi(sol.x0)) <= 1e-9
    assert sol.psi(sol.x0) < 0
    prof = rk4_shoot(sol.problem, sol.x0, 1e-4)
    assert prof.psi.min() < 0


def test_gaussian_boundary_has_no_stationary_point():
    with pytest.raises(SearchError):
        series_solution(ScaledProblem("small", 1.0))


def test_errors():
    with pytest.raises(DomainError):
        series_solution(ScaledProblem.flat())
    with pytest.raises(DomainError):
        series_solution(ScaledProblem("large", 25.0))
    with pytest.raises(DomainError):
        series_solution(ScaledProblem("large", 1.0), tol=0.0)


@given(st.floats(0.02, 20.0))
def test_large_regime_solution_is_nodeless_and_increasing(a):
    sol = series_solution(ScaledProblem("large", a))
    x = np.linspace(0.0, sol.x0, 200)
    assert np.all(sol.psi(x) >= 1.0 - 1e-12)
    assert np.all(np.diff(sol.psi(x)) >= -1e-12)
    assert sol.truncation_order == 2 * (len(sol.coefficients) - 1)
