import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cmupstates import airyapprox as A
from cmupstates.cmup import solve_for_delta_phi
from cmupstates.errors import DomainError, RegimeError
from cmupstates.numerics import airy_ai, airy_ai_and_prime, first_zero_ai_prime, integrate
from cmupstates.oracle import moment_quadrature

A1 = first_zero_ai_prime()
lambdas = st.floats(0.2, 1e6)


def test_validity_threshold():
    assert A.validity_threshold() == pytest.approx(0.0514641, rel=1e-5)
    with pytest.raises(RegimeError) as info:
        A.ratio_from_lambda_exact(0.05)
    assert info.value.threshold == A.validity_threshold()


@given(lambdas)
def test_exact_ratio_satisfies_boundary_condition(lam):
    st_ = A.airy_state(lam) if lam > 1.0 else None
    r = A.ratio_from_lambda_exact(lam)
    k = (2.0 * lam * r) ** (1.0 / 3.0)
    assert math.pi / 4 <= r < math.pi
    assert k * (math.pi - r) == pytest.approx(abs(A1), abs=1e-10)
    if st_ is not None:
        assert A.boundary_argument(st_) == pytest.approx(A1, abs=1e-10)
        assert abs(airy_ai_and_prime(A.boundary_argument(st_))[1]) <= 1e-10


def test_exact_ratio_residual_printed_precision():
    r = A.ratio_from_lambda_exact(100.0)
    assert round((2 * 100 * r) ** (1 / 3) * (math.pi - r), 4) == 1.0188


def test_ratio_monotone_toward_pi():
    rs = [A.ratio_from_lambda_exact(l) for l in np.geomspace(1.0, 1e4, 30)]
    assert np.all(np.diff(rs) > 0) and rs[-1] < math.pi
    assert math.pi - rs[-1] < 0.03


def test_leading_order_ratio():
    exact100 = A.ratio_from_lambda_exact(100.0)
    approx100 = A.ratio_from_lambda_approx(100.0)
    assert 0 < approx100 < math.pi
    assert abs(exact100 - approx100) <= 2e-3
    assert abs(A.ratio_from_lambda_exact(1e4) - A.ratio_from_lambda_approx(1e4)) <= 1e-3
    assert A.ratio_from_lambda_approx(1e30) == pytest.approx(math.pi, abs=1e-9)
    with pytest.raises(DomainError):
        A.ratio_from_lambda_approx(0.0)


def test_cube_root_placement():
    # putting |a1| inside the cube root is off by the factor |a1|**(2/3) and
    # misses the exact root by 3.0e-3 at lambda = 100
    literal = math.pi - (1.0188 / (2 * 100 * math.pi)) ** (1 / 3)
    gap = abs(A.ratio_from_lambda_exact(100.0) - literal)
    assert gap == pytest.approx(3.03e-3, abs=1e-4)
    assert abs(A.ratio_from_lambda_exact(100.0) - A.ratio_from_lambda_approx(100.0)) < gap


def test_wavefunction_landmarks():
    s = A.airy_state(100.0)
    assert A.airy_wavefunction(s, math.pi) == pytest.approx(s.c_norm * 0.5357, rel=1e-4)
    assert A.airy_wavefunction(s, math.pi) == pytest.approx(s.c_norm * airy_ai(A1), rel=1e-12)
    assert A.airy_wavefunction(s, s.ratio_sqrt) == pytest.approx(s.c_norm * 0.3550280538878172, rel=1e-14)
    assert A.airy_wavefunction(s, -2.0) == A.airy_wavefunction(s, 2.0)
    with pytest.raises(DomainError):
        A.airy_wavefunction(s, 3.5)


def test_wavefunction_flat_at_boundary():
    s = A.airy_state(100.0)
    h = 2e-6
    f = lambda p: A.airy_wavefunction(s, p)
    slope = (3 * f(math.pi) - 4 * f(math.pi - h) + f(math.pi - 2 * h)) / (2 * h)
    assert abs(slope) <= 1e-8


def test_wavefunction_close_to_numeric_at_delta_phi_three():
    num = solve_for_delta_phi(3.0, 1e-10)
    s = A.airy_state(abs(num.lam))
    phi = np.linspace(0.0, math.pi, 1001)
    assert np.max(np.abs(num.psi(phi) - s.psi(phi))) <= 0.05


def test_normalization_constant_printed_form():
    printed = 1.0 / (1.0188 ** 0.5 * 0.5357 * 2 ** (1 / 3))
    assert A.normalization_constant(2.0, 0.5) == pytest.approx(printed, rel=2e-4)
    with pytest.raises(DomainError):
        A.normalization_constant(-1.0, 1.0)


@given(st.floats(0.5, 1e3), st.floats(0.5, 1e3), st.floats(0.2, 5.0))
def test_normalization_homogeneity(lam, mu, s):
    scaled = A.normalization_constant(s ** 6 * lam, s ** 6 * mu)
    assert scaled == pytest.approx(s * A.normalization_constant(lam, mu), rel=1e-13)


@pytest.mark.parametrize("lam", [100.0, 400.0, 1e4])
def test_finite_domain_normalisation(lam):
    s = A.airy_state(lam)
    finite = 2.0 * integrate(lambda p: s.psi(p) ** 2, 0.0, math.pi)
    assert finite == pytest.approx(1.0, abs=2e-3)
    # extending the tail only adds mass, so the analytic constant is the smaller one
    assert finite <= 1.0
    assert s.c_norm <= s.c_norm / math.sqrt(finite)


def test_variance_matches_quadrature_with_matched_tail():
    s = A.airy_state(400.0)
    prof = lambda p: s.c_norm * airy_ai(-s.k * (p - s.ratio_sqrt))
    lo = s.ratio_sqrt - 30.0 / s.k
    m2 = 2.0 * moment_quadrature(prof, lo, math.pi, 2)
    assert m2 == pytest.approx(s.phi_variance, rel=1e-6)


def test_variance_limits_and_sign_convention():
    for lam in np.geomspace(100.0, 1e6, 9):
        s = A.airy_state(float(lam))
        # signed multipliers: lambda <phi^2> < mu, i.e. |lambda| var > |mu|
        assert -s.lambda_mag * s.phi_variance < -s.mu_mag
        assert s.phi_variance < math.pi ** 2
    big = A.airy_state(1e9)
    assert big.mu_mag / big.lambda_mag == pytest.approx(math.pi ** 2, rel=1e-3)
    assert big.delta_phi == pytest.approx(math.pi, rel=1e-3)


def test_variance_equals_albright_assembly():
    # substitute phi = r - t/k: <phi^2> = 2 C^2 / k * int_{a1}^inf (r - t/k)^2 Ai(t)^2 dt
    lam = 400.0
    s = A.airy_state(lam)
    r, k = s.ratio_sqrt, s.k
    p0, p1, p2 = (np.asarray(v) for v in A.albright_primitives(A1))
    i0, i1, i2 = -p0, -p1, -p2  # primitives vanish at +inf
    assembled = 2 * s.c_norm ** 2 / k * (r * r * i0 - 2 * r / k * i1 + i2 / k ** 2)
    assert assembled == pytest.approx(s.phi_variance, rel=1e-13)
    # term by term against the closed form
    norm = 2 * s.c_norm ** 2 / k * i0
    assert norm == pytest.approx(1.0, rel=1e-13)
    assert -2 * r / k * i1 / i0 == pytest.approx(2 / 3 * abs(A1) * r / k, rel=1e-12)
    assert i2 / i0 / k ** 2 == pytest.approx(0.2 * (1 / abs(A1) + A1 ** 2) / k ** 2, rel=1e-12)


@given(st.floats(-8.0, 8.0))
def test_albright_primitives_differentiate(t):
    h = 1e-5
    lo, hi = A.albright_primitives(t - h), A.albright_primitives(t + h)
    ai2 = airy_ai(t) ** 2
    for n, (a, b) in enumerate(zip(lo, hi)):
        assert (b - a) / (2 * h) == pytest.approx(t ** n * ai2, abs=1e-8)


def test_albright_against_quadrature():
    p0_hi = A.albright_primitives(15.0)[0]
    p0_lo = A.albright_primitives(A1)[0]
    val = integrate(lambda t: airy_ai(t) ** 2, A1, 15.0)
    assert p0_hi - p0_lo == pytest.approx(val, abs=1e-10)


def test_product_unbounded_and_above_bound():
    lams = np.geomspace(100.0, 1000.0, 25)
    prods = [A.airy_uncertainty_product(float(l))[1] for l in lams]
    assert np.all(np.diff(prods) > 0)
    for l in np.geomspace(1.0, 1e6, 30):
        s = A.airy_state(float(l))
        _, prod = A.airy_uncertainty_product(float(l))
        assert prod >= A.airy_bound(s)


def test_product_close_to_numeric_at_three():
    lam = A.lambda_for_delta_phi(3.0)
    dphi, prod = A.airy_uncertainty_product(lam)
    assert dphi == pytest.approx(3.0, abs=1e-12)
    assert lam == pytest.approx(18.0252, abs=1e-3)
    num = solve_for_delta_phi(3.0, 1e-10)
    assert prod == pytest.approx(num.product, rel=0.05)


@pytest.mark.parametrize("target", [2.9, 2.95, 3.0])
def test_consistency_window(target):
    num = solve_for_delta_phi(target, 1e-10)
    assert abs(A.airy_state(abs(num.lam)).delta_phi - num.delta_phi) <= 0.02


def test_lambda_for_delta_phi_errors():
    with pytest.raises(RegimeError):
        A.lambda_for_delta_phi(3.2)
