import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cmupstates.errors import DomainError
from cmupstates.numerics import (
    AI0,
    AIP0,
    airy_ai,
    airy_ai_and_prime,
    airy_ai_prime,
    find_root,
    first_zero_ai_prime,
    integrate,
)

# (y, Ai(y), Ai'(y)) from mpmath at 30 digits
REFERENCE = [
    (-20.0, -0.17640612707798468959, 0.8928628567364712384),
    (-9.5, 0.31910324771912820138, -0.108095318811871239),
    (-4.25, 0.12778292722826728437, -0.75926741205737406466),
    (-1.0, 0.5355608832923521188, -0.010160567116645209395),
    (0.0, 0.35502805388781723926, -0.25881940379280679841),
    (0.7, 0.18916240039815008218, -0.19985119158228048105),
    (2.5, 0.015725923380470489995, -0.026250881035903230365),
    (6.0, 9.9476943602528895702e-6, -0.000024765200397034954754),
    (15.0, 2.164962520737992299e-18, -8.4205679540177727661e-18),
]


@pytest.mark.parametrize("y, ai, aip", REFERENCE)
def test_matches_reference_values(y, ai, aip):
    v, d = airy_ai_and_prime(y)
    scale = 1.0 if abs(y) <= 10 else max(abs(ai), 1e-300)
    assert abs(v - ai) <= 1e-12 * scale + 1e-30
    assert abs(d - aip) <= 2e-12 * max(scale, abs(aip) if abs(y) > 10 else 1.0) + 1e-30


def test_values_at_origin():
    assert airy_ai(0.0) == pytest.approx(0.3550280538878172, abs=1e-15)
    assert airy_ai_prime(0.0) == pytest.approx(-0.2588194037928068, abs=1e-15)
    assert AI0 == pytest.approx(3 ** (-2 / 3) / math.gamma(2 / 3), rel=1e-15)
    assert AIP0 == pytest.approx(-(3 ** (-1 / 3)) / math.gamma(1 / 3), rel=1e-15)


def test_printed_value_near_first_zero():
    assert airy_ai(-1.0188) == pytest.approx(0.5357, abs=5e-5)


def test_value_at_five_against_integral_representation():
    # Ai(y) = (1/pi) int_0^inf cos(t^3/3 + y t) dt; for y = 5 the integrand is
    # tamed by deforming to t -> t + i sqrt(y), which gives a decaying integrand
    y = 5.0
    s = math.sqrt(y)

    def integrand(t):
        z = t + 1j * s
        return np.real(np.exp(1j * (z ** 3 / 3 + y * z)))

    # contour from i s to i s + inf; the vertical piece contributes nothing real
    val = integrate(integrand, 0.0, 12.0) / math.pi
    assert airy_ai(y) == pytest.approx(val, abs=1e-10)


def test_derivative_matches_finite_difference_at_one():
    h = 1e-5
    fd = (airy_ai(1.0 + h) - airy_ai(1.0 - h)) / (2 * h)
    assert airy_ai_prime(1.0) == pytest.approx(fd, abs=1e-7)


@given(st.floats(-10.0, 10.0))
def test_derivative_consistent_with_values(y):
    h = 1e-5
    fd = (airy_ai(y + h) - airy_ai(y - h)) / (2 * h)
    assert abs(airy_ai_prime(y) - fd) <= 1e-7


def test_ode_residual_on_grid():
    h = 1e-3
    for y in np.linspace(-10.0, 10.0, 201):
        second = (airy_ai(y + h) - 2 * airy_ai(y) + airy_ai(y - h)) / h ** 2
        # second-difference truncation error is h^2/12 * Ai''''; bound it generously
        assert abs(second - y * airy_ai(y)) <= 1e-9 + 1e-7 * (1 + y * y)


def test_ode_residual_with_exact_derivative():
    h = 1e-4
    for y in np.linspace(-10.0, 10.0, 201):
        second = (airy_ai_prime(y + h) - airy_ai_prime(y - h)) / (2 * h)
        assert abs(second - y * airy_ai(y)) <= 1e-7


def test_continuity_across_method_boundaries():
    h = 1e-9
    for edge in (-12.0, -1.0, 1.0, 12.0):
        v, d = airy_ai_and_prime(np.array([edge - h, edge + h]))
        # remove the first-order change across the 2h gap
        assert abs(v[1] - v[0] - 2 * h * d[0]) <= 1e-13
        assert abs(d[1] - d[0] - 2 * h * edge * v[0]) <= 1e-13


def test_vectorised_matches_scalar():
    y = np.linspace(-15, 15, 61)
    v, d = airy_ai_and_prime(y)
    for yi, vi, di in zip(y, v, d):
        sv, sd = airy_ai_and_prime(float(yi))
        assert vi == sv and di == sd


def test_first_zero_of_derivative():
    a1 = first_zero_ai_prime()
    assert a1 == pytest.approx(-1.018792971647471089017, abs=1e-13)
    assert round(a1, 4) == -1.0188
    assert abs(airy_ai_prime(a1)) <= 1e-10
    assert airy_ai(a1) > 0
    assert round(airy_ai(a1), 4) == 0.5357


def test_root_finder_locates_first_zero():
    root = find_root(airy_ai_prime, -2.0, -0.5, 1e-12)
    assert root == pytest.approx(-1.0188, abs=5e-5)


@pytest.mark.parametrize("bad", [math.nan, math.inf, -math.inf, 250.0, -201.0])
def test_domain_errors(bad):
    with pytest.raises(DomainError):
        airy_ai(bad)
    with pytest.raises(DomainError):
        airy_ai_prime(bad)
