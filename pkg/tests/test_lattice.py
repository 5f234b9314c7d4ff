from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp

from cmsha.errors import BadD, PoleAtLatticePoint
from cmsha.lattice import compute_period, laurent_coefficients, wp_derivative, wp_eval
from cmsha.recurrences import b_poly

LEMNISCATE = "2.62205755429211981046483958989111941368275495143162316281682170380079"


def test_lemniscate_constant():
    ctx = compute_period(1, 200)
    with mp.workprec(200):
        assert abs(ctx.omega_inf - mpmath.mpf(LEMNISCATE)) < mpmath.mpf(10) ** -60


def test_scaled_periods():
    with mp.workprec(100):
        # Omega / 17^(1/4) and Omega / 3.5^(1/4), evaluated independently
        assert abs(compute_period(17).omega_inf - mpmath.mpf("1.29130844092900722071")) < 1e-18
        c14 = compute_period(-14)
        assert abs(c14.omega_plus - mpmath.mpf("1.91701366719322697413")) < 1e-18
        # for D < 0 the lattice generator is Omega_plus / (1 + i)
        assert abs(c14.omega_inf * (1 + 1j) - c14.omega_plus) < 1e-25


def test_bad_inputs():
    with pytest.raises(BadD):
        compute_period(0)
    with pytest.raises(BadD):
        compute_period(32)
    with pytest.raises(ValueError):
        compute_period(17, 32)


def test_laurent_coefficients():
    c = laurent_coefficients(17, 3)
    assert c[1] == Fraction(17, 5)
    assert c[2] == Fraction(17 ** 2, 75)


@pytest.mark.parametrize("D", [17, -14, 82, -39])
def test_half_period_is_two_torsion(D):
    ctx = compute_period(D, 128)
    with mp.workprec(128):
        p, dp = wp_eval(ctx.omega_inf / 2, ctx)
        assert abs(p - mpmath.sqrt(D)) < 1e-30
        assert abs(dp) < 1e-25


def test_pole():
    ctx = compute_period(17, 96)
    with pytest.raises(PoleAtLatticePoint):
        wp_eval(ctx.omega_inf * (2 + 3j), ctx)


coords = st.floats(min_value=0.05, max_value=0.95)


@given(coords, coords, st.sampled_from([17, -14, -33, 82]))
@settings(max_examples=25, deadline=None)
def test_differential_equation_and_periodicity(x, y, D):
    ctx = compute_period(D, 96)
    with mp.workprec(96):
        z = ctx.omega_inf * mpmath.mpc(x, y)
        p, dp = wp_eval(z, ctx)
        scale = max(1, abs(p) ** 3)
        assert abs(dp ** 2 - (4 * p ** 3 - 4 * D * p)) / scale < 1e-22
        q, _ = wp_eval(z + ctx.omega_inf * (1j), ctx)
        assert abs(q - p) / max(1, abs(p)) < 1e-22


def test_derivative_matches_numerical_differentiation():
    ctx = compute_period(17, 256)
    z0 = mpmath.mpf("0.37")
    with mp.workprec(256):
        h = mpmath.mpf(10) ** -20
        _, dp = wp_eval(z0, ctx)
        num = (wp_eval(z0 + h, ctx)[0] - wp_eval(z0 - h, ctx)[0]) / (2 * h)
        assert abs(dp - num) / abs(dp) < 1e-30
        # third derivative through B_1 = 12X
        d3 = wp_derivative(3, z0, ctx)
        d = [wp_eval(z0 + k * h, ctx)[1] for k in (-1, 0, 1)]
        num3 = (d[0] - 2 * d[1] + d[2]) / h ** 2
        assert abs(d3 - num3) / abs(d3) < 1e-25
    assert b_poly(1, 17).coeffs == [0, 12]
