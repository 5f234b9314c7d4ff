import math

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from cmsha.recurrences import (EXACT, DensePolynomial, ModRing, a_next, a_odd_mod, a_poly,
                               a_sequence, b_poly, newton_sums_mod, odd_to_dense)

X = sympy.Symbol("X")
Dsym = sympy.Symbol("D")


def _sym(P):
    return sum(sympy.Integer(c) * X ** k for k, c in enumerate(P.coeffs))


def test_first_members():
    assert a_poly(0, 17).coeffs == [0, 0, 0, 2]
    assert a_poly(1, 17).coeffs == [0, -204, 0, 0, 0, 24]
    assert b_poly(0, 5).coeffs == [1]
    assert b_poly(1, 5).coeffs == [0, 12]


@pytest.mark.parametrize("n", range(0, 21))
def test_leading_coefficient_is_factorial(n):
    A = a_poly(n, -14)
    assert A.degree == 2 * n + 3
    assert A.lead() == math.factorial(2 * n + 2)
    assert A.is_odd()


def test_a_recurrence_against_symbolic_derivatives():
    # A_{n+1} = (X^4 - D) A_n'' + 2 X^3 A_n' with D symbolic
    A = 2 * X ** 3
    for n in range(6):
        for D in (17, -33):
            assert sympy.expand(A.subs(Dsym, D) - _sym(a_poly(n, D))) == 0
        A = sympy.expand((X ** 4 - Dsym) * sympy.diff(A, X, 2) + 2 * X ** 3 * sympy.diff(A, X))


def test_b_recurrence_is_derivative_of_wp():
    # with wp'^2 = 4 wp^3 - 4 D wp and wp'' = 6 wp^2 - 2D, B_{n+1} wp' = d^2/dz^2 (B_n wp')
    D = 82
    for n in range(6):
        B = _sym(b_poly(n, D))
        dB, ddB = sympy.diff(B, X), sympy.diff(B, X, 2)
        W2, W2p = 6 * X ** 2 - 2 * D, 12 * X
        # (B wp')'' = B'' wp'^3 + 3 B' wp' wp'' + B wp'''  and  wp''' = 12 wp wp'
        rhs = ddB * (4 * X ** 3 - 4 * D * X) + 3 * dB * W2 + B * W2p
        assert sympy.expand(rhs - _sym(b_poly(n + 1, D))) == 0


def test_a_sequence_matches_dense():
    for n, odd in enumerate(a_sequence(12, -39)):
        assert odd_to_dense(odd) == a_poly(n, -39)


@given(st.integers(0, 40), st.sampled_from([17, -14, -33, -34, -39, 82]),
       st.sampled_from([(5, 3), (13, 4), (577, 4), (29989, 4), (3, 9)]))
@settings(max_examples=40, deadline=None)
def test_modular_kernels_agree_with_exact(n, D, pm):
    p, m = pm
    M = p ** m
    exact = [c % M for c in list(a_sequence(n, D))[-1]]
    assert a_odd_mod(n, D, p, m, method="object") == exact
    assert a_odd_mod(n, D, p, m, method="auto") == exact


def test_limb_kernel_on_larger_n():
    p, m, n = 29989, 4, 300
    assert a_odd_mod(n, -14, p, m, method="limbs") == a_odd_mod(n, -14, p, m, method="object")


def test_mod_ring_polynomials():
    R = ModRing(13 ** 2)
    A = a_poly(5, 17, R)
    assert A.coeffs == [c % 169 for c in a_poly(5, 17).coeffs]
    assert a_next(A, 17) == a_poly(6, 17, R)
    assert a_poly(3, 17).reduce(R) == a_poly(3, 17, R)


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=8), st.integers(1, 14))
@settings(max_examples=30, deadline=None)
def test_newton_sums_against_companion_matrix(low, K):
    coeffs = low + [1]
    d = len(coeffs) - 1
    # s_k = trace(C^k) for the companion matrix C
    C = sympy.Matrix.zeros(d, d)
    for i in range(1, d):
        C[i, i - 1] = 1
    for i in range(d):
        C[i, d - 1] = -coeffs[i]
    want = [(C ** k).trace() for k in range(K + 1)]
    M = 10 ** 9 + 7
    assert newton_sums_mod(coeffs, K, M) == [w % M for w in want]


def test_dense_polynomial_helpers():
    P = DensePolynomial([1, 0, 3, 0, 0], EXACT)
    assert P.degree == 2 and P.is_even() and not P.is_odd()
    assert P.evaluate(2) == 13
    assert DensePolynomial([0]).degree == -1
