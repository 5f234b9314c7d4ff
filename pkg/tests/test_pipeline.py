import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cmsha import make_curve_context
from cmsha.errors import (BadPrime, InsufficientCalibration, InsufficientSums, NonMonic,
                          SignUncalibrated)
from cmsha.gauss import GaussianInteger as G, ResidueRing
from cmsha.hecke import exact_cp
from cmsha.pipeline import (calibrate_sign, cp_residue, exact_trace, format_table,
                            newton_power_sums, raw_cp_mod, resolve_sign, table_run, trace_of)
from cmsha.recurrences import DensePolynomial, a_poly
from cmsha.reference import RESIDUES_SMALL

from conftest import load_h

QUAD = [2, -3, 1]          # X^2 - 3X + 2, roots 1 and 2


def test_power_sums_small():
    S = newton_power_sums(QUAD, 5)
    assert S.sums[:4] == [2, 3, 5, 9]
    assert S.sums[5] == 33
    assert newton_power_sums([-7, 1], 4).sums == [1, 7, 49, 343, 2401]


def test_traces_small():
    S = newton_power_sums(QUAD, 5)
    assert trace_of(DensePolynomial([0, 1]), S) == 3
    assert trace_of(DensePolynomial([0, 0, 0, 2]), S) == 18
    assert trace_of(a_poly(1, 17), S) == 24 * 33 - 204 * 3 == 180
    with pytest.raises(InsufficientSums):
        trace_of(a_poly(2, 17), S)
    with pytest.raises(NonMonic):
        newton_power_sums([1, 2], 3)


@given(st.lists(st.tuples(st.integers(-20, 20), st.integers(-20, 20)), min_size=1, max_size=6),
       st.sampled_from([(5, 3), (13, 2), (29989, 4)]))
@settings(max_examples=40, deadline=None)
def test_power_sums_commute_with_reduction(roots, pm):
    # build prod (X - r) over Z[i] and compare power sums with the roots directly
    poly = [G(1, 0)]
    for r in roots:
        r = G(*r)
        nxt = [G(0, 0)] * (len(poly) + 1)
        for k, c in enumerate(poly):
            nxt[k + 1] = nxt[k + 1] + c
            nxt[k] = nxt[k] - c * r
        poly = nxt
    K = 9
    exact = newton_power_sums(poly, K)
    for k in range(K + 1):
        want = G(0, 0)
        for r in roots:
            want = want + G(*r) ** k
        assert exact.sums[k] == want
    R = ResidueRing.canonical(*pm)
    modular = newton_power_sums(poly, K, R)
    assert modular.sums == [R.reduce(s) for s in exact.sums]


def test_trace_agrees_with_oracle_before_division(curve17, h17):
    # T_H = Tr(A_{(p-3)/2}(rho)) equals minus the oracle's beta^p (p-1)! c_p+
    for p in (5, 13):
        assert exact_trace(curve17, h17, p) == -exact_cp(curve17, p).T


def test_sign_calibration(curve17, h17, curve14, h14):
    vals = [(p, exact_cp(curve17, p).c) for p in (5, 13)]
    assert calibrate_sign(curve17, h17, vals) == -1
    vals = [(p, exact_cp(curve14, p).c) for p in (5, 13)]
    assert calibrate_sign(curve14, h14, vals) == -1
    with pytest.raises(InsufficientCalibration):
        calibrate_sign(curve17, h17, vals[:1])


def test_sign_modes(curve17, h17, curve14, h14):
    assert resolve_sign(curve17, h17, "certify") == -1
    assert resolve_sign(curve17, h17, "table") == -1
    assert resolve_sign(curve14, h14, "certify") == -1
    # the reference -14 column is the negation of c_p+ p^-2 mod p
    assert resolve_sign(curve14, h14, "table") == 1
    assert resolve_sign(curve14, None, "+1") == 1


def test_residue_requires_sign_and_good_prime(curve17, h17):
    with pytest.raises(SignUncalibrated):
        cp_residue(curve17, h17, 5)
    c = curve17.with_sign(-1)
    for bad in (17, 7, 2, 15):
        with pytest.raises(BadPrime):
            cp_residue(c, h17, bad)


def test_single_rows(curve17, h17, curve14, h14):
    r = cp_residue(curve17.with_sign(-1), h17, 5)
    assert (r.residue, r.classification, r.ord) == (2, "sha_trivial", 2)
    assert r.imag_check and r.root_swap_check
    r = cp_residue(curve14.with_sign(1), h14, 29)
    assert r.residue == 0 and r.ord == 3 and r.classification == "sha_finite"


def test_modular_value_matches_exact_rational(curve14, h14):
    p, m = 13, 5
    c = exact_cp(curve14, p).c
    M = p ** m
    xr, xs, _ = raw_cp_mod(curve14, h14, p, m)
    want = c.numerator * pow(c.denominator, -1, M) % M
    assert xr == xs == (-want) % M


def test_table_segment(curve17, h17, curve14, h14):
    reps = table_run(curve17.with_sign(-1), h17, (5, 100))
    assert [r.residue_text() for r in reps] == ["2", "6", "*", "1", "6", "34", "21", "43",
                                                "31", "84", "41"]
    reps = table_run(curve14.with_sign(1), h14, (270, 280))
    assert [(r.p, r.residue) for r in reps] == [(277, 0)]
    star = table_run(curve17.with_sign(-1), h17, (17, 17))
    assert len(star) == 1 and star[0].status == "bad_prime"


@pytest.mark.parametrize("D", [17, -14])
def test_rows_are_rational_and_swap_invariant(D):
    H = load_h(D)
    curve = make_curve_context(D).with_sign(resolve_sign(make_curve_context(D), H, "table"))
    reps = table_run(curve, H, (5, 400))
    assert all(r.checks_ok for r in reps)
    col = RESIDUES_SMALL[D]
    assert all(r.residue == col[r.p] for r in reps if r.status == "ok")


def test_parallel_run_is_deterministic(curve14, h14):
    c = curve14.with_sign(1)
    one = format_table(table_run(c, h14, (5, 200), workers=1))
    two = format_table(table_run(c, h14, (5, 200), workers=2))
    assert one == two
    assert format_table(table_run(c, h14, (5, 60)), "json", D=-14).startswith("{")
