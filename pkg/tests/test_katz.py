import pytest
from hypothesis import given
from hypothesis import strategies as st

from cmsha.errors import DivisibilityViolation, RangeExceeded
from cmsha.katz import (exact_trace_integer, is_exempt, katz_check, katz_exponent, p_product,
                        validate_trace_formula)
from cmsha.orbit import MinimalPolynomial
from cmsha.pipeline import raw_cp_mod


@pytest.mark.parametrize("n,q,e", [(25, 3, 8), (3, 5, -1), (100, 3, 36), (3, 7, -1)])
def test_exponent(n, q, e):
    assert katz_exponent(n, q) == e


@given(st.integers(3, 500), st.sampled_from([3, 7, 11, 19, 23]))
def test_exponent_is_floor_formula(n, q):
    e = katz_exponent(n, q)
    assert (e + 1) * (q * q - 1) <= n * q < (e + 2) * (q * q - 1)


def test_exemption_class():
    assert is_exempt(4, 3) and is_exempt(12, 3) and not is_exempt(5, 3)
    assert is_exempt(8, 7)


@pytest.mark.parametrize("p,val", [(5, 1), (7, 3), (3, 1)])
def test_p_product(curve17, p, val):
    assert p_product(p, curve17) == val


def test_p_product_is_positive_and_skips_bad_q(curve14):
    # 7 | D, so 7 never contributes for D = -14
    v = p_product(101, curve14)
    assert v > 0 and v % 7 != 0 and v % 3 == 0


def test_record_and_range(curve17, h17):
    rec = exact_trace_integer(curve17, h17, 25)
    assert rec.valuations[3] >= 8
    assert set(rec.valuations) == {3, 7, 11}
    with pytest.raises(RangeExceeded):
        exact_trace_integer(curve17, h17, 123)
    with pytest.raises(ValueError):
        exact_trace_integer(curve17, h17, 24)


@pytest.mark.parametrize("p", [5, 13])
def test_trace_matches_pipeline_before_division(curve17, h17, p):
    m = 4
    M = p ** m
    T = exact_trace_integer(curve17, h17, p).T_n
    xr, _, ring = raw_cp_mod(curve17, h17, p, m)
    fact = 1
    for k in range(2, p):
        fact = fact * k % M
    pre = xr * pow(ring.reduce(curve17.beta), p, M) * fact % M
    assert ring.reduce(T) == pre


def test_conjugate_polynomial_gives_conjugate_traces(curve14, h14):
    Hc = MinimalPolynomial(h14.D, h14.f.conj(), [c.conj() for c in h14.coeffs])
    for n in (5, 9, 13):
        assert exact_trace_integer(curve14, Hc, n).T_n == exact_trace_integer(curve14, h14, n).T_n.conj()


def test_katz_suite_d17(curve17, h17):
    rep = katz_check(curve17, h17, range(3, 100), (3, 7, 11))
    assert rep.ok and rep.checked == 147
    row = next(r for r in rep.pairs if r["n"] == 25 and r["q"] == 3)
    assert row["bound"] == 8 and row["ord"] >= 8
    assert '"violations": []' in rep.to_json()


def test_katz_rejects_split_or_bad_q(curve17, h17):
    with pytest.raises(ValueError):
        katz_check(curve17, h17, [5], [5])


def test_violation_is_reported(curve17, h17, monkeypatch):
    import cmsha.katz as kz
    monkeypatch.setattr(kz, "katz_exponent", lambda n, q: 10 ** 6)
    with pytest.raises(DivisibilityViolation):
        kz.katz_check(curve17, h17, [25], [3])
    rep = kz.katz_check(curve17, h17, [25], [3], strict=False)
    assert not rep.ok


def test_trace_formula_against_direct_sum(curve17, h17):
    rows = validate_trace_formula(curve17, h17, n_max=11)
    assert all(r["ok"] for r in rows)
    assert all(r["rel_error"] < 1e-8 for r in rows if r["n"] >= 5)
