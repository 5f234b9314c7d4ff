import mpmath
import pytest

from cmsha import make_curve_context
from cmsha.errors import GpolyFormatError, OrbitTooLarge
from cmsha.gauss import GaussianInteger as G
from cmsha.lattice import compute_period
from cmsha.orbit import (build_min_poly, class_representatives, full_orbit_trace, read_gpoly,
                         rho_orbit, verify_vanishing_trace, write_gpoly)
from cmsha.pipeline import exact_trace
from cmsha.reference import DEGREES, H_COEFFICIENTS

from conftest import DATA, load_h


@pytest.mark.parametrize("D", [17, -14, -33, -34, -39])
def test_degree_is_phi_over_eight(D):
    curve = make_curve_context(D)
    assert curve.degree == DEGREES[D]
    assert len(class_representatives(curve)) == DEGREES[D]


def test_d82_is_beyond_desk_scale():
    curve = make_curve_context(82)
    assert curve.degree == 6400
    with pytest.raises(OrbitTooLarge):
        build_min_poly(curve)


def test_orbit_size_and_square_root():
    curve = make_curve_context(17)
    orb = rho_orbit(curve, compute_period(17, 96))
    assert len(orb.rho_values) == 128
    assert orb.max_square_defect < 2.0 ** -60


def test_build_d17_from_scratch(h17):
    H = build_min_poly(make_curve_context(17))
    assert H.degree == 128 and H.is_monic()
    assert H.coeffs[18] == G(-323854307090694728597766056638496367408758560, 0)
    assert H.coeffs == h17.coeffs


@pytest.mark.parametrize("D", [17, -14, -33, -34, -39])
def test_stored_polynomials(D):
    H = load_h(D)
    info = H_COEFFICIENTS[D]
    assert H.degree == info["degree"] and H.is_monic()
    for k, v in info.items():
        if k != "degree":
            assert H.coeffs[k] == G(*v)


def test_d39_coefficient_has_factor_one_plus_i():
    c = load_h(-39).coeffs[51]
    assert c.re == c.im != 0
    assert any(x.im for x in load_h(-39).coeffs)
    assert all(x.im == 0 for x in load_h(-33).coeffs)


def test_gpoly_round_trip(tmp_path, h14):
    path = tmp_path / "h.gpoly"
    write_gpoly(h14, path)
    back = read_gpoly(path)
    assert back.coeffs == h14.coeffs and back.D == -14
    write_gpoly(back, tmp_path / "again.gpoly")
    assert (tmp_path / "again.gpoly").read_bytes() == path.read_bytes()


def test_gpoly_rejects_damage(tmp_path):
    text = (DATA / "h17.gpoly").read_text().splitlines()
    bad = tmp_path / "bad.gpoly"
    bad.write_text("\n".join(l for l in text if not l.startswith("c 7 ")) + "\n")
    with pytest.raises(GpolyFormatError):
        read_gpoly(bad)
    bad.write_text("D 17\nf x 1\n")
    with pytest.raises(GpolyFormatError):
        read_gpoly(bad)


@pytest.mark.parametrize("D,n", [(17, 0), (-14, 1), (17, 2), (-14, 0), (-14, 2)])
def test_trace_over_f1_points_vanishes(D, n):
    curve = make_curve_context(D)
    ball = verify_vanishing_trace(curve, compute_period(D, 128), n)
    assert ball.contains_zero()
    assert ball.rad < 1e-15


@pytest.mark.parametrize("D,n", [(17, 0), (17, 1), (17, 2), (-14, 0), (-14, 1), (-14, 2)])
def test_full_orbit_trace_matches_exact_trace(D, n):
    # sum over ker(eps) of wp^(2n+1)(d Omega/f) = (1+i)^(2n+3) Tr(A_n(rho))
    curve = make_curve_context(D)
    ball = full_orbit_trace(curve, compute_period(D, 128), n)
    T = exact_trace(curve, load_h(D), 2 * n + 3)
    target = mpmath.mpc(1, 1) ** (2 * n + 3) * mpmath.mpc(T.re, T.im)
    assert ball.contains(target)
    assert not ball.contains(-target)
