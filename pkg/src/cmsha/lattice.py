"""Periods and the Weierstrass function of L = Omega_inf * Z[i] for g2 = 4D, g3 = 0."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import mpmath
from mpmath import mp

from .curves import check_d
from .errors import PoleAtLatticePoint

# coefficients r_j with c_{2j}(D) = r_j * D**j in the Laurent expansion
#   wp(z) = z^-2 + sum_{k >= 2} c_k z^(2k-2)
# c_2 = g2/20 = D/5, c_3 = g3/28 = 0, c_k = 3/((2k+1)(k-3)) sum_{m=2}^{k-2} c_m c_{k-m}
_LAURENT_R: list = [None, Fraction(1, 5)]


def laurent_r(jmax: int) -> list:
    """Exact r_1..r_jmax (index 0 unused)."""
    r = _LAURENT_R
    while len(r) <= jmax:
        j = len(r)
        k = 2 * j
        s = sum(r[a] * r[j - a] for a in range(1, j))
        r.append(Fraction(3, (2 * k + 1) * (k - 3)) * s)
    return r[: jmax + 1]


def laurent_coefficients(D: int, jmax: int) -> list:
    """Exact c_2, c_4, ..., c_{2 jmax} for g2 = 4D as Fractions, index j."""
    r = laurent_r(jmax)
    return [None] + [r[j] * Fraction(D) ** j for j in range(1, jmax + 1)]


def lemniscate_omega(bits: int):
    """Least positive real period of y^2 = x^3 - x, pi / agm(1, sqrt 2)."""
    with mp.workprec(bits + 10):
        om = mp.pi / mp.agm(1, mp.sqrt(2))
    return om


@dataclass
class LatticeContext:
    D: int
    omega_inf: Any      # complex for D < 0, see notes in compute_period
    omega_plus: Any
    precision_bits: int
    _coeffs: dict = field(default_factory=dict, repr=False)

    def series(self, jmax):
        """Laurent coefficients as mpf at the working precision, cached."""
        key = (jmax, self.precision_bits)
        if key not in self._coeffs:
            with mp.workprec(self.precision_bits + 32):
                exact = laurent_coefficients(self.D, jmax)
                self._coeffs[key] = [None] + [
                    mpmath.mpf(c.numerator) / c.denominator for c in exact[1:]]
        return self._coeffs[key]

    def at_precision(self, bits: int) -> "LatticeContext":
        return compute_period(self.D, bits)


def compute_period(D: int, precision_bits: int = 128) -> LatticeContext:
    """Scaled lemniscatic periods.

    D > 0: Omega_inf = Omega / D^(1/4), real, and Omega_plus = Omega_inf.
    D < 0: Omega_plus = Omega / (-D/4)^(1/4) and Omega_inf = Omega_plus/(1+i),
    so that L = Omega_inf Z[i] is the period lattice of y^2 = x^3 - Dx.
    """
    D = check_d(D)
    if precision_bits < 64:
        raise ValueError("precision_bits must be >= 64")
    with mp.workprec(precision_bits + 32):
        om = lemniscate_omega(precision_bits + 32)
        if D > 0:
            w = om / mpmath.root(mpmath.mpf(D), 4)
            wplus = w
        else:
            wplus = om / mpmath.root(mpmath.mpf(-D) / 4, 4)
            w = wplus / mpmath.mpc(1, 1)
    return LatticeContext(D=D, omega_inf=w, omega_plus=wplus, precision_bits=precision_bits)


def _terms_needed(bits: int, ratio: float) -> int:
    # each Laurent term in w = z^4 gains about -4*log2(ratio) bits
    per = -4.0 * mpmath.log(ratio, 2)
    return int(bits / float(per)) + 8


def wp_eval(z, ctx: LatticeContext):
    """Return (wp(z), wp'(z)) on the lattice Omega_inf * Z[i].

    Reduce into the fundamental parallelogram centred at 0, halve until
    |z| < 0.3 |Omega_inf|, sum the Laurent series and undo the halvings with
    the duplication formulas
        wp(2z)  = (wp^2 + D)^2 / wp'^2
        wp'(2z) = wp' (4 wp (wp^2+D) Q - N (12 wp^2 - 4D)) / (2 Q^2),
    where Q = wp'^2 and N = (wp^2 + D)^2.
    """
    D = ctx.D
    om = ctx.omega_inf
    bits = ctx.precision_bits
    with mp.workprec(bits + 40):
        z = mpmath.mpc(z)
        t = z / om
        t = t - mpmath.nint(t.real) - 1j * mpmath.nint(t.imag)
        if abs(t) < mpmath.ldexp(1, -(bits // 2)):
            raise PoleAtLatticePoint(f"z = {mpmath.nstr(z, 10)} is a lattice point")
        z = t * om
        k = 0
        bound = 0.3 * abs(om)
        while abs(z) >= bound:
            z /= 2
            k += 1
    with mp.workprec(bits + 24 + 6 * k):
        jmax = _terms_needed(bits + 24 + 6 * k, float(abs(z) / abs(om)))
        c = ctx.series(jmax)
        w = z ** 4
        S = mpmath.mpc(0)
        dS = mpmath.mpc(0)
        for j in range(jmax, 0, -1):
            S = S * w + c[j]
            dS = dS * w + (4 * j - 2) * c[j]
        z2 = z * z
        p = 1 / z2 + z2 * S
        dp = -2 / (z2 * z) + z * dS
        for _ in range(k):
            Q = dp * dp
            pp = p * p + D
            N = pp * pp
            p, dp = N / Q, dp * (4 * p * pp * Q - N * (12 * p * p - 4 * D)) / (2 * Q * Q)
    return p, dp


def wp_derivative(n: int, z, ctx: LatticeContext, bpolys=None):
    """n-th derivative of wp at z for odd n >= 1 via B_m(wp) wp', m = (n-1)/2."""
    from .recurrences import b_poly
    if n % 2 == 0:
        raise ValueError("only odd derivatives are provided")
    m = (n - 1) // 2
    B = bpolys[m] if bpolys is not None else b_poly(m, ctx.D)
    p, dp = wp_eval(z, ctx)
    with mp.workprec(ctx.precision_bits + 40):
        return B.evaluate(p) * dp
