"""Groessencharacter of y^2 = x^3 - Dx over Q(i) and analytic ground truth."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import mpmath
import numpy as np
from mpmath import mp
from sympy import isprime, primerange

from .curves import CurveContext
from .errors import (BadPrime, CharacterMismatch, EvenNormPrime, NotCoprime,
                     NotCoprimeToConductor, PrecisionUnattainable, RecognitionFailed)
from .gauss import (GaussianInteger, ResidueSystem, UNITS, factor, p_valuation,
                    two_squares)

G = GaussianInteger


def primary_associate(pi: GaussianInteger) -> GaussianInteger:
    """Associate a + bi with a odd, b even and a + b = 1 mod 4."""
    for u in UNITS:
        q = pi * u
        if q.re % 2 == 1 and q.im % 2 == 0 and (q.re + q.im) % 4 == 1:
            return q
    raise EvenNormPrime(f"{pi} has no primary associate")


def _gauss_powmod(a: GaussianInteger, e: int, q: int) -> GaussianInteger:
    result = G(1, 0)
    base = G(a.re % q, a.im % q)
    while e:
        if e & 1:
            result = result * base
            result = G(result.re % q, result.im % q)
        base = base * base
        base = G(base.re % q, base.im % q)
        e >>= 1
    return result


def quartic_symbol(a, pi) -> GaussianInteger:
    """(a/pi)_4: the unit congruent to a^((N pi - 1)/4) modulo pi."""
    a = G.coerce(a)
    pi = G.coerce(pi)
    n = pi.norm()
    if n % 2 == 0:
        raise EvenNormPrime(f"{pi} has even norm")
    if pi.im == 0 or pi.re == 0:
        # inert prime q: residue field Z[i]/q
        q = abs(pi.re or pi.im)
        if a.re % q == 0 and a.im % q == 0:
            raise NotCoprime(f"{a} is divisible by {pi}")
        v = _gauss_powmod(a, (n - 1) // 4, q)
        for u in UNITS:
            if (u.re - v.re) % q == 0 and (u.im - v.im) % q == 0:
                return u
        raise BadPrime(f"{pi} is not prime")
    q = n
    r = (-pi.re * pow(pi.im, -1, q)) % q      # i = r in Z[i]/pi
    x = (a.re + a.im * r) % q
    if x == 0:
        raise NotCoprime(f"{a} is divisible by {pi}")
    v = pow(x, (q - 1) // 4, q)
    for u in UNITS:
        if (u.re + u.im * r - v) % q == 0:
            return u
    raise BadPrime(f"{pi} is not prime")


def count_points(D: int, q: int) -> int:
    """#E(F_q) for y^2 = x^3 - Dx, projective point included."""
    x = np.arange(q, dtype=np.int64)
    sq = np.zeros(q, dtype=np.int64)
    np.add.at(sq, (x * x) % q, 1)
    rhs = ((x * x % q) * x - (D % q) * x) % q
    return 1 + int(sq[rhs].sum())


@dataclass
class HeckeCharacter:
    """psi((pi)) = chi(pi)^e * s * pi_0 on split primes, with pi_0 primary,
    chi = (D/pi_0)_4 and (e, s) fixed by point counts; psi((q)) = -q on
    inert q."""

    curve: CurveContext
    convention: dict = field(default_factory=dict)
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        if not self.convention:
            self.convention = calibrate_convention(self.curve.D)
        self._fprimes = set(factor(self.curve.f))

    def on_prime(self, pi: GaussianInteger) -> GaussianInteger:
        pi = pi.normalized()
        hit = self._cache.get(pi)
        if hit is not None:
            return hit
        if pi in self._fprimes:
            raise NotCoprimeToConductor(f"{pi} divides the conductor")
        val = _psi_prime(pi, self.curve.D, self.convention["e"], self.convention["s"])
        self._cache[pi] = val
        return val

    def __call__(self, alpha) -> GaussianInteger:
        alpha = G.coerce(alpha)
        out = G(1, 0)
        for pi, e in factor(alpha).items():
            out = out * self.on_prime(pi) ** e
        return out

    def eps(self, x) -> GaussianInteger:
        """psi((x))/x, a unit depending only on x mod f."""
        x = G.coerce(x)
        val = self(x).exact_div(x)
        if val is None or not val.is_unit():
            raise CharacterMismatch(f"psi((x))/x is not a unit for x = {x}")
        return val


def _psi_prime(pi, D, e, s):
    n = pi.norm()
    if pi.im == 0:
        return G(-pi.re, 0)
    if n == 2:
        raise NotCoprimeToConductor("1+i divides the conductor")
    p0 = primary_associate(pi)
    chi = quartic_symbol(G(D, 0), p0)
    return chi ** e * s * p0


def _ap_from(D, q, e, s):
    a, b = two_squares(q)
    psi = _psi_prime(G(a, b), D, e, s)
    return 2 * psi.re


@lru_cache(maxsize=None)
def calibrate_convention(D: int, q_max: int = 120) -> dict:
    """Pick the unit twist (e, s) that reproduces a_q = q + 1 - #E(F_q)."""
    qs = [q for q in primerange(3, q_max) if q % 4 == 1 and (2 * D) % q]
    counts = {q: q + 1 - count_points(D, q) for q in qs}
    good = []
    for e in (1, 3):
        for s in (1, -1):
            if all(_ap_from(D, q, e, s) == counts[q] for q in qs):
                good.append((e, s))
    if len(good) != 1:
        raise CharacterMismatch(f"no unique unit convention for D = {D}: {good}")
    e, s = good[0]
    return {"e": e, "s": s, "q_max": q_max, "rule": "chi(pi0)^e * s * pi0"}


def grossencharacter(chi: HeckeCharacter, alpha) -> GaussianInteger:
    return chi(alpha)


def ap_validate(chi: HeckeCharacter, q_max: int = 200, strict: bool = True) -> dict:
    D = chi.curve.D
    rows = []
    bad = []
    for q in primerange(3, q_max):
        if (2 * D) % q == 0:
            continue
        n = count_points(D, q)
        if q % 4 == 3:
            ok = n == q + 1
            rows.append({"q": q, "points": n, "ok": ok})
        else:
            a, b = two_squares(q)
            psi = chi(G(a, b))
            ok = q + 1 - n == 2 * psi.re and psi.norm() == q
            rows.append({"q": q, "points": n, "psi": [psi.re, psi.im], "ok": ok})
        if not ok:
            bad.append(q)
    report = {"D": D, "q_max": q_max, "convention": dict(chi.convention),
              "checked": len(rows), "failures": bad, "rows": rows}
    if strict and bad:
        raise CharacterMismatch(f"point counts disagree at q = {bad}")
    return report


# residues of the conductor character ------------------------------------

@lru_cache(maxsize=None)
def eps_table(D: int, f: GaussianInteger):
    """Map canonical residue mod f -> eps value, for units mod f."""
    from .curves import make_curve_context
    chi = HeckeCharacter(make_curve_context(D, f=f, g=0))
    rs = ResidueSystem(f)
    return rs, {x: chi.eps(x) for x in rs.units()}


def kernel_of_eps(curve: CurveContext) -> list:
    """Residues d mod f with eps(d) = 1, sorted canonically."""
    rs, table = eps_table(curve.D, curve.f)
    ker = [x for x, e in table.items() if e == 1]
    ker.sort(key=lambda w: (w.im, w.re))
    return ker


# direct L-series --------------------------------------------------------

@dataclass
class LValue:
    value: float
    error: float
    norm_bound: int
    n: int


def _ideal_grid(X):
    r = int(math.isqrt(X))
    a = np.arange(1, r + 1, dtype=np.int64)[:, None]
    b = np.arange(0, r + 1, dtype=np.int64)[None, :]
    a, b = np.broadcast_arrays(a, b)
    N = a * a + b * b
    keep = N <= X
    return a[keep], b[keep], N[keep]


def lf_value(curve: CurveContext, n: int, precision_bits: int = 30, norm_bound=None) -> LValue:
    """L_f(conj(psi)^n, n) by direct summation over ideals prime to f.

    Ideals are enumerated by generators a + bi with a > 0, b >= 0; psi((x))
    = eps(x) x with eps read off x mod f. Float64 accumulation, so at most
    about 45 bits are reachable.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    if precision_bits > 45:
        raise PrecisionUnattainable("direct summation is limited to ~45 bits")
    # tail over N > X is below C X^(1 - n/2) with C ~ pi/4 * n/(n-2) * 4
    target = 2.0 ** (-precision_bits)
    if norm_bound is None:
        C = math.pi * n / (n - 2)
        X = int((C / target) ** (1.0 / (n / 2 - 1))) + 2
    else:
        X = int(norm_bound)
    if X > 4 * 10 ** 7:
        raise PrecisionUnattainable(f"norm bound {X} too large")
    rs, table = eps_table(curve.D, curve.f)
    a, b, N = _ideal_grid(X)
    k = np.floor_divide(b, rs.g0)
    xr = np.mod(a - k * rs.t, rs.n1)
    xi = b - k * rs.g0
    lut_re = np.zeros((rs.g0, rs.n1), dtype=np.int64)
    lut_im = np.zeros((rs.g0, rs.n1), dtype=np.int64)
    ok = np.zeros((rs.g0, rs.n1), dtype=bool)
    for x, e in table.items():
        lut_re[x.im, x.re] = e.re
        lut_im[x.im, x.re] = e.im
        ok[x.im, x.re] = True
    sel = ok[xi, xr]
    a, b, N = a[sel], b[sel], N[sel]
    e = lut_re[xi[sel], xr[sel]] + 1j * lut_im[xi[sel], xr[sel]]
    psi = e * (a + 1j * b)
    terms = np.conj(psi / np.sqrt(N)) ** n / N ** (n / 2.0)
    order = np.argsort(N, kind="stable")
    total = math.fsum(terms.real[order])
    tail = math.pi * n / (n - 2) * X ** (1 - n / 2)
    return LValue(value=total, error=tail + 1e-15 * len(terms), norm_bound=X, n=n)


# exact c_p+ through the classical trace formula -----------------------------

@dataclass
class ExactCp:
    D: int
    p: int
    c: Fraction
    T: GaussianInteger
    ord: int
    residue: int
    precision_bits: int
    residual: float
    g: int

    @property
    def classification(self):
        return classify(self.ord, self.g)


def classify(ord_, g):
    if ord_ == g:
        return "sha_trivial"
    if ord_ == g + 1:
        return "sha_finite"
    return "indeterminate"


def _classical_sum(curve, lat, n, ker, B):
    from .lattice import wp_eval
    fz = mpmath.mpc(curve.f.re, curve.f.im)
    with mp.workprec(lat.precision_bits + 40):
        tot = mpmath.mpc(0)
        for d in ker:
            z = mpmath.mpc(d.re, d.im) * lat.omega_inf / fz
            P, dP = wp_eval(z, lat)
            tot += B.evaluate(P) * dP
    return tot


def classical_T(curve: CurveContext, n: int, precision_bits: int):
    """beta^n (n-1)! c_n+ from the sum of wp^(n-2)(d Omega_inf/f) over ker eps.

    For odd n >= 3, L_n = (-1)^n f^-n sum_d wp^(n-2)(d Omega_inf / f), hence
    beta^n (n-1)! c_n+ = -(1+i)^-n * sum_d ... .
    """
    from .lattice import compute_period
    from .recurrences import b_poly
    if n % 2 == 0 or n < 3:
        raise ValueError("n must be odd and >= 3")
    lat = compute_period(curve.D, precision_bits)
    B = b_poly((n - 3) // 2, curve.D)
    ker = kernel_of_eps(curve)
    tot = _classical_sum(curve, lat, n, ker, B)
    with mp.workprec(precision_bits + 40):
        return -tot / mpmath.mpc(1, 1) ** n


def _round_gauss(z):
    # z may carry more bits than the global context, so round inside a wider one
    with mp.workprec(max(int(mpmath.mag(z)), 0) + 96):
        re = int(mpmath.nint(z.real))
        im = int(mpmath.nint(z.imag))
        return G(re, im), float(abs(z - mpmath.mpc(re, im)))


def oracle_precision(curve: CurveContext, n: int) -> int:
    f = math.sqrt(curve.f.norm())
    return int(n * (math.log2(f) + 0.5 * math.log2(abs(curve.D)) + 2)
               + math.lgamma(n) / math.log(2) + 64)


def exact_T(curve: CurveContext, n: int, precision_bits=None, max_tries: int = 5):
    """Recognize beta^n (n-1)! c_n+ as a Gaussian integer.

    Two evaluations at precisions P and P + 64 must round to the same value
    with residual below 2^-32; otherwise P grows by half and we retry.
    """
    P = precision_bits or oracle_precision(curve, n)
    for _ in range(max_tries):
        a, ra = _round_gauss(classical_T(curve, n, P))
        b, rb = _round_gauss(classical_T(curve, n, P + 64))
        if a == b and max(ra, rb) < 2.0 ** -32:
            return a, max(ra, rb), P
        P = int(P * 1.5)
    raise RecognitionFailed(f"no stable Gaussian integer for D={curve.D}, n={n} up to {P} bits")


def exact_cp(curve: CurveContext, p: int, precision_bits=None) -> ExactCp:
    """Exact c_p+ = (Omega_plus)^-p L(conj(psi)^p, p) for a small prime p."""
    if p % 4 != 1 or not isprime(p) or (2 * curve.D) % p == 0:
        raise BadPrime(f"p = {p} is not a good prime = 1 mod 4 for D = {curve.D}")
    T, residual, P = exact_T(curve, p, precision_bits)
    bp = curve.beta ** p
    num = T * bp.conj()
    if num.im != 0:
        raise RecognitionFailed(f"T / beta^p is not rational: {T}")
    c = Fraction(num.re, bp.norm() * math.factorial(p - 1))
    ord_, res = ord_and_residue(c, p, curve.g)
    return ExactCp(D=curve.D, p=p, c=c, T=T, ord=ord_, residue=res,
                   precision_bits=P, residual=residual, g=curve.g)


def ord_and_residue(c: Fraction, p: int, g: int):
    """(ord_p c, residue of c p^-g mod p); the residue is 0 unless ord_p c = g."""
    if c == 0:
        return math.inf, 0
    v = 0
    if c.numerator % p == 0:
        v = p_valuation(c.numerator, p)
    elif c.denominator % p == 0:
        v = -p_valuation(c.denominator, p)
    if v != g:
        return v, 0
    x = c / Fraction(p) ** g
    return v, x.numerator * pow(x.denominator, -1, p) % p
