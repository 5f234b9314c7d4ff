"""c_p+ p^-g mod p from the minimal polynomial of rho.

With n = (p-3)/2 and T = Tr(A_n(rho)) over the conjugates of rho,
    c_p+ = sign * T / (beta^p (p-1)!),
computed modulo p^m through Newton power sums of H reduced at a prime above p.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Optional, Sequence

from sympy import isprime, primerange

from .curves import CurveContext
from .errors import (BadPrime, InsufficientCalibration, InsufficientSums,
                     MainConjectureViolation, NonMonic, SignMismatch, SignUncalibrated)
from .gauss import GaussianInteger, ResidueRing, p_valuation
from .hecke import classify
from .orbit import MinimalPolynomial
from .recurrences import DensePolynomial, a_odd_mod, a_sequence

G = GaussianInteger


@dataclass
class PowerSums:
    modulus: Optional[int]          # None for exact Gaussian sums
    root: Optional[int]
    sums: list

    @property
    def kmax(self) -> int:
        return len(self.sums) - 1


def _coeff_list(H):
    if isinstance(H, MinimalPolynomial):
        return list(H.coeffs)
    if isinstance(H, DensePolynomial):
        return [G.coerce(c) for c in H.coeffs]
    return [G.coerce(c) for c in H]


def newton_power_sums(H, kmax: int, ring: Optional[ResidueRing] = None) -> PowerSums:
    """s_k = sum of k-th powers of the roots of the monic H, k = 0..kmax.

    s_k = -(k h_{d-k} + sum_{j=1}^{min(k-1,d)} h_{d-j} s_{k-j}), h_{d-k} = 0 for k > d.
    """
    cs = _coeff_list(H)
    d = len(cs) - 1
    if cs[-1] != 1:
        raise NonMonic(f"leading coefficient {cs[-1]}")
    if ring is not None:
        from .recurrences import newton_sums_mod
        M = ring.modulus
        h = [ring.reduce(c) for c in cs]
        return PowerSums(M, ring.root, newton_sums_mod(h, kmax, M))
    hr = [cs[d - j].re for j in range(1, d + 1)]
    hi = [cs[d - j].im for j in range(1, d + 1)]
    sr, si = [d], [0]
    for k in range(1, kmax + 1):
        J = min(k - 1, d)
        ar = ai = 0
        for j in range(1, J + 1):
            a, b = hr[j - 1], hi[j - 1]
            x, y = sr[k - j], si[k - j]
            ar += a * x - b * y
            ai += a * y + b * x
        if k <= d:
            ar += k * hr[k - 1]
            ai += k * hi[k - 1]
        sr.append(-ar)
        si.append(-ai)
    return PowerSums(None, None, [G(a, b) for a, b in zip(sr, si)])


def trace_of(A, S: PowerSums):
    """sum_k a_k s_k for A given densely (DensePolynomial or list)."""
    coeffs = A.coeffs if isinstance(A, DensePolynomial) else list(A)
    deg = len(coeffs) - 1
    while deg > 0 and coeffs[deg] == 0:
        deg -= 1
    if deg > S.kmax:
        raise InsufficientSums(f"need s_{deg}, have up to s_{S.kmax}")
    if S.modulus is None:
        tot = G(0, 0)
        for k in range(deg + 1):
            if coeffs[k]:
                tot = tot + S.sums[k] * int(coeffs[k])
        return tot
    M = S.modulus
    return sum(int(coeffs[k]) * S.sums[k] for k in range(deg + 1)) % M


def trace_odd(odd, S: PowerSums):
    """Trace of sum_i odd[i] X^(2i+1)."""
    top = 2 * len(odd) - 1
    if top > S.kmax:
        raise InsufficientSums(f"need s_{top}, have up to s_{S.kmax}")
    if S.modulus is None:
        re = sum(a * S.sums[2 * i + 1].re for i, a in enumerate(odd))
        im = sum(a * S.sums[2 * i + 1].im for i, a in enumerate(odd))
        return G(re, im)
    M = S.modulus
    return sum(a * S.sums[2 * i + 1] for i, a in enumerate(odd)) % M


@dataclass
class ResidueReport:
    p: int
    ord: Optional[int] = None        # exact ord_p(c_p+) when below m
    ord_at_least: Optional[int] = None
    residue: Optional[int] = None
    classification: Optional[str] = None
    imag_check: Optional[bool] = None
    root_swap_check: Optional[bool] = None
    status: str = "ok"               # ok | bad_prime | error
    note: str = ""
    value_mod: Optional[int] = None  # c_p+ mod p^m
    modulus_exponent: Optional[int] = None
    sign: Optional[int] = None

    @property
    def checks_ok(self) -> bool:
        return self.status == "bad_prime" or (
            self.status == "ok" and bool(self.imag_check) and bool(self.root_swap_check))

    def ord_text(self) -> str:
        if self.ord is not None:
            return str(self.ord)
        if self.ord_at_least is not None:
            return f">={self.ord_at_least}"
        return "*"

    def residue_text(self) -> str:
        if self.status == "bad_prime":
            return "*"
        if self.status != "ok":
            return "ERR"
        return str(self.residue)

    def to_dict(self) -> dict:
        return asdict(self)


def _fact_mod(p: int, M: int) -> int:
    out = 1
    for k in range(2, p):
        out = out * k % M
    return out


def raw_cp_mod(curve: CurveContext, H: MinimalPolynomial, p: int, m: int, method="auto"):
    """(x_r, x_{-r}, ring): T/(beta^p (p-1)!) mod p^m in the two embeddings, sign not applied."""
    n = (p - 3) // 2
    M = p ** m
    odd = a_odd_mod(n, curve.D, p, m, method=method)
    fact = _fact_mod(p, M)
    out = []
    ring = ResidueRing.canonical(p, m)
    for R in (ring, ring.swapped()):
        S = newton_power_sums(H, 2 * n + 3, R)
        T = trace_odd(odd, S)
        bp = pow(R.reduce(curve.beta), p, M)
        out.append(T * pow(bp * fact % M, -1, M) % M)
    return out[0], out[1], ring


def check_prime(curve: CurveContext, p: int):
    if p < 5 or not isprime(p) or p % 4 != 1:
        raise BadPrime(f"p = {p} is not a prime = 1 mod 4")
    if (2 * curve.D) % p == 0:
        raise BadPrime(f"p = {p} divides 2D")


def cp_residue(curve: CurveContext, H: MinimalPolynomial, p: int, m: Optional[int] = None,
               method: str = "auto") -> ResidueReport:
    check_prime(curve, p)
    if curve.sign is None:
        raise SignUncalibrated("calibrate or force the sign first")
    g = curve.g
    m = m or g + 2
    M = p ** m
    xr, xs, ring = raw_cp_mod(curve, H, p, m, method)
    root_swap = xr == xs
    # x = a + b i with a = (x_r + x_-r)/2, b = (x_r - x_-r)/(2r)
    inv2 = pow(2, -1, M)
    im = (xr - xs) * pow(2 * ring.root, -1, M) % M
    re = (xr + xs) * inv2 % M
    imag_ok = im == 0
    val = curve.sign * re % M
    rep = ResidueReport(p=p, imag_check=imag_ok, root_swap_check=root_swap,
                        value_mod=val, modulus_exponent=m, sign=curve.sign)
    if val == 0:
        rep.ord_at_least = m
        ordv = m
    else:
        ordv = p_valuation(val, p)
        rep.ord = ordv
    if ordv < g:
        raise MainConjectureViolation(f"ord_{p}(c_p+) = {ordv} < g = {g} for D = {curve.D}")
    rep.classification = classify(ordv, g) if ordv < m else "indeterminate"
    rep.residue = (val // p ** g) % p if ordv == g else 0
    return rep


# exact traces --------------------------------------------------------------

def exact_trace(curve: CurveContext, H: MinimalPolynomial, n: int, sums: Optional[PowerSums] = None):
    """T_n = Tr(A_{(n-3)/2}(rho)) as an exact Gaussian integer, n odd >= 3."""
    if n < 3 or n % 2 == 0:
        raise ValueError("n must be odd and >= 3")
    m = (n - 3) // 2
    odd = None
    for odd in a_sequence(m, curve.D):
        pass
    S = sums if sums is not None and sums.kmax >= n else newton_power_sums(H, n)
    return trace_odd(odd, S)


def exact_cp_from_h(curve: CurveContext, H: MinimalPolynomial, p: int, sign: int) -> Fraction:
    T = exact_trace(curve, H, p)
    bp = curve.beta ** p
    num = T * bp.conj()
    if num.im != 0:
        raise MainConjectureViolation(f"T/beta^p is not rational at p = {p}")
    return Fraction(sign * num.re, bp.norm() * math.factorial(p - 1))


# sign calibration ---------------------------------------------------------------

def _require_two(values):
    if len(values) < 2:
        raise InsufficientCalibration("at least two calibration primes are required")


def calibrate_sign(curve: CurveContext, H: MinimalPolynomial, oracle_values: Sequence) -> int:
    """Sign that makes the trace formula reproduce exact c_p+ at every given prime."""
    _require_two(oracle_values)
    m = curve.g + 2
    signs = set()
    for p, c in oracle_values:
        c = Fraction(c)
        M = p ** m
        target = c.numerator * pow(c.denominator, -1, M) % M
        if target == 0:
            raise InsufficientCalibration(f"c_{p}+ vanishes mod p^{m}; choose another prime")
        xr, xs, _ = raw_cp_mod(curve, H, p, m)
        if xr == target:
            signs.add(1)
        elif xr == -target % M:
            signs.add(-1)
        else:
            raise SignMismatch(f"p = {p}: trace {xr} matches neither +-{target} mod {p}^{m}")
    if len(signs) != 1:
        raise SignMismatch(f"calibration primes disagree on the sign: {sorted(signs)}")
    return signs.pop()


def calibrate_sign_to_table(curve: CurveContext, H: MinimalPolynomial, rows: Sequence) -> int:
    """Sign that reproduces given reference residues (p, c_p+ p^-g mod p)."""
    _require_two(rows)
    g = curve.g
    signs = set()
    for p, r in rows:
        if not r:
            raise InsufficientCalibration(f"residue at p = {p} is zero; choose another prime")
        xr, _, _ = raw_cp_mod(curve, H, p, g + 1)
        raw = (xr // p ** g) % p
        if raw == r % p:
            signs.add(1)
        elif raw == -r % p:
            signs.add(-1)
        else:
            raise SignMismatch(f"p = {p}: residue {raw} matches neither +-{r}")
    if len(signs) != 1:
        raise SignMismatch(f"calibration rows disagree on the sign: {sorted(signs)}")
    return signs.pop()


def certify_sign(curve: CurveContext, H: MinimalPolynomial, p: Optional[int] = None) -> int:
    """Sign from positivity of c_p+ using an exact trace at one small prime.

    L(conj(psi)^p, p) is a convergent Euler product whose local factors at
    split primes pair into |1 - x|^-2 and at inert primes equal (1 + q^-p)^-1,
    so c_p+ > 0 and the sign is that of T/beta^p.
    """
    p = p or calibration_primes(curve, 1)[0]
    T = exact_trace(curve, H, p)
    num = T * (curve.beta ** p).conj()
    if num.im != 0 or num.re == 0:
        raise SignMismatch(f"T/beta^p at p = {p} is not a nonzero rational")
    return 1 if num.re > 0 else -1


def calibration_primes(curve: CurveContext, count: int = 2, limit: int = 60) -> list:
    out = [p for p in primerange(5, limit) if p % 4 == 1 and (2 * curve.D) % p]
    return out[:count]


def resolve_sign(curve: CurveContext, H: Optional[MinimalPolynomial], mode: str = "table",
                 log=None) -> int:
    """mode: auto | certify | table | +1 | -1.

    auto calibrates against the analytic oracle, certify uses positivity of
    an exact trace, table matches the first two nonzero reference residues
    at good primes.
    """
    if mode in ("+1", "1", 1):
        return 1
    if mode in ("-1", -1):
        return -1
    if H is None:
        raise SignUncalibrated("sign calibration needs H")
    primes = calibration_primes(curve)
    if mode == "auto":
        from .hecke import exact_cp
        vals = [(p, exact_cp(curve, p).c) for p in primes]
        s = calibrate_sign(curve, H, vals)
    elif mode == "certify":
        s = certify_sign(curve, H, primes[0])
        if certify_sign(curve, H, primes[1]) != s:
            raise SignMismatch("positivity gives different signs at the two primes")
    elif mode == "table":
        from .reference import RESIDUES_SMALL
        col = RESIDUES_SMALL.get(curve.D)
        if col is None:
            raise SignUncalibrated(f"no reference residues for D = {curve.D}")
        rows = [(p, r) for p, r in sorted(col.items()) if r and (2 * curve.D) % p][:2]
        s = calibrate_sign_to_table(curve, H, rows)
    else:
        raise ValueError(f"unknown sign mode {mode!r}")
    if log:
        log(f"sign for D={curve.D} ({mode}): {s:+d}")
    return s


# tables -------------------------------------------------------------------

def _job(args):
    curve, H, p, m, method = args
    if (2 * curve.D) % p == 0:
        return ResidueReport(p=p, status="bad_prime", note="p divides 2D")
    try:
        return cp_residue(curve, H, p, m, method)
    except MainConjectureViolation as exc:
        return ResidueReport(p=p, status="error", note=f"MainConjectureViolation: {exc}")
    except Exception as exc:  # keep the run going, mark the row
        return ResidueReport(p=p, status="error", note=f"{type(exc).__name__}: {exc}")


def table_primes(pmin: int, pmax: int) -> list:
    return [p for p in primerange(max(pmin, 5), pmax + 1) if p % 4 == 1]


def table_run(curve: CurveContext, H: MinimalPolynomial, p_range, workers: int = 1,
              m: Optional[int] = None, method: str = "auto") -> list:
    """Reports for all p = 1 mod 4 in [pmin, pmax], ascending, rows for p | D marked bad."""
    if curve.sign is None:
        raise SignUncalibrated("calibrate or force the sign first")
    pmin, pmax = p_range
    jobs = [(curve, H, p, m, method) for p in table_primes(pmin, pmax)]
    if workers <= 1 or len(jobs) <= 1:
        out = [_job(j) for j in jobs]
    else:
        # largest primes first for load balance; results are re-sorted
        order = sorted(jobs, key=lambda j: -j[2])
        with ProcessPoolExecutor(max_workers=workers) as ex:
            out = list(ex.map(_job, order))
    return sorted(out, key=lambda r: r.p)


def format_table(reports, fmt: str = "tsv", D=None) -> str:
    if fmt == "json":
        return json.dumps({"D": D, "rows": [r.to_dict() for r in reports]}, indent=1,
                          sort_keys=True) + "\n"
    lines = ["p\tresidue\tord\tclass\tchecks"]
    for r in reports:
        if r.status == "bad_prime":
            lines.append(f"{r.p}\t*\t*\t*\t-")
            continue
        checks = "ok" if r.checks_ok else ("FAIL" if r.status == "ok" else r.note)
        lines.append(f"{r.p}\t{r.residue_text()}\t{r.ord_text()}\t{r.classification}\t{checks}")
    return "\n".join(lines) + "\n"
