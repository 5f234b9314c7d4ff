"""Supersingular divisibility of the exact traces T_n = Tr(A_{(n-3)/2}(rho))."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional

import mpmath
from mpmath import mp
from sympy import primerange

from .curves import CurveContext
from .errors import DivisibilityViolation, RangeExceeded
from .gauss import GaussianInteger, gaussian_valuation_inert
from .orbit import MinimalPolynomial
from .pipeline import PowerSums, exact_trace, newton_power_sums

DEFAULT_N_MAX = 121


def katz_exponent(n: int, q: int) -> int:
    return (n * q) // (q * q - 1) - 1


def is_exempt(n: int, q: int) -> bool:
    return (n - 1 - q) % (q * q - 1) == 0


def inert_good_primes(curve: CurveContext, q_max: int) -> list:
    return [q for q in primerange(3, q_max + 1) if q % 4 == 3 and (2 * curve.D) % q]


@dataclass
class LIntegerRecord:
    n: int
    T_n: GaussianInteger
    valuations: dict = field(default_factory=dict)


class TraceCache:
    """Exact power sums of H shared by all n up to n_max."""

    def __init__(self, H: MinimalPolynomial, n_max: int):
        self.H = H
        self.sums: PowerSums = newton_power_sums(H, n_max)


def exact_trace_integer(curve: CurveContext, H: MinimalPolynomial, n: int, q_max: int = 11,
                        n_max: int = DEFAULT_N_MAX, cache: Optional[TraceCache] = None) -> LIntegerRecord:
    if n % 2 == 0 or n < 3:
        raise ValueError("n must be odd and >= 3")
    if n > n_max:
        raise RangeExceeded(f"n = {n} exceeds the exact range n <= {n_max}")
    T = exact_trace(curve, H, n, cache.sums if cache else None)
    vals = {q: gaussian_valuation_inert(T, q) for q in inert_good_primes(curve, q_max)}
    return LIntegerRecord(n=n, T_n=T, valuations=vals)


@dataclass
class KatzReport:
    D: int
    pairs: list = field(default_factory=list)
    violations: list = field(default_factory=list)

    @property
    def checked(self) -> int:
        return sum(1 for r in self.pairs if not r["exempt"])

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self) -> str:
        body = {"D": self.D, "checked": self.checked, "violations": self.violations,
                "pairs": self.pairs}
        return json.dumps(body, indent=1, sort_keys=True) + "\n"


def katz_check(curve: CurveContext, H: MinimalPolynomial, n_range: Iterable[int],
               q_set: Iterable[int], strict: bool = True) -> KatzReport:
    qs = sorted(set(q_set))
    for q in qs:
        if q % 4 != 3 or (2 * curve.D) % q == 0 or curve.f.norm() % q == 0:
            raise ValueError(f"q = {q} is not an inert prime of good reduction")
    ns = sorted(n for n in n_range if n % 2 == 1 and n >= 3)
    cache = TraceCache(H, max(ns)) if ns else None
    rep = KatzReport(D=curve.D)
    for n in ns:
        T = exact_trace(curve, H, n, cache.sums)
        for q in qs:
            bound = katz_exponent(n, q)
            got = gaussian_valuation_inert(T, q)
            exempt = is_exempt(n, q)
            ok = exempt or bound <= 0 or got is None or got >= bound
            row = {"n": n, "q": q, "bound": bound,
                   "ord": got, "exempt": exempt, "ok": ok}
            rep.pairs.append(row)
            if not ok:
                rep.violations.append(row)
    if strict and rep.violations:
        v = rep.violations[0]
        raise DivisibilityViolation(
            f"ord_{v['q']}(T_{v['n']}) = {v['ord']} < {v['bound']} for D = {curve.D}")
    return rep


def p_product(p: int, curve: CurveContext) -> int:
    """prod over inert q <= p with q not dividing 2D of q^max(0, nu_q)."""
    out = 1
    for q in primerange(3, p + 1):
        if q % 4 == 3 and (2 * curve.D) % q:
            out *= q ** max(0, katz_exponent(p, q))
    return out


def validate_trace_formula(curve: CurveContext, H: MinimalPolynomial, n_max: int = 15,
                           precision_bits: int = 30, norm_cap: int = 4 * 10 ** 6) -> list:
    """Compare -T_n/(beta^n (n-1)!) with Omega_plus^-n L_f(conj(psi)^n, n) for odd n <= n_max.

    Returns rows (n, relative error, tolerance); the direct sum is float64.
    """
    from .hecke import lf_value
    from .lattice import compute_period
    lat = compute_period(curve.D, 96)
    rows = []
    sums = newton_power_sums(H, n_max)
    for n in range(3, n_max + 1, 2):
        T = exact_trace(curve, H, n, sums)
        # small n converge slowly; cap the norm bound and let the tolerance follow the tail
        need = (math.pi * n / (n - 2) * 2.0 ** precision_bits) ** (1.0 / (n / 2 - 1))
        L = lf_value(curve, n, norm_bound=int(min(need, norm_cap)) + 2)
        with mp.workprec(96):
            b = mpmath.mpc(curve.beta.re, curve.beta.im) ** n
            c_alg = -mpmath.mpc(T.re, T.im) / (b * mpmath.factorial(n - 1))
            c_an = L.value / lat.omega_plus ** n
            scale = abs(L.value) + L.error
            err = float(abs(c_alg - c_an) * abs(lat.omega_plus) ** n / scale)
        tol = 4 * (L.error / scale) + 2.0 ** -(precision_bits - 4)
        rows.append({"n": n, "rel_error": err, "tolerance": tol, "ok": err <= tol})
    return rows
