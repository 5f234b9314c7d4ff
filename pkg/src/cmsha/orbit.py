"""Galois orbit of rho = W(Omega_inf/f1) and exact reconstruction of its minimal polynomial."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from typing import Optional

import mpmath
from mpmath import mp

from .curves import CurveContext
from .errors import (GpolyFormatError, InsufficientPrecision, NonMonic, OrbitTooLarge,
                     PrecisionExhausted)
from .gauss import GaussianInteger, ResidueSystem, euler_phi, unit_orbit_key
from .hecke import kernel_of_eps
from .lattice import LatticeContext, compute_period, wp_eval
from .recurrences import Ball, b_poly

G = GaussianInteger

DESK_SCALE_DEGREE = 1100


@dataclass
class ConjugateOrbit:
    reps: list
    rho_values: list
    precision_bits: int
    max_square_defect: float = 0.0


@dataclass
class MinimalPolynomial:
    D: int
    f: GaussianInteger
    coeffs: list                      # GaussianInteger, ascending, monic
    build_metadata: dict = field(default_factory=dict)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> GaussianInteger:
        return self.coeffs[k]

    def is_monic(self) -> bool:
        return self.coeffs[-1] == 1

    def conj(self) -> "MinimalPolynomial":
        return MinimalPolynomial(self.D, self.f.conj(), [c.conj() for c in self.coeffs],
                                 dict(self.build_metadata))

    def evaluate(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + mpmath.mpc(c.re, c.im)
        return acc

    def reduced(self, root: int, modulus: int) -> list:
        """Coefficients under Z[i] -> Z/modulus, i -> root."""
        return [(c.re + c.im * root) % modulus for c in self.coeffs]


def class_representatives(curve: CurveContext) -> list:
    """One d in ker(eps) mod f for each class of (O/f1)^x / <i>.

    The Artin symbol of (c) moves Omega_inf/f to psi((c)) Omega_inf/f and
    psi((c)) = eps(c) c always lies in ker(eps); so the conjugates of rho are
    indexed by ker(eps), and d, d' give the same conjugate exactly when they
    agree mod f1 up to a unit.
    """
    ker = kernel_of_eps(curve)
    rs1 = ResidueSystem(curve.f1)
    seen = {}
    for d in ker:
        key = unit_orbit_key(d, rs1)
        if key not in seen:
            seen[key] = d
    return [seen[k] for k in sorted(seen, key=lambda w: (w.im, w.re))]


def _rho_at(d, curve, lat):
    with mp.workprec(lat.precision_bits + 40):
        fz = mpmath.mpc(curve.f.re, curve.f.im)
        f1z = mpmath.mpc(curve.f1.re, curve.f1.im)
        dz = mpmath.mpc(d.re, d.im)
        pf, _ = wp_eval(dz * lat.omega_inf / fz, lat)
        p1, dp1 = wp_eval(dz * lat.omega_inf / f1z, lat)
        V = -1j * (pf - 1j * p1)
        if abs(V) < mpmath.ldexp(1, -lat.precision_bits // 2):
            raise PrecisionExhausted(f"V vanishes numerically at d = {d}")
        rho = dp1 / (2 * V)
        defect = abs(rho * rho - p1) / max(1, abs(p1))
    return rho, defect


def rho_orbit(curve: CurveContext, ctx: LatticeContext, reps: Optional[list] = None) -> ConjugateOrbit:
    """rho_d = wp'(d Omega/f1) / (2 V_d), V_d = -i (wp(d Omega/f) - i wp(d Omega/f1))."""
    if reps is None:
        reps = class_representatives(curve)
    vals = []
    worst = 0.0
    for d in reps:
        rho, defect = _rho_at(d, curve, ctx)
        vals.append(rho)
        worst = max(worst, float(defect))
    if worst > 2.0 ** (-ctx.precision_bits + 32):
        raise PrecisionExhausted(f"rho^2 - wp defect {worst:.3g} exceeds tolerance")
    return ConjugateOrbit(reps=list(reps), rho_values=vals,
                          precision_bits=ctx.precision_bits, max_square_defect=worst)


def _poly_mul(a, b):
    out = [mpmath.mpc(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def expand_roots(roots, bits):
    """prod (X - r) through a balanced product tree; coefficients ascending."""
    with mp.workprec(bits):
        layer = [[-r, mpmath.mpc(1)] for r in roots]
        if not layer:
            return [mpmath.mpc(1)]
        while len(layer) > 1:
            nxt = [_poly_mul(layer[i], layer[i + 1]) for i in range(0, len(layer) - 1, 2)]
            if len(layer) % 2:
                nxt.append(layer[-1])
            layer = nxt
        return layer[0]


def reconstruct_min_poly(orbit: ConjugateOrbit, curve: CurveContext, tolerance_bits: int = 24):
    coeffs_f = expand_roots(orbit.rho_values, orbit.precision_bits + 32)
    coeffs = []
    worst = mpmath.mpf(0)
    with mp.workprec(orbit.precision_bits + 32):
        for c in coeffs_f:
            g = G(int(mpmath.nint(c.real)), int(mpmath.nint(c.imag)))
            worst = max(worst, abs(c - mpmath.mpc(g.re, g.im)))
            coeffs.append(g)
    residual = float(worst)
    if residual > 2.0 ** (-tolerance_bits):
        raise InsufficientPrecision(
            f"rounding residual {residual:.3g} at {orbit.precision_bits} bits",
            residual=residual, precision_bits=orbit.precision_bits)
    if coeffs[-1] != 1:
        raise NonMonic(f"leading coefficient {coeffs[-1]}")
    return MinimalPolynomial(curve.D, curve.f, coeffs,
                             {"precision_bits": orbit.precision_bits, "residual": residual})


def estimate_precision(curve: CurveContext, reps=None) -> int:
    """Bits for reconstruction: log2 prod(1 + |rho_c|) + 2 log2(deg) + 64."""
    lat = compute_period(curve.D, 96)
    orb = rho_orbit(curve, lat, reps)
    with mp.workprec(96):
        size = sum(float(mpmath.log(1 + abs(r), 2)) for r in orb.rho_values)
    d = len(orb.rho_values)
    return int(size + 2 * math.log2(max(d, 2)) + 64)


def build_min_poly(curve: CurveContext, precision_bits: Optional[int] = None,
                   max_doublings: int = 3, verify: bool = False, log=None) -> MinimalPolynomial:
    degree = euler_phi(curve.f) // 8
    if degree > DESK_SCALE_DEGREE:
        raise OrbitTooLarge(
            f"deg H = {degree} for D = {curve.D} is beyond desk scale; use the oracle path")
    reps = class_representatives(curve)
    assert len(reps) == degree
    bits = precision_bits or estimate_precision(curve, reps)
    last = None
    for _ in range(max_doublings + 1):
        if log:
            log(f"building H for D={curve.D} at {bits} bits")
        lat = compute_period(curve.D, bits)
        try:
            H = reconstruct_min_poly(rho_orbit(curve, lat, reps), curve)
        except InsufficientPrecision as exc:
            last = exc
            bits *= 2
            continue
        if verify:
            lat2 = compute_period(curve.D, 2 * bits)
            H2 = reconstruct_min_poly(rho_orbit(curve, lat2, reps), curve)
            if H2.coeffs != H.coeffs:
                raise InsufficientPrecision("coefficients changed at doubled precision",
                                            precision_bits=bits)
            H.build_metadata["verified_bits"] = 2 * bits
        return H
    raise InsufficientPrecision(f"gave up at {bits} bits: {last}", precision_bits=bits)


# persistence ----------------------------------------------------------------

def write_gpoly(H: MinimalPolynomial, path) -> None:
    lines = [f"D {H.D}", f"f {H.f.re} {H.f.im}", f"degree {H.degree}"]
    lines += [f"c {k} {c.re} {c.im}" for k, c in enumerate(H.coeffs)]
    meta = H.build_metadata
    lines.append(f"meta precision_bits {meta.get('precision_bits', 0)} "
                 f"residual {float(meta.get('residual', 0.0))!r}")
    tmp = f"{path}.tmp"
    with open(tmp, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    os.replace(tmp, path)


def read_gpoly(path) -> MinimalPolynomial:
    D = f = degree = None
    coeffs = {}
    meta = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            parts = raw.split()
            if not parts:
                continue
            tag = parts[0]
            try:
                if tag == "D":
                    D = int(parts[1])
                elif tag == "f":
                    f = G(int(parts[1]), int(parts[2]))
                elif tag == "degree":
                    degree = int(parts[1])
                elif tag == "c":
                    coeffs[int(parts[1])] = G(int(parts[2]), int(parts[3]))
                elif tag == "meta":
                    it = iter(parts[1:])
                    for k, v in zip(it, it):
                        meta[k] = int(v) if k == "precision_bits" else float(v)
                else:
                    raise ValueError(f"unknown tag {tag}")
            except (IndexError, ValueError) as exc:
                raise GpolyFormatError(f"{path}:{lineno}: {exc}") from None
    if D is None or f is None or degree is None:
        raise GpolyFormatError(f"{path}: missing header")
    if sorted(coeffs) != list(range(degree + 1)):
        raise GpolyFormatError(f"{path}: expected coefficients 0..{degree}")
    return MinimalPolynomial(D, f, [coeffs[k] for k in range(degree + 1)], meta)


# numerical identities ----------------------------------------------------------

def _ball_from(value, bits, scale=None):
    # relative error budget of wp_eval is 2^(-bits+16)
    s = abs(value) if scale is None else scale
    return Ball(value, s * mpmath.ldexp(1, -bits + 16))


def _odd_derivative_ball(z, n, lat, B):
    p, dp = wp_eval(z, lat)
    bits = lat.precision_bits
    with mp.workprec(bits + 40):
        pb = _ball_from(p, bits)
        dpb = _ball_from(dp, bits)
        acc = Ball(0)
        for c in reversed(B.coeffs):
            acc = acc * pb + Ball(c)
        return acc * dpb


def verify_vanishing_trace(curve: CurveContext, ctx: LatticeContext, n: int, reps=None) -> Ball:
    """Enclosure of sum over Gal(K(E_f)/K) of wp^(2n+1)(d Omega_inf/f1).

    The conjugates are indexed by ker(eps) mod f.
    """
    B = b_poly(n, curve.D)
    ker = kernel_of_eps(curve) if reps is None else reps
    f1z = mpmath.mpc(curve.f1.re, curve.f1.im)
    total = Ball(0)
    with mp.workprec(ctx.precision_bits + 40):
        for d in ker:
            z = mpmath.mpc(d.re, d.im) * ctx.omega_inf / f1z
            total = total + _odd_derivative_ball(z, n, ctx, B)
    return total


def full_orbit_trace(curve: CurveContext, ctx: LatticeContext, n: int) -> Ball:
    """Enclosure of sum over ker(eps) of wp^(2n+1)(d Omega_inf/f)."""
    B = b_poly(n, curve.D)
    fz = mpmath.mpc(curve.f.re, curve.f.im)
    total = Ball(0)
    with mp.workprec(ctx.precision_bits + 40):
        for d in kernel_of_eps(curve):
            z = mpmath.mpc(d.re, d.im) * ctx.omega_inf / fz
            total = total + _odd_derivative_ball(z, n, ctx, B)
    return total
