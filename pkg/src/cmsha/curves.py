"""The six curves y^2 = x^3 - Dx handled here, plus a hook for user data."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from sympy import factorint

from .errors import BadD, UnsupportedCurve
from .gauss import GaussianInteger, ONE_PLUS_I, euler_phi

G = GaussianInteger

# conductor generator f and Mordell-Weil rank g over Q
CURVE_TABLE = {
    -14: (G(56, 0), 2),
    17: (G(2, 0) * ONE_PLUS_I * 17, 2),
    -33: (G(132, 0), 2),
    -34: (G(136, 0), 2),
    -39: (G(2, 0) * ONE_PLUS_I * 39, 2),
    82: (G(328, 0), 3),
}

SUPPORTED_D = tuple(CURVE_TABLE)

# Mordell-Weil generators for D = 82
GENERATORS = {82: [(-9, 3), (-8, 12), (-1, 9)]}


def check_d(D: int) -> int:
    D = int(D)
    if D == 0:
        raise BadD("D must be nonzero")
    if any(e >= 4 for e in factorint(abs(D)).values()):
        raise BadD(f"D = {D} is not fourth-power-free")
    return D


@dataclass(frozen=True)
class CurveContext:
    D: int
    g: int
    f: GaussianInteger
    f1: GaussianInteger
    alpha: GaussianInteger
    beta: GaussianInteger
    sign: Optional[int] = None

    def with_sign(self, sign: int) -> "CurveContext":
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        return replace(self, sign=sign)

    @property
    def degree(self) -> int:
        """Degree of the minimal polynomial of rho, phi(f)/8."""
        return euler_phi(self.f) // 8

    def is_bad(self, p: int) -> bool:
        return (2 * self.D) % p == 0

    def on_curve(self, x, y) -> bool:
        return y * y == x ** 3 - self.D * x


def make_curve_context(D: int, f=None, g: Optional[int] = None) -> CurveContext:
    D = check_d(D)
    if f is None or g is None:
        if D not in CURVE_TABLE:
            raise UnsupportedCurve(
                f"D = {D} is not tabulated; pass the conductor f and rank g explicitly")
        tf, tg = CURVE_TABLE[D]
        f = tf if f is None else f
        g = tg if g is None else g
    f = GaussianInteger.coerce(f)
    f1 = f.exact_div(ONE_PLUS_I)
    if f1 is None:
        raise UnsupportedCurve(f"conductor {f} is not divisible by 1+i")
    alpha = GaussianInteger(1, 0) if D > 0 else ONE_PLUS_I
    beta = (f * alpha).exact_div(ONE_PLUS_I)
    return CurveContext(D=D, g=int(g), f=f, f1=f1, alpha=alpha, beta=beta)
