"""The families A_n and B_n.

A_n(W) = V^(2n+1) with V' = 2W^3 and V^2 = W^4 - D, which gives
    A_0 = 2X^3,  A_{n+1} = (X^4 - D) A_n'' + 2X^3 A_n'.
B_n(wp) wp' = wp^(2n+1), and differentiating twice with wp'^2 = 4wp^3 - 4D wp gives
    B_0 = 1,  B_{n+1} = (4X^3 - 4DX) B_n'' + (18X^2 - 6D) B_n' + 12X B_n.
"""

from __future__ import annotations

import operator

import mpmath
import numpy as np
from mpmath import mp


class ExactRing:
    tag = "exact"

    def __call__(self, x):
        return int(x)

    def __eq__(self, other):
        return isinstance(other, ExactRing)

    def __hash__(self):
        return hash("exact")

    def __repr__(self):
        return "ExactRing()"


class ModRing:
    tag = "mod"

    def __init__(self, modulus: int):
        if modulus < 2:
            raise ValueError("modulus must be >= 2")
        self.modulus = int(modulus)

    def __call__(self, x):
        return int(x) % self.modulus

    def __eq__(self, other):
        return isinstance(other, ModRing) and other.modulus == self.modulus

    def __hash__(self):
        return hash(("mod", self.modulus))

    def __repr__(self):
        return f"ModRing({self.modulus})"


class Ball:
    """Midpoint/radius enclosure over the complex numbers."""

    __slots__ = ("mid", "rad")

    def __init__(self, mid, rad=0):
        self.mid = mpmath.mpc(mid)
        self.rad = mpmath.mpf(rad)

    @staticmethod
    def _ulp(x):
        return abs(x) * mpmath.ldexp(1, 1 - mp.prec)

    def __add__(self, other):
        o = other if isinstance(other, Ball) else Ball(other)
        m = self.mid + o.mid
        return Ball(m, self.rad + o.rad + self._ulp(m))

    __radd__ = __add__

    def __neg__(self):
        return Ball(-self.mid, self.rad)

    def __sub__(self, other):
        return self + (-(other if isinstance(other, Ball) else Ball(other)))

    def __mul__(self, other):
        o = other if isinstance(other, Ball) else Ball(other)
        m = self.mid * o.mid
        r = abs(self.mid) * o.rad + abs(o.mid) * self.rad + self.rad * o.rad
        return Ball(m, r + self._ulp(m))

    __rmul__ = __mul__

    def contains(self, x) -> bool:
        return abs(self.mid - x) <= self.rad

    def contains_zero(self) -> bool:
        return self.contains(0)

    def overlaps(self, other) -> bool:
        return abs(self.mid - other.mid) <= self.rad + other.rad

    def __repr__(self):
        return f"Ball({mpmath.nstr(self.mid, 12)}, +/- {mpmath.nstr(self.rad, 3)})"


class BallRing:
    tag = "ball"

    def __init__(self, precision_bits: int = 192):
        self.precision_bits = precision_bits

    def __call__(self, x):
        if isinstance(x, Ball):
            return x
        with mp.workprec(self.precision_bits):
            return Ball(x)

    def __eq__(self, other):
        return isinstance(other, BallRing) and other.precision_bits == self.precision_bits

    def __hash__(self):
        return hash(("ball", self.precision_bits))


EXACT = ExactRing()


class DensePolynomial:
    """Dense univariate polynomial, coefficients ascending."""

    def __init__(self, coeffs, ring=EXACT):
        self.ring = ring
        cs = [ring(c) for c in coeffs]
        if ring.tag != "ball":
            while len(cs) > 1 and cs[-1] == 0:
                cs.pop()
        self.coeffs = cs or [ring(0)]

    @property
    def degree(self) -> int:
        if len(self.coeffs) == 1 and self.ring.tag != "ball" and self.coeffs[0] == 0:
            return -1
        return len(self.coeffs) - 1

    def lead(self):
        return self.coeffs[-1]

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.ring(0)

    def __eq__(self, other):
        if not isinstance(other, DensePolynomial):
            return NotImplemented
        return self.ring == other.ring and self.coeffs == other.coeffs

    def __repr__(self):
        return f"DensePolynomial({self.coeffs!r}, {self.ring!r})"

    def reduce(self, ring) -> "DensePolynomial":
        return DensePolynomial(self.coeffs, ring)

    def evaluate(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def is_odd(self) -> bool:
        return all(c == 0 for c in self.coeffs[0::2])

    def is_even(self) -> bool:
        return all(c == 0 for c in self.coeffs[1::2])


def _ring_of(P, ring):
    return P.ring if ring is None else ring


def a_next(A: DensePolynomial, D) -> DensePolynomial:
    """One step (X^4 - D) A'' + 2X^3 A'."""
    R = A.ring
    D = R(D)
    out = [R(0)] * (len(A.coeffs) + 2)
    for j, a in enumerate(A.coeffs):
        if R.tag != "ball" and a == 0:
            continue
        if j >= 1:
            out[j + 2] = R(out[j + 2] + j * (j + 1) * a)
        if j >= 2:
            out[j - 2] = R(out[j - 2] - D * (j * (j - 1)) * a)
    return DensePolynomial(out, R)


def b_next(B: DensePolynomial, D) -> DensePolynomial:
    """One step (4X^3 - 4DX) B'' + (18X^2 - 6D) B' + 12X B."""
    R = B.ring
    D = R(D)
    out = [R(0)] * (len(B.coeffs) + 1)
    for j, b in enumerate(B.coeffs):
        if R.tag != "ball" and b == 0:
            continue
        up = 4 * j * (j - 1) + 18 * j + 12
        out[j + 1] = R(out[j + 1] + up * b)
        if j >= 1:
            out[j - 1] = R(out[j - 1] - D * (4 * j * (j - 1) + 6 * j) * b)
    return DensePolynomial(out, R)


def a_poly(n: int, D, ring=EXACT) -> DensePolynomial:
    A = DensePolynomial([0, 0, 0, 2], ring)
    for _ in range(n):
        A = a_next(A, D)
    return A


def b_poly(n: int, D, ring=EXACT) -> DensePolynomial:
    B = DensePolynomial([1], ring)
    for _ in range(n):
        B = b_next(B, D)
    return B


def a_sequence(nmax: int, D):
    """Yield exact odd-coefficient lists of A_0 .. A_nmax (entry i is X^(2i+1))."""
    a = [0, 2]
    yield list(a)
    for _ in range(nmax):
        L = len(a)
        new = [0] * (L + 1)
        for i in range(L + 1):
            v = 0
            if 1 <= i <= L:
                v += (2 * i) * (2 * i - 1) * a[i - 1]
            if i + 1 < L:
                v -= D * (2 * i + 2) * (2 * i + 3) * a[i + 1]
            new[i] = v
        a = new
        yield list(a)


def odd_to_dense(odd) -> DensePolynomial:
    cs = [0] * (2 * len(odd))
    for i, c in enumerate(odd):
        cs[2 * i + 1] = c
    return DensePolynomial(cs)


# fast modular kernel -------------------------------------------------------

_INT64_SAFE = 1 << 62


def _limb_layout(p: int, m: int):
    """Pick a base B = p^k with B < 2^30 and L limbs so that p^m | B^L."""
    k = 1
    while p ** (k + 1) < (1 << 30):
        k += 1
    if p ** k >= (1 << 30):
        return None
    L = -(-m // k)
    return p ** k, L


def a_odd_mod(n: int, D: int, p: int, m: int, method: str = "auto"):
    """Odd coefficients of A_n reduced mod p^m, as a list of Python ints.

    The recurrence on odd coefficients a_i of X^(2i+1) is
        a'_i = (2i)(2i-1) a_{i-1} - D (2i+2)(2i+3) a_{i+1}.
    With method "limbs" the state is held in int64 limbs of base p^k,
    otherwise in object arrays of Python ints.
    """
    M = p ** m
    layout = _limb_layout(p, m)
    wmax = (2 * n + 8) ** 2
    use_limbs = method == "limbs" or (method == "auto" and layout is not None)
    if use_limbs:
        if layout is None or wmax * (1 << 30) >= _INT64_SAFE or abs(D) >= (1 << 20):
            raise ValueError("limb kernel not applicable for these parameters")
        return _a_odd_limbs(n, D, layout[0], layout[1], M)
    return _a_odd_object(n, D, M)


def _a_odd_object(n, D, M):
    a = np.array([0, 2 % M], dtype=object)
    idx = np.arange(n + 3, dtype=object)
    w1 = (2 * idx) * (2 * idx - 1)
    w2 = ((-D) * (2 * idx + 2) * (2 * idx + 3)) % M
    for _ in range(n):
        L = len(a)
        pad = np.zeros(L + 3, dtype=object)
        pad[1:L + 1] = a
        a = (w1[:L + 1] * pad[0:L + 1] + w2[:L + 1] * pad[2:L + 3]) % M
    return [int(x) for x in a]


def _a_odd_limbs(n, D, B, L, M):
    N = n + 3
    idx = np.arange(N, dtype=np.int64)
    w1 = (2 * idx) * (2 * idx - 1)
    w2 = (2 * idx + 2) * (2 * idx + 3)
    limbs = np.zeros((L, N + 2), dtype=np.int64)
    # slot j + 1 holds a_j so that a_{i-1} and a_{i+1} are plain slices
    limbs[0, 2] = 2
    size = 2
    for _ in range(n):
        x = limbs[:, 0:size + 1]
        y = limbs[:, 2:size + 3]
        ww1 = w1[:size + 1]
        ww2 = w2[:size + 1]
        acc = np.zeros((L, size + 1), dtype=np.int64)
        for a_ in range(L):
            hi, lo = np.divmod(x[a_] * ww1, B)
            acc[a_] += lo
            if a_ + 1 < L:
                acc[a_ + 1] += hi
            hi, lo = np.divmod(y[a_] * ww2, B)
            acc[a_] -= D * lo
            if a_ + 1 < L:
                acc[a_ + 1] -= D * hi
        carry = np.zeros(size + 1, dtype=np.int64)
        for t in range(L):
            v = acc[t] + carry
            carry, acc[t] = np.divmod(v, B)
        size += 1
        limbs[:, 1:size + 1] = acc
        limbs[:, 0] = 0
        limbs[:, size + 1:] = 0
    vals = [0] * size
    for t in range(L - 1, -1, -1):
        row = limbs[t, 1:size + 1].tolist()
        vals = [v * B + r for v, r in zip(vals, row)]
    return [v % M for v in vals]


def newton_sums_mod(h, K: int, M: int):
    """Power sums s_0..s_K of the roots of the monic h (ascending ints) mod M."""
    d = len(h) - 1
    if h[-1] % M != 1 % M:
        raise ValueError("polynomial is not monic")
    hh = [h[d - j] % M for j in range(1, d + 1)]   # hh[j-1] = h_{d-j}
    s = [d % M]
    mul = operator.mul
    for k in range(1, K + 1):
        J = min(k - 1, d)
        acc = sum(map(mul, hh[:J], reversed(s[k - J:k]))) if J else 0
        if k <= d:
            acc += k * hh[k - 1]
        s.append(-acc % M)
    return s
