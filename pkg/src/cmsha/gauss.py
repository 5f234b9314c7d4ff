"""Exact arithmetic in Z[i] and in its residue rings."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from sympy import factorint

from .errors import BadPrime, ZeroModulus, UnitModulus


class GaussianInteger:
    __slots__ = ("re", "im")

    def __init__(self, re: int = 0, im: int = 0):
        object.__setattr__(self, "re", int(re))
        object.__setattr__(self, "im", int(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianInteger is immutable")

    def __reduce__(self):
        return (GaussianInteger, (self.re, self.im))

    @staticmethod
    def coerce(x) -> "GaussianInteger":
        if isinstance(x, GaussianInteger):
            return x
        if isinstance(x, int):
            return GaussianInteger(x, 0)
        if isinstance(x, tuple) and len(x) == 2:
            return GaussianInteger(*x)
        if isinstance(x, complex) and x.real.is_integer() and x.imag.is_integer():
            return GaussianInteger(int(x.real), int(x.imag))
        raise TypeError(f"cannot coerce {x!r} to GaussianInteger")

    def __repr__(self):
        return f"GaussianInteger({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        return f"{self.re}{self.im:+d}i"

    def __eq__(self, other):
        if isinstance(other, int):
            return self.im == 0 and self.re == other
        if isinstance(other, GaussianInteger):
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        return hash(self.re) if self.im == 0 else hash((self.re, self.im))

    def __iter__(self):
        yield self.re
        yield self.im

    def __complex__(self):
        return complex(self.re, self.im)

    def __bool__(self):
        return bool(self.re or self.im)

    def __neg__(self):
        return GaussianInteger(-self.re, -self.im)

    def __add__(self, other):
        try:
            o = GaussianInteger.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianInteger(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = GaussianInteger.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianInteger(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return GaussianInteger.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return GaussianInteger(self.re * other, self.im * other)
        try:
            o = GaussianInteger.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianInteger(self.re * o.re - self.im * o.im,
                               self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = GaussianInteger(1, 0)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def conj(self) -> "GaussianInteger":
        return GaussianInteger(self.re, -self.im)

    def is_unit(self) -> bool:
        return self.norm() == 1

    def divides(self, other) -> bool:
        return GaussianInteger.coerce(other).exact_div(self) is not None

    def exact_div(self, other):
        """Return self/other if it lies in Z[i], else None."""
        o = GaussianInteger.coerce(other)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Z[i]")
        t = self * o.conj()
        if t.re % n or t.im % n:
            return None
        return GaussianInteger(t.re // n, t.im // n)

    def __floordiv__(self, other):
        # nearest-integer quotient, so the remainder has norm <= N(other)/2
        o = GaussianInteger.coerce(other)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Z[i]")
        t = self * o.conj()
        return GaussianInteger(_round_div(t.re, n), _round_div(t.im, n))

    def __mod__(self, other):
        o = GaussianInteger.coerce(other)
        return self - (self // o) * o

    def associates(self):
        return [self * u for u in UNITS]

    def normalized(self) -> "GaussianInteger":
        """Associate in the quadrant re > 0, im >= 0."""
        if not self:
            return self
        for a in self.associates():
            if a.re > 0 and a.im >= 0:
                return a
        raise AssertionError("unreachable")


def _round_div(a: int, n: int) -> int:
    return (2 * a + n) // (2 * n)


ONE = GaussianInteger(1, 0)
I = GaussianInteger(0, 1)
ONE_PLUS_I = GaussianInteger(1, 1)
UNITS = (GaussianInteger(1, 0), GaussianInteger(0, 1),
         GaussianInteger(-1, 0), GaussianInteger(0, -1))


def ggcd(a, b) -> GaussianInteger:
    a = GaussianInteger.coerce(a)
    b = GaussianInteger.coerce(b)
    while b:
        a, b = b, a % b
    return a.normalized()


def two_squares(q: int):
    """Return (a, b) with a odd, b even, a, b > 0 and a^2 + b^2 = q."""
    if q % 4 != 1:
        raise BadPrime(f"{q} is not 1 mod 4")
    r = sqrt_minus_one_mod(q)
    g = ggcd(GaussianInteger(q, 0), GaussianInteger(r, 1))
    a, b = abs(g.re), abs(g.im)
    if a * a + b * b != q:
        raise BadPrime(f"{q} is not prime")
    if a % 2 == 0:
        a, b = b, a
    return a, b


@lru_cache(maxsize=None)
def sqrt_minus_one_mod(p: int) -> int:
    if p % 4 != 1:
        raise BadPrime(f"{p} is not 1 mod 4")
    for c in range(2, p):
        r = pow(c, (p - 1) // 4, p)
        if r * r % p == p - 1:
            return min(r, p - r)
    raise BadPrime(f"{p} is not prime")


def factor(a) -> dict:
    """Gaussian prime factorization; primes normalized to the first quadrant.

    The unit part is dropped.
    """
    a = GaussianInteger.coerce(a)
    if not a:
        raise ZeroModulus("cannot factor 0")
    out = {}
    rem = a
    for q, e in factorint(a.norm()).items():
        if q == 2:
            cands = [ONE_PLUS_I]
        elif q % 4 == 3:
            cands = [GaussianInteger(q, 0)]
        else:
            x, y = two_squares(q)
            cands = [GaussianInteger(x, y), GaussianInteger(x, -y).normalized()]
        for pi in cands:
            k = 0
            while True:
                t = rem.exact_div(pi)
                if t is None:
                    break
                rem = t
                k += 1
            if k:
                out[pi] = k
    assert rem.is_unit()
    return out


def euler_phi(gamma) -> int:
    gamma = GaussianInteger.coerce(gamma)
    if not gamma:
        raise ZeroModulus("euler_phi(0)")
    phi = 1
    for pi, e in factor(gamma).items():
        n = pi.norm()
        phi *= n ** (e - 1) * (n - 1)
    return phi


class ResidueSystem:
    """Canonical representatives of Z[i]/(gamma) from the Hermite normal form.

    The ideal has basis (n1, 0), (t, g0) with g0 = gcd(re, im) and
    n1 = N(gamma)/g0; representatives are x + yi with 0 <= x < n1, 0 <= y < g0.
    """

    def __init__(self, gamma):
        gamma = GaussianInteger.coerce(gamma)
        if not gamma:
            raise ZeroModulus("modulus 0")
        self.gamma = gamma
        a, b = gamma.re, gamma.im
        self.g0 = math.gcd(a, b)
        self.n1 = gamma.norm() // self.g0
        # (u + vi)(a + bi) has imaginary part ub + va = g0
        g, u, v = _egcd(b, a)
        assert g == self.g0
        self.t = (u * a - v * b) % self.n1
        self.primes = list(factor(gamma)) if not gamma.is_unit() else []

    def __len__(self):
        return self.n1 * self.g0

    def reduce(self, z) -> GaussianInteger:
        z = GaussianInteger.coerce(z)
        k = z.im // self.g0
        x = (z.re - k * self.t) % self.n1
        return GaussianInteger(x, z.im - k * self.g0)

    def __iter__(self):
        for y in range(self.g0):
            for x in range(self.n1):
                yield GaussianInteger(x, y)

    def is_unit(self, z) -> bool:
        z = GaussianInteger.coerce(z)
        return all(z.exact_div(pi) is None for pi in self.primes)

    def units(self):
        return [z for z in self if self.is_unit(z)]


def _egcd(a, b):
    if b == 0:
        return (abs(a), 1 if a >= 0 else -1, 0)
    g, x, y = _egcd(b, a % b)
    return g, y, x - (a // b) * y


def unit_orbit_key(z, system: ResidueSystem) -> GaussianInteger:
    reps = [system.reduce(z * u) for u in UNITS]
    return min(reps, key=lambda w: (w.im, w.re))


def unit_coset_reps(gamma) -> list:
    """One representative per orbit of {1, i, -1, -i} on (Z[i]/gamma)^x."""
    gamma = GaussianInteger.coerce(gamma)
    if not gamma:
        raise ZeroModulus("modulus 0")
    if gamma.is_unit():
        raise UnitModulus("modulus is a unit")
    rs = ResidueSystem(gamma)
    seen = set()
    reps = []
    for z in rs:
        if not rs.is_unit(z):
            continue
        key = unit_orbit_key(z, rs)
        if key not in seen:
            seen.add(key)
            reps.append(key)
    reps.sort(key=lambda w: (w.im, w.re))
    return reps


def hensel_root_minus_one(p: int, m: int = 1) -> int:
    """Smaller square root of -1 modulo p**m."""
    if p % 4 != 1:
        raise BadPrime(f"{p} is not 1 mod 4")
    if m < 1:
        raise ValueError("m must be >= 1")
    r = sqrt_minus_one_mod(p)
    M = p
    for _ in range(1, m):
        M *= p
        r = (r - (r * r + 1) * pow(2 * r, -1, M)) % M
    M = p ** m
    r %= M
    return min(r, M - r)


@dataclass(frozen=True)
class ResidueRing:
    """Z/p^m viewed as Z[i]/P^m for the prime P = (p, i - root)."""

    p: int
    m: int
    root: int

    @property
    def modulus(self) -> int:
        return self.p ** self.m

    @classmethod
    def canonical(cls, p: int, m: int = 1, swapped: bool = False):
        r = hensel_root_minus_one(p, m)
        if swapped:
            r = p ** m - r
        return cls(p, m, r)

    def swapped(self) -> "ResidueRing":
        return ResidueRing(self.p, self.m, self.modulus - self.root)

    def reduce(self, a) -> int:
        a = GaussianInteger.coerce(a)
        return (a.re + a.im * self.root) % self.modulus


@dataclass(frozen=True)
class GaussianResidue:
    value: int
    ring: ResidueRing

    def __add__(self, other):
        return GaussianResidue((self.value + _val(other, self.ring)) % self.ring.modulus, self.ring)

    __radd__ = __add__

    def __mul__(self, other):
        return GaussianResidue(self.value * _val(other, self.ring) % self.ring.modulus, self.ring)

    __rmul__ = __mul__

    def __sub__(self, other):
        return GaussianResidue((self.value - _val(other, self.ring)) % self.ring.modulus, self.ring)

    def __neg__(self):
        return GaussianResidue(-self.value % self.ring.modulus, self.ring)

    def __eq__(self, other):
        if isinstance(other, GaussianResidue):
            return self.ring == other.ring and self.value == other.value
        if isinstance(other, int):
            return (self.value - other) % self.ring.modulus == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.ring))

    def __int__(self):
        return self.value


def _val(x, ring):
    if isinstance(x, GaussianResidue):
        if x.ring != ring:
            raise ValueError("mixing residues from different rings")
        return x.value
    return ring.reduce(x)


def reduce_gaussian(a, target: ResidueRing) -> GaussianResidue:
    return GaussianResidue(target.reduce(a), target)


def p_valuation(x: int, p: int) -> int:
    if x == 0:
        raise ValueError("valuation of 0")
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def gaussian_valuation_inert(z, q: int):
    """ord_q of a Gaussian integer for a rational prime q inert in Z[i]; None for 0."""
    z = GaussianInteger.coerce(z)
    if not z:
        return None
    vals = [p_valuation(x, q) for x in (z.re, z.im) if x]
    return min(vals)
