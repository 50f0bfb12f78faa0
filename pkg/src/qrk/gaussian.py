"""Gaussian integers and the quartic Jacobi symbol ((a+bi)/p)_4 for odd primes p."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .errors import NormDivisible, NotSplitPrime
from .modular import check_odd_prime, is_prime, reduce_rational
from .two_squares import decompose


class GaussianInt(NamedTuple):
    re: int
    im: int

    def __add__(self, other):
        return GaussianInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __mul__(self, other):
        return gmul(self, other)

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        return f"{self.re}{self.im:+d}i"


I = GaussianInt(0, 1)


def gmul(z: GaussianInt, w: GaussianInt) -> GaussianInt:
    return GaussianInt(z.re * w.re - z.im * w.im, z.re * w.im + z.im * w.re)


def gconj(z: GaussianInt) -> GaussianInt:
    return GaussianInt(z.re, -z.im)


def gnorm(z: GaussianInt) -> int:
    return z.re * z.re + z.im * z.im


def gdivides(d: GaussianInt, z: GaussianInt) -> bool:
    n = gnorm(d)
    if n == 0:
        return z == (0, 0)
    w = gmul(z, gconj(d))
    return w.re % n == 0 and w.im % n == 0


class QuarticValue(NamedTuple):
    """The fourth root of unity i**r."""

    r: int

    def __mul__(self, other):
        return QuarticValue((self.r + other.r) % 4)

    def square(self) -> int:
        return 1 if self.r % 2 == 0 else -1

    @property
    def literal(self) -> str:
        return ("1", "i", "-1", "-i")[self.r]

    def __str__(self) -> str:
        return f"i^{self.r} (={self.literal})"


_PRIMARY_MODULUS = GaussianInt(-2, 2)  # (1+i)**3


def is_primary(z: GaussianInt) -> bool:
    return gdivides(_PRIMARY_MODULUS, z - GaussianInt(1, 0))


def primary_associate(pi: GaussianInt) -> GaussianInt:
    """The unique associate i**k * pi congruent to 1 modulo (1+i)**3."""
    n = gnorm(pi)
    if n % 2 == 0 or not is_prime(n):
        raise NotSplitPrime(f"norm of {pi} is {n}, not an odd prime")
    z = pi
    for _ in range(4):
        if is_primary(z):
            return z
        z = gmul(z, I)
    raise AssertionError("no primary associate")  # pragma: no cover


@lru_cache(maxsize=4096)
def _split_root(p: int) -> int:
    """Image u of i in Z[i]/(pi) = F_p for the primary prime pi above p = 1 (mod 4)."""
    d = decompose(p)
    pi = primary_associate(GaussianInt(d.a, d.b))
    return -pi.re * pow(pi.im, -1, p) % p


def _gpow_mod(z: GaussianInt, e: int, p: int) -> tuple[int, int]:
    x, y = z.re % p, z.im % p
    rx, ry = 1, 0
    while e:
        if e & 1:
            rx, ry = (rx * x - ry * y) % p, (rx * y + ry * x) % p
        x, y = (x * x - y * y) % p, (2 * x * y) % p
        e >>= 1
    return rx, ry


def _character(value: int, root: int, p: int) -> int:
    """Exponent r with value = root**r among {1, root, -1, -root} mod p."""
    t = pow(value, (p - 1) // 4, p)
    table = {1: 0, root: 1, p - 1: 2, p - root: 3}
    return table[t]


def quartic_jacobi(z: GaussianInt | tuple[int, int], p: int) -> QuarticValue:
    """Quartic Jacobi symbol ((z)/p)_4 for an odd rational prime p.

    For p = 3 (mod 4), p stays prime in Z[i] and the symbol is z**((p*p-1)/4)
    in the field Z[i]/(p). For p = 1 (mod 4) it is the product of the quartic
    residue characters at the two conjugate primes above p.
    """
    z = GaussianInt(*z)
    if gnorm(z) % p == 0:
        raise NormDivisible(f"{p} divides the norm of {z}")
    if p % 4 == 3:
        t = _gpow_mod(z, (p * p - 1) // 4, p)
        return QuarticValue({(1, 0): 0, (0, 1): 1, (p - 1, 0): 2, (0, p - 1): 3}[t])
    u = _split_root(p)
    r1 = _character((z.re + z.im * u) % p, u, p)
    r2 = _character((z.re - z.im * u) % p, p - u, p)
    return QuarticValue((r1 + r2) % 4)


def classify_Q(c: int | Fraction, p: int) -> int:
    """Index r with ((c+i)/p)_4 = i**r, i.e. the class Q_r(p) containing c."""
    check_odd_prime(p)
    c0 = reduce_rational(c, p)
    return quartic_jacobi(GaussianInt(c0, 1), p).r


def symbol_of_one_plus_i(p: int) -> QuarticValue:
    """Closed form of ((1+i)/p)_4 in terms of p alone; an independent reference."""
    signed_p = p if p % 4 == 1 else -p
    return QuarticValue(((signed_p - 1) // 4) % 4)
