"""Exact arithmetic in the prime field F_p.

The functions here work on plain ``int`` values and an explicit modulus; the
:class:`ResidueClass` wrapper is a convenience for interactive use and for
places where carrying the modulus around is clearer.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import DenominatorDivisible, NonResidue, NotPrime, ZeroInverse

MAX_MODULUS = 1 << 64

# Deterministic for every n < 3.3e24, which covers the 64-bit range.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test for 64-bit integers."""
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for b in _MR_BASES:
        x = pow(b, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def check_odd_prime(p: int) -> int:
    if not isinstance(p, int) or p >= MAX_MODULUS or p == 2 or not is_prime(p):
        raise NotPrime(f"{p} is not an odd prime below 2^64")
    return p


def prime_sieve(bound: int) -> list[int]:
    """All primes ``<= bound`` by the sieve of Eratosthenes."""
    if bound < 2:
        return []
    flags = bytearray([1]) * (bound + 1)
    flags[0] = flags[1] = 0
    for i in range(2, isqrt(bound) + 1):
        if flags[i]:
            flags[i * i :: i] = bytes(len(range(i * i, bound + 1, i)))
    return [i for i, f in enumerate(flags) if f]


def odd_primes(bound: int) -> list[int]:
    return [p for p in prime_sieve(bound) if p > 2]


def mod_pow(base: int, exp: int, p: int) -> int:
    """``base**exp mod p`` by square-and-multiply."""
    if exp < 0:
        raise ValueError("exponent must be nonnegative")
    result = 1 % p
    base %= p
    while exp:
        if exp & 1:
            result = result * base % p
        base = base * base % p
        exp >>= 1
    return result


def mod_inv(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroInverse(f"0 has no inverse mod {p}")
    return pow(a, -1, p)


def reduce_rational(r: int | Fraction, p: int) -> int:
    """Reduce an integer or a fraction with denominator prime to ``p`` into [0, p)."""
    if isinstance(r, int):
        return r % p
    r = Fraction(r)
    if r.denominator % p == 0:
        raise DenominatorDivisible(f"denominator of {r} is divisible by {p}")
    return r.numerator * pow(r.denominator, -1, p) % p


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) in {-1, 0, 1} via Euler's criterion."""
    t = mod_pow(a, (p - 1) // 2, p)
    return -1 if t == p - 1 else t


def smallest_nonresidue(p: int) -> int:
    z = 2
    while legendre(z, p) != -1:
        z += 1
    return z


def sqrt_mod(a: int, p: int) -> int:
    """Smaller of the two square roots of ``a`` mod ``p`` (Tonelli-Shanks).

    Raises :class:`NonResidue` when ``a`` is not a square mod ``p``.
    """
    a %= p
    if a == 0:
        return 0
    if legendre(a, p) != 1:
        raise NonResidue(f"{a} is not a square mod {p}")
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    if s == 1:
        x = pow(a, (p + 1) // 4, p)
    else:
        z = smallest_nonresidue(p)
        m, c, t, x = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c = i, b * b % p
            t, x = t * c % p, x * b % p
    return min(x, p - x)


def signed(a: int, p: int) -> int:
    """Representative of ``a mod p`` in (-p/2, p/2); handy for error messages."""
    a %= p
    return a - p if a > p // 2 else a


@dataclass(frozen=True)
class ResidueClass:
    """An element of F_p stored canonically in [0, p)."""

    value: int
    modulus: int

    def __post_init__(self) -> None:
        check_odd_prime(self.modulus)
        object.__setattr__(self, "value", self.value % self.modulus)

    @classmethod
    def of(cls, r: int | Fraction, p: int) -> ResidueClass:
        return cls(reduce_rational(r, p), p)

    def _coerce(self, other: int | Fraction | ResidueClass) -> int:
        if isinstance(other, ResidueClass):
            if other.modulus != self.modulus:
                raise ValueError("moduli differ")
            return other.value
        return reduce_rational(other, self.modulus)

    def _new(self, v: int) -> ResidueClass:
        return ResidueClass(v % self.modulus, self.modulus)

    def __add__(self, other):
        return self._new(self.value + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self._new(self.value - self._coerce(other))

    def __rsub__(self, other):
        return self._new(self._coerce(other) - self.value)

    def __mul__(self, other):
        return self._new(self.value * self._coerce(other))

    __rmul__ = __mul__

    def __neg__(self):
        return self._new(-self.value)

    def __truediv__(self, other):
        return self._new(self.value * mod_inv(self._coerce(other), self.modulus))

    def __pow__(self, exp: int):
        if exp < 0:
            return self._new(mod_pow(self.inverse().value, -exp, self.modulus))
        return self._new(mod_pow(self.value, exp, self.modulus))

    def __int__(self) -> int:
        return self.value

    def __eq__(self, other) -> bool:
        if isinstance(other, ResidueClass):
            return self.value == other.value and self.modulus == other.modulus
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == reduce_rational(other, self.modulus)
            except DenominatorDivisible:
                return False
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.modulus))

    def inverse(self) -> ResidueClass:
        return self._new(mod_inv(self.value, self.modulus))

    def legendre(self) -> int:
        return legendre(self.value, self.modulus)

    def sqrt(self) -> ResidueClass:
        return self._new(sqrt_mod(self.value, self.modulus))


def gcd_all(*xs: int) -> int:
    g = 0
    for x in xs:
        g = gcd(g, x)
    return g
