"""Primes q = 1 (mod 4) as sums of two squares, and the class of p^((q-1)/4) mod q."""
from __future__ import annotations

import enum
from functools import lru_cache
from math import isqrt
from typing import NamedTuple

from .errors import BadResidueClass, NoClassMatch, NotPrime
from .modular import is_prime, mod_inv, sqrt_mod


class TwoSquares(NamedTuple):
    """Canonical decomposition ``q = a**2 + b**2`` with ``a`` odd, ``b`` even, both positive."""

    q: int
    a: int
    b: int


class QuarticPowerClass(enum.Enum):
    PLUS_ONE = "1"
    MINUS_ONE = "-1"
    PLUS_AB = "a/b"
    MINUS_AB = "-a/b"


@lru_cache(maxsize=4096)
def decompose(q: int) -> TwoSquares:
    """Cornacchia's algorithm seeded with a square root of -1 mod q."""
    if not is_prime(q):
        raise NotPrime(f"{q} is not prime")
    if q % 4 != 1:
        raise BadResidueClass(f"{q} is not 1 mod 4")
    r0, r1 = q, sqrt_mod(q - 1, q)
    while r1 * r1 > q:
        r0, r1 = r1, r0 % r1
    x = r1
    y = isqrt(q - x * x)
    if x * x + y * y != q:  # pragma: no cover - Cornacchia always succeeds for primes
        raise AssertionError(f"Cornacchia failed for {q}")
    a, b = (x, y) if x % 2 else (y, x)
    return TwoSquares(q, a, b)


def lemma24_normalize(d: TwoSquares) -> tuple[int, int]:
    """Signed pair (a, b) with a odd, b even, b > 0 and a + b = 1 (mod 4).

    This is the normalization under which the quartic power of a prime mod q
    and the quartic character of a/b at that prime line up.
    """
    a = d.a if (d.a + d.b) % 4 == 1 else -d.a
    return a, d.b


def quartic_power(p: int, q: int) -> int:
    return pow(p, (q - 1) // 4, q)


def power_class(p: int, d: TwoSquares) -> QuarticPowerClass:
    """Which of 1, -1, a/b, -a/b (mod q) the residue p^((q-1)/4) equals."""
    q, a, b = d
    if p % q == 0:
        raise ValueError(f"p={p} must not be divisible by q={q}")
    if (a * b * (a * a - b * b)) % q == 0:
        raise ValueError(f"q={q} divides ab(a^2-b^2)")
    t = quartic_power(p, q)
    ab = a * mod_inv(b, q) % q
    table = {
        1: QuarticPowerClass.PLUS_ONE,
        q - 1: QuarticPowerClass.MINUS_ONE,
        ab: QuarticPowerClass.PLUS_AB,
        (q - ab) % q: QuarticPowerClass.MINUS_AB,
    }
    try:
        return table[t]
    except KeyError:
        raise NoClassMatch(f"{p}^{(q - 1) // 4} = {t} mod {q} matches no class") from None
