"""The three binomial sums, evaluated modulo p.

MAIN    sum_{k=0}^{[p/4]}          C(4k, 2k) x^k
UPPER   sum_{k=(p+1)/2}^{[3p/4]}   C(4k, 2k) x^k
CENTER  sum_{k=1}^{[(p+1)/4]}      C(4k-2, 2k-1) x^k

Coefficients are tabulated once per prime and cached; a sum is then a single
Horner pass. :func:`sum_eval_many` evaluates one sum at a whole array of
points with numpy, which is what the parameter sweeps use.
"""
from __future__ import annotations

import enum
from functools import lru_cache

import numpy as np

# int64 products of two residues stay exact below this bound
_NUMPY_LIMIT = 1 << 31


class SumKind(str, enum.Enum):
    MAIN = "main"
    UPPER = "upper"
    CENTER = "center"


def window(kind: SumKind, p: int) -> range:
    """Summation index range for ``kind``."""
    kind = SumKind(kind)
    if kind is SumKind.MAIN:
        return range(0, p // 4 + 1)
    if kind is SumKind.UPPER:
        return range((p + 1) // 2, 3 * p // 4 + 1)
    return range(1, (p + 1) // 4 + 1)


@lru_cache(maxsize=64)
def factorial_table(p: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """n! and 1/n! mod p for 0 <= n < p."""
    fact = [1] * p
    for n in range(1, p):
        fact[n] = fact[n - 1] * n % p
    inv = [1] * p
    inv[p - 1] = pow(fact[p - 1], -1, p)
    for n in range(p - 1, 0, -1):
        inv[n - 1] = inv[n] * n % p
    return tuple(fact), tuple(inv)


def _binom_small(n: int, k: int, p: int) -> int:
    if k < 0 or k > n:
        return 0
    fact, inv = factorial_table(p)
    return fact[n] * inv[k] % p * inv[n - k] % p


def binom_mod(n: int, k: int, p: int) -> int:
    """C(n, k) mod p as a product over base-p digits (Lucas' theorem)."""
    if k < 0 or k > n:
        return 0
    result = 1
    while n or k:
        n, nd = divmod(n, p)
        k, kd = divmod(k, p)
        if kd > nd:
            return 0
        result = result * _binom_small(nd, kd, p) % p
    return result


def _ratio_coefficients(p: int, n0: int, k0: int, count: int) -> list[int]:
    """C(n0 + 4j, k0 + 2j) mod p for j < count, by the ratio update.

    C(n+4, k+2) / C(n, k) = (n+1)(n+2)(n+3)(n+4) / ((k+1)(k+2)(n-k+1)(n-k+2)).
    Numerators and denominators run as separate prefix products; all prefix
    denominators are inverted with one modular inverse (batch inversion).
    Valid while every denominator factor stays below p.
    """
    if count <= 0:
        return []
    num_prefix = [1] * count
    den_prefix = [1] * count
    den_step = [1] * count
    num = den = 1
    for j in range(1, count):
        n = n0 + 4 * (j - 1)
        k = k0 + 2 * (j - 1)
        step = (k + 1) * (k + 2) % p * ((n - k + 1) * (n - k + 2) % p) % p
        num = num * ((n + 1) * (n + 2) % p) % p * ((n + 3) * (n + 4) % p) % p
        den = den * step % p
        num_prefix[j], den_prefix[j], den_step[j] = num, den, step
    base = _binom_small(n0, k0, p)
    out = [0] * count
    inv = pow(den_prefix[-1], -1, p)
    for j in range(count - 1, -1, -1):
        out[j] = base * num_prefix[j] % p * inv % p
        inv = inv * den_step[j] % p
    return out


@lru_cache(maxsize=256)
def coefficients(kind: SumKind, p: int) -> tuple[int, ...]:
    """Binomial coefficients of ``kind`` over its window, mod p."""
    kind = SumKind(kind)
    w = window(kind, p)
    if kind is SumKind.MAIN:
        return tuple(_ratio_coefficients(p, 0, 0, len(w)))
    if kind is SumKind.CENTER:
        return tuple(_ratio_coefficients(p, 2, 1, len(w)))
    # UPPER crosses multiples of p, where the ratio update breaks down.
    return tuple(binom_mod(4 * k, 2 * k, p) for k in w)


def coefficients_factorial(kind: SumKind, p: int) -> list[int]:
    """Same coefficients computed independently through Lucas' theorem."""
    kind = SumKind(kind)
    if kind is SumKind.CENTER:
        return [binom_mod(4 * k - 2, 2 * k - 1, p) for k in window(kind, p)]
    return [binom_mod(4 * k, 2 * k, p) for k in window(kind, p)]


@lru_cache(maxsize=1 << 16)
def sum_eval(kind: SumKind, x: int, p: int) -> int:
    """Value of the ``kind`` sum at the residue ``x`` modulo ``p``."""
    kind = SumKind(kind)
    x %= p
    acc = 0
    for c in reversed(coefficients(kind, p)):
        acc = (acc * x + c) % p
    return acc * pow(x, window(kind, p).start, p) % p


def sum_eval_many(kind: SumKind, xs, p: int) -> list[int]:
    """:func:`sum_eval` at every point of ``xs`` (vectorised Horner)."""
    kind = SumKind(kind)
    xs = [int(x) % p for x in xs]
    if p >= _NUMPY_LIMIT or len(xs) < 4:
        return [sum_eval(kind, x, p) for x in xs]
    arr = np.asarray(xs, dtype=np.int64)
    acc = np.zeros_like(arr)
    for c in reversed(coefficients(kind, p)):
        acc = (acc * arr + c) % p
    start = window(kind, p).start
    if start:
        acc = acc * np.asarray([pow(x, start, p) for x in xs], dtype=np.int64) % p
    return [int(v) for v in acc]


def sum_naive(kind: SumKind, x: int, p: int) -> int:
    """Reference value from exact integer binomials; O(p^2) bits, tests only."""
    from math import comb

    kind = SumKind(kind)
    total = 0
    for k in window(kind, p):
        c = comb(4 * k - 2, 2 * k - 1) if kind is SumKind.CENTER else comb(4 * k, 2 * k)
        total += c * pow(x, k, p)
    return total % p
