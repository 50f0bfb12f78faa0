"""Reduced positive-definite binary quadratic forms and prime representation."""
from __future__ import annotations

from math import gcd, isqrt
from typing import NamedTuple

from .errors import BadDiscriminant


class QuadraticForm(NamedTuple):
    a: int
    b: int
    c: int

    @property
    def disc(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def __call__(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y

    def is_reduced(self) -> bool:
        a, b, c = self
        if not (abs(b) <= a <= c):
            return False
        return b >= 0 if (abs(b) == a or a == c) else True

    def is_primitive(self) -> bool:
        return gcd(gcd(self.a, self.b), self.c) == 1

    def __str__(self) -> str:
        return f"[{self.a},{self.b},{self.c}]"


def reduced_forms(d: int) -> list[QuadraticForm]:
    """All reduced primitive positive-definite forms of discriminant d, sorted."""
    if d >= 0 or d % 4 not in (0, 1):
        raise BadDiscriminant(f"{d} is not a negative discriminant")
    out = []
    # reduced forms have a <= sqrt(|d|/3)
    a = 1
    while 3 * a * a <= -d:
        for b in range(-a + 1, a + 1):
            if (b - d) % 2:
                continue
            num = b * b - d
            if num % (4 * a):
                continue
            f = QuadraticForm(a, b, num // (4 * a))
            if f.is_reduced() and f.is_primitive():
                out.append(f)
        a += 1
    return sorted(out)


def represents(f: QuadraticForm, n: int) -> tuple[int, int] | None:
    """A witness (x, y) with f(x, y) = n, or None.

    Scans every y inside the ellipse f = n and solves the quadratic in x
    exactly, so the search is exhaustive.
    """
    a, b, c = f
    d = f.disc
    if a <= 0 or d >= 0:
        raise ValueError(f"{f} is not positive definite")
    ymax = isqrt(4 * a * n // -d) + 1
    for y in range(0, ymax + 1):
        # a x^2 + (b y) x + (c y^2 - n) = 0
        disc = b * b * y * y - 4 * a * (c * y * y - n)
        if disc < 0:
            continue
        s = isqrt(disc)
        if s * s != disc:
            continue
        for num in (-b * y + s, -b * y - s):
            if num % (2 * a) == 0:
                x = num // (2 * a)
                if f(x, y) == n:
                    return (x, y)
    return None
