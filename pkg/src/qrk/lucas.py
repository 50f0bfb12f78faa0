"""Lucas sequences U_n(P, Q), V_n(P, Q) modulo an odd prime."""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

NAIVE_LIMIT = 10**6


@dataclass(frozen=True)
class LucasParams:
    P: int
    Q: int
    p: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "P", self.P % self.p)
        object.__setattr__(self, "Q", self.Q % self.p)

    @property
    def D(self) -> int:
        return (self.P * self.P - 4 * self.Q) % self.p


class LucasPair(NamedTuple):
    u: int
    v: int
    n: int


def lucas_uv(n: int, P: int, Q: int, p: int) -> LucasPair:
    """(U_n, V_n) mod p by index doubling, O(log n) steps.

    Doubling: U_2k = U_k V_k, V_2k = V_k^2 - 2 Q^k.
    Increment: U_k+1 = (P U_k + V_k)/2, V_k+1 = (D U_k + P V_k)/2.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    P %= p
    Q %= p
    D = (P * P - 4 * Q) % p
    half = (p + 1) // 2
    u, v, qk = 0, 2 % p, 1
    for bit in bin(n)[2:]:
        u, v, qk = u * v % p, (v * v - 2 * qk) % p, qk * qk % p
        if bit == "1":
            u, v, qk = (P * u + v) * half % p, (D * u + P * v) * half % p, qk * Q % p
    return LucasPair(u, v, n)


def lucas_uv_naive(n: int, P: int, Q: int, p: int, limit: int = NAIVE_LIMIT) -> LucasPair:
    """Same values by running the recurrence n times; the reference for :func:`lucas_uv`."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > limit:
        raise ValueError(f"n={n} exceeds naive limit {limit}")
    P %= p
    Q %= p
    u0, u1 = 0, 1
    v0, v1 = 2 % p, P
    for _ in range(n):
        u0, u1 = u1, (P * u1 - Q * u0) % p
        v0, v1 = v1, (P * v1 - Q * v0) % p
    return LucasPair(u0, v0, n)
