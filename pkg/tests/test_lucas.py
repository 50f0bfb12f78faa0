import random

import pytest
from hypothesis import given, strategies as st

from qrk.lucas import LucasParams, lucas_uv, lucas_uv_naive
from qrk.modular import legendre, odd_primes
from qrk.sums import SumKind, sum_eval

PRIMES = odd_primes(3000)
primes = st.sampled_from(PRIMES)


def test_fibonacci():
    assert lucas_uv(5, 1, -1, 101).u == 5
    assert lucas_uv(10, 1, -1, 10007) == (55, 123, 10)


def test_seeds():
    assert lucas_uv(0, 3, 5, 7)[:2] == (0, 2)
    assert lucas_uv(1, 3, 5, 7)[:2] == (1, 3)
    assert lucas_uv_naive(0, 3, 5, 7)[:2] == (0, 2)
    assert lucas_uv_naive(1, 3, 5, 7)[:2] == (1, 3)


def test_degenerate_discriminant():
    # P^2 = 4Q: U_n = n (P/2)^(n-1); with P=2, Q=1 that is n
    for p in (3, 7, 101):
        for n in range(50):
            assert lucas_uv(n, 2, 1, p).u == n % p
    p, P = 1009, 6
    for n in range(1, 60):
        assert lucas_uv(n, P, 9, p).u == n * pow(P // 2, n - 1, p) % p


def test_params_discriminant():
    lp = LucasParams(5, 7, 11)
    assert lp.D == (25 - 28) % 11


def test_naive_limit():
    with pytest.raises(ValueError):
        lucas_uv_naive(11, 1, 1, 7, limit=10)


@given(st.integers(0, 500), st.integers(), st.integers(), primes)
def test_fast_matches_naive(n, P, Q, p):
    assert lucas_uv(n, P, Q, p) == lucas_uv_naive(n, P, Q, p)


@given(st.integers(0, 10**9), st.integers(), st.integers(), primes)
def test_norm_identity(n, P, Q, p):
    u, v, _ = lucas_uv(n, P, Q, p)
    assert (v * v - (P * P - 4 * Q) * u * u - 4 * pow(Q, n, p)) % p == 0


def _inv(a, p):
    return pow(a % p, -1, p)


def test_two_sum_bridges():
    rng = random.Random(11)
    for _ in range(300):
        p = rng.choice(PRIMES)
        P, Q = rng.randrange(1, p), rng.randrange(1, p)
        s = sum_eval(SumKind.MAIN, Q * _inv(4 * P * P, p), p)
        assert s == legendre(P, p) * lucas_uv((p + 1) // 2, P, Q, p).u % p
        v = lucas_uv((p - 1) // 2, P, (P * P - 4 * Q) * _inv(4, p), p).v
        assert v == 2 * legendre(2 * P, p) * s % p
        s2 = sum_eval(SumKind.MAIN, P * P * _inv(64 * Q, p), p)
        idx = (p + legendre(-1, p)) // 2
        assert s2 == pow(_inv(-Q, p), p // 4, p) * lucas_uv(idx, P, Q, p).u % p


def test_half_index_against_center_sum():
    rng = random.Random(12)
    for _ in range(300):
        p = rng.choice(PRIMES)
        P, Q = rng.randrange(1, p), rng.randrange(1, p)
        c = sum_eval(SumKind.CENTER, Q * _inv(4 * P * P, p), p)
        assert lucas_uv((p - 1) // 2, P, Q, p).u == 2 * P * _inv(Q, p) * legendre(P, p) * c % p
