from math import comb

import pytest
from hypothesis import given, strategies as st

from qrk.modular import legendre, odd_primes
from qrk.sums import (
    SumKind,
    binom_mod,
    coefficients,
    coefficients_factorial,
    sum_eval,
    sum_eval_many,
    sum_naive,
    window,
)

MAIN, UPPER, CENTER = SumKind.MAIN, SumKind.UPPER, SumKind.CENTER
PRIMES = odd_primes(1500)
primes = st.sampled_from(PRIMES)


def _inv(a, p):
    return pow(a % p, -1, p)


def test_examples():
    assert sum_eval(MAIN, _inv(18, 7), 7) == 6
    assert sum_eval(MAIN, _inv(32, 5), 5) == 4
    for x in range(3):
        assert sum_eval(MAIN, x, 3) == 1
        assert sum_eval(CENTER, x, 3) == 2 * x % 3


def test_binom_mod_examples():
    assert binom_mod(4, 2, 7) == 6
    assert binom_mod(8, 4, 3) == 1
    assert binom_mod(13, 1, 13) == 0
    assert binom_mod(3, 5, 7) == 0


def test_binom_mod_matches_exact():
    for p in odd_primes(60):
        for n in range(4 * p + 1):
            for k in range(0, n + 1, max(1, n // 7)):
                assert binom_mod(n, k, p) == comb(n, k) % p


def test_windows():
    assert window(MAIN, 13) == range(0, 4)
    assert window(UPPER, 13) == range(7, 10)
    assert window(CENTER, 13) == range(1, 4)
    assert list(window(UPPER, 3)) == [2]


@pytest.mark.parametrize("kind", list(SumKind))
def test_ratio_coefficients_match_factorials(kind):
    for p in odd_primes(2000):
        assert list(coefficients(kind, p)) == coefficients_factorial(kind, p)


@pytest.mark.parametrize("kind", list(SumKind))
def test_against_exact_integers(kind):
    for p in odd_primes(150):
        for x in range(p):
            assert sum_eval(kind, x, p) == sum_naive(kind, x, p)


@pytest.mark.parametrize("kind", list(SumKind))
def test_vectorised_matches_scalar(kind):
    for p in (101, 1009, 7919):
        xs = list(range(0, p, max(1, p // 97)))
        assert sum_eval_many(kind, xs, p) == [sum_eval(kind, x, p) for x in xs]


def test_divisibility_window():
    for p in odd_primes(400):
        for k in range(p):
            nonzero = binom_mod(4 * k, 2 * k, p) != 0
            assert nonzero == (4 * k < p or (2 * k > p and 4 * k < 3 * p))


def test_upper_binomials_pointwise():
    for p in odd_primes(500):
        h = (p - 1) // 2
        for k in range(1, h + 1):
            assert binom_mod(4 * (h + k), 2 * (h + k), p) == 2 * binom_mod(4 * k - 2, 2 * k - 1, p) % p


@given(primes, st.integers(1, 10**6))
def test_upper_is_scaled_center(p, x):
    if x % p:
        h = (p - 1) // 2
        assert sum_eval(UPPER, x, p) == 2 * pow(x, h, p) * sum_eval(CENTER, x, p) % p


@given(primes, st.integers(2, 10**6))
def test_argument_transformation(p, x):
    if x % p in (0, 1):
        return
    lhs = sum_eval(MAIN, _inv(16 * x, p), p)
    if p % 4 == 1:
        rhs = pow(_inv(x, p), (p - 1) // 4, p) * sum_eval(MAIN, x * _inv(16, p), p)
    else:
        rhs = pow(1 - _inv(x, p), (p - 3) // 4, p) * sum_eval(MAIN, _inv(16 * (1 - x), p), p)
    assert lhs == rhs % p


@given(primes, st.integers(1, 10**6))
def test_product_of_main_sums(p, c):
    n = (c * c + 1) % p
    if c % p == 0 or n == 0:
        return
    x = _inv(16 * n, p)
    assert sum_eval(MAIN, c * c * x, p) * sum_eval(MAIN, x, p) % p == legendre(2 * n, p) % p
