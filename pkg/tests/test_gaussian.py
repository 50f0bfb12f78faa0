from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qrk.errors import NormDivisible, NotSplitPrime
from qrk.gaussian import (
    GaussianInt,
    QuarticValue,
    classify_Q,
    gconj,
    gdivides,
    gmul,
    gnorm,
    is_primary,
    primary_associate,
    quartic_jacobi,
)
from qrk.modular import legendre, odd_primes

PRIMES = odd_primes(600)
primes = st.sampled_from(PRIMES)
ints = st.integers(-10**4, 10**4)


def _gmod(z, m):
    """z mod m in Z[i] by nearest-integer division."""
    n = gnorm(m)
    w = gmul(z, gconj(m))
    qr = (2 * w.re + n) // (2 * n)
    qi = (2 * w.im + n) // (2 * n)
    return z - gmul(GaussianInt(qr, qi), m)


def _gpow_mod(z, e, m):
    result, base = GaussianInt(1, 0), _gmod(z, m)
    while e:
        if e & 1:
            result = _gmod(gmul(result, base), m)
        base = _gmod(gmul(base, base), m)
        e >>= 1
    return result


def quartic_oracle(z, p):
    """Symbol computed by reducing modulo Gaussian primes directly, no F_p embedding."""
    units = [GaussianInt(1, 0), GaussianInt(0, 1), GaussianInt(-1, 0), GaussianInt(0, -1)]
    if p % 4 == 3:
        t = _gpow_mod(z, (p * p - 1) // 4, GaussianInt(p, 0))
        return next(r for r, u in enumerate(units) if gdivides(GaussianInt(p, 0), t - u))
    a = next(x for x in range(1, p) if int((p - x * x) ** 0.5) ** 2 == p - x * x)
    b = int((p - a * a) ** 0.5)
    total = 0
    for pi in (GaussianInt(a, b), GaussianInt(a, -b)):
        t = _gpow_mod(z, (p - 1) // 4, pi)
        total += next(r for r, u in enumerate(units) if gdivides(pi, t - u))
    return total % 4


def test_gaussian_arithmetic():
    assert gmul(GaussianInt(1, 1), GaussianInt(1, -1)) == (2, 0)
    assert gnorm(GaussianInt(3, -4)) == 25
    z = GaussianInt(7, -2)
    assert gconj(gconj(z)) == z
    assert gmul(z, gconj(z)) == (gnorm(z), 0)


@pytest.mark.parametrize("p,r", [(17, 0), (5, 1), (7, 2), (3, 3)])
def test_one_plus_i_anchors(p, r):
    assert quartic_jacobi(GaussianInt(1, 1), p) == QuarticValue(r)


def test_oracle_agreement_small_primes():
    for p in odd_primes(120):
        for x in range(-6, 7):
            for y in range(-6, 7):
                if (x * x + y * y) % p:
                    assert quartic_jacobi((x, y), p).r == quartic_oracle(GaussianInt(x, y), p), (p, x, y)


def test_primary_associate():
    for assoc in [(1, -2), (2, 1), (-1, 2), (-2, -1)]:
        assert primary_associate(GaussianInt(*assoc)) == GaussianInt(-1, 2)
    assert primary_associate(GaussianInt(-1, 2)) == GaussianInt(-1, 2)
    with pytest.raises(NotSplitPrime):
        primary_associate(GaussianInt(3, 0))
    with pytest.raises(NotSplitPrime):
        primary_associate(GaussianInt(1, 1))


def test_exactly_one_primary_associate():
    units = [GaussianInt(1, 0), GaussianInt(0, 1), GaussianInt(-1, 0), GaussianInt(0, -1)]
    for a in range(-10, 11):
        for b in range(-10, 11):
            n = a * a + b * b
            if n < 100 and n in set(odd_primes(100)):
                z = GaussianInt(a, b)
                assert sum(is_primary(gmul(u, z)) for u in units) == 1
                pz = primary_associate(z)
                assert primary_associate(pz) == pz


def test_classify_examples():
    assert classify_Q(1, 5) == 1
    assert classify_Q(1, 7) == 2
    with pytest.raises(NormDivisible):
        classify_Q(2, 5)
    assert classify_Q(Fraction(1, 3), 7) == classify_Q(5, 7)


@given(primes, ints, ints)
def test_square_is_legendre_of_norm(p, m, n):
    if (m * m + n * n) % p:
        assert quartic_jacobi((m, n), p).square() == legendre(m * m + n * n, p)


@given(primes, ints, ints, ints, ints)
def test_multiplicative(p, a, b, c, d):
    z, w = GaussianInt(a, b), GaussianInt(c, d)
    if gnorm(z) % p and gnorm(w) % p:
        assert quartic_jacobi(gmul(z, w), p) == quartic_jacobi(z, p) * quartic_jacobi(w, p)


@given(primes, ints, ints)
def test_depends_only_on_residue(p, x, y):
    if (x * x + y * y) % p:
        assert quartic_jacobi((x, y), p) == quartic_jacobi((x + 3 * p, y - p), p)


@given(primes)
def test_unit_symbol_is_legendre_of_two(p):
    r = quartic_jacobi(GaussianInt(0, 1), p).r
    assert r in (0, 2) and (1 if r == 0 else -1) == legendre(2, p)


def test_inversion_relation():
    # ((c+i)/p)_4 = (2/p) ((-1/c + i)/p)_4
    for p in odd_primes(300):
        for c in range(1, min(p, 40)):
            if (c * c + 1) % p == 0:
                continue
            r = classify_Q(c, p)
            r2 = classify_Q(-pow(c, -1, p), p)
            assert r == (r2 + (0 if legendre(2, p) == 1 else 2)) % 4


def test_Q_partition():
    for p in odd_primes(200):
        for c in range(1, p):
            if (c * c + 1) % p == 0:
                continue
            r = classify_Q(c, p)
            assert r in range(4)
            assert (r % 2 == 0) == (legendre(c * c + 1, p) == 1)
