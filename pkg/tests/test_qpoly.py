"""Exact polynomial kernel: frozen examples plus randomized algebra laws."""

import random
from fractions import Fraction

import pytest

from qcong.qpoly import (QPoly, ext_gcd, gaussian_binomial, monomial,
                         q_integer, q_pochhammer)

ONE = QPoly(1)
Q = monomial(1)


def random_poly(rng, max_deg=8, scale=9):
    coeffs = [Fraction(rng.randint(-scale, scale), rng.randint(1, 4))
              for _ in range(rng.randint(0, max_deg + 1))]
    return QPoly(coeffs)


def long_division_oracle(a, b):
    """Independent long division over plain Fraction lists."""
    rem = list(a.coeffs)
    quot = [Fraction(0)] * max(len(rem) - len(b.coeffs) + 1, 0)
    while len(rem) >= len(b.coeffs) and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) < len(b.coeffs):
            break
        shift = len(rem) - len(b.coeffs)
        factor = rem[-1] / b.coeffs[-1]
        quot[shift] = factor
        for i, c in enumerate(b.coeffs):
            rem[shift + i] -= factor * c
        rem.pop()
    return QPoly(quot), QPoly(rem)


def test_add_examples():
    assert (ONE + Q) + (ONE - Q) == QPoly(2)
    f = QPoly((3, 0, -2))
    assert f + QPoly() == f
    # hand expansion: (1+q+q^2) + (q-q^2) = 1+2q
    assert QPoly((1, 1, 1)) + QPoly((0, 1, -1)) == QPoly((1, 2))


def test_mul_examples():
    assert (ONE - Q) * QPoly((1, 1, 1)) == ONE - monomial(3)
    f = QPoly((Fraction(1, 2), 0, 5))
    assert f * ONE == f
    assert (ONE + Q) ** 2 == QPoly((1, 2, 1))


def test_divrem_examples():
    quot, rem = divmod(monomial(3) - ONE, Q - ONE)
    assert quot == QPoly((1, 1, 1)) and rem.is_zero()
    f = QPoly((2, -3, 1, 7))
    assert divmod(f, ONE) == (f, QPoly())
    # independent oracle for q^4 by (1+q+q^2)^2, frozen values as well
    denom = QPoly((1, 1, 1)) ** 2
    expected = long_division_oracle(monomial(4), denom)
    assert divmod(monomial(4), denom) == expected
    assert expected == (QPoly(1), QPoly((-1, -2, -3, -2)))


def test_divrem_by_zero():
    with pytest.raises(ZeroDivisionError):
        divmod(Q, QPoly())


def test_divrem_roundtrip_random():
    rng = random.Random(20240901)
    for _ in range(120):
        a = random_poly(rng, max_deg=40)
        b = random_poly(rng, max_deg=12)
        if b.is_zero():
            continue
        quot, rem = divmod(a, b)
        assert quot * b + rem == a
        assert rem.degree < b.degree


def test_ring_axioms_random():
    rng = random.Random(77)
    for _ in range(80):
        a, b, c = (random_poly(rng) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_ext_gcd_examples():
    g, _, _ = ext_gcd(monomial(2) - ONE, Q - ONE)
    assert g == Q - ONE
    f = QPoly((2, 0, 4))
    g, s, t = ext_gcd(f, QPoly())
    assert g == f.monic() and s == QPoly(Fraction(1, 4)) and t.is_zero()
    phi2 = QPoly((1, 1, 1)) ** 2
    g, s, t = ext_gcd(Q, phi2)
    assert g == ONE
    assert s * Q + t * phi2 == ONE  # substitute back and expand


def test_ext_gcd_bezout_random():
    rng = random.Random(5150)
    for _ in range(60):
        a = random_poly(rng)
        b = random_poly(rng)
        if a.is_zero() and b.is_zero():
            continue
        g, s, t = ext_gcd(a, b)
        assert s * a + t * b == g
        assert g.is_zero() or g.lc() == 1
        if not a.is_zero():
            assert (a % g).is_zero()
        if not b.is_zero():
            assert (b % g).is_zero()


def test_q_integer():
    assert q_integer(1) == ONE
    assert q_integer(2) == ONE + Q
    assert q_integer(5) == QPoly((1, 1, 1, 1, 1))
    with pytest.raises(ValueError):
        q_integer(0)


def test_q_integer_factorization():
    # q^p - 1 = (q - 1) [p] exactly, for every p up to 50
    for p in range(1, 51):
        assert (Q - ONE) * q_integer(p) == monomial(p) - ONE


def test_q_integer_squarefree_at_primes():
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47):
        f = q_integer(p)
        g, _, _ = ext_gcd(f, f.derivative())
        assert g == ONE


def test_eval_at_one():
    assert q_integer(7).eval_at_one() == 7
    assert ((ONE - Q) ** 2).eval_at_one() == 0
    assert QPoly((Fraction(1, 2), Fraction(1, 3))).eval_at_one() == Fraction(5, 6)


def pascal_binomial(n, k, cache={}):
    """q-Pascal recurrence [n k] = [n-1 k-1] + q^k [n-1 k], as an oracle."""
    if k < 0 or k > n:
        return QPoly()
    if k == 0 or k == n:
        return QPoly(1)
    key = (n, k)
    if key not in cache:
        cache[key] = (pascal_binomial(n - 1, k - 1)
                      + monomial(k) * pascal_binomial(n - 1, k))
    return cache[key]


def test_gaussian_binomial_against_pascal():
    for n in range(13):
        for k in range(n + 1):
            assert gaussian_binomial(n, k) == pascal_binomial(n, k)


def test_gaussian_binomial_examples():
    assert gaussian_binomial(2, 1) == ONE + Q
    assert gaussian_binomial(4, 2) == QPoly((1, 1, 2, 1, 1))
    assert gaussian_binomial(3, 5).is_zero()
    for n in range(10):
        for k in range(n + 1):
            assert gaussian_binomial(n, k) == gaussian_binomial(n, n - k)


def test_pochhammer_and_inflate():
    assert q_pochhammer(1, 2, 2) == (ONE - Q) * (ONE - monomial(3))
    assert q_pochhammer(5, 1, 0) == ONE
    assert q_pochhammer(0, 3, 2).is_zero()
    assert (ONE + Q).inflate(3) == ONE + monomial(3)
    assert QPoly((1, 2, 3)).inflate(2) == QPoly((1, 0, 2, 0, 3))


def test_shift_and_sparse():
    assert Q.shift(2) == monomial(3)
    assert QPoly((Fraction(1, 2), 0, -2)).sparse() == {0: "1/2", 2: "-2"}
