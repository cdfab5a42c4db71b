"""Classical q = 1 congruences modulo p^2, with term-ratio oracles."""

import math
from fractions import Fraction

import pytest

from qcong import classical
from qcong.checks import legendre_symbol
from qcong.records import INAPPLICABLE, PASS
from qcong.ring import is_prime

PRIMES_TO_50 = [p for p in range(3, 51) if is_prime(p)]


def test_rv_examples():
    assert classical.check_rv(5, 16).status == PASS    # (-1/5) = +1
    assert classical.check_rv(7, 27).status == PASS    # (-3/7) = +1
    assert classical.check_rv(7, 432).status == PASS   # (-1/7) = -1
    assert classical.check_rv(3, 16).status == INAPPLICABLE
    with pytest.raises(ValueError):
        classical.check_rv(5, 100)


@pytest.mark.parametrize("variant", [16, 27, 64, 432])
def test_rv_sweep(variant):
    for p in PRIMES_TO_50:
        if p < 5:
            continue
        assert classical.check_rv(p, variant).status == PASS


def test_rv_value_against_plain_sum():
    # recompute the variant-16 residue with Fractions as a second route
    p = 13
    total = sum(Fraction(math.comb(2 * k, k) ** 2, 16 ** k) for k in range(p))
    lhs = classical.reduce_fraction(total, p * p)
    assert lhs == legendre_symbol(-1, p) % (p * p)


def test_term_ratio_oracle():
    # C(2(k+1), k+1) = C(2k, k) * 2(2k+1)/(k+1), exactly
    value = 1
    for k in range(0, 40):
        nxt = Fraction(value) * 2 * (2 * k + 1) / (k + 1)
        assert nxt == math.comb(2 * (k + 1), k + 1)
        value = nxt


def test_tauraso_specialization_matches_rv():
    for p in PRIMES_TO_50:
        if p < 5:
            continue
        x1 = classical.check_tauraso(p, 1)
        rv = classical.check_rv(p, 16)
        assert x1.status == rv.status == PASS


@pytest.mark.parametrize("p,x", [(5, 2), (11, -3), (3, 4), (7, 0)])
def test_tauraso_points(p, x):
    assert classical.check_tauraso(p, x).status == PASS


def test_sun_legendre_examples():
    # a = -1/2, x = 1 reproduces the variant-16 congruence
    assert classical.check_sun_legendre(5, 2, 1, 1).status == PASS
    assert classical.check_sun_legendre(7, 3, 1, 4).status == PASS
    assert classical.check_sun_legendre(11, 6, 1, 2).status == PASS
    assert classical.check_sun_legendre(5, 5, 1, 1).status == INAPPLICABLE


def test_sun_legendre_agrees_with_rv16():
    for p in PRIMES_TO_50:
        if p < 5:
            continue
        assert classical.check_sun_legendre(p, 2, 1, 1).status == PASS


def test_32k():
    assert classical.check_32k(7).status == PASS
    assert classical.check_32k(11).status == PASS
    assert classical.check_32k(5).status == INAPPLICABLE
    for p in PRIMES_TO_50:
        if p % 4 == 3:
            assert classical.check_32k(p).status == PASS


def test_van_hamme():
    assert classical.check_van_hamme(7).status == PASS
    assert classical.check_van_hamme(19).status == PASS
    assert classical.check_van_hamme(13).status == INAPPLICABLE
    for p in PRIMES_TO_50:
        if p % 4 == 3:
            assert classical.check_van_hamme(p).status == PASS


def test_q_to_1_limit():
    rec = classical.check_q_to_1_limit(10)
    assert rec.status == PASS
    # k = 1 case by hand: (1/2)^2 = C(2,1)^2/16
    assert Fraction(1, 2) ** 2 == Fraction(math.comb(2, 1) ** 2, 16)
    with pytest.raises(ValueError):
        classical.check_q_to_1_limit(0)


def test_reduce_fraction_rejects_bad_denominator():
    with pytest.raises(ZeroDivisionError):
        classical.reduce_fraction(Fraction(1, 5), 25)
