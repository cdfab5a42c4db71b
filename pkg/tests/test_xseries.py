"""x-polynomials over the ring and the truncated sum builders."""

import pytest

from qcong.qpoly import QPoly, monomial, q_integer
from qcong.ring import RingCtx
from qcong.suite import (naive_legendre_sum, naive_sum_plain,
                         naive_sum_transformed)
from qcong.xseries import (XPoly, congruent, legendre_sum, sum_plain,
                           sum_qbinom_squared, sum_tauraso, sum_transformed)

ONE = QPoly(1)
Q = monomial(1)


def test_congruent_basics():
    ctx = RingCtx.get(5, 2)
    a = XPoly(ctx, [ctx.one, ctx.qpow(3)])
    assert congruent(a, a)
    # adding a reduced multiple of the modulus changes nothing
    killed = ctx.reduce(q_integer(5) ** 2 * QPoly((2, 1)))
    assert killed.is_zero()
    b = XPoly(ctx, [ctx.one, ctx.qpow(3) + killed])
    assert congruent(a, b)
    zero = XPoly(ctx, [])
    assert congruent(zero, XPoly(ctx, [killed, killed]))


def test_congruent_context_mismatch():
    a = XPoly(RingCtx.get(5, 2), [])
    b = XPoly(RingCtx.get(5, 1), [])
    with pytest.raises(ValueError):
        congruent(a, b)


def test_xpoly_ops():
    ctx = RingCtx.get(5, 1)
    a = XPoly(ctx, [ctx.one, ctx.one])
    assert a.subs(1) == ctx.scalar(2)
    assert a.subs(0) == a.coeff(0)
    assert a.negate_x().coeff(1) == -ctx.one
    assert (a + a).coeff(0) == ctx.scalar(2)
    assert (a - a).degree == -1
    assert a.scale(3).coeff(1) == ctx.scalar(3)
    k, diff = a.first_difference(a.scale(2))
    assert k == 0 and diff == -ctx.one
    assert a.first_difference(a) is None


def test_sum_plain_first_coefficients():
    ctx = RingCtx.get(3, 2)
    s = sum_plain(ctx, 2, 1)
    assert s.coeff(0) == ctx.one
    expected = (ctx.one_minus_qpow(1) ** 2) * (ctx.one_minus_qpow(2).inv() ** 2)
    assert s.coeff(1) == expected


def test_truncation_vanishing():
    # (q;q^2)_k^2 = 0 mod [p]^2 for k beyond (p-1)/2 (the square matters:
    # one factor only kills one power of [p])
    for p in (3, 5, 7):
        ctx = RingCtx.get(p, 2)
        s = sum_plain(ctx, 2, 1)
        for k in range((p - 1) // 2 + 1, p):
            assert s.coeff(k).is_zero()
            assert (ctx.pochhammer(1, 2, k) ** 2).is_zero()
            assert not ctx.pochhammer(1, 2, k).is_zero()


def test_tauraso_builder_shape():
    ctx = RingCtx.get(3, 2)
    s = sum_tauraso(ctx)
    assert s.degree <= 1  # (p-1)/2 = 1
    # k = 0 term contributes (x;q^2)_1 = 1 - x; k = 1 contributes -x q^{-2}
    assert s.coeff(0) == ctx.one
    assert s.coeff(1) == -(ctx.one + ctx.qpow(-2))


def test_qbinom_squared_degree():
    ctx = RingCtx.get(7, 1)
    for t in range(4):
        assert sum_qbinom_squared(ctx, 2, t).degree <= t


@pytest.mark.parametrize("p,mod_power", [(3, 1), (3, 2), (5, 1), (5, 2)])
def test_incremental_matches_naive(p, mod_power):
    ctx = RingCtx.get(p, mod_power)
    for m in range(1, 5):
        if m % p == 0:
            continue
        for r in range(1, m + 2):
            assert sum_plain(ctx, m, r) == naive_sum_plain(ctx, m, r)
            assert sum_transformed(ctx, m, r) == naive_sum_transformed(ctx, m, r)
            assert (legendre_sum(ctx, m, r, p - 1)
                    == naive_legendre_sum(ctx, m, r, p - 1))


def test_alternating_factor_identity():
    # (-1;q^2)_k (1+q^{2k}) = 2 (-q^2;q^2)_k as exact polynomials, k <= 10
    for k in range(11):
        lhs = QPoly(1)
        for j in range(k):
            lhs = lhs * (ONE + monomial(2 * j))
        lhs = lhs * (ONE + monomial(2 * k))
        rhs = QPoly(2)
        for j in range(1, k + 1):
            rhs = rhs * (ONE + monomial(2 * j))
        assert lhs == rhs


def test_legendre_sum_base_cases():
    ctx = RingCtx.get(5, 1)
    assert legendre_sum(ctx, 2, 1, 0) == XPoly(ctx, [ctx.one])
    full = legendre_sum(ctx, 2, 1, 4)
    # evaluating at x = -1 equals the halved-sum form termwise
    halved = ctx.zero
    for k, tk in enumerate(sum_plain(ctx, 2, 1).coeffs):
        halved = halved + tk * ctx.qpow(2 * k) * ctx.inv_one_plus_qpow(2 * k) * 2
    assert full.subs(-1) == halved


def test_transformed_at_zero_is_weighted_sum():
    ctx = RingCtx.get(7, 2)
    s = sum_transformed(ctx, 2, 1)
    direct = ctx.zero
    for k, tk in enumerate(sum_plain(ctx, 2, 1).coeffs):
        direct = direct + tk * ctx.qpow(2 * k)
    assert s.coeff(0) == direct


@pytest.mark.parametrize("p", [3, 5, 7])
def test_m1_collapses_to_finite_form(p):
    # for m = 1 and 1 <= r <= p the plain sum is exactly the finite
    # q-binomial form  sum_{k<r} [r-1 k][r-1+k k] (-x)^k q^(k(k-1)/2 - k(r-1))
    ctx = RingCtx.get(p, 2)
    for r in range(1, p + 1):
        finite = [ctx.zero] * p
        for k in range(r):
            c = (ctx.qbinom(r - 1, k) * ctx.qbinom(r - 1 + k, k)
                 * ctx.qpow(k * (k - 1) // 2 - k * (r - 1)))
            finite[k] = -c if k % 2 else c
        assert sum_plain(ctx, 1, r) == XPoly(ctx, finite)
