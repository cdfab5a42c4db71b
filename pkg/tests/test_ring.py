"""Quotient ring Q[q]/[p]^r: reduction, units, exponent recovery."""

import pytest

from qcong.qpoly import QPoly, ext_gcd, monomial, q_integer
from qcong.ring import NotAPowerOfQ, NotAUnit, RingCtx, is_prime

ONE = QPoly(1)
Q = monomial(1)


def test_is_prime():
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]
    assert [n for n in range(2, 50) if is_prime(n)] == primes
    assert not is_prime(1) and not is_prime(0) and not is_prime(-7)


def test_ctx_validation():
    with pytest.raises(ValueError):
        RingCtx(4)
    with pytest.raises(ValueError):
        RingCtx(2)
    with pytest.raises(ValueError):
        RingCtx(5, 0)
    ctx = RingCtx(5, 2)
    assert ctx.modulus == q_integer(5) ** 2
    assert ctx.modulus.degree == 8


def test_reduce_examples():
    ctx31 = RingCtx.get(3, 1)
    assert ctx31.reduce(monomial(3)) == ctx31.one  # q^3 = 1 mod [3]
    ctx32 = RingCtx.get(3, 2)
    # degree 3 < 4 so q^3 is already canonical, and it equals 1 + (q-1)[3]
    el = ctx32.reduce(monomial(3))
    assert el.rep == monomial(3)
    assert el == ctx32.reduce(ONE + (Q - ONE) * q_integer(3))
    small = QPoly((1, -2, 3))
    assert ctx32.reduce(small).rep == small


def test_inv_examples():
    ctx = RingCtx.get(3, 2)
    assert ctx.one.inv() == ctx.one
    u = ctx.reduce(Q)
    assert u.inv() * u == ctx.one  # verify by multiplying back
    with pytest.raises(NotAUnit):
        ctx.reduce(q_integer(3)).inv()
    with pytest.raises(NotAUnit):
        ctx.zero.inv()


def test_unit_detection_matches_gcd():
    ctx = RingCtx.get(5, 2)
    for k in range(1, 30):
        elem = ctx.one_minus_qpow(k)
        g, _, _ = ext_gcd(elem.rep, ctx.phi)
        assert elem.is_unit() == (g.degree == 0)
        assert elem.is_unit() == (k % 5 != 0)


def test_qpow():
    ctx = RingCtx.get(5, 1)
    assert ctx.qpow(0) == ctx.one
    assert ctx.qpow(5) == ctx.one
    ctx2 = RingCtx.get(5, 2)
    assert ctx2.qpow(-6) * ctx2.qpow(6) == ctx2.one
    assert ctx2.qpow(7) == ctx2.qpow(3) * ctx2.qpow(4)


def test_qpow_exact_identity():
    # q^p = 1 + (q-1)[p] in Q[q]/[p]^2, for p up to 13
    for p in (3, 5, 7, 11, 13):
        ctx = RingCtx.get(p, 2)
        rhs = ctx.reduce(ONE + (Q - ONE) * q_integer(p))
        assert ctx.qpow(p) == rhs


def test_pochhammer():
    ctx = RingCtx.get(5, 2)
    assert ctx.pochhammer(1, 2, 0) == ctx.one
    expected = ctx.reduce((ONE - Q) * (ONE - monomial(3)))
    assert ctx.pochhammer(1, 2, 2) == expected
    for k in range(8):
        step = ctx.pochhammer(3, 2, k) * ctx.one_minus_qpow(3 + 2 * k)
        assert ctx.pochhammer(3, 2, k + 1) == step
    # negative first exponent goes through q^(-n)
    assert ctx.pochhammer(-3, 2, 1) == ctx.one - ctx.qpow(-3)


def test_pochhammer_units():
    # (q^2;q^2)_k is a unit for k <= p-1, checked per factor with the gcd
    ctx = RingCtx.get(5, 1)
    for k in range(1, 5):
        for j in range(1, k + 1):
            g, _, _ = ext_gcd(ctx.one_minus_qpow(2 * j).rep, ctx.phi)
            assert g.degree == 0
    assert ctx.pochhammer(2, 2, 4).is_unit()


def test_qbinom():
    ctx = RingCtx.get(5, 2)
    for n in range(6):
        assert ctx.qbinom(n, 0) == ctx.one
    assert ctx.qbinom(2, 1) == ctx.reduce(ONE + Q)
    assert ctx.qbinom(4, 2) == ctx.reduce(QPoly((1, 1, 2, 1, 1)))
    assert ctx.qbinom(3, -1) == ctx.zero
    assert ctx.qbinom(3, 4) == ctx.zero


def test_qbinom_pascal_and_symmetry():
    ctx = RingCtx.get(7, 2)
    for m in (1, 2, 3):
        for n in range(1, 7):
            for k in range(n + 1):
                both = ctx.qbinom(n, k, m)
                assert both == ctx.qbinom(n, n - k, m)
                rec1 = ctx.qbinom(n - 1, k - 1, m) + ctx.qpow(m * k) * ctx.qbinom(n - 1, k, m)
                rec2 = ctx.qpow(m * (n - k)) * ctx.qbinom(n - 1, k - 1, m) + ctx.qbinom(n - 1, k, m)
                assert both == rec1 == rec2


def test_solve_q_power_roundtrip():
    ctx = RingCtx.get(7, 2)
    assert ctx.solve_q_power(ctx.qpow(5)) == 5
    assert ctx.solve_q_power(ctx.qpow(-12)) == -12


def test_solve_q_power_rejects_non_powers():
    ctx = RingCtx.get(3, 1)
    # enumerate q^c mod [3] for c = 0, 1, 2 and confirm 1+q matches none
    target = (ONE + Q) % q_integer(3)
    probes = [monomial(c) % q_integer(3) for c in range(3)]
    assert target not in probes
    with pytest.raises(NotAPowerOfQ):
        ctx.solve_q_power(ctx.reduce(ONE + Q))
    ctx2 = RingCtx.get(5, 2)
    with pytest.raises(NotAPowerOfQ):
        ctx2.solve_q_power(ctx2.scalar(2))
    with pytest.raises(NotAPowerOfQ):
        ctx2.solve_q_power(ctx2.qpow(3) * 2)


def test_solve_q_power_mod_p_only():
    ctx = RingCtx.get(7, 1)
    for f in range(-20, 21):
        assert ctx.solve_q_power(ctx.qpow(f)) == f % 7


@pytest.mark.parametrize("p", [3, 5, 7])
def test_power_uniqueness_exhaustive(p):
    # q^f = q^g iff f = g, exhaustively on [-p^2, p^2]: the foundation
    # for recovering a unique integer exponent
    ctx = RingCtx.get(p, 2)
    seen = {}
    for f in range(-p * p, p * p + 1):
        rep = ctx.qpow(f).rep.coeffs
        assert rep not in seen, f"q^{f} collides with q^{seen[rep]}"
        seen[rep] = f


@pytest.mark.parametrize("p", [3, 5, 7])
def test_solve_qpow_identity(p):
    ctx = RingCtx.get(p, 2)
    for f in range(-p * p, p * p + 1):
        assert ctx.solve_q_power(ctx.qpow(f)) == f


def test_elem_algebra():
    ctx = RingCtx.get(5, 2)
    a = ctx.reduce(QPoly((1, 2, 0, 1)))
    b = ctx.reduce(QPoly((0, -1, 3)))
    assert a + b == b + a
    assert a - a == ctx.zero
    assert a * (b + ctx.one) == a * b + a
    assert (a * 3) == a + a + a
    assert a ** 3 == a * a * a
    assert a ** 0 == ctx.one
    u = ctx.qpow(4)
    assert u ** -2 == (u.inv()) ** 2
    with pytest.raises(ValueError):
        a + RingCtx.get(7, 2).one
