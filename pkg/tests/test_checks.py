"""Named congruence checks: spec'd parameter points and coherence laws."""

import pytest

from qcong import checks
from qcong.records import INAPPLICABLE, PASS
from qcong.ring import RingCtx
from qcong.xseries import sum_plain, sum_transformed


def test_least_nonneg_residue():
    assert checks.least_nonneg_residue(-1, 2, 7) == 3
    assert checks.least_nonneg_residue(0, 1, 11) == 0
    with pytest.raises(ValueError):
        checks.least_nonneg_residue(1, 10, 5)
    # <-1/3> is (p-1)/3 or (2p-1)/3 according to p mod 3
    for p in (5, 7, 11, 13, 17, 19, 23):
        t = checks.least_nonneg_residue(-1, 3, p)
        assert t == ((p - 1) // 3 if p % 3 == 1 else (2 * p - 1) // 3)


def test_legendre_symbol_properties():
    assert checks.legendre_symbol(1, 7) == 1
    assert checks.legendre_symbol(-1, 7) == -1     # 7 = 3 mod 4
    assert checks.legendre_symbol(-3, 7) == 1      # (-3)^3 = -27 = 1 mod 7
    assert checks.legendre_symbol(14, 7) == 0
    primes = [p for p in range(3, 98) if checks.is_prime(p)]
    for p in primes:
        squares = {x * x % p for x in range(1, p)}
        for a in range(1, p):
            euler = checks.legendre_symbol(a, p)
            assert euler == (1 if a in squares else -1)
        for a in range(1, p):
            for b in range(1, p):
                assert (checks.legendre_symbol(a * b, p)
                        == checks.legendre_symbol(a, p) * checks.legendre_symbol(b, p))
        # closed forms as cross-checks
        assert checks.legendre_symbol(-1, p) == (-1) ** ((p - 1) // 2)
        assert checks.legendre_symbol(-2, p) == (1 if p % 8 in (1, 3) else -1)
        if p > 3:
            assert checks.legendre_symbol(-3, p) == (1 if p % 3 == 1 else -1)


def test_sign_identities():
    assert checks.verify_sign_identities(5).status == PASS
    assert checks.verify_sign_identities(7).status == PASS
    assert checks.verify_sign_identities(3).status == INAPPLICABLE
    for p in (11, 13, 17, 19, 23, 29):
        assert checks.verify_sign_identities(p).status == PASS


@pytest.mark.parametrize("p", [3, 5, 13])
def test_tauraso_qpoly(p):
    assert checks.check_tauraso_qpoly(p).status == PASS


def test_central_x1_values():
    # p = 3: sum = -q^(-2); p = 5: sum = +q^(-6)
    ctx = RingCtx.get(3, 2)
    total = ctx.zero
    for t in sum_plain(ctx, 2, 1).coeffs:
        total = total + t
    assert total == -ctx.qpow(-2)
    ctx5 = RingCtx.get(5, 2)
    total5 = ctx5.zero
    for t in sum_plain(ctx5, 2, 1).coeffs:
        total5 = total5 + t
    assert total5 == ctx5.qpow(-6)
    for p in (3, 5, 11):
        assert checks.check_central_x1(p).status == PASS


@pytest.mark.parametrize("p", [3, 7])
def test_central_transform(p):
    assert checks.check_central_transform(p).status == PASS


def test_central_specialization_coherence():
    # x = 1 and x = 0 substitutions of the transformed side match the
    # single-value checks
    for p in (3, 5, 7):
        ctx = RingCtx.get(p, 2)
        plain = sum_plain(ctx, 2, 1)
        transformed = sum_transformed(ctx, 2, 1)
        e = (1 - p * p) // 4
        scale = ctx.qpow(e) * checks.legendre_symbol(-1, p)
        assert plain.subs(1) == transformed.subs(1) * scale
        assert plain.subs(1) == scale  # transformed side collapses to 1 at x=1
        assert checks.check_central_dual(p).status == PASS
        assert checks.check_central_x1(p).status == PASS


@pytest.mark.parametrize("p", [3, 5, 7])
def test_central_reflection(p):
    assert checks.check_central_reflection(p).status == PASS


def test_central_reflection_x0_vanishing_at_7():
    # for p = 7 the symbol is -1, so the x^0 coefficient must vanish
    rec = checks.check_central_vanishing(7)
    assert rec.status == PASS
    assert checks.check_central_vanishing(5).status == INAPPLICABLE
    assert checks.check_central_vanishing(3).status == PASS


@pytest.mark.parametrize("p", [3, 5, 13])
def test_central_halved(p):
    assert checks.check_central_halved(p).status == PASS


@pytest.mark.parametrize("p,m,r", [(5, 3, 1), (7, 4, 1), (7, 5, 2), (3, 8, 5)])
def test_transform_mod_p(p, m, r):
    assert checks.check_transform_mod_p(p, m, r).status == PASS


def test_transform_inapplicable():
    assert checks.check_transform_mod_p(3, 6, 1).status == INAPPLICABLE
    assert checks.check_reflection(3, 3, 1).status == INAPPLICABLE


def test_transform_closed_exponent_branch():
    # 7 = -1 mod 4 exercises the closed-form exponent; 7 mod 5 does not
    assert checks.check_transform_mod_p(7, 4, 1).status == PASS
    assert checks.check_transform_mod_p(7, 5, 2).status == PASS


@pytest.mark.parametrize("p", [5, 7, 11])
def test_rv_family(p):
    assert checks.check_rv_family(p).status == PASS


def test_rv_family_small_p():
    assert checks.check_rv_family(3).status == INAPPLICABLE


@pytest.mark.parametrize("p,m,r", [(5, 2, 1), (7, 3, 2), (11, 7, 3)])
def test_truncated_expansion(p, m, r):
    assert checks.check_truncated_expansion(p, m, r).status == PASS


@pytest.mark.parametrize("p,m,r", [(5, 3, 1), (7, 6, 5), (5, 4, 7)])
def test_reflection(p, m, r):
    assert checks.check_reflection(p, m, r).status == PASS


@pytest.mark.parametrize("p", [5, 7, 11])
def test_reflection_values(p):
    assert checks.check_reflection_values(p).status == PASS


def test_reflection_values_parity_conditions():
    # the x = 0 vanishing triggers exactly on the stated residue classes
    for p in (5, 7, 11, 13, 17, 19, 23):
        t3 = checks.least_nonneg_residue(-1, 3, p)
        assert (t3 % 2 == 1) == (p % 3 == 2)
        t4 = checks.least_nonneg_residue(-1, 4, p)
        assert (t4 % 2 == 1) == (p % 8 in (5, 7))
        t6 = checks.least_nonneg_residue(-1, 6, p)
        assert (t6 % 2 == 1) == (p % 4 == 3)


@pytest.mark.parametrize("p", [5, 7, 13])
def test_conjectural_checks(p):
    assert checks.check_rv_quartet_conj(p).status == PASS
    assert checks.check_rv_family_dual_conj(p).status == PASS
    assert checks.check_reflection_conj(p, 2, 1).status == PASS


def test_conjectural_flagging():
    rec = checks.check_rv_quartet_conj(5)
    assert rec.conjectural
    rec2 = checks.check_central_x1(5)
    assert not rec2.conjectural


def test_exponent_integrality():
    for p in (5, 7, 11, 13):
        assert (1 - p * p) % 4 == 0
        assert (1 - p * p) % 3 == 0
        assert (3 * (1 - p * p)) % 8 == 0
        assert (5 * (1 - p * p)) % 12 == 0


def test_fail_records_carry_witnesses():
    # a deliberately wrong comparison must produce an indexed witness
    ctx = RingCtx.get(5, 1)
    lhs = sum_plain(ctx, 3, 1)
    rhs = lhs.scale(ctx.qpow(1))
    k, diff = lhs.first_difference(rhs)
    assert k == 0 and not diff.is_zero()
