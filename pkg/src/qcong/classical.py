"""Exact integer verification of the q = 1 specializations, modulo p^2.

Residues are canonical integers in [0, p^2); a rational term is reduced
only after its denominator is checked coprime to p, matching the
p-adic-integer reading of binomial coefficients with fractional upper
argument.  Binomial coefficients themselves are exact big integers via
math.comb, so nothing depends on modular division by k! (which would
break when p divides an intermediate factor).
"""

from __future__ import annotations

import math
from fractions import Fraction

from .checks import least_nonneg_residue, legendre_symbol
from .qpoly import q_integer
from .records import FAIL, INAPPLICABLE, PASS, named_check
from .ring import is_prime

RV_VARIANTS = {
    16: (lambda k: math.comb(2 * k, k) ** 2, -1),
    27: (lambda k: math.comb(3 * k, 2 * k) * math.comb(2 * k, k), -3),
    64: (lambda k: math.comb(4 * k, 2 * k) * math.comb(2 * k, k), -2),
    432: (lambda k: math.comb(6 * k, 3 * k) * math.comb(3 * k, k), -1),
}


def reduce_fraction(value: Fraction, modulus: int) -> int:
    """Canonical residue of an exact rational whose denominator is a unit."""
    den = value.denominator
    if math.gcd(den, modulus) != 1:
        raise ZeroDivisionError(f"denominator {den} not coprime to {modulus}")
    return value.numerator * pow(den, -1, modulus) % modulus


def _require_odd_prime(p: int):
    if not is_prime(p) or p == 2:
        raise ValueError(f"p must be an odd prime, got {p}")


@named_check("rv-classical")
def check_rv(p: int, variant: int):
    """sum_{k<p} (central-type binomials)/variant^k = (d/p) mod p^2 for
    variant in {16, 27, 64, 432} with d = -1, -3, -2, -1; needs p >= 5."""
    _require_odd_prime(p)
    if variant not in RV_VARIANTS:
        raise ValueError(f"variant must be one of {sorted(RV_VARIANTS)}")
    if p < 5:
        return INAPPLICABLE, None
    numerator, d = RV_VARIANTS[variant]
    mod = p * p
    inv_base = pow(variant, -1, mod)
    total, w = 0, 1
    for k in range(p):
        total = (total + numerator(k) * w) % mod
        w = w * inv_base % mod
    target = legendre_symbol(d, p) % mod
    if total == target:
        return PASS, None
    return FAIL, {"lhs": total, "rhs": target, "modulus": mod}


@named_check("tauraso-classical")
def check_tauraso(p: int, x: int):
    """sum_{k<p} C(2k,k)^2 x^k/16^k = sum_{k<=n} C(n,k)^2 (-x)^k (1-x)^(n-k)
    mod p^2, with n = (p-1)/2, for any integer x."""
    _require_odd_prime(p)
    mod = p * p
    inv16 = pow(16, -1, mod)
    lhs, w = 0, 1
    for k in range(p):
        # pow handles a negative base with a modulus cleanly
        lhs = (lhs + math.comb(2 * k, k) ** 2 * pow(x, k, mod) * w) % mod
        w = w * inv16 % mod
    n = (p - 1) // 2
    rhs = 0
    for k in range(n + 1):
        term = math.comb(n, k) ** 2 * (-x) ** k * (1 - x) ** (n - k)
        rhs = (rhs + term) % mod
    if lhs == rhs:
        return PASS, None
    return FAIL, {"lhs": lhs, "rhs": rhs, "modulus": mod}


@named_check("legendre-classical")
def check_sun_legendre(p: int, m: int, r: int, x: int):
    """Reflection of the generalized Legendre polynomial with a = -r/m:
    P(a,x) = (-1)^<a> P(a,-x) mod p^2, where P(a,x) = sum_k C(a,k) C(a+k,k)
    ((x-1)/2)^k; and the paired form sum_k C(a,k) C(-1-a,k)
    (x^k - (-1)^<a> (1-x)^k) = 0 mod p^2."""
    _require_odd_prime(p)
    if m % p == 0:
        return INAPPLICABLE, None
    mod = p * p
    a = Fraction(-r, m)
    sigma = (-1) ** least_nonneg_residue(-r, m, p)

    def legendre_value(point: int) -> int:
        c_a = Fraction(1)      # C(a, k)
        c_ak = Fraction(1)     # C(a+k, k)
        total = 0
        for k in range(p):
            term = c_a * c_ak * Fraction(point - 1, 2) ** k
            total = (total + reduce_fraction(term, mod)) % mod
            c_a = c_a * (a - k) / (k + 1)
            c_ak = c_ak * (a + k + 1) / (k + 1)
        return total

    lhs = legendre_value(x)
    rhs = sigma * legendre_value(-x) % mod
    if lhs != rhs:
        return FAIL, {"part": "reflection", "lhs": lhs, "rhs": rhs,
                      "modulus": mod}
    c_a = Fraction(1)          # C(a, k)
    c_b = Fraction(1)          # C(-1-a, k)
    total = 0
    for k in range(p):
        term = c_a * c_b * (Fraction(x) ** k - sigma * Fraction(1 - x) ** k)
        total = (total + reduce_fraction(term, mod)) % mod
        c_a = c_a * (a - k) / (k + 1)
        c_b = c_b * (-1 - a - k) / (k + 1)
    if total != 0:
        return FAIL, {"part": "paired form", "lhs": total, "rhs": 0,
                      "modulus": mod}
    return PASS, None


@named_check("sun-32k")
def check_32k(p: int):
    """sum_{k<p} C(2k,k)^2/32^k = 0 mod p^2 when p = 3 (mod 4)."""
    _require_odd_prime(p)
    if p % 4 != 3:
        return INAPPLICABLE, None
    mod = p * p
    inv32 = pow(32, -1, mod)
    total, w = 0, 1
    for k in range(p):
        total = (total + math.comb(2 * k, k) ** 2 * w) % mod
        w = w * inv32 % mod
    if total == 0:
        return PASS, None
    return FAIL, {"lhs": total, "rhs": 0, "modulus": mod}


@named_check("van-hamme")
def check_van_hamme(p: int):
    """sum_{k<p} C(2k,k)^3/64^k = 0 mod p^2 when p = 3 (mod 4)."""
    _require_odd_prime(p)
    if p % 4 != 3:
        return INAPPLICABLE, None
    mod = p * p
    inv64 = pow(64, -1, mod)
    total, w = 0, 1
    for k in range(p):
        total = (total + math.comb(2 * k, k) ** 3 * w) % mod
        w = w * inv64 % mod
    if total == 0:
        return PASS, None
    return FAIL, {"lhs": total, "rhs": 0, "modulus": mod}


@named_check("limit-factor")
def check_q_to_1_limit(k_max: int):
    """prod_{j<=k} ([2j-1]/[2j] at q=1) squared equals C(2k,k)^2/16^k exactly,
    for every k <= k_max.  The q-integers are evaluated at 1 (giving the
    plain integers 2j-1 and 2j) so no 0/0 form ever arises."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    ratio = Fraction(1)
    for k in range(1, k_max + 1):
        ratio *= Fraction(q_integer(2 * k - 1).eval_at_one(),
                          q_integer(2 * k).eval_at_one())
        lhs = ratio ** 2
        rhs = Fraction(math.comb(2 * k, k) ** 2, 16 ** k)
        if lhs != rhs:
            return FAIL, {"k": k, "lhs": str(lhs), "rhs": str(rhs)}
    return PASS, None
