"""The central family of q-congruences modulo [p]^2.

The terms (q;q^2)_k^2/(q^2;q^2)_k^2 are the q-analogue of the central
binomial term C(2k,k)^2/16^k.  Their truncated sum, in the quotient
ring Q[q]/[p]^2, collapses to a signed power of q determined by the
Legendre symbol (-1/p).  This script evaluates the sum for a few
primes, compares against the closed form, and shows the polynomial
(x-dependent) strengthening behind it.
"""

from qcong import RingCtx, sum_plain, sum_tauraso, legendre_symbol

for p in (3, 5, 7, 11, 13):
    ctx = RingCtx.get(p, 2)
    total = ctx.zero
    for t in sum_plain(ctx, 2, 1).coeffs:
        total = total + t
    e = (1 - p * p) // 4
    sym = legendre_symbol(-1, p)
    closed = ctx.qpow(e) * sym
    sign = "+" if sym == 1 else "-"
    print(f"p={p:>2}:  sum = {sign}q^({e})   matches closed form:"
          f" {total == closed}")

print("\nthe polynomial congruence this specializes from (p = 5):")
ctx = RingCtx.get(5, 2)
lhs = sum_plain(ctx, 2, 1)
rhs = sum_tauraso(ctx)
print("  x-degree of both sides:", lhs.degree, rhs.degree)
for k in range(lhs.degree + 1):
    print(f"  x^{k}: coefficients agree: {lhs.coeff(k) == rhs.coeff(k)}")
print("  whole polynomials congruent:", lhs.congruent(rhs))
print("  setting x=1 recovers the value above:",
      lhs.subs(1) == ctx.qpow((1 - 25) // 4) * legendre_symbol(-1, 5))
