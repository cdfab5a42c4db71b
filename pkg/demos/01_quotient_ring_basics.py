"""A tour of exact arithmetic in Q[q]/([p]^r).

The cyclotomic polynomial [p] = 1 + q + ... + q^(p-1) is irreducible
over the rationals, so everything coprime to it can be inverted
exactly.  This script builds the ring for p = 7, inverts a few
elements, and shows the one fact everything else leans on: q has
infinite multiplicative order modulo [p]^2, so an integer exponent can
be recovered exactly from a power of q.
"""

from qcong import QPoly, RingCtx, monomial, q_integer

p = 7
print(f"[{p}] =", q_integer(p))
print("q^7 - 1 factors as (q-1)[7]:",
      monomial(7) - QPoly(1) == (monomial(1) - QPoly(1)) * q_integer(7))

ctx = RingCtx.get(p, 2)
print("\nring:", ctx, " modulus degree:", ctx.modulus.degree)

u = ctx.reduce(QPoly((3, 1, 0, 2)))
v = u.inv()
print("u        =", u)
print("u^-1     =", v)
print("u * u^-1 =", u * v)

print("\nq^7 is not 1 mod [7]^2 (only mod [7]):")
print("  q^7  =", ctx.qpow(7))
print("  mod [7] it reduces to", RingCtx.get(p, 1).qpow(7))

print("\nexponent recovery round-trips, including negative exponents:")
for f in (5, -12, 40, -48):
    got = ctx.solve_q_power(ctx.qpow(f))
    print(f"  solve(q^{f:>4}) = {got:>4}   {'ok' if got == f else 'BUG'}")

print("\nq-binomials reduce like any polynomial:")
print("  [4 2]_q          =", ctx.qbinom(4, 2).rep)
print("  [4 2]_{q^3}      =", ctx.qbinom(4, 2, 3).rep)
print("  (q;q^2)_3        =", ctx.pochhammer(1, 2, 3).rep)
