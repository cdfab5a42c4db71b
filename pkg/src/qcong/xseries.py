"""Polynomials in x over Q[q]/([p]^r), and the truncated sums built in them.

Congruence of two x-polynomials modulo [p]^r means coefficientwise
congruence, and since every coefficient is stored canonically reduced,
congruence is simply equality of the trimmed coefficient tuples.

The sums all share one skeleton: the k-th term carries the factor
t_k = (q^r;q^m)_k (q^(m-r);q^m)_k / (q^m;q^m)_k^2, which is built with
the one-step ratio t_{k+1} = t_k (1-q^(r+km)) (1-q^(m-r+km)) / (1-q^(m(k+1)))^2
rather than by rebuilding Pochhammers from scratch.  Expansions of
(x;q^m)_k in x likewise grow one factor (1 - x q^(mk)) at a time.
"""

from __future__ import annotations

import functools

from .ring import RingCtx, RingElem


class XPoly:
    """Polynomial in x whose coefficients live in one ring context."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: RingCtx, coeffs):
        cs = list(coeffs)
        for c in cs:
            if c.ctx != ctx:
                raise ValueError("coefficient from a different ring context")
        while cs and cs[-1].is_zero():
            cs.pop()
        self.ctx = ctx
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> RingElem:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.ctx.zero

    def congruent(self, other: XPoly) -> bool:
        """Coefficientwise congruence mod [p]^r (the shorter side padded with 0)."""
        if not isinstance(other, XPoly):
            raise TypeError("can only compare with another XPoly")
        if self.ctx != other.ctx:
            raise ValueError("mixed ring contexts")
        return self.coeffs == other.coeffs

    def __eq__(self, other):
        if isinstance(other, XPoly):
            return self.ctx == other.ctx and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def __add__(self, other: XPoly) -> XPoly:
        if not isinstance(other, XPoly):
            return NotImplemented
        if self.ctx != other.ctx:
            raise ValueError("mixed ring contexts")
        n = max(len(self.coeffs), len(other.coeffs))
        return XPoly(self.ctx, (self.coeff(k) + other.coeff(k) for k in range(n)))

    def __sub__(self, other: XPoly) -> XPoly:
        if not isinstance(other, XPoly):
            return NotImplemented
        if self.ctx != other.ctx:
            raise ValueError("mixed ring contexts")
        n = max(len(self.coeffs), len(other.coeffs))
        return XPoly(self.ctx, (self.coeff(k) - other.coeff(k) for k in range(n)))

    def scale(self, c) -> XPoly:
        """Multiply every coefficient by a ring element or integer."""
        return XPoly(self.ctx, (a * c for a in self.coeffs))

    def negate_x(self) -> XPoly:
        """Substitute x -> -x."""
        return XPoly(self.ctx, (a if k % 2 == 0 else -a
                                for k, a in enumerate(self.coeffs)))

    def subs(self, v) -> RingElem:
        """Evaluate at x = v (a ring element or integer), by Horner."""
        if isinstance(v, int):
            v = self.ctx.scalar(v)
        acc = self.ctx.zero
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def first_difference(self, other: XPoly):
        """Index and difference of the first differing coefficient, or None."""
        n = max(len(self.coeffs), len(other.coeffs))
        for k in range(n):
            d = self.coeff(k) - other.coeff(k)
            if not d.is_zero():
                return k, d
        return None

    def __repr__(self):
        inner = ", ".join(f"x^{k}: {c.rep}" for k, c in enumerate(self.coeffs))
        return f"XPoly({inner or '0'})"


def congruent(a: XPoly, b: XPoly) -> bool:
    """Coefficientwise congruence of two x-polynomials (same context)."""
    return a.congruent(b)


def _term_step(ctx: RingCtx, t: RingElem, m: int, r: int, k: int) -> RingElem:
    # t_{k+1} from t_k.
    t = t * ctx.one_minus_qpow(r + k * m) * ctx.one_minus_qpow(m - r + k * m)
    inv = ctx.inv_one_minus_qpow(m * (k + 1))
    return t * inv * inv


@functools.lru_cache(maxsize=None)
def sum_plain(ctx: RingCtx, m: int, r: int, upto: int | None = None) -> XPoly:
    """sum_{k=0}^{upto} (q^r;q^m)_k (q^(m-r);q^m)_k / (q^m;q^m)_k^2 * x^k.

    upto defaults to p-1.  Denominators are units as long as p does not
    divide m and upto <= p-1; a violation surfaces as NotAUnit.
    """
    n = ctx.p - 1 if upto is None else upto
    t = ctx.one
    coeffs = [t]
    for k in range(n):
        t = _term_step(ctx, t, m, r, k)
        coeffs.append(t)
    return XPoly(ctx, coeffs)


@functools.lru_cache(maxsize=None)
def sum_transformed(ctx: RingCtx, m: int, r: int, upto: int | None = None) -> XPoly:
    """Same terms weighted by q^(mk) (x;q^m)_k, expanded in powers of x."""
    n = ctx.p - 1 if upto is None else upto
    t = ctx.one
    acc = [ctx.zero] * (n + 1)
    expansion = [ctx.one]  # (x;q^m)_k in x, k = 0
    for k in range(n + 1):
        w = t * ctx.qpow(m * k)
        for j, ej in enumerate(expansion):
            acc[j] = acc[j] + w * ej
        if k == n:
            break
        g = ctx.qpow(m * k)
        nxt = [ctx.zero] * (k + 2)
        for j, ej in enumerate(expansion):
            nxt[j] = nxt[j] + ej
            nxt[j + 1] = nxt[j + 1] - g * ej
        expansion = nxt
        t = _term_step(ctx, t, m, r, k)
    return XPoly(ctx, acc)


@functools.lru_cache(maxsize=None)
def legendre_sum(ctx: RingCtx, m: int, r: int, n: int) -> XPoly:
    """sum_{k=0}^{n} t_k (x;q^m)_k q^(mk) / (-q^m;q^m)_k, expanded in x.

    The q -> 1 limit is the generalized Legendre polynomial with
    parameter -r/m.  The extra denominators 1 + q^(mj) are units for
    every odd p (a primitive p-th root of unity cannot be a square root
    of -1 raised to a p-coprime power), but a NotAUnit is allowed to
    propagate so a counterexample would be reported, not assumed away.
    """
    t = ctx.one
    acc = [ctx.zero] * (n + 1)
    expansion = [ctx.one]
    for k in range(n + 1):
        w = t * ctx.qpow(m * k)
        for j, ej in enumerate(expansion):
            acc[j] = acc[j] + w * ej
        if k == n:
            break
        g = ctx.qpow(m * k)
        nxt = [ctx.zero] * (k + 2)
        for j, ej in enumerate(expansion):
            nxt[j] = nxt[j] + ej
            nxt[j + 1] = nxt[j + 1] - g * ej
        expansion = nxt
        t = _term_step(ctx, t, m, r, k) * ctx.inv_one_plus_qpow(m * (k + 1))
    return XPoly(ctx, acc)


@functools.lru_cache(maxsize=None)
def sum_qbinom_squared(ctx: RingCtx, m: int, t: int) -> XPoly:
    """sum_{k=0}^{t} [t k]_{q^m}^2 q^(m(k(k-1)/2 - kt)) (-x)^k (x;q^m)_{t-k}."""
    expansions = [[ctx.one]]
    for j in range(t):
        g = ctx.qpow(m * j)
        prev = expansions[-1]
        nxt = [ctx.zero] * (j + 2)
        for i, ei in enumerate(prev):
            nxt[i] = nxt[i] + ei
            nxt[i + 1] = nxt[i + 1] - g * ei
        expansions.append(nxt)
    acc = [ctx.zero] * (t + 1)
    for k in range(t + 1):
        c = ctx.qbinom(t, k, m)
        c = c * c * ctx.qpow(m * (k * (k - 1) // 2 - k * t))
        if k % 2:
            c = -c
        for j, ej in enumerate(expansions[t - k]):
            acc[k + j] = acc[k + j] + c * ej
    return XPoly(ctx, acc)


def sum_tauraso(ctx: RingCtx) -> XPoly:
    """The half-index q-binomial form sum_{k<=(p-1)/2} [n k]_{q^2}^2
    q^(k^2-pk) (-x)^k (x;q^2)_{n-k} with n = (p-1)/2."""
    return sum_qbinom_squared(ctx, 2, (ctx.p - 1) // 2)
