"""Exact q-identities: little q-Legendre expansions and terminating sums.

Everything in this module is an identity in Z[q, q^-1] (or a congruence
whose two sides are built independently), verified by exact coefficient
comparison.  Sums with q-factorial denominators are cleared first:
multiplying the k-th term of a sum over (-q;q)_k by (-q;q)_n leaves the
polynomial factor (-q^(k+1);q)_{n-k}, and remaining denominators are
moved across by cross-multiplication.  No rational-function arithmetic
is ever needed.
"""

from __future__ import annotations

from .laurent import (L_ONE, L_ZERO, LaurentPoly, XLaurent, gb, gb_base,
                      laurent_poch, laurent_poch_plus, xpoch_expansions)
from .qpoly import QPoly, gaussian_binomial, monomial
from .ring import RingCtx


def qlegendre_monomial(n: int) -> XLaurent:
    """P_n(x|q) = sum_k [n k][n+k k] q^(k(k+1)/2 - nk) (-x)^k."""
    coeffs = []
    for k in range(n + 1):
        c = gb(n, k) * gb(n + k, k) * LaurentPoly.q_power(k * (k + 1) // 2 - n * k)
        coeffs.append(-c if k % 2 else c)
    return XLaurent(coeffs)


def qlegendre_shifted(n: int) -> XLaurent:
    """P_n(x|q) via the (xq;q)_k basis with prefactor (-1)^n q^(-n(n+1)/2)."""
    expansions = xpoch_expansions(n, 1, 1)
    acc = [L_ZERO] * (n + 1)
    for k in range(n + 1):
        c = gb(n, k) * gb(n + k, k) * LaurentPoly.q_power(k * (k + 1) // 2 - n * k)
        if k % 2:
            c = -c
        for j, e in enumerate(expansions[k]):
            acc[j] = acc[j] + c * e
    prefactor = LaurentPoly.q_power(-n * (n + 1) // 2)
    if n % 2:
        prefactor = -prefactor
    return XLaurent(acc).scale(prefactor)


def qlegendre_mixed(n: int) -> XLaurent:
    """P_n(x|q) = sum_k [n k]^2 q^(k(k+1)/2 - nk) (-x)^k (xq;q)_{n-k}."""
    expansions = xpoch_expansions(n, 1, 1)
    acc = [L_ZERO] * (n + 1)
    for k in range(n + 1):
        c = gb(n, k) * gb(n, k) * LaurentPoly.q_power(k * (k + 1) // 2 - n * k)
        if k % 2:
            c = -c
        for j, e in enumerate(expansions[n - k]):
            acc[k + j] = acc[k + j] + c * e
    return XLaurent(acc)


def verify_qbinomial_theorem(n: int) -> bool:
    """(x;q)_n = sum_k [n k] (-x)^k q^(k(k-1)/2), checked exactly."""
    product = XLaurent(xpoch_expansions(n, 0, 1)[n])
    coeffs = []
    for k in range(n + 1):
        c = gb(n, k) * LaurentPoly.q_power(k * (k - 1) // 2)
        coeffs.append(-c if k % 2 else c)
    return product == XLaurent(coeffs)


def verify_chu_vandermonde(m: int, n: int) -> bool:
    """sum_{k<=m} [m k][n k] q^((m-k)(n-k)) = [n+m m], checked exactly.

    This is the exact shape that collapses the x^m coefficient when the
    mixed little-q-Legendre expansion is proved.
    """
    total = QPoly()
    for k in range(m + 1):
        total = total + (gaussian_binomial(m, k) * gaussian_binomial(n, k)
                         * monomial((m - k) * (n - k)))
    return total == gaussian_binomial(n + m, m)


def verify_central_term_rewrite(p: int, k: int | None = None) -> bool:
    """(q;q^2)_k^2/(q^2;q^2)_k^2 == (-1)^k [(p-1)/2 k]_{q^2} [(p-1)/2+k k]_{q^2}
    q^(k^2-kp) in Q[q]/[p]^2, for one k or for all 0 <= k <= p-1."""
    ctx = RingCtx.get(p, 2)
    n = (p - 1) // 2
    ks = range(p) if k is None else [k]
    for kk in ks:
        lhs = ctx.pochhammer(1, 2, kk) ** 2 * (ctx.pochhammer(2, 2, kk).inv()) ** 2
        rhs = (ctx.qbinom(n, kk, 2) * ctx.qbinom(n + kk, kk, 2)
               * ctx.qpow(kk * kk - kk * p))
        if kk % 2:
            rhs = -rhs
        if lhs != rhs:
            return False
    return True


def verify_term_rewrite_general(p: int, m: int, r: int, k: int | None = None) -> bool:
    """(q^r;q^m)_k (q^(m-r);q^m)_k / (q^m;q^m)_k^2 == (-1)^k [t k]_{q^m}
    [t+k k]_{q^m} q^(mk(k-1)/2 - k(ps-r)) in Q[q]/[p], with
    t = <-r/m> mod p and s = (mt+r)/p (a positive integer, asserted)."""
    if m % p == 0:
        raise ValueError("p must not divide m")
    t = (-r * pow(m, -1, p)) % p
    ps_minus_r = m * t
    s, rem = divmod(ps_minus_r + r, p)
    if rem != 0 or s < 1:
        raise AssertionError("(m*t + r)/p is not a positive integer")
    ctx = RingCtx.get(p, 1)
    ks = range(p) if k is None else [k]
    for kk in ks:
        lhs = (ctx.pochhammer(r, m, kk) * ctx.pochhammer(m - r, m, kk)
               * (ctx.pochhammer(m, m, kk).inv()) ** 2)
        rhs = (ctx.qbinom(t, kk, m) * ctx.qbinom(t + kk, kk, m)
               * ctx.qpow(m * kk * (kk - 1) // 2 - kk * ps_minus_r))
        if kk % 2:
            rhs = -rhs
        if lhs != rhs:
            return False
    return True


def kernel_sum_cleared(n: int, j: int) -> LaurentPoly:
    """sum_{k=j}^{n} (-1)^k [n+k k][n-j k-j] q^(k(k+1)/2-nk) / (-q;q)_k,
    multiplied through by (-q;q)_n so each term is a Laurent polynomial."""
    total = L_ZERO
    for k in range(j, n + 1):
        term = (gb(n + k, k) * gb(n - j, k - j)
                * LaurentPoly.q_power(k * (k + 1) // 2 - n * k)
                * laurent_poch_plus(k + 1, 1, n - k))
        total = total + (-term if k % 2 else term)
    return total


def verify_kernel_closed_form(n: int, j: int) -> bool:
    """The cleared kernel sum equals its parity-split closed form.

    Zero when n and j have opposite parity; otherwise a signed base-q^2
    binomial times a ratio of odd-base Pochhammers, compared here by
    cross-multiplication.
    """
    if not (1 <= n and 0 <= j <= n):
        raise ValueError("need 1 <= n and 0 <= j <= n")
    lhs = kernel_sum_cleared(n, j)
    if (n - j) % 2:
        return lhs.is_zero()
    u = (n - j) // 2
    exponent = u * (u + 1) - j * (j - 1) // 2
    if n % 2 == 0:
        half = j // 2
        sign = -1 if u % 2 else 1
        rhs = (gb_base(n, n // 2, 2) * laurent_poch(n + 1, 2, half)
               * LaurentPoly.q_power(exponent) * sign)
        return lhs * laurent_poch(n - j + 1, 2, half) == rhs
    half = (j - 1) // 2
    sign = 1 if u % 2 else -1  # (-1)^(u-1)
    rhs = (gb_base(n - 1, (n - 1) // 2, 2) * laurent_poch(n + 2, 2, half)
           * (L_ONE + LaurentPoly.q_power(n))
           * LaurentPoly.q_power(exponent) * sign)
    return lhs * laurent_poch(n - j + 1, 2, half) == rhs


def verify_terminating_gauss(n: int, j: int) -> bool:
    """sum_{k<=n-j} (q^(n+j+1);q)_k (q^(j-n);q)_k q^k / ((q;q)_k (q^(2j+2);q^2)_k)
    equals (q^(j-n+1);q^2)_{(n-j)/2} q^((n+j+1)(n-j)/2) / (q^(2j+2);q^2)_{(n-j)/2}
    when n = j (mod 2) and 0 otherwise; verified with denominators cleared.

    The exponent (n+j+1)(n-j)/2 comes out of substituting q -> 1/q into
    the q^(k(k+1)/2)-weighted base identity; it is confirmed by exact
    evaluation at rational q against the raw sum.
    """
    if not (0 <= j <= n):
        raise ValueError("need 0 <= j <= n")
    big = n - j
    total = L_ZERO
    for k in range(big + 1):
        term = (laurent_poch(n + j + 1, 1, k) * laurent_poch(j - n, 1, k)
                * LaurentPoly.q_power(k)
                * laurent_poch(k + 1, 1, big - k)           # (q;q)_big / (q;q)_k
                * laurent_poch(2 * j + 2 + 2 * k, 2, big - k))
        total = total + term
    if big % 2:
        return total.is_zero()
    half = big // 2
    rhs = (laurent_poch(j - n + 1, 2, half)
           * LaurentPoly.q_power((n + j + 1) * half)
           * laurent_poch(1, 1, big)                        # (q;q)_big
           * laurent_poch(n + j + 2, 2, half))
    return total == rhs


def reflection_generating_cleared(n: int) -> XLaurent:
    """(-q;q)_n * sum_k (-1)^k [n k][n+k k] (x;q)_k q^(k(k+1)/2-nk) / (-q;q)_k,
    expanded in powers of x."""
    expansions = xpoch_expansions(n, 0, 1)
    acc = [L_ZERO] * (n + 1)
    for k in range(n + 1):
        c = (gb(n, k) * gb(n + k, k)
             * LaurentPoly.q_power(k * (k + 1) // 2 - n * k)
             * laurent_poch_plus(k + 1, 1, n - k))
        if k % 2:
            c = -c
        for j, e in enumerate(expansions[k]):
            acc[j] = acc[j] + c * e
    return XLaurent(acc)


def verify_reflection_generating(n: int) -> bool:
    """The alternating-weight generating sum flips sign with x -> -x:
    F_n(x,q) = (-1)^n F_n(-x,q), checked after clearing (-q;q)_n."""
    if n < 1:
        raise ValueError("need n >= 1")
    f = reflection_generating_cleared(n)
    flipped = f.negate_x()
    if n % 2:
        flipped = flipped.scale(-1)
    return f == flipped
