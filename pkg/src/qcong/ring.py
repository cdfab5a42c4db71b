"""The quotient rings Q[q]/([p]^r) for an odd prime p and r in {1, 2}.

[p] = 1 + q + ... + q^(p-1) is irreducible over Q, so Q[q]/[p] is a
field and Q[q]/[p]^2 is a local ring whose units are exactly the
residues coprime to [p].  A ring element is kept as its canonical
representative, the remainder by [p]^r, so two elements are congruent
iff their representatives are identical tuples.

The element q is a unit of infinite multiplicative order here: from the
exact factorization q^p - 1 = (q-1)[p] one gets q^(p*k) = 1 + k(q-1)[p]
modulo [p]^2, which is 1 only for k = 0.  That makes the exponent of a
power of q recoverable exactly (``solve_q_power``), not just modulo p.
"""

from __future__ import annotations

from fractions import Fraction

from .qpoly import QPoly, ext_gcd, gaussian_binomial, monomial, q_integer


class NotAUnit(ZeroDivisionError):
    """Inversion was asked of an element sharing a factor with [p]."""


class NotAPowerOfQ(ValueError):
    """Exponent recovery found the element is not a power of q."""


def is_prime(n: int) -> bool:
    """Deterministic trial division; the primes used here are desk-scale."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


_CTX_CACHE: dict[tuple[int, int], "RingCtx"] = {}


class RingCtx:
    """Context for Q[q]/([p]^r): the modulus, reduction and builders.

    Immutable after construction (the caches only memoize pure values),
    so a context may be shared freely across threads or processes.
    """

    __slots__ = ("p", "r", "phi", "modulus", "_one", "_zero",
                 "_one_minus", "_inv_one_minus", "_inv_one_plus")

    def __init__(self, p: int, r: int = 1):
        if not is_prime(p) or p == 2:
            raise ValueError(f"p must be an odd prime, got {p}")
        if r < 1:
            raise ValueError("modulus power r must be >= 1")
        self.p = p
        self.r = r
        self.phi = q_integer(p)
        self.modulus = self.phi ** r
        self._one = RingElem(self, QPoly(1))
        self._zero = RingElem(self, QPoly())
        self._one_minus: dict[int, RingElem] = {}
        self._inv_one_minus: dict[int, RingElem] = {}
        self._inv_one_plus: dict[int, RingElem] = {}

    @classmethod
    def get(cls, p: int, r: int = 1) -> RingCtx:
        """Shared, memoized context (reuses the per-context caches)."""
        key = (p, r)
        ctx = _CTX_CACHE.get(key)
        if ctx is None:
            ctx = _CTX_CACHE[key] = cls(p, r)
        return ctx

    def __eq__(self, other):
        if isinstance(other, RingCtx):
            return self.p == other.p and self.r == other.r
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.r))

    def __repr__(self):
        return f"RingCtx(p={self.p}, r={self.r})"

    @property
    def one(self) -> RingElem:
        return self._one

    @property
    def zero(self) -> RingElem:
        return self._zero

    def reduce(self, a) -> RingElem:
        """Canonical residue of a polynomial (or scalar) in this ring."""
        if isinstance(a, RingElem):
            if a.ctx != self:
                raise ValueError("element belongs to a different ring")
            return a
        if isinstance(a, (int, Fraction)):
            a = QPoly(a)
        if a.degree >= self.modulus.degree:
            a = a % self.modulus
        return RingElem(self, a)

    def scalar(self, c) -> RingElem:
        return RingElem(self, QPoly(c))

    def qpow(self, n: int) -> RingElem:
        """q^n for any integer n; negative n goes through inversion."""
        if n < 0:
            return self.qpow(-n).inv()
        result = self._one
        base = self.reduce(monomial(1))
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def one_minus_qpow(self, n: int) -> RingElem:
        """1 - q^n, cached by exponent."""
        elem = self._one_minus.get(n)
        if elem is None:
            elem = self._one - self.qpow(n)
            self._one_minus[n] = elem
        return elem

    def inv_one_minus_qpow(self, n: int) -> RingElem:
        """(1 - q^n)^(-1); NotAUnit when p divides n."""
        elem = self._inv_one_minus.get(n)
        if elem is None:
            elem = self.one_minus_qpow(n).inv()
            self._inv_one_minus[n] = elem
        return elem

    def inv_one_plus_qpow(self, n: int) -> RingElem:
        """(1 + q^n)^(-1); always defined for odd p."""
        elem = self._inv_one_plus.get(n)
        if elem is None:
            elem = (self._one + self.qpow(n)).inv()
            self._inv_one_plus[n] = elem
        return elem

    def pochhammer(self, a: int, m: int, k: int) -> RingElem:
        """(q^a; q^m)_k = prod_{j<k} (1 - q^(a+j*m)), reduced.

        The first argument is the exponent of q, which is the only shape
        of q-shifted factorial the sums here need; a may be negative.
        """
        out = self._one
        for j in range(k):
            out = out * self.one_minus_qpow(a + j * m)
        return out

    def qbinom(self, n: int, k: int, m: int = 1) -> RingElem:
        """[n k] in base q^m: the exact Gaussian binomial, then reduced."""
        if k < 0 or k > n:
            return self._zero
        return self.reduce(gaussian_binomial(n, k).inflate(m))

    def solve_q_power(self, u: RingElem) -> int:
        """Recover n from an element known to equal q^n.

        For r = 2 the answer is the exact integer: first the residue
        n0 mod p is found by scanning q^0..q^(p-1) against u modulo [p],
        then u*q^(-n0) - 1 is divided exactly by (q-1) and by [p]; the
        quotient must be a constant integer k, giving n = n0 + p*k.
        For r = 1 only the residue class mod p exists and n0 is returned.
        Raises NotAPowerOfQ if any step fails.
        """
        if u.ctx != self:
            raise ValueError("element belongs to a different ring")
        if self.r > 2:
            raise NotImplementedError("exponent recovery implemented for r <= 2")
        target = u.rep % self.phi
        n0 = None
        probe = QPoly(1)
        for c in range(self.p):
            if probe == target:
                n0 = c
                break
            probe = probe.shift(1) % self.phi
        if n0 is None:
            raise NotAPowerOfQ("no match against q^0..q^(p-1) modulo [p]")
        if self.r == 1:
            return n0
        w = u * self.qpow(-n0)
        v = w.rep - QPoly(1)
        if v.is_zero():
            return n0
        quot, rem = divmod(v, QPoly((-1, 1)))  # divide by q - 1
        if rem:
            raise NotAPowerOfQ("residual not divisible by q - 1")
        quot, rem = divmod(quot, self.phi)
        if rem:
            raise NotAPowerOfQ("residual not divisible by [p]")
        if quot.degree > 0:
            raise NotAPowerOfQ("quotient by (q-1)[p] is not constant")
        k = quot.lc()
        if k.denominator != 1:
            raise NotAPowerOfQ("quotient by (q-1)[p] is not an integer")
        return n0 + self.p * int(k)


class RingElem:
    """An element of Q[q]/([p]^r), stored as its canonical representative."""

    __slots__ = ("ctx", "rep")

    def __init__(self, ctx: RingCtx, rep: QPoly):
        self.ctx = ctx
        self.rep = rep

    def is_zero(self) -> bool:
        return self.rep.is_zero()

    def is_unit(self) -> bool:
        if self.rep.is_zero():
            return False
        g, _, _ = ext_gcd(self.rep, self.ctx.phi)
        return g.degree == 0

    def inv(self) -> RingElem:
        """Multiplicative inverse; NotAUnit when gcd with [p] is nonconstant."""
        if self.rep.is_zero():
            raise NotAUnit("zero is not invertible")
        g, s, _ = ext_gcd(self.rep, self.ctx.modulus)
        if g.degree > 0:
            raise NotAUnit("element shares a factor with [p]")
        return self.ctx.reduce(s)

    def _coerce(self, other):
        if isinstance(other, RingElem):
            if other.ctx != self.ctx:
                raise ValueError("mixed ring contexts")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.scalar(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RingElem(self.ctx, self.rep + other.rep)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return RingElem(self.ctx, self.rep - other.rep)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return RingElem(self.ctx, -self.rep)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RingElem(self.ctx, self.rep * other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.ctx.reduce(self.rep * other.rep)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inv() ** (-n)
        result = self.ctx.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, RingElem):
            return self.ctx == other.ctx and self.rep == other.rep
        if isinstance(other, (int, Fraction)):
            return self.rep == QPoly(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx.p, self.ctx.r, self.rep.coeffs))

    def __repr__(self):
        return f"<{self.rep} mod [{self.ctx.p}]^{self.ctx.r}>"
