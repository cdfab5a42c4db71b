"""Exact dense univariate polynomials in q over the rationals.

A polynomial is stored as a tuple of ``fractions.Fraction`` coefficients
indexed by the exponent of q, with trailing zeros trimmed, so equal
polynomials have identical tuples.  The zero polynomial is the empty
tuple and has degree -1.  Every operation is exact; nothing here ever
rounds.

Coefficients stay rational rather than being cleared to integers: the
q-series sums downstream divide by (q^m;q^m)_k^2 and friends, and
clearing denominators globally would only bloat degrees.
"""

from __future__ import annotations

import functools
import itertools
from fractions import Fraction


def _coerce(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"rational coefficient expected, got {type(value).__name__}")


class QPoly:
    """A polynomial in q with exact rational coefficients.

    >>> QPoly((1, 1)) * QPoly((-1, 1))
    QPoly('-1 + q^2')
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, (int, Fraction)):
            coeffs = (coeffs,)
        cs = [_coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, coeffs: tuple) -> QPoly:
        # Internal fast path: coeffs must already be trimmed Fractions.
        self = object.__new__(cls)
        self.coeffs = coeffs
        return self

    @property
    def degree(self) -> int:
        """Degree of the leading term; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def lc(self) -> Fraction:
        """Leading coefficient (of the zero polynomial: 0)."""
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, exp: int) -> Fraction:
        if 0 <= exp < len(self.coeffs):
            return self.coeffs[exp]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == QPoly(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self) -> QPoly:
        return QPoly._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> QPoly:
        other = self._as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        cs = [a + b for a, b in itertools.zip_longest(
            self.coeffs, other.coeffs, fillvalue=Fraction(0))]
        while cs and not cs[-1]:
            cs.pop()
        return QPoly._raw(tuple(cs))

    __radd__ = __add__

    def __sub__(self, other) -> QPoly:
        other = self._as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> QPoly:
        return (-self) + other

    def __mul__(self, other) -> QPoly:
        if isinstance(other, (int, Fraction)):
            c = _coerce(other)
            if not c:
                return QPoly()
            return QPoly._raw(tuple(a * c for a in self.coeffs))
        if not isinstance(other, QPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return QPoly()
        # Schoolbook convolution; degrees in play stay desk-scale.
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] += a * b
        while out and not out[-1]:
            out.pop()
        return QPoly._raw(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> QPoly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = QPoly(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other) -> tuple[QPoly, QPoly]:
        """Exact division with remainder: self = quot*other + rem, deg rem < deg other."""
        other = self._as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        d = other.degree
        inv_lc = 1 / other.lc()
        rem = list(self.coeffs)
        quot = [Fraction(0)] * max(len(rem) - d, 0)
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if not c:
                continue
            c *= inv_lc
            quot[i - d] = c
            for j, b in enumerate(other.coeffs):
                rem[i - d + j] -= c * b
        del rem[d:]
        while rem and not rem[-1]:
            rem.pop()
        while quot and not quot[-1]:
            quot.pop()
        return QPoly._raw(tuple(quot)), QPoly._raw(tuple(rem))

    def __floordiv__(self, other) -> QPoly:
        return divmod(self, other)[0]

    def __mod__(self, other) -> QPoly:
        return divmod(self, other)[1]

    def _as_poly(self, other):
        if isinstance(other, QPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return QPoly(other)
        return NotImplemented

    def shift(self, n: int) -> QPoly:
        """Multiply by q^n (n >= 0)."""
        if n < 0:
            raise ValueError("negative shift; use LaurentPoly for that")
        if not self.coeffs:
            return self
        return QPoly._raw((Fraction(0),) * n + self.coeffs)

    def inflate(self, m: int) -> QPoly:
        """Substitute q -> q^m (m >= 1)."""
        if m < 1:
            raise ValueError("inflation factor must be positive")
        if m == 1 or not self.coeffs:
            return self
        out = [Fraction(0)] * ((len(self.coeffs) - 1) * m + 1)
        for i, c in enumerate(self.coeffs):
            out[i * m] = c
        return QPoly._raw(tuple(out))

    def derivative(self) -> QPoly:
        return QPoly(c * i for i, c in enumerate(self.coeffs) if i)

    def monic(self) -> QPoly:
        if self.is_zero():
            return self
        return self * (1 / self.lc())

    def eval_at_one(self) -> Fraction:
        """Value at q = 1, i.e. the coefficient sum."""
        return sum(self.coeffs, Fraction(0))

    def sparse(self) -> dict[int, str]:
        """Nonzero coefficients as {exponent: "num/den"} with exact strings."""
        return {i: str(c) for i, c in enumerate(self.coeffs) if c}

    def __repr__(self):
        return f"QPoly({str(self)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                var = "q" if i == 1 else f"q^{i}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


def monomial(n: int, c=1) -> QPoly:
    """The polynomial c*q^n."""
    if n < 0:
        raise ValueError("monomial exponent must be nonnegative")
    return QPoly((0,) * n + (c,))


def q_integer(n: int) -> QPoly:
    """[n] = 1 + q + ... + q^(n-1); [1] = 1."""
    if n < 1:
        raise ValueError("q-integer is defined for n >= 1")
    return QPoly._raw((Fraction(1),) * n)


def q_pochhammer(start: int, step: int, count: int) -> QPoly:
    """(q^start; q^step)_count = prod_{j<count} (1 - q^(start + j*step)).

    All exponents must stay nonnegative; an exponent of 0 makes the
    product vanish.  Negative exponents live in laurent.LaurentPoly.
    """
    out = QPoly(1)
    for j in range(count):
        e = start + j * step
        if e < 0:
            raise ValueError("negative exponent in polynomial Pochhammer")
        out = out * (QPoly(1) - monomial(e))
    return out


def ext_gcd(a: QPoly, b: QPoly) -> tuple[QPoly, QPoly, QPoly]:
    """Extended Euclid: returns (g, s, t) with g = s*a + t*b and g monic."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials")
    r0, r1 = a, b
    s0, s1 = QPoly(1), QPoly()
    t0, t1 = QPoly(), QPoly(1)
    while not r1.is_zero():
        quo, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    scale = 1 / r0.lc()
    return r0 * scale, s0 * scale, t0 * scale


@functools.lru_cache(maxsize=None)
def gaussian_binomial(n: int, k: int) -> QPoly:
    """The q-binomial coefficient [n k] as an exact polynomial.

    Computed as the quotient (q^(n-k+1);q)_k / (q;q)_k with a single
    exact long division (remainder asserted zero); the q-Pascal
    recurrences are kept for the test suite as an independent route.
    """
    if k < 0 or k > n:
        return QPoly()
    if k == 0 or k == n:
        return QPoly(1)
    num = q_pochhammer(n - k + 1, 1, k)
    den = q_pochhammer(1, 1, k)
    quo, rem = divmod(num, den)
    if not rem.is_zero():
        raise ArithmeticError("q-binomial division left a remainder")
    return quo
