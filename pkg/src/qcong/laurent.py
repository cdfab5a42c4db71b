"""Exact Laurent polynomials in q, and x-polynomials over them.

The q-identities verified downstream mix q-binomials with powers
q^(k(k+1)/2 - nk) whose exponents go negative.  Those are identities in
Z[q, q^-1], not congruences, so negative exponents are handled by an
explicit shift rather than by ring inversion: a LaurentPoly is
q^shift * body where body is a QPoly with nonzero constant term (the
zero element keeps shift 0), making the representation canonical.
"""

from __future__ import annotations

from fractions import Fraction

from .qpoly import QPoly


class LaurentPoly:
    """q^shift * body with body(0) != 0 unless zero."""

    __slots__ = ("shift", "body")

    def __init__(self, shift: int = 0, body: QPoly | int | Fraction = QPoly()):
        if isinstance(body, (int, Fraction)):
            body = QPoly(body)
        if body.is_zero():
            shift = 0
        else:
            low = 0
            while not body.coeffs[low]:
                low += 1
            if low:
                body = QPoly._raw(body.coeffs[low:])
                shift += low
        self.shift = shift
        self.body = body

    @classmethod
    def from_poly(cls, p: QPoly) -> LaurentPoly:
        return cls(0, p)

    @classmethod
    def q_power(cls, n: int) -> LaurentPoly:
        return cls(n, QPoly(1))

    def is_zero(self) -> bool:
        return self.body.is_zero()

    def __bool__(self):
        return bool(self.body)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.shift == other.shift and self.body == other.body
        if isinstance(other, (int, Fraction, QPoly)):
            return self == LaurentPoly(0, QPoly(other) if not isinstance(other, QPoly) else other)
        return NotImplemented

    def __hash__(self):
        return hash((self.shift, self.body))

    def __neg__(self):
        return LaurentPoly(self.shift, -self.body)

    def __add__(self, other):
        other = _as_laurent(other)
        if other is None:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        s = min(self.shift, other.shift)
        return LaurentPoly(s, self.body.shift(self.shift - s)
                           + other.body.shift(other.shift - s))

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_laurent(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentPoly(self.shift, self.body * other)
        other = _as_laurent(other)
        if other is None:
            return NotImplemented
        return LaurentPoly(self.shift + other.shift, self.body * other.body)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial")
        return LaurentPoly(self.shift * n, self.body ** n)

    def __repr__(self):
        if self.is_zero():
            return "LaurentPoly('0')"
        if self.shift == 0:
            return f"LaurentPoly('{self.body}')"
        return f"LaurentPoly('q^{self.shift} * ({self.body})')"


def _as_laurent(value):
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, QPoly):
        return LaurentPoly(0, value)
    if isinstance(value, (int, Fraction)):
        return LaurentPoly(0, QPoly(value))
    return None


L_ZERO = LaurentPoly()
L_ONE = LaurentPoly(0, QPoly(1))


def laurent_poch(start: int, step: int, count: int) -> LaurentPoly:
    """(q^start; q^step)_count = prod_{i<count} (1 - q^(start+i*step)).

    Exponents may be negative or zero (a zero exponent annihilates).
    """
    out = L_ONE
    for i in range(count):
        e = start + i * step
        out = out * (L_ONE - LaurentPoly.q_power(e))
    return out


def laurent_poch_plus(start: int, step: int, count: int) -> LaurentPoly:
    """(-q^start; q^step)_count = prod_{i<count} (1 + q^(start+i*step))."""
    out = L_ONE
    for i in range(count):
        out = out * (L_ONE + LaurentPoly.q_power(start + i * step))
    return out


class XLaurent:
    """Polynomial in x with Laurent-polynomial coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, LaurentPoly) else _as_laurent(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> LaurentPoly:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return L_ZERO

    def __eq__(self, other):
        if isinstance(other, XLaurent):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, XLaurent):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return XLaurent(self.coeff(k) + other.coeff(k) for k in range(n))

    def __sub__(self, other):
        if not isinstance(other, XLaurent):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return XLaurent(self.coeff(k) - other.coeff(k) for k in range(n))

    def scale(self, c) -> XLaurent:
        return XLaurent(a * c for a in self.coeffs)

    def negate_x(self) -> XLaurent:
        return XLaurent(a if k % 2 == 0 else -a for k, a in enumerate(self.coeffs))

    def subs_scalar(self, v) -> LaurentPoly:
        """Evaluate at a scalar x = v (integer or Fraction)."""
        acc = L_ZERO
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def __repr__(self):
        inner = ", ".join(f"x^{k}: {c!r}" for k, c in enumerate(self.coeffs))
        return f"XLaurent({inner or '0'})"


def xpoch_expansions(count: int, first: int, step: int) -> list[list[LaurentPoly]]:
    """Expansions in x of prod_{i<j} (1 - x q^(first+i*step)) for j = 0..count.

    Entry j is the coefficient list of the j-factor product, grown one
    factor at a time.
    """
    out = [[L_ONE]]
    for j in range(count):
        g = LaurentPoly.q_power(first + j * step)
        prev = out[-1]
        nxt = [L_ZERO] * (j + 2)
        for i, ei in enumerate(prev):
            nxt[i] = nxt[i] + ei
            nxt[i + 1] = nxt[i + 1] - g * ei
        out.append(nxt)
    return out


def gb(n: int, k: int) -> LaurentPoly:
    """Gaussian binomial [n k] as a Laurent polynomial (base q)."""
    from .qpoly import gaussian_binomial
    return LaurentPoly(0, gaussian_binomial(n, k))


def gb_base(n: int, k: int, m: int) -> LaurentPoly:
    """Gaussian binomial [n k] in base q^m."""
    from .qpoly import gaussian_binomial
    return LaurentPoly(0, gaussian_binomial(n, k).inflate(m))
