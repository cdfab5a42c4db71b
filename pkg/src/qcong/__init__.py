"""qcong: exact verification of q-congruences in Q[q]/([p]^r).

Truncated basic hypergeometric sums, their congruences modulo powers of
the cyclotomic polynomial [p] = 1 + q + ... + q^(p-1), the exact
q-identities behind them, their classical q -> 1 specializations modulo
p^2, and the integer exponent aligning the plain and transformed sums.
All arithmetic is exact rational; every comparison is of canonical
forms with zero tolerance.
"""

from .qpoly import QPoly, ext_gcd, gaussian_binomial, monomial, q_integer, q_pochhammer
from .ring import NotAPowerOfQ, NotAUnit, RingCtx, RingElem, is_prime
from .xseries import (XPoly, congruent, legendre_sum, sum_plain,
                      sum_qbinom_squared, sum_tauraso, sum_transformed)
from .laurent import LaurentPoly, XLaurent, laurent_poch, laurent_poch_plus
from .records import ERROR, FAIL, INAPPLICABLE, PASS, CheckRecord
from .checks import least_nonneg_residue, legendre_symbol
from .exponents import (FRecord, KNOWN_EXPONENTS, emit_f_table, find_f,
                        find_f_brute)

__version__ = "0.1.0"

__all__ = [
    "QPoly", "ext_gcd", "gaussian_binomial", "monomial", "q_integer",
    "q_pochhammer",
    "NotAPowerOfQ", "NotAUnit", "RingCtx", "RingElem", "is_prime",
    "XPoly", "congruent", "legendre_sum", "sum_plain", "sum_qbinom_squared",
    "sum_tauraso", "sum_transformed",
    "LaurentPoly", "XLaurent", "laurent_poch", "laurent_poch_plus",
    "ERROR", "FAIL", "INAPPLICABLE", "PASS", "CheckRecord",
    "least_nonneg_residue", "legendre_symbol",
    "FRecord", "KNOWN_EXPONENTS", "emit_f_table", "find_f", "find_f_brute",
    "__version__",
]
