"""The general (m, r) congruence family modulo [p].

For any odd prime p not dividing m, the plain sum with terms
(q^r;q^m)_k (q^(m-r);q^m)_k / (q^m;q^m)_k^2 is congruent mod [p] to a
signed power of q times its (x;q^m)_k-transformed partner; the sign and
exponent come from the least nonnegative residue t = <-r/m> mod p.
The alternating-denominator variant has a clean reflection symmetry
P(x) = (-1)^t P(-x).  This script sweeps a small rectangle and prints
the verdicts (SKIP marks hypothesis failures such as p | m).
"""

from qcong.checks import (check_reflection, check_transform_mod_p,
                          check_truncated_expansion, least_nonneg_residue)

MARK = {"pass": "pass", "fail": "FAIL", "inapplicable": "SKIP",
        "error": "ERR!"}

print("p  m  r   t   transform  truncation  reflection")
for p in (5, 7):
    for m in (2, 3, 4, 5):
        for r in (1, 2):
            a = check_transform_mod_p(p, m, r)
            b = check_truncated_expansion(p, m, r)
            c = check_reflection(p, m, r)
            t = "-" if m % p == 0 else least_nonneg_residue(-r, m, p)
            print(f"{p}  {m}  {r}   {t:>2}   {MARK[a.status]:<10}"
                  f" {MARK[b.status]:<11} {MARK[c.status]}")

print("\nthe three named specializations (m = 3, 4, 6 with r = 1) and")
print("their parity-conditioned vanishing are bundled checks:")
from qcong.checks import check_reflection_values, check_rv_family
for p in (5, 7, 11, 13):
    print(f"p={p:>2}: family endpoints {check_rv_family(p).status},"
          f" reflection consequences {check_reflection_values(p).status}")
