"""Solving the hyper-Catalan functional equation.

The series S[t_1..t_r] is pinned down by S = 1 + t_1 S^2 + ... + t_r S^{r+1}.
This walk-through solves it by fixed-point iteration, reads off classical
sequences from its columns, and cross-checks the closed form for a single
coefficient against the solver.
"""

from geodenums import (
    coeff,
    functional_residual,
    hyper_catalan,
    iter_exponents,
    solve_S,
)

print("=" * 72)
print("One variable: S = 1 + t S^2 gives the Catalan numbers")
print("=" * 72)
s1 = solve_S(1, 9)
print("coefficients of t^n:", [coeff(s1, (n,)) for n in range(10)])

print()
print("=" * 72)
print("Single higher slot: only t_2 (S = 1 + t_2 S^3) or only t_3")
print("=" * 72)
s3 = solve_S(3, 6)
print("t_2 column:", [coeff(s3, (0, n, 0)) for n in range(7)])
print("t_3 column:", [coeff(s3, (0, 0, n)) for n in range(7)])
print("(the Fuss-Catalan families C(3n,n)/(2n+1) and C(4n,n)/(3n+1))")

print()
print("=" * 72)
print("Two variables, by homogeneous layer")
print("=" * 72)
s2 = solve_S(2, 4)
for d in range(5):
    layer = [(m, coeff(s2, m)) for m in iter_exponents(2, d)]
    rendered = " + ".join(f"{c}*t1^{m1}*t2^{m2}" for (m1, m2), c in layer)
    print(f"degree {d}: {rendered}")

print()
print("The degree-3 layer factors as (t1 + t2)(5 t1^2 + 16 t1 t2 + 12 t2^2);")
print("that exact divisibility by t1 + ... + tr is the next demo's subject.")

print()
print("=" * 72)
print("Closed form vs solver")
print("=" * 72)
print(f"{'m':>12} {'closed':>8} {'solver':>8}")
for m in [(2, 0), (1, 1), (0, 2), (3, 1), (2, 2)]:
    print(f"{str(m):>12} {hyper_catalan(m):>8} {coeff(s2, m):>8}")

residual = functional_residual(s2)
print()
print("functional equation residual 1 - S + sum_k t_k S^(k+1):",
      "zero series" if residual.is_zero() else f"NONZERO {residual.terms}")
