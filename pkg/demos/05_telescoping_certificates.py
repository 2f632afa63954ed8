"""Telescoping proofs of the alternating binomial sums, checked exactly.

Each vanishing sum sum_k F(n,k) = 0 comes with a companion H such that
F(n,k) = H(n,k+1) - H(n,k); summing over k then collapses to boundary terms.
The checkers verify the companion relation pointwise over exact rationals,
so there is nothing numerical anywhere: a single wrong sign fails loudly.
"""

from fractions import Fraction

from geodenums import (
    F1,
    H1,
    certificate_R,
    certificate_companion,
    certificate_summand,
    check_certificate_R,
    check_wz1,
    check_wz2,
)

print("=" * 72)
print("The two-variable pair at n = 4")
print("=" * 72)
n = 4
print(f"{'k':>3} {'F(4,k)':>10} {'H(4,k)':>10} {'H(4,k+1)-H(4,k)':>16}")
for k in range(n + 1):
    print(f"{k:>3} {str(F1(n, k)):>10} {str(H1(n, k)):>10} {str(H1(n, k + 1) - H1(n, k)):>16}")
print("sum of F(4,k):", sum(F1(n, k) for k in range(n + 1)))

report = check_wz1(50)
print(f"\ncheck_wz1(50): {report.passed}/{report.total} passed")

report = check_wz2(4, 30)
print(f"check_wz2(a=4, 30): {report.passed}/{report.total} passed")

print()
print("=" * 72)
print("The certificate for the quotient-layer sum")
print("=" * 72)
print("summands F^(n,m) sum to 1 over 0 <= m <= n-1; R(n,m) builds the companion.")
n = 3
print(f"n={n}: summands {[str(certificate_summand(n, m)) for m in range(n)]}, "
      f"sum = {sum(certificate_summand(n, m) for m in range(n))}")
print(f"R(2,1) = {certificate_R(2, 1)}")
print()
print("The companion G^ = R * F^ has a removable pole at m = n:")
print("  R(2,2) would divide by zero, F^(2,2) = 0, but the cancelled product")
print(f"  extends to G^(2,2) = {certificate_companion(2, 2)} (not zero!), and only that")
print("  extension lets the relation telescope at m = n - 1.")

report = check_certificate_R(40)
orientation = next(c for c in report.cases if c.id == "orientation")
print(f"\ncheck_certificate_R(40): {report.passed}/{report.total} passed")
print(f"validated orientation: {orientation.actual}")

print()
print("=" * 72)
print("Negative control: a corrupted companion must fail")
print("=" * 72)
bad = check_wz1(3, h=lambda n, k: -H1(n, k))
failure = bad.first_failure()
print(f"sign-flipped H: {bad.passed}/{bad.total} passed; "
      f"first failure at {failure.params}: {failure.actual}")

bad = check_certificate_R(3, companion=lambda n, m: Fraction(0))
print(f"zeroed certificate companion: {bad.passed}/{bad.total} passed")
