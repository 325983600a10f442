"""
Exact big Ramsey degrees for the closed-form families
=====================================================

T(n, C) is the least t such that every finite coloring of the
n-element subchains of C has a copy of C realizing at most t colors.
Four families have closed forms, and each number is the size of a type
palette from the matching calculus.
"""

from ordramsey import (
    exact_integers,
    exact_omega,
    exact_omega_plus_m,
    exact_omega_times_m,
    exact_signed,
)

# Plain omega is the classical infinite Ramsey theorem: one color.
print("T(n, w) =", [exact_omega(n) for n in range(6)])

# A finite tail of size m contributes its subsets of size <= n; the
# table saturates at 2^m once n passes m.
print("T(n, w + 3):", [exact_omega_plus_m(n, 3) for n in range(6)])

# m copies of omega give the strict-type count m^n.
for m in (2, 3, 4):
    print(f"T(n, w*{m}):", [exact_omega_times_m(n, m) for n in range(5)])

# The integers are the two-part signed sum, so 2^n; sign vectors only
# matter through their length.
print("T(n, Z):  ", [exact_integers(n) for n in range(5)])
print("T(n, 3 signed parts):", [exact_signed(n, "+-+") for n in range(5)])
print("signs irrelevant:", exact_signed(3, "---") == exact_signed(3, "+++"))
