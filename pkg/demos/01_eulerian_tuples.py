"""
Eulerian tuples of squares
==========================

A set of numbers is Eulerian when ``a*b + a + b`` is a square for every
pair.  Here all members are squares themselves, so tuples are written by
their square roots.
"""

# %%
from fractions import Fraction as F

from eulerian_squares import check_tuple, pair_val, product_plus_third

# The pair value is a shifted product: ab + a + b = (a+1)(b+1) - 1
a, b = F(25, 9), F(64, 9)
print(pair_val(a, b), (a + 1) * (b + 1) - 1)

# %%
# Diophantus' squares 25/9, 64/9, 196/9 have roots 5/3, 8/3, 14/3.
report = check_tuple([F(5, 3), F(8, 3), F(14, 3)])
for p in report.pairs:
    print(p.i, p.j, p.value, "=", f"({p.root})^2")
print(report.status.value)

# They also satisfy the stronger "product of two plus the third" condition.
print("product plus third:", product_plus_third([F(5, 3), F(8, 3), F(14, 3)]))

# %%
# A quadruple of squares with all six pair values square.
report = check_tuple([18, F(3, 5), F(8, 5), F(224, 107)])
print(report.status.value, [str(p.root) for p in report.pairs])

# %%
# Degenerate inputs (zeros, repeats) get their own status.
print(check_tuple([1, 1]).status.value, check_tuple([1, 3]).status.value)
