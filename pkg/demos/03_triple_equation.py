"""
Fermat's triple equation
========================

Given squares s1, s2, s3 find x with (s_i + 1) x + s_i square for all i.
The first condition is parameterised, the second becomes a conic and the
third a quartic with square leading coefficient, solved by completing the
square.
"""

# %%
from fractions import Fraction as F

from eulerian_squares.triple_equation import (
    DIOPHANTUS,
    FERMAT,
    TripleSystem,
    residual_quadratics,
    solve,
    verify_known_curve_points,
)

print([q.coeffs for q in residual_quadratics(DIOPHANTUS)])

sol = solve(DIOPHANTUS)
print("quartic:", sol.quartic.coeffs)
print("alpha, beta, gamma:", sol.descent.alpha, sol.descent.beta, sol.descent.gamma)
print("g* =", sol.g, " f* =", sol.f)
print("x  =", sol.x)

# %%
# Fermat's own triple gives a 53-digit solution.
sol = solve(FERMAT)
print(sol.x)
print(len(str(-sol.x.numerator)), len(str(sol.x.denominator)))

# %%
# Any square triple works, e.g. {4, 64/361, 441}.
sys_ = TripleSystem(4, F(64, 361), 441)
x = solve(sys_).x
print(x, [str(v) for v in sys_.residuals(x)])

# %%
# The curve attached to the quartic has smaller solutions.
for check in verify_known_curve_points():
    print("ok " if check.passed else "BAD", check.name, check.detail)
