"""
An infinite family of triples containing 4
==========================================

Fix x = 2.  For m = p/q the curve ``curve_for_m(p, q)`` turns every rational
point into a third member z, giving a square Eulerian triple {4, y^2, z^2}.
"""

# %%
from eulerian_squares import curve_for_m, family, n_from_point, triple_from

curve = curve_for_m(1, 2)
print(curve)
print("2-torsion:", [str(t) for t in curve.two_torsion()])

# %%
P = curve.point(245, 2100)
print("n =", n_from_point(1, 2, P), " roots =", [str(r) for r in triple_from(1, 2, P)])

P2 = curve.double(P)
print("2P =", P2)
print("n =", n_from_point(1, 2, P2), " roots =", [str(r) for r in triple_from(1, 2, P2)])

# %%
# Multiples of P keep producing triples; heights grow quickly.
for k, roots in family(1, 2, P, 5):
    z = roots[2]
    print(k, len(str(z.numerator)), "digit numerator of z")

# %%
# Other values of m: scan each curve for small integer points.
for p, q in [(1, 1), (2, 3), (3, 4)]:
    c = curve_for_m(p, q)
    torsion = {t.K for t in c.two_torsion()}
    pts = [pt for pt in c.integer_point_scan(-5000, 5000) if pt.K not in torsion]
    if pts:
        print(f"m={p}/{q}:", [str(r) for r in triple_from(p, q, pts[0])])
