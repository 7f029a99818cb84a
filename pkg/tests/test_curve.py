from fractions import Fraction
from math import isqrt

import pytest
from hypothesis import given
from hypothesis import strategies as st

from eulerian_squares.curve import INFINITY, Curve, NotOnCurveError, Point, SingularCurveError

C2 = Curve(-770, 146625)
C3 = Curve(20478, 99801585)
P = Point(Fraction(245), Fraction(2100))
P2 = Point(Fraction(187489, 441), Fraction(651232, 9261))


def brute_scan(A, B, lo, hi):
    out = []
    for k in range(lo, hi + 1):
        v = k**3 + A * k * k + B * k
        if v >= 0 and isqrt(v) ** 2 == v:
            out.append((k, isqrt(v)))
    return out


def test_singular_curves_rejected():
    with pytest.raises(SingularCurveError):
        Curve(1, 0)
    with pytest.raises(SingularCurveError):
        Curve(4, 4)


def test_on_curve():
    assert C2.on_curve(P)
    assert C2.on_curve(INFINITY)
    assert Curve(3, 1).on_curve(INFINITY)
    assert C2.on_curve(Point(Fraction(0), Fraction(0)))
    assert not C2.on_curve(Point(Fraction(245), Fraction(2101)))


def test_point_constructor_checks():
    assert C2.point(245, 2100) == P
    with pytest.raises(NotOnCurveError):
        C2.point(245, 2101)


def test_identity_and_inverse():
    assert C2.add(P, INFINITY) == P
    assert C2.add(INFINITY, P) == P
    assert C2.add(P, -P) is INFINITY


def test_doubling_published():
    assert C2.double(P) == P2
    assert C2.scalar_mul(2, P) == P2


def test_scalar_mul_basics():
    assert C2.scalar_mul(0, P) is INFINITY
    assert C2.scalar_mul(1, P) == P
    assert C2.scalar_mul(-3, P) == -C2.scalar_mul(3, P)


@pytest.mark.parametrize(
    "curve, ks",
    [
        (C2, {0, 345, 425}),
        (C3, {0, -7995, -12483}),
        (Curve(0, 1), {0}),
    ],
)
def test_two_torsion(curve, ks):
    # oracle: roots of K^2 + A K + B by the quadratic formula
    A, B = curve.A, curve.B
    disc = A * A - 4 * B
    expected = {Fraction(0)}
    if disc >= 0 and isqrt(disc.numerator) ** 2 == disc.numerator and disc.denominator == 1:
        s = isqrt(disc.numerator)
        expected |= {(-A + s) / 2, (-A - s) / 2}
    assert expected == ks
    pts = curve.two_torsion()
    assert {p.K for p in pts} == ks
    for p in pts:
        assert curve.on_curve(p)
        assert curve.double(p) is INFINITY


def test_two_torsion_discriminants():
    assert (-770) ** 2 - 4 * 146625 == 80**2
    assert 20478**2 - 4 * 99801585 == 4488**2


def test_integer_point_scan_examples():
    assert C2.integer_point_scan(245, 245) == [P]
    assert Curve(7, 3).integer_point_scan(0, 0) == [Point(Fraction(0), Fraction(0))]
    assert C3.integer_point_scan(-9984, -9984) == [Point(Fraction(-9984), Fraction(222768))]


def test_integer_point_scan_empty_range():
    with pytest.raises(ValueError):
        C2.integer_point_scan(1, 0)


@pytest.mark.parametrize("A, B", [(-770, 146625), (20478, 99801585), (-44, 384), (5, -6), (-212300, 11003760000)])
def test_integer_point_scan_matches_brute_force(A, B):
    got = [(int(p.K), int(p.J)) for p in Curve(A, B).integer_point_scan(-3000, 3000)]
    assert got == brute_scan(A, B, -3000, 3000)


def test_integer_point_scan_chunk_boundaries():
    # windows that cross the internal chunk size
    c = Curve(-770, 146625)
    lo, hi = -70000, 140000
    got = [(int(p.K), int(p.J)) for p in c.integer_point_scan(lo, hi)]
    assert got == brute_scan(-770, 146625, lo, hi)


def test_integer_point_scan_rational_curve():
    c = Curve(Fraction(13941, 25), Fraction(1288872, 25))
    for p in c.integer_point_scan(-50, 50):
        assert c.on_curve(p) and p.J >= 0


def test_integral_model():
    c = Curve(Fraction(13941, 25), Fraction(1288872, 25))
    model, d = c.integral_model(scale=5)
    assert d == 5 and model == Curve(13941, 32221800)
    model2, d2 = c.integral_model()
    assert model2.is_integral and d2 == 25
    with pytest.raises(ValueError):
        c.integral_model(scale=2)


multiples = st.integers(min_value=-4, max_value=4)


@given(multiples, multiples)
def test_group_law_closure_and_commutativity(a, b):
    p, q = C2.scalar_mul(a, P), C2.scalar_mul(b, P)
    s = C2.add(p, q)
    assert C2.on_curve(s)
    assert s == C2.add(q, p)
    assert s == C2.scalar_mul(a + b, P)


@given(multiples, multiples, st.integers(0, 3))
def test_group_law_associativity(a, b, t):
    torsion = C2.two_torsion()[t] if t < 3 else INFINITY
    p, q, r = C2.scalar_mul(a, P), C2.scalar_mul(b, P), torsion
    assert C2.add(C2.add(p, q), r) == C2.add(p, C2.add(q, r))


def test_group_law_two_generators():
    g1, g2 = C3.point(-9984, -222768), C3.point(-8379, -114912)
    pts = [g1, g2, C3.add(g1, g2), C3.double(g1), C3.two_torsion()[1]]
    for p in pts:
        for q in pts:
            assert C3.add(p, q) == C3.add(q, p)
            for r in pts[:3]:
                assert C3.add(C3.add(p, q), r) == C3.add(p, C3.add(q, r))


def test_generator_multiples_distinct():
    seen = [C2.scalar_mul(k, P) for k in range(1, 8)]
    assert all(not p.is_infinity for p in seen)
    assert len(set(seen)) == 7
