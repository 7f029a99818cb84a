"""Square Eulerian triples containing 4, one elliptic curve per ``m = p/q``.

With ``x = 2`` fixed, ``y = param_t(2, m)`` and each rational point on
:func:`curve_for_m` gives ``n`` and hence ``z = param_t(2, n)``.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from .curve import Curve, NotOnCurveError, Point
from .eulerian import PoleError, is_degenerate, is_eulerian, param_t

__all__ = [
    "ParameterError",
    "TwoTorsionError",
    "DegenerateTripleError",
    "curve_for_m",
    "n_from_point",
    "triple_from",
    "family",
]


class ParameterError(ValueError):
    pass


class TwoTorsionError(ValueError):
    pass


class DegenerateTripleError(ValueError):
    pass


def _check_pq(p: int, q: int) -> None:
    if q < 1 or p == 0 or gcd(p, q) != 1:
        raise ParameterError(f"need coprime p != 0, q >= 1; got p={p}, q={q}")


def curve_for_m(p: int, q: int) -> Curve:
    _check_pq(p, q)
    p2, q2 = p * p, q * q
    A = -2 * (p2**2 - 4 * p2 * q2 + 25 * q2**2)
    B = p2**4 - 8 * p2**3 * q2 - 34 * p2**2 * q2**2 - 200 * p2 * q2**3 + 625 * q2**4
    return Curve(A, B)


def n_from_point(p: int, q: int, pt: Point) -> Fraction:
    """``n = J / (2 p q K)``."""
    _check_pq(p, q)
    if pt.is_infinity or pt.K == 0:
        raise TwoTorsionError("point has K = 0 (or is infinity); gives z = 0")
    return pt.J / (2 * p * q * pt.K)


def triple_from(p: int, q: int, pt: Point) -> tuple[Fraction, Fraction, Fraction]:
    """Roots ``(2, y, z)`` built from ``m = p/q`` and a curve point."""
    n = n_from_point(p, q, pt)
    try:
        roots = (Fraction(2), param_t(2, Fraction(p, q)), param_t(2, n))
    except PoleError as exc:
        raise DegenerateTripleError(str(exc)) from exc
    if is_degenerate(roots):
        raise DegenerateTripleError(f"degenerate triple {roots}")
    return roots


def family(p: int, q: int, gen: Point, kmax: int) -> list[tuple[int, tuple]]:
    """Verified triples from ``k * gen`` for ``k = 1..kmax`` as ``(k, roots)`` pairs.

    Multiples landing on 2-torsion or giving degenerate triples are skipped.
    """
    curve = curve_for_m(p, q)
    if not curve.on_curve(gen):
        raise NotOnCurveError(f"generator {gen} is not on {curve}")
    out = []
    pt = gen
    for k in range(1, kmax + 1):
        if k > 1:
            pt = curve.add(pt, gen)
        if pt.is_infinity:
            continue
        try:
            roots = triple_from(p, q, pt)
        except (TwoTorsionError, DegenerateTripleError):
            continue
        ok, _ = is_eulerian(roots)
        if not ok:
            raise AssertionError(f"k={k}: constructed triple {roots} is not Eulerian")
        out.append((k, roots))
    return out
