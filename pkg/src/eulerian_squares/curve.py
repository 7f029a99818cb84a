"""Elliptic curves ``J^2 = K^3 + A K^2 + B K`` over the rationals.

Every curve in this package has this shape (a rational 2-torsion point at
the origin).  Points use exact affine coordinates; the point at infinity is
the module constant :data:`INFINITY`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt, lcm

import numpy as np

from .rational import format_rat, is_square, sqrt_exact

__all__ = ["Curve", "Point", "INFINITY", "SingularCurveError", "NotOnCurveError"]


class SingularCurveError(ValueError):
    pass


class NotOnCurveError(ValueError):
    pass


@dataclass(frozen=True)
class Point:
    """Affine point ``(K, J)``; ``Point()`` with no coordinates is infinity."""

    K: Fraction | None = None
    J: Fraction | None = None

    @property
    def is_infinity(self) -> bool:
        return self.K is None

    def __neg__(self) -> "Point":
        if self.is_infinity:
            return self
        return Point(self.K, -self.J)

    def __str__(self) -> str:
        if self.is_infinity:
            return "O"
        return f"{format_rat(self.K)},{format_rat(self.J)}"


INFINITY = Point()

# Moduli for the vectorised quadratic-residue pre-filter of integer_point_scan.
_SCAN_MODULI = (64, 63, 65, 11, 17, 19, 23)
_SCAN_TABLES = {}
for _m in _SCAN_MODULI:
    _t = np.zeros(_m, dtype=bool)
    _t[[(i * i) % _m for i in range(_m)]] = True
    _SCAN_TABLES[_m] = _t
_SCAN_CHUNK = 1 << 16


@dataclass(frozen=True)
class Curve:
    A: Fraction
    B: Fraction

    def __post_init__(self):
        object.__setattr__(self, "A", Fraction(self.A))
        object.__setattr__(self, "B", Fraction(self.B))
        if self.B == 0 or self.A * self.A - 4 * self.B == 0:
            raise SingularCurveError(f"singular curve A={self.A}, B={self.B}")

    def __str__(self) -> str:
        return f"J^2 = K^3 + ({format_rat(self.A)})K^2 + ({format_rat(self.B)})K"

    def rhs(self, K) -> Fraction:
        K = Fraction(K)
        return ((K + self.A) * K + self.B) * K

    def point(self, K, J) -> Point:
        """Build an affine point, checking that it lies on the curve."""
        p = Point(Fraction(K), Fraction(J))
        if not self.on_curve(p):
            raise NotOnCurveError(f"({p}) is not on {self}")
        return p

    def on_curve(self, p: Point) -> bool:
        if p.is_infinity:
            return True
        return p.J * p.J == self.rhs(p.K)

    def add(self, p: Point, q: Point) -> Point:
        if p.is_infinity:
            return q
        if q.is_infinity:
            return p
        if p.K == q.K:
            if p.J != q.J or p.J == 0:
                return INFINITY
            slope = (3 * p.K * p.K + 2 * self.A * p.K + self.B) / (2 * p.J)
        else:
            slope = (q.J - p.J) / (q.K - p.K)
        K3 = slope * slope - self.A - p.K - q.K
        J3 = slope * (p.K - K3) - p.J
        return Point(K3, J3)

    def double(self, p: Point) -> Point:
        return self.add(p, p)

    def scalar_mul(self, k: int, p: Point) -> Point:
        if k < 0:
            return -self.scalar_mul(-k, p)
        acc, base = INFINITY, p
        while k:
            if k & 1:
                acc = self.add(acc, base)
            base = self.add(base, base)
            k >>= 1
        return acc

    def two_torsion(self) -> list[Point]:
        """Affine points with ``J = 0``, ordered by ascending ``K``."""
        ks = {Fraction(0)}
        disc = self.A * self.A - 4 * self.B
        if is_square(disc):
            s = sqrt_exact(disc)
            ks.update({(-self.A + s) / 2, (-self.A - s) / 2})
        return [Point(k, Fraction(0)) for k in sorted(ks)]

    @property
    def is_integral(self) -> bool:
        return self.A.denominator == 1 and self.B.denominator == 1

    def integral_model(self, scale: int | None = None) -> tuple["Curve", int]:
        """Return ``(curve', d)`` with ``A' = A d^2``, ``B' = B d^4`` integral.

        Points correspond via ``K' = d^2 K``, ``J' = d^3 J``.  Without an
        explicit ``scale`` the lcm of the denominators is used, which is
        valid but not always the smallest such ``d``.
        """
        d = lcm(self.A.denominator, self.B.denominator) if scale is None else int(scale)
        model = Curve(self.A * d**2, self.B * d**4)
        if not model.is_integral:
            raise ValueError(f"scale {d} does not make {self} integral")
        return model, d

    def integer_point_scan(self, k_lo: int, k_hi: int) -> list[Point]:
        """All points with integer ``K`` in ``[k_lo, k_hi]``, taking ``J >= 0``."""
        if k_lo > k_hi:
            raise ValueError("integer_point_scan: empty K range")
        if not self.is_integral:
            return [
                Point(Fraction(k), sqrt_exact(v))
                for k in range(k_lo, k_hi + 1)
                if is_square(v := self.rhs(k))
            ]
        A, B = int(self.A), int(self.B)
        found = []
        for start in range(k_lo, k_hi + 1, _SCAN_CHUNK):
            stop = min(start + _SCAN_CHUNK - 1, k_hi)
            found.extend(_scan_chunk(A, B, start, stop))
        return found


def _scan_chunk(A: int, B: int, lo: int, hi: int) -> list[Point]:
    ks = np.arange(hi - lo + 1, dtype=np.int64)
    mask = np.ones(ks.shape, dtype=bool)
    for m, table in _SCAN_TABLES.items():
        km = (ks + (lo % m)) % m
        v = (((km + A % m) * km % m + B % m) * km) % m
        mask &= table[v]
    out = []
    for off in np.flatnonzero(mask).tolist():
        K = lo + off
        v = ((K + A) * K + B) * K
        if v < 0:
            continue
        r = isqrt(v)
        if r * r == v:
            out.append(Point(Fraction(K), Fraction(r)))
    return out
