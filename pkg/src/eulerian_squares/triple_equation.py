"""Fermat's triple equation: extend a square Eulerian triple by a fourth number.

Given squares ``s1, s2, s3`` we look for ``x`` with ``(s_i + 1) x + s_i`` a
square for each ``i``.  The first condition is parameterised by a slope
``f``, the second becomes a conic in ``f`` with a known point, and the third
becomes a quartic in the conic's slope ``g`` with square leading
coefficient, which is then solved by completing the square.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .curve import Curve, Point
from .quartic import (
    Descent,
    Quadratic,
    Quartic,
    complete_square_descend,
    conic_param,
    square_normalize,
)
from .rational import format_rat, is_square, sqrt_exact

__all__ = [
    "TripleSystem",
    "Solution",
    "TrivialSolutionError",
    "CheckResult",
    "x_from_f",
    "residual_quadratics",
    "solve",
    "verify_known_curve_points",
    "DIOPHANTUS",
    "FERMAT",
    "DIOPHANTUS_CURVE",
    "FERMAT_CURVE",
]


class TrivialSolutionError(ValueError):
    pass


@dataclass(frozen=True)
class TripleSystem:
    """Squares ``s1, s2, s3``; order matters (see :func:`solve`)."""

    s1: Fraction
    s2: Fraction
    s3: Fraction

    def __post_init__(self):
        vals = [Fraction(v) for v in (self.s1, self.s2, self.s3)]
        for name, v in zip(("s1", "s2", "s3"), vals):
            if not is_square(v) or v == 0:
                raise ValueError(f"{name}={format_rat(v)} is not a nonzero rational square")
            object.__setattr__(self, name, v)
        if len(set(vals)) != 3:
            raise ValueError("squares must be distinct")

    @classmethod
    def from_roots(cls, a1, a2, a3) -> "TripleSystem":
        return cls(Fraction(a1) ** 2, Fraction(a2) ** 2, Fraction(a3) ** 2)

    @property
    def squares(self) -> tuple:
        return (self.s1, self.s2, self.s3)

    @property
    def a1(self) -> Fraction:
        return sqrt_exact(self.s1)

    @property
    def f0(self) -> Fraction:
        """Slope value at which :func:`x_from_f` returns 0."""
        return (self.s1 + 1) / (2 * self.a1)

    def residuals(self, x) -> tuple:
        x = Fraction(x)
        return tuple((s + 1) * x + s for s in self.squares)


def x_from_f(sys: TripleSystem, f) -> Fraction:
    """Nonzero root of ``(s1+1) x + s1 = (a1 + f x)^2``."""
    f = Fraction(f)
    if f == 0:
        raise ZeroDivisionError("x_from_f: f = 0")
    return ((sys.s1 + 1) - 2 * sys.a1 * f) / (f * f)


def _residual_numerator(sys: TripleSystem, s: Fraction) -> tuple:
    # f^2 * ((s+1) x(f) + s)
    return (s, -2 * sys.a1 * (s + 1), (sys.s1 + 1) * (s + 1))


def residual_quadratics(sys: TripleSystem) -> tuple[Quadratic, Quadratic]:
    """Quadratics in ``f`` that must be squares for the 2nd and 3rd conditions."""
    return tuple(
        Quadratic(*square_normalize(_residual_numerator(sys, s))) for s in (sys.s2, sys.s3)
    )


def _pmul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _padd(*ps):
    n = max(len(p) for p in ps)
    out = [Fraction(0)] * n
    for p in ps:
        for i, c in enumerate(p, start=n - len(p)):
            out[i] += c
    return out


def _pscale(c, p):
    return [c * v for v in p]


@dataclass(frozen=True)
class Solution:
    system: TripleSystem
    conic: Quadratic
    second: Quadratic
    f0: Fraction
    e0: Fraction
    quartic: Quartic
    descent: Descent
    g: Fraction
    f: Fraction
    x: Fraction
    roots: tuple = field(default=())

    def to_json(self) -> dict:
        return {
            "squares": [format_rat(s) for s in self.system.squares],
            "x": format_rat(self.x),
            "numerator_digits": len(str(abs(self.x.numerator))),
            "denominator_digits": len(str(self.x.denominator)),
            "g": format_rat(self.g),
            "f": format_rat(self.f),
            "quartic": [format_rat(c) for c in self.quartic.coeffs],
            "alpha": format_rat(self.descent.alpha),
            "beta": format_rat(self.descent.beta),
            "gamma": format_rat(self.descent.gamma),
            "roots": [format_rat(r) for r in self.roots],
        }


def quartic_along_conic(conic: Quadratic, f0, e0, second: Quadratic) -> Quartic:
    """``second(f(g)) * (g^2 - q2)^2`` with ``f(g)`` from :func:`conic_param`."""
    f0, e0 = Fraction(f0), Fraction(e0)
    num = [f0, -2 * e0, conic.q2 * f0 + conic.q1]
    den = [Fraction(1), Fraction(0), -conic.q2]
    r2, r1, r0 = second.coeffs
    coeffs = _padd(
        _pscale(r2, _pmul(num, num)),
        _pscale(r1, _pmul(num, den)),
        _pscale(r0, _pmul(den, den)),
    )
    return Quartic(*square_normalize(coeffs))


def solve(sys: TripleSystem) -> Solution:
    """Solve the triple equation by conic parameterisation and square completion.

    ``s1`` is parameterised first, ``s2`` gives the conic with anchor at
    ``f0`` and ``s3`` gives the quartic.  All roots are taken positive.
    The returned ``x`` has been checked against all three conditions.
    """
    conic, second = residual_quadratics(sys)
    f0 = sys.f0
    e0 = sqrt_exact(conic(f0))
    quartic = quartic_along_conic(conic, f0, e0, second)
    if not is_square(quartic.a4):
        raise AssertionError(f"leading coefficient {quartic.a4} of descent quartic is not a square")
    descent = complete_square_descend(quartic)
    f = conic_param(conic, f0, e0, descent.root)
    x = x_from_f(sys, f)
    if x == 0:
        raise TrivialSolutionError("descent returned the trivial solution x = 0")
    residuals = sys.residuals(x)
    if not all(is_square(v) for v in residuals):
        raise AssertionError(f"solve produced x={format_rat(x)} failing verification")
    roots = tuple(sqrt_exact(v) for v in residuals)
    return Solution(sys, conic, second, f0, e0, quartic, descent, descent.root, f, x, roots)


DIOPHANTUS = TripleSystem(Fraction(25, 9), Fraction(64, 9), Fraction(196, 9))
FERMAT = TripleSystem(Fraction(4), Fraction(3504384, 203401), Fraction(2019241, 203401))
DIOPHANTUS_CURVE = Curve(20478, 99801585)
FERMAT_CURVE = Curve(10450883424805, 26734915668323655104674200)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def verify_known_curve_points() -> list[CheckResult]:
    """Re-check the published points on the two descent curves.

    Covers the two generators of ``DIOPHANTUS_CURVE``, the chain
    ``g = -543/8 -> f = 269/147 -> x = -50176/72361`` and the point with
    ``u = -9390695817653070336/2019241`` on ``FERMAT_CURVE``.
    """
    out = []
    c = DIOPHANTUS_CURVE
    for K, J in ((-9984, -222768), (-8379, -114912)):
        ok = c.on_curve(Point(Fraction(K), Fraction(J)))
        out.append(CheckResult(f"on_curve({K},{J})", ok, str(c)))

    conic, _ = residual_quadratics(DIOPHANTUS)
    f0 = DIOPHANTUS.f0
    f = conic_param(conic, f0, sqrt_exact(conic(f0)), Fraction(-543, 8))
    out.append(CheckResult("g=-543/8 -> f", f == Fraction(269, 147), f"f={format_rat(f)}"))
    x = x_from_f(DIOPHANTUS, f)
    out.append(CheckResult("f -> x", x == Fraction(-50176, 72361), f"x={format_rat(x)}"))
    ok = all(is_square(v) for v in DIOPHANTUS.residuals(x))
    out.append(CheckResult("x solves system", ok, f"x={format_rat(x)}"))

    u = Fraction(-9390695817653070336, 2019241)
    rhs = FERMAT_CURVE.rhs(u)
    ok = is_square(rhs)
    detail = f"v={format_rat(sqrt_exact(rhs))}" if ok else f"rhs={format_rat(rhs)}"
    out.append(CheckResult("Fermat-case u on curve", ok, detail))
    return out
