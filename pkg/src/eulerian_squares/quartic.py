"""Descent tools: conic parameterisation and completing the square on quartics."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, isqrt, lcm

from .rational import is_square, sqrt_exact

__all__ = [
    "Quartic",
    "Quadratic",
    "Descent",
    "DescentError",
    "DegenerateDescentError",
    "ConicError",
    "eval_quartic",
    "complete_square_descend",
    "conic_param",
    "square_normalize",
]


class DescentError(ValueError):
    pass


class DegenerateDescentError(DescentError):
    """The quartic minus its matched square has no linear term."""


class ConicError(ValueError):
    pass


def _fracs(values):
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class Quartic:
    a4: Fraction
    a3: Fraction
    a2: Fraction
    a1: Fraction
    a0: Fraction

    def __post_init__(self):
        for name, v in zip("a4 a3 a2 a1 a0".split(), _fracs(self.coeffs)):
            object.__setattr__(self, name, v)
        if self.a4 == 0:
            raise ValueError("quartic leading coefficient must be nonzero")

    @property
    def coeffs(self) -> tuple:
        return (self.a4, self.a3, self.a2, self.a1, self.a0)

    def __call__(self, t) -> Fraction:
        return eval_quartic(self, t)


@dataclass(frozen=True)
class Quadratic:
    q2: Fraction
    q1: Fraction
    q0: Fraction

    def __post_init__(self):
        for name, v in zip(("q2", "q1", "q0"), _fracs(self.coeffs)):
            object.__setattr__(self, name, v)
        if self.q2 == 0:
            raise ValueError("quadratic leading coefficient must be nonzero")

    @property
    def coeffs(self) -> tuple:
        return (self.q2, self.q1, self.q0)

    def __call__(self, t) -> Fraction:
        t = Fraction(t)
        return (self.q2 * t + self.q1) * t + self.q0


@dataclass(frozen=True)
class Descent:
    """Result of :func:`complete_square_descend`.

    ``Q(g) - (alpha g^2 + beta g + gamma)^2 == slope*g + const`` and
    ``root`` is the zero of that linear remainder.
    """

    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    slope: Fraction
    const: Fraction
    root: Fraction

    def square_root_at_root(self) -> Fraction:
        g = self.root
        return (self.alpha * g + self.beta) * g + self.gamma


def eval_quartic(Q: Quartic, t) -> Fraction:
    t = Fraction(t)
    acc = Fraction(0)
    for c in Q.coeffs:
        acc = acc * t + c
    return acc


def complete_square_descend(Q: Quartic) -> Descent:
    """Find ``g`` making ``Q(g)`` a square by matching a quadratic square.

    The leading coefficient must be a rational square; its positive root is
    used for ``alpha``.
    """
    if not is_square(Q.a4):
        raise DescentError(f"leading coefficient {Q.a4} is not a square")
    alpha = sqrt_exact(Q.a4)
    beta = Q.a3 / (2 * alpha)
    gamma = (Q.a2 - beta * beta) / (2 * alpha)
    slope = Q.a1 - 2 * beta * gamma
    const = Q.a0 - gamma * gamma
    if slope == 0:
        raise DegenerateDescentError("linear remainder vanishes; quartic is a square plus a constant")
    return Descent(alpha, beta, gamma, slope, const, -const / slope)


def conic_param(Q: Quadratic, f0, e0, g) -> Fraction:
    """Second intersection of ``e = e0 + g (f - f0)`` with ``e^2 = Q(f)``."""
    f0, e0, g = Fraction(f0), Fraction(e0), Fraction(g)
    if e0 * e0 != Q(f0):
        raise ConicError(f"anchor ({f0}, {e0}) is not on the conic")
    den = g * g - Q.q2
    if den == 0:
        raise ConicError(f"slope {g} is parallel to an asymptote")
    return (g * g * f0 + Q.q2 * f0 + Q.q1 - 2 * e0 * g) / den


def _square_part(n: int, trial_limit: int = 10_000) -> int:
    """Largest ``s`` with ``s*s | n`` found by trial division up to a bound."""
    n = abs(n)
    s = 1
    p = 2
    while p <= trial_limit and p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
            s *= p
        while n % p == 0:
            n //= p
        p += 1 if p == 2 else 2
    r = isqrt(n)
    if r > 1 and r * r == n:
        s *= r
    return s


def square_normalize(coeffs) -> tuple[Fraction, ...]:
    """Rescale polynomial coefficients by a rational square to small integers.

    Denominators are cleared by a square and square factors of the content
    are removed, so the zero set of ``poly = square`` is unchanged.
    """
    coeffs = _fracs(coeffs)
    d = reduce(lcm, (c.denominator for c in coeffs), 1)
    ints = [c * d * d for c in coeffs]
    content = reduce(gcd, (int(c) for c in ints), 0)
    s = _square_part(content) if content else 1
    return tuple(c / (s * s) for c in ints)
