"""Pair identities and verifiers for Eulerian tuples of squares.

A tuple is stored by the square roots ``t_1..t_m`` of its members, so the
tuple ``{4, 64/361, 441}`` is written ``(2, 8/19, 21)``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import Optional, Sequence

from .rational import format_rat, is_square, sqrt_exact

__all__ = [
    "PairReport",
    "Status",
    "TupleReport",
    "PoleError",
    "pair_val",
    "pair_reports",
    "is_eulerian",
    "check_tuple",
    "is_degenerate",
    "product_plus_third",
    "param_t",
]


class PoleError(ZeroDivisionError):
    pass


class Status(enum.Enum):
    EULERIAN = "eulerian"
    NOT_EULERIAN = "not-eulerian"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class PairReport:
    i: int
    j: int
    value: Fraction
    square: bool
    root: Optional[Fraction] = None

    def to_json(self) -> dict:
        return {
            "i": self.i,
            "j": self.j,
            "value": format_rat(self.value),
            "square": self.square,
            "root": None if self.root is None else format_rat(self.root),
        }


@dataclass(frozen=True)
class TupleReport:
    roots: tuple
    status: Status
    pairs: tuple

    @property
    def ok(self) -> bool:
        return self.status is Status.EULERIAN


def pair_val(a, b) -> Fraction:
    """``a*b + a + b``."""
    a, b = Fraction(a), Fraction(b)
    return a * b + a + b


def _report(i, j, value) -> PairReport:
    if is_square(value):
        return PairReport(i, j, value, True, sqrt_exact(value))
    return PairReport(i, j, value, False)


def pair_reports(roots: Sequence) -> list[PairReport]:
    sq = [Fraction(t) ** 2 for t in roots]
    return [_report(i, j, pair_val(sq[i], sq[j])) for i, j in combinations(range(len(sq)), 2)]


def is_eulerian(roots: Sequence) -> tuple[bool, list[PairReport]]:
    """Check every pair of ``{t_i^2}``; returns the verdict and all reports."""
    if len(roots) < 2:
        raise ValueError("an Eulerian tuple needs at least two members")
    reports = pair_reports(roots)
    return all(r.square for r in reports), reports


def is_degenerate(roots: Sequence) -> bool:
    """Zero members or repeated squares."""
    mags = [abs(Fraction(t)) for t in roots]
    return 0 in mags or len(set(mags)) != len(mags)


def check_tuple(roots: Sequence) -> TupleReport:
    """Like :func:`is_eulerian` but with a separate degenerate status."""
    roots = tuple(Fraction(t) for t in roots)
    ok, reports = is_eulerian(roots)
    if is_degenerate(roots):
        status = Status.DEGENERATE
    else:
        status = Status.EULERIAN if ok else Status.NOT_EULERIAN
    return TupleReport(roots, status, tuple(reports))


def product_plus_third(roots: Sequence) -> bool:
    """For a triple of squares, is ``s_i s_j + s_k`` square for all splits?"""
    if len(roots) != 3:
        raise ValueError("product_plus_third needs exactly three members")
    s = [Fraction(t) ** 2 for t in roots]
    return all(is_square(s[i] * s[j] + s[k]) for i, j, k in permutations(range(3)) if i < j)


def param_t(x, r) -> Fraction:
    """``2 x r / (x^2 + 1 - r^2)``.

    Every output ``t`` makes ``(x^2+1) t^2 + x^2`` a square, so ``{x^2, t^2}``
    satisfies the pair identity.
    """
    x, r = Fraction(x), Fraction(r)
    den = x * x + 1 - r * r
    if den == 0:
        raise PoleError(f"r^2 = x^2 + 1 at x={format_rat(x)}, r={format_rat(r)}")
    return 2 * x * r / den
