"""Exact rational scalars, perfect-square tests and exact square roots.

Rationals are :class:`fractions.Fraction` values, which are always kept in
lowest terms with a positive denominator.  Everything here is exact; no
floating point is used.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import isqrt

Rat = Fraction

__all__ = [
    "Rat",
    "NotASquareError",
    "normalize",
    "isqrt_floor",
    "is_square_int",
    "is_square",
    "sqrt_exact",
    "parse_rat",
    "format_rat",
]


class NotASquareError(ValueError):
    """Raised by :func:`sqrt_exact` when its argument has no rational root."""

    def __init__(self, value):
        self.value = Fraction(value)
        super().__init__(f"{format_rat(self.value)} is not the square of a rational")


def _residues(m: int) -> frozenset[int]:
    return frozenset(i * i % m for i in range(m))


# Quadratic residues used as a pre-filter before the exact isqrt test.
# Product 64*63*65*11 rejects roughly 99% of non-squares cheaply.
_QR = {m: _residues(m) for m in (64, 63, 65, 11)}


def normalize(n: int, d: int) -> Fraction:
    """Return the canonical rational ``n/d``.

    >>> normalize(-3, -6)
    Fraction(1, 2)
    """
    if d == 0:
        raise ZeroDivisionError("normalize: zero denominator")
    return Fraction(int(n), int(d))


def isqrt_floor(n: int) -> int:
    """Largest integer ``r`` with ``r*r <= n``."""
    if n < 0:
        raise ValueError(f"isqrt_floor of negative integer {n}")
    return isqrt(n)


def is_square_int(n: int) -> bool:
    if n < 0:
        return False
    for m, qr in _QR.items():
        if n % m not in qr:
            return False
    r = isqrt(n)
    return r * r == n


def is_square(q) -> bool:
    """True iff ``q`` is the square of a rational number."""
    q = Fraction(q)
    return is_square_int(q.numerator) and is_square_int(q.denominator)


def sqrt_exact(q) -> Fraction:
    """Non-negative rational square root of ``q``.

    Raises :class:`NotASquareError` if ``q`` is not a rational square.
    """
    q = Fraction(q)
    if q.numerator < 0:
        raise NotASquareError(q)
    a, b = isqrt(q.numerator), isqrt(q.denominator)
    if a * a != q.numerator or b * b != q.denominator:
        raise NotASquareError(q)
    return Fraction(a, b)


_RAT_RE = re.compile(r"[+-]?\d+(/[+-]?\d+)?")


def parse_rat(text: str) -> Fraction:
    """Parse ``"a"`` or ``"a/b"`` (optional sign, no whitespace, no decimals)."""
    if not isinstance(text, str) or not _RAT_RE.fullmatch(text):
        raise ValueError(f"malformed fraction {text!r}")
    num, _, den = text.partition("/")
    d = int(den) if den else 1
    if d == 0:
        raise ValueError(f"malformed fraction {text!r}: zero denominator")
    return Fraction(int(num), d)


def format_rat(q) -> str:
    """Canonical text form: ``num/den``, or just ``num`` when den is 1."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
