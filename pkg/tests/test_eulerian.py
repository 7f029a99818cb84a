from fractions import Fraction
from itertools import permutations
from math import isqrt

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from eulerian_squares.eulerian import (
    PoleError,
    Status,
    check_tuple,
    is_eulerian,
    pair_val,
    param_t,
    product_plus_third,
)
from eulerian_squares.rational import is_square

rats = st.fractions(min_value=-10**6, max_value=10**6, max_denominator=10**6)
F = Fraction


def test_pair_val_examples():
    assert pair_val(F(25, 9), F(64, 9)) == F(2401, 81) == F(49, 9) ** 2
    assert pair_val(0, F(7, 3)) == F(7, 3)
    assert pair_val(4, 441) == 2209 == 47**2


@settings(max_examples=1000)
@given(rats, rats)
def test_pair_val_shifted_product(a, b):
    assert pair_val(a, b) == (a + 1) * (b + 1) - 1
    assert pair_val(a, b) == pair_val(b, a)


@pytest.mark.parametrize(
    "roots",
    [
        (F(5, 3), F(8, 3), F(14, 3)),
        (F(2), F(8, 19), F(21)),
        (F(18), F(3, 5), F(8, 5), F(224, 107)),
    ],
)
def test_is_eulerian_published(roots):
    ok, reports = is_eulerian(roots)
    n = len(roots)
    assert ok and len(reports) == n * (n - 1) // 2
    for r in reports:
        assert r.square and r.root**2 == r.value


def test_is_eulerian_negative():
    ok, reports = is_eulerian((1, 1))
    assert not ok
    assert reports[0].value == 3 and reports[0].root is None
    with pytest.raises(ValueError):
        is_eulerian((1,))


def test_check_tuple_statuses():
    assert check_tuple((18, F(3, 5), F(8, 5), F(224, 107))).status is Status.EULERIAN
    assert check_tuple((1, 1)).status is Status.DEGENERATE
    assert check_tuple((0, 2)).status is Status.DEGENERATE
    assert check_tuple((2, -2)).status is Status.DEGENERATE
    assert check_tuple((1, 2)).status is Status.EULERIAN
    assert check_tuple((1, 3)).status is Status.NOT_EULERIAN


def test_is_eulerian_permutation_invariant():
    base = (F(18), F(3, 5), F(8, 5), F(224, 107), F(1, 3))
    verdicts = {is_eulerian(p)[0] for p in permutations(base)}
    assert len(verdicts) == 1
    verdicts = {is_eulerian(p)[0] for p in permutations(base[:4])}
    assert verdicts == {True}


def test_product_plus_third():
    assert F(1600, 81) + F(1764, 81) == F(3364, 81) == F(58, 9) ** 2
    assert product_plus_third((F(5, 3), F(8, 3), F(14, 3)))
    assert not product_plus_third((1, 1, 1))
    assert not product_plus_third((1, 2, 3))
    s = [F(4), F(64, 361), F(441)]
    direct = [is_square(s[0] * s[1] + s[2]), is_square(s[0] * s[2] + s[1]), is_square(s[1] * s[2] + s[0])]
    assert product_plus_third((2, F(8, 19), 21)) == all(direct)
    with pytest.raises(ValueError):
        product_plus_third((1, 2))


def _invert_param(x, t):
    """Rational r with param_t(x, r) = t by the quadratic formula (oracle)."""
    # t r^2 + 2 x r - t (x^2 + 1) = 0
    disc = 4 * x * x + 4 * t * t * (x * x + 1)
    assert is_square(disc)
    s = F(isqrt(disc.numerator), isqrt(disc.denominator))
    return sorted({(-2 * x + s) / (2 * t), (-2 * x - s) / (2 * t)})


def test_param_t_examples():
    assert param_t(2, F(1, 2)) == F(8, 19)
    assert 5 * F(8, 19) ** 2 + 4 == F(42, 19) ** 2
    assert param_t(2, F(15, 7)) == 21
    assert param_t(7, 0) == 0
    for target, r in ((F(3, 5), F(5)), (F(8, 5), F(10)), (F(224, 107), F(91, 8))):
        assert r in _invert_param(F(18), target)
        assert param_t(18, r) == target


def test_param_t_pole():
    with pytest.raises(PoleError):
        param_t(0, 1)
    with pytest.raises(PoleError):
        param_t(F(3, 4), F(5, 4))


@settings(max_examples=1000)
@given(rats, rats)
def test_param_t_postcondition(x, r):
    assume(r * r != x * x + 1)
    t = param_t(x, r)
    value = (x * x + 1) * t * t + x * x
    assert is_square(value)
    assert value == ((x * x + 1 + r * r) * x / (x * x + 1 - r * r)) ** 2
