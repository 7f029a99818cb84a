"""Eulerian tuples of rational squares: curves, descent and search."""
from .curve import INFINITY, Curve, Point
from .eulerian import check_tuple, is_eulerian, pair_val, param_t, product_plus_third
from .family import curve_for_m, family, n_from_point, triple_from
from .quartic import Quadratic, Quartic, complete_square_descend, conic_param, eval_quartic
from .rational import Rat, format_rat, is_square, isqrt_floor, normalize, parse_rat, sqrt_exact
from .search import SearchBounds, TripleParams, curve_AB, run_search, search, w_curve
from .triple_equation import TripleSystem, solve, verify_known_curve_points, x_from_f

__version__ = "0.1.0"

__all__ = [
    "INFINITY", "Curve", "Point",
    "check_tuple", "is_eulerian", "pair_val", "param_t", "product_plus_third",
    "curve_for_m", "family", "n_from_point", "triple_from",
    "Quadratic", "Quartic", "complete_square_descend", "conic_param", "eval_quartic",
    "Rat", "format_rat", "is_square", "isqrt_floor", "normalize", "parse_rat", "sqrt_exact",
    "SearchBounds", "TripleParams", "curve_AB", "run_search", "search", "w_curve",
    "TripleSystem", "solve", "verify_known_curve_points", "x_from_f",
]
