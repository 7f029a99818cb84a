"""Command-line front end.

Exit codes: 0 success, 1 computed but the answer is negative (or the
computation hit a mathematical dead end), 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import eulerian, triple_equation
from .family import ParameterError, curve_for_m, family
from .search import CheckpointMismatchError, SearchBounds, TripleParams, run_search
from .curve import Curve, NotOnCurveError, Point
from .quartic import DescentError
from .rational import NotASquareError, format_rat, parse_rat, sqrt_exact

JOBS_ENV = "EULERIAN_JOBS"


def _rat(text):
    try:
        return parse_rat(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rat_list(text):
    return [_rat(t) for t in text.split(",")]


def _pair(text):
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected K,J got {text!r}")
    return tuple(_rat(p) for p in parts)


def _range(text):
    lo, sep, hi = text.partition(":")
    try:
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a:b with integers, got {text!r}") from None
    if not sep or lo > hi:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    return lo, hi


def _unit(text):
    try:
        return TripleParams(*(int(t) for t in text.split(",")))
    except (TypeError, ValueError) as exc:
        raise argparse.ArgumentTypeError(f"bad unit {text!r}: {exc}") from None


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    p = argparse.ArgumentParser(prog="eulerian-squares")
    p.add_argument("--json", dest="json_global", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="check a tuple of squares")
    v.add_argument("tuple", type=_rat_list, help="comma-separated roots, e.g. 18,3/5,8/5,224/107")
    v.add_argument("--squares", action="store_true", help="entries are the squares, not their roots")

    t = sub.add_parser("triple-family", parents=[common], help="triples from multiples of a point")
    t.add_argument("--m", type=_rat, required=True, help="m = p/q")
    t.add_argument("--gen", type=_pair, required=True, help="point K,J on the curve for m")
    t.add_argument("--count", type=_positive, default=1)

    s = sub.add_parser("solve-triple", parents=[common], help="solve the triple equation")
    s.add_argument("--squares", type=_rat_list, required=True, help="s1,s2,s3")

    c = sub.add_parser("curve", parents=[common], help="inspect J^2 = K^3 + A K^2 + B K")
    c.add_argument("--A", type=_rat, required=True)
    c.add_argument("--B", type=_rat, required=True)
    c.add_argument("--point", type=_pair)
    c.add_argument("--mul", type=int, default=2, help="print multiples 1..N of --point")
    c.add_argument("--scan", type=_range, help="integer K range a:b")

    q = sub.add_parser("search-quad", parents=[common], help="search for square quadruples")
    q.add_argument("--x-max", type=_positive, required=True)
    q.add_argument("--m-max", type=_positive, required=True)
    q.add_argument("--k-range", type=_range, required=True)
    q.add_argument("--u-range", type=_range, required=True)
    q.add_argument("--out", required=True)
    q.add_argument("--resume", help="checkpoint file (created if missing)")
    q.add_argument("--jobs", type=_positive, default=None)
    q.add_argument("--unit", type=_unit, action="append", help="seed unit e,f,g,h (repeatable)")
    q.add_argument("--max-units", type=_positive)
    q.add_argument("--time-budget", type=float)
    return p


def _emit(out, obj):
    out.write(json.dumps(obj, sort_keys=True) + "\n")


def cmd_verify(args, out) -> int:
    values = args.tuple
    if len(values) < 2:
        raise _Usage("tuple: need at least two entries")
    if args.squares:
        try:
            values = [sqrt_exact(v) for v in values]
        except NotASquareError as exc:
            raise _Usage(f"tuple: {exc}") from None
    rep = eulerian.check_tuple(values)
    ppt = eulerian.product_plus_third(rep.roots) if len(rep.roots) == 3 else None
    if args.json:
        doc = {
            "roots": [format_rat(r) for r in rep.roots],
            "squares": [format_rat(r * r) for r in rep.roots],
            "status": rep.status.value,
            "pairs": [p.to_json() for p in rep.pairs],
        }
        if ppt is not None:
            doc["product_plus_third"] = ppt
        _emit(out, doc)
    else:
        out.write("roots:   " + ", ".join(format_rat(r) for r in rep.roots) + "\n")
        out.write("squares: " + ", ".join(format_rat(r * r) for r in rep.roots) + "\n")
        out.write(f"{'i':>2} {'j':>2}  {'square':<6}  value = root^2\n")
        for p in rep.pairs:
            mark = "yes" if p.square else "NO"
            root = f" = ({format_rat(p.root)})^2" if p.square else ""
            out.write(f"{p.i + 1:>2} {p.j + 1:>2}  {mark:<6}  {format_rat(p.value)}{root}\n")
        if ppt is not None:
            out.write(f"product plus third: {'yes' if ppt else 'no'}\n")
        out.write(f"status: {rep.status.value}\n")
    return 0 if rep.ok else 1


def cmd_triple_family(args, out) -> int:
    p, q = args.m.numerator, args.m.denominator
    try:
        curve = curve_for_m(p, q)
        gen = curve.point(*args.gen)
    except (ParameterError, NotOnCurveError, ValueError) as exc:
        raise _Usage(str(exc)) from None
    for k, roots in family(p, q, gen, args.count):
        _emit(out, {
            "k": k,
            "m": format_rat(args.m),
            "point": str(curve.scalar_mul(k, gen)),
            "roots": [format_rat(r) for r in roots],
            "squares": [format_rat(r * r) for r in roots],
        })
    return 0


def cmd_solve_triple(args, out) -> int:
    if len(args.squares) != 3:
        raise _Usage("--squares: need exactly three values")
    try:
        sys_ = triple_equation.TripleSystem(*args.squares)
    except ValueError as exc:
        raise _Usage(f"--squares: {exc}") from None
    try:
        sol = triple_equation.solve(sys_)
    except (DescentError, triple_equation.TrivialSolutionError, ZeroDivisionError, ValueError) as exc:
        if args.json:
            _emit(out, {"squares": [format_rat(s) for s in sys_.squares], "error": str(exc)})
        else:
            out.write(f"no solution from descent: {exc}\n")
        return 1
    if args.json:
        _emit(out, sol.to_json())
    else:
        d = sol.to_json()
        out.write(f"x = {d['x']}\n")
        out.write(f"digits: numerator {d['numerator_digits']}, denominator {d['denominator_digits']}\n")
        for s, r in zip(sys_.squares, sol.roots):
            out.write(f"({format_rat(s + 1)})x + {format_rat(s)} = ({format_rat(r)})^2\n")
    return 0


def cmd_curve(args, out) -> int:
    try:
        curve = Curve(args.A, args.B)
    except ValueError as exc:
        raise _Usage(str(exc)) from None
    doc = {"curve": str(curve), "two_torsion": [str(t) for t in curve.two_torsion()]}
    if args.point is not None:
        pt = Point(*args.point)
        doc["on_curve"] = curve.on_curve(pt)
        if doc["on_curve"]:
            doc["multiples"] = [str(curve.scalar_mul(k, pt)) for k in range(1, args.mul + 1)]
    if args.scan is not None:
        doc["scan"] = [str(p) for p in curve.integer_point_scan(*args.scan)]
    if args.json:
        _emit(out, doc)
    else:
        for key, val in doc.items():
            if isinstance(val, list):
                out.write(f"{key}:\n" + "".join(f"  {v}\n" for v in val))
            else:
                out.write(f"{key}: {val}\n")
    return 0 if doc.get("on_curve", True) else 1


def cmd_search_quad(args, out) -> int:
    jobs = args.jobs or int(os.environ.get(JOBS_ENV, "1"))
    bounds = SearchBounds(args.x_max, args.m_max, args.k_range, args.u_range,
                                 units=tuple(args.unit) if args.unit else None)
    try:
        summary = run_search(bounds, args.out, args.resume, jobs=jobs,
                                    max_units=args.max_units, time_budget=args.time_budget)
    except CheckpointMismatchError as exc:
        raise _Usage(f"--resume: {exc}") from None
    summary["elapsed"] = round(summary["elapsed"], 3)
    if args.json:
        _emit(out, summary)
    else:
        for k, v in summary.items():
            out.write(f"{k}: {v}\n")
    return 0


class _Usage(Exception):
    pass


COMMANDS = {
    "verify": cmd_verify,
    "triple-family": cmd_triple_family,
    "solve-triple": cmd_solve_triple,
    "curve": cmd_curve,
    "search-quad": cmd_search_quad,
}


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.json = args.json or args.json_global
    try:
        return COMMANDS[args.command](args, out)
    except _Usage as exc:
        err.write(f"{parser.prog} {args.command}: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
