"""Two-stage search for square Eulerian quadruples.

Stage one enumerates ``x = e/f`` and ``m = g/h``, builds the curve from
:func:`curve_AB` and turns its integer points into triples ``(x, y, z)``.
Stage two builds :func:`w_curve` for ``(x, y)``, turns its integer points
(on an integral model) into candidates ``w``, and tests the one pair
identity not guaranteed by construction, ``w^2 z^2 + w^2 + z^2``.

Work units are single ``(e, f, g, h)`` tuples, processed in a fixed order so
that output streams are reproducible and resumable from a checkpoint.
"""
from __future__ import annotations

import hashlib
import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from math import gcd
from pathlib import Path
from typing import Iterator, Optional

from .curve import Curve, Point, SingularCurveError
from .eulerian import PoleError, is_eulerian, pair_reports, pair_val, param_t
from .rational import format_rat, is_square

__all__ = [
    "TripleParams",
    "SearchBounds",
    "SearchHit",
    "CheckpointMismatchError",
    "curve_AB",
    "n_from_point4",
    "w_curve",
    "w_curve_coefficients",
    "r_from_point",
    "iter_units",
    "unit_triples",
    "search_unit",
    "search",
    "run_search",
]

log = logging.getLogger(__name__)

FULL = "Full"
NEAR_MISS = "NearMiss5"


class CheckpointMismatchError(RuntimeError):
    pass


@dataclass(frozen=True)
class TripleParams:
    """``x = e/f`` and ``m = g/h``, both in lowest terms."""

    e: int
    f: int
    g: int
    h: int

    def __post_init__(self):
        e, f, g, h = self.e, self.f, self.g, self.h
        if e < 1 or f < 1 or h < 1 or g == 0:
            raise ValueError(f"bad parameters {self}")
        if gcd(e, f) != 1 or gcd(g, h) != 1:
            raise ValueError(f"parameters not in lowest terms: {self}")
        if g * g * f * f == (e * e + f * f) * h * h:
            raise ValueError(f"m^2 = x^2 + 1 pole: {self}")

    @property
    def x(self) -> Fraction:
        return Fraction(self.e, self.f)

    @property
    def m(self) -> Fraction:
        return Fraction(self.g, self.h)


@dataclass(frozen=True)
class SearchBounds:
    """Grid and point-window limits.

    ``units``, when given, replaces the ``(e, f, g, h)`` grid by an explicit
    list (used to seed a known region).
    """

    x_height_max: int
    m_height_max: int
    k_range: tuple[int, int]
    u_range: tuple[int, int]
    units: Optional[tuple] = None

    def __post_init__(self):
        if self.x_height_max < 1 or self.m_height_max < 1:
            raise ValueError("height bounds must be positive")
        for name in ("k_range", "u_range"):
            lo, hi = getattr(self, name)
            if lo > hi:
                raise ValueError(f"{name} is empty: {lo}:{hi}")
            object.__setattr__(self, name, (int(lo), int(hi)))
        if self.units is not None:
            object.__setattr__(
                self, "units", tuple(u if isinstance(u, TripleParams) else TripleParams(*u) for u in self.units)
            )

    def to_json(self) -> dict:
        d = {
            "x_height_max": self.x_height_max,
            "m_height_max": self.m_height_max,
            "k_range": list(self.k_range),
            "u_range": list(self.u_range),
        }
        if self.units is not None:
            d["units"] = [[u.e, u.f, u.g, u.h] for u in self.units]
        return d

    def config_hash(self) -> str:
        blob = json.dumps(self.to_json(), sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()


@dataclass(frozen=True)
class SearchHit:
    params: TripleParams
    k_point: Point
    w_point: Point
    roots: tuple
    pairs: tuple
    cls: str

    def key(self) -> tuple:
        return tuple(sorted(abs(r) for r in self.roots))

    def to_json(self) -> dict:
        return {
            "class": self.cls,
            "params": asdict(self.params),
            "k_point": str(self.k_point),
            "w_point": str(self.w_point),
            "roots": [format_rat(r) for r in self.roots],
            "squares": [format_rat(r * r) for r in self.roots],
            "pairs": [p.to_json() for p in self.pairs],
        }


def curve_AB(e: int, f: int, g: int, h: int) -> Curve:
    """Curve whose points give ``n`` with ``{x^2, y^2, z^2}`` Eulerian."""
    TripleParams(e, f, g, h)
    e2, f2, g2, h2 = e * e, f * f, g * g, h * h
    A = -2 * (e2**2 * h2**2 + 2 * e2 * f2 * h2**2 + f2**2 * (g2**2 - 4 * g2 * h2 + h2**2))
    B = (
        e2**4 * h2**4
        + 4 * e2**3 * f2 * h2**4
        - 2 * e2**2 * f2**2 * h2**2 * (g2**2 + 4 * g2 * h2 - 3 * h2**2)
        - 4 * e2 * f2**3 * h2**2 * (g2**2 + 4 * g2 * h2 - h2**2)
        + f2**4 * (g2**4 - 8 * g2**3 * h2 + 14 * g2**2 * h2**2 - 8 * g2 * h2**3 + h2**4)
    )
    return Curve(A, B)


def n_from_point4(params: TripleParams, pt: Point) -> Fraction:
    """``n = J / (2 f^2 h^2 K m)``."""
    if pt.is_infinity or pt.K == 0:
        raise ValueError("two-torsion point K = 0 (or infinity)")
    return pt.J / (2 * params.f**2 * params.h**2 * pt.K * params.m)


def w_curve_coefficients(x, y) -> tuple[Fraction, Fraction]:
    x, y = Fraction(x), Fraction(y)
    if x == 0 or y == 0:
        raise ValueError("w_curve needs nonzero x and y")
    x2, y2 = x * x, y * y
    return x2 * (2 * y2 + 1) + y2, x2 * y2 * (y2 + 1) * (x2 + 1)


def w_curve(x, y) -> Curve:
    """Curve whose points give ``r`` with ``w = param_t(x, r)`` pairing with ``x^2`` and ``y^2``.

    Singular (and rejected) when ``x^2 = y^2``.
    """
    return Curve(*w_curve_coefficients(x, y))


def r_from_point(x, y, pt: Point) -> Fraction:
    """``r = V / (y (x^2 (y^2 + 1) + U))``."""
    x, y = Fraction(x), Fraction(y)
    if pt.is_infinity:
        raise PoleError("point at infinity")
    den = y * (x * x * (y * y + 1) + pt.K)
    if den == 0:
        raise PoleError("r_from_point: zero denominator")
    return pt.J / den


def iter_units(bounds: SearchBounds) -> list[TripleParams]:
    """Work units in order of ``(e+f, e, g+h, g)``.

    Only ``g > 0`` is enumerated: negating ``g`` negates ``y`` and ``z`` and
    leaves every square unchanged.
    """
    if bounds.units is not None:
        return list(bounds.units)
    X, M = bounds.x_height_max, bounds.m_height_max
    xs = sorted(((e, f) for e in range(1, X + 1) for f in range(1, X + 1) if gcd(e, f) == 1),
                key=lambda t: (t[0] + t[1], t[0]))
    ms = sorted(((g, h) for g in range(1, M + 1) for h in range(1, M + 1) if gcd(g, h) == 1),
                key=lambda t: (t[0] + t[1], t[0]))
    units = []
    for e, f in xs:
        for g, h in ms:
            if g * g * f * f == (e * e + f * f) * h * h:
                continue
            units.append(TripleParams(e, f, g, h))
    return units


def _signed(pt: Point):
    yield pt
    if pt.J != 0:
        yield -pt


def unit_triples(params: TripleParams, k_range) -> list[tuple[Point, tuple]]:
    """Stage one: verified non-degenerate triples ``(x, y, z)`` for one unit."""
    x, m = params.x, params.m
    y = param_t(x, m)
    if y == 0 or abs(y) == x:
        return []
    try:
        curve = curve_AB(params.e, params.f, params.g, params.h)
    except SingularCurveError:
        return []
    out, seen = [], set()
    for base in curve.integer_point_scan(*k_range):
        if base.K == 0:
            continue
        for pt in _signed(base):
            n = n_from_point4(params, pt)
            if n == 0:
                continue
            try:
                z = param_t(x, n)
            except PoleError:
                continue
            if z == 0 or abs(z) in (x, abs(y)) or abs(z) in seen:
                continue
            seen.add(abs(z))
            roots = (x, y, z)
            ok, _ = is_eulerian(roots)
            if not ok:
                raise AssertionError(f"{params} K-point {pt}: triple {roots} is not Eulerian")
            out.append((pt, roots))
    return out


def _w_candidates(x: Fraction, y: Fraction, u_range) -> list[tuple[Point, Fraction]]:
    try:
        wc = w_curve(x, y)
    except SingularCurveError:
        return []
    model, d = wc.integral_model(scale=x.denominator * y.denominator)
    out, seen = [], set()
    for base in model.integer_point_scan(*u_range):
        for mp in _signed(base):
            pt = Point(mp.K / d**2, mp.J / d**3)
            try:
                r = r_from_point(x, y, pt)
                w = param_t(x, r) if r != 0 else Fraction(0)
            except PoleError:
                continue
            if w == 0 or abs(w) in (x, abs(y)) or abs(w) in seen:
                continue
            seen.add(abs(w))
            x2, y2, w2 = x * x, y * y, w * w
            if not (is_square(pair_val(x2, w2)) and is_square(pair_val(y2, w2))):
                raise AssertionError(f"w={w} from {pt} fails a constructed pair identity")
            out.append((pt, w))
    return out


def search_unit(params: TripleParams, bounds: SearchBounds) -> list[SearchHit]:
    """All Full and NearMiss5 hits of one work unit, in scan order."""
    triples = unit_triples(params, bounds.k_range)
    if not triples:
        return []
    x, y = triples[0][1][0], triples[0][1][1]
    hits = []
    for kpt, (_, _, z) in triples:
        for wpt, w in _w_candidates(x, y, bounds.u_range):
            if abs(w) == abs(z):
                continue
            roots = (x, y, z, w)
            pairs = pair_reports(roots)
            n_sq = sum(p.square for p in pairs)
            if n_sq < 5 or (n_sq == 5 and pairs[-1].square):
                raise AssertionError(f"{params}: constructed identity failed for {roots}")
            hits.append(SearchHit(params, kpt, wpt, roots, tuple(pairs), FULL if n_sq == 6 else NEAR_MISS))
    return hits


def search(bounds: SearchBounds) -> Iterator[SearchHit]:
    """Serial search; yields each distinct quadruple once, in deterministic order."""
    seen = set()
    for unit in iter_units(bounds):
        for hit in search_unit(unit, bounds):
            if hit.key() not in seen:
                seen.add(hit.key())
                yield hit


def _hit_key_from_json(d: dict) -> tuple:
    return tuple(sorted(abs(Fraction(r)) for r in d["roots"]))


def _write_checkpoint(path: Path, data: dict) -> None:
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(json.dumps(data, sort_keys=True))
    os.replace(tmp, path)


def _worker(args):
    unit, bounds = args
    return search_unit(unit, bounds)


def run_search(
    bounds: SearchBounds,
    out_path,
    checkpoint_path=None,
    jobs: int = 1,
    max_units: Optional[int] = None,
    time_budget: Optional[float] = None,
) -> dict:
    """Run the search, appending JSONL hits to ``out_path``.

    With ``checkpoint_path`` the run resumes from an existing checkpoint
    (refusing one written for different bounds) and records progress after
    every batch of work units.  ``max_units`` and ``time_budget`` stop the
    run early between batches; a later call with the same checkpoint
    continues it, producing output identical to an uninterrupted run.
    """
    out_path = Path(out_path)
    ck_path = Path(checkpoint_path) if checkpoint_path else None
    config_hash = bounds.config_hash()
    units = iter_units(bounds)
    start_unit, written = 0, 0
    seen: set = set()

    if ck_path is not None and ck_path.exists():
        ck = json.loads(ck_path.read_text())
        if ck.get("config_hash") != config_hash:
            raise CheckpointMismatchError(f"checkpoint {ck_path} was written for different bounds")
        start_unit, written = ck["next_unit"], ck["bytes_written"]
        with open(out_path, "r+b") as fh:
            fh.truncate(written)
        for line in out_path.read_text().splitlines():
            seen.add(_hit_key_from_json(json.loads(line)))
    else:
        out_path.write_bytes(b"")

    t0 = time.monotonic()
    batch = max(1, jobs) * 4
    limit = len(units) if max_units is None else min(len(units), start_unit + max_units)
    counts = {FULL: 0, NEAR_MISS: 0}
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    idx = start_unit
    try:
        with open(out_path, "ab") as out:
            while idx < limit:
                chunk = units[idx:min(idx + batch, limit)]
                args = [(u, bounds) for u in chunk]
                results = pool.map(_worker, args) if pool else map(_worker, args)
                for hits in results:
                    for hit in hits:
                        if hit.key() in seen:
                            continue
                        seen.add(hit.key())
                        counts[hit.cls] += 1
                        out.write((json.dumps(hit.to_json(), sort_keys=True) + "\n").encode())
                idx += len(chunk)
                out.flush()
                written = out.tell()
                if ck_path is not None:
                    _write_checkpoint(ck_path, {
                        "config_hash": config_hash,
                        "next_unit": idx,
                        "bytes_written": written,
                        "total_units": len(units),
                    })
                if time_budget is not None and time.monotonic() - t0 > time_budget:
                    log.info("time budget reached after unit %d", idx)
                    break
    finally:
        if pool:
            pool.shutdown()
    return {
        "units_done": idx,
        "total_units": len(units),
        "complete": idx >= len(units),
        "new_full": counts[FULL],
        "new_near_miss": counts[NEAR_MISS],
        "elapsed": time.monotonic() - t0,
    }
