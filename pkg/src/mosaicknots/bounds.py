"""Crossing-number / mosaic-number bounds and census-backed audits."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from importlib import resources
from typing import Optional

from .census import (
    ALL_INTERIOR_CROSSINGS,
    FULL_CENSUS_LIMIT,
    CensusOptions,
    count,
    enumerate_mosaics,
    iter_fillings,
    knot_census,
    _to_mosaic,
)
from .errors import FeasibilityLimit
from .invariants import jones, span_crossing_bound
from .laurent import LaurentPoly
from .moves import simplify
from .tiles import D4, Kind, Mosaic, parse_mosaic, serialize_mosaic, transform
from .topology import counts

AUDIT_LIMIT = 5


def max_crossings(n: int, subject: str = "link") -> int:
    """Largest crossing count a knot or link of mosaic number ``n`` can have.

    The parity refinements for knots apply only for ``n > 3``.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    base = (n - 2) ** 2
    if subject == "link" or n <= 3:
        return base
    if subject != "knot":
        raise ValueError(f"unknown subject {subject!r}")
    return base - 1 if n % 2 == 0 else base - 2


def min_mosaic_number(c: int) -> int:
    """``ceil(sqrt(c)) + 2``."""
    if c < 0:
        raise ValueError("crossing number must be non-negative")
    r = math.isqrt(c)
    return r + (r * r < c) + 2


def max_mosaic_number(c: int) -> int:
    if c < 0:
        raise ValueError("crossing number must be non-negative")
    return 4 * c + 2


def bound_table(cs) -> list[tuple[int, int, int]]:
    return [(c, min_mosaic_number(c), max_mosaic_number(c)) for c in cs]


def virtual_bound_check(m: Mosaic) -> bool:
    """Classical plus virtual crossings fit in the ``(n-2)^2`` interior."""
    cnt = counts(m)
    return cnt.crossings + cnt.virtual_crossings <= max(m.n - 2, 0) ** 2


# ---------------------------------------------------------------------------
# audits


@dataclass
class Check:
    name: str
    holds: bool
    details: str = ""
    witness: Optional[Mosaic] = None


@dataclass
class ConjectureRow:
    name: str
    crossings: int
    mosaic_number: int
    certified: bool

    @property
    def holds(self) -> bool:
        return self.mosaic_number <= self.crossings + 2


@dataclass
class BoundReport:
    n: int
    c: Optional[int] = None
    k: Optional[int] = None
    checks: list = field(default_factory=list)
    conjecture: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(ch.holds for ch in self.checks)

    def format(self) -> str:
        lines = [f"audit n={self.n}"]
        for ch in self.checks:
            lines.append(f"  [{'pass' if ch.holds else 'FAIL'}] {ch.name}: {ch.details}")
            if ch.witness is not None:
                lines.extend("    " + ln for ln in serialize_mosaic(ch.witness).splitlines())
        for key, value in self.stats.items():
            lines.append(f"  {key} = {value}")
        if self.conjecture:
            lines.append("  conjecture n <= c + 2 (reported, not asserted):")
            lines.append("    knot            c   n   n<=c+2  certified")
            for row in self.conjecture:
                lines.append(
                    f"    {row.name:<14} {row.crossings:>2} {row.mosaic_number:>3}   "
                    f"{'yes' if row.holds else 'no':<6}  {'yes' if row.certified else 'no'}"
                )
        for ch in self.checks:
            lines.append(f"{ch.name}={'pass' if ch.holds else 'fail'}")
        return "\n".join(lines) + "\n"


def _witness(name: str) -> Mosaic:
    text = resources.files(__package__).joinpath(f"data/witnesses/{name}.mosaic").read_text()
    return parse_mosaic(text)


WITNESSES = {
    "unknot": "unknot-2",
    "trefoil": "trefoil-4",
    "figure-eight": "figure-eight-5",
    "7-crossing": "seven-crossings-5",
}


def witness(name: str) -> Mosaic:
    """Frozen witness mosaics found by targeted search."""
    return _witness(WITNESSES[name])


def tile_bound_check(n: int) -> Check:
    """Every suitably connected n-mosaic keeps crossings off the border."""
    limit = max(n - 2, 0) ** 2
    if n <= FULL_CENSUS_LIMIT:
        for rec in enumerate_mosaics(n):
            m = rec.mosaic
            border = [
                (r, c) for r, c in m.cells()
                if m.tiles[r][c] in (Kind.T9, Kind.T10) and (r in (0, n - 1) or c in (0, n - 1))
            ]
            if rec.crossings > limit or border:
                return Check("tile-bound", False, f"{rec.crossings} crossings", m)
        return Check("tile-bound", True, f"all records have crossings <= {limit}, none on the border")
    # beyond the census: count mosaics with a crossing pinned to each border cell
    bad = 0
    for r in range(n):
        for c in range(n):
            if r in (0, n - 1) or c in (0, n - 1):
                bad += count(n, CensusOptions(fixed={(r, c): (Kind.T9, Kind.T10)}))
    return Check("tile-bound", bad == 0, f"{bad} mosaics with a border crossing (transfer matrix)")


def even_corollary_check(n: int = 4) -> Check:
    """With every interior cell a crossing, the result is a link or the unknot."""
    seen = 0
    for rec in enumerate_mosaics(n, CensusOptions(interior_constraint=ALL_INTERIOR_CROSSINGS)):
        seen += 1
        if rec.components == 1 and rec.jones != LaurentPoly.constant(1):
            return Check("even-corollary", False, f"knot with jones {rec.jones}", rec.mosaic)
    return Check("even-corollary", True, f"{seen} all-crossing-interior mosaics are links or unknots")


def _generic(m: Mosaic) -> Mosaic:
    return Mosaic(m.n, tuple(tuple(Kind.T9 if k == Kind.T10 else k for k in row) for row in m.tiles))


def odd_completions(n: int = 5) -> list[Mosaic]:
    """Suitably connected boundaries around an all-T9 interior."""
    fixed = {(r, c): (Kind.T9,) for r in range(1, n - 1) for c in range(1, n - 1)}
    return [_to_mosaic(n, flat, "classical") for flat in iter_fillings(n, CensusOptions(fixed=fixed))]


def odd_corollary_check(n: int = 5, report: Optional[BoundReport] = None) -> Check:
    comps = odd_completions(n)
    total = count(n, CensusOptions(interior_constraint=ALL_INTERIOR_CROSSINGS))
    orbits = {min(serialize_mosaic(_generic(transform(m, g))) for g in D4) for m in comps}
    simplified = []
    for m in comps:
        s = simplify(m, max_steps=200, max_grow=0)
        simplified.append(counts(s).crossings)
    if report is not None:
        report.stats["odd.completions_per_crossing_choice"] = len(comps)
        report.stats["odd.completions_all_crossing_choices"] = total
        report.stats["odd.completion_orbits"] = len(orbits)
        report.stats["odd.simplified_crossings"] = simplified
    limit = max_crossings(n, "knot")
    holds = len(comps) == 2 and total == 2 * 2 ** ((n - 2) ** 2) and all(x <= limit for x in simplified)
    return Check(
        "odd-corollary",
        holds,
        f"{len(comps)} completions ({total} over all crossing choices, {len(orbits)} orbit); "
        f"simplified to {simplified} crossings",
    )


def conjecture_rows(n: int) -> list[ConjectureRow]:
    """Knots with certified crossing number seen at mosaic sizes up to ``n``."""
    rows = []
    found: dict[LaurentPoly, tuple[str, int, int, bool]] = {}
    names = {}
    for name in WITNESSES:
        m = witness(name)
        j = jones(m)
        names[j] = names[j.substitute(-1)] = name
    for size in range(2, min(n, FULL_CENSUS_LIMIT) + 1):
        for kc in knot_census(size):
            canon = min(kc.jones, kc.jones.substitute(-1), key=str)
            if canon in found:
                continue
            c = kc.witness_crossings
            certified = span_crossing_bound(kc.witness) == c
            found[canon] = (names.get(kc.jones, str(kc.jones)), c, size, certified)
    if n >= 5:
        for name in ("figure-eight", "7-crossing"):
            m = witness(name)
            j = jones(m)
            canon = min(j, j.substitute(-1), key=str)
            if canon not in found:
                c = counts(m).crossings
                found[canon] = (name, c, m.n, span_crossing_bound(m) == c)
    for name, c, size, certified in found.values():
        rows.append(ConjectureRow(name, c, size, certified))
    rows.sort(key=lambda r: (r.crossings, r.mosaic_number))
    return rows


def audit(n: int) -> BoundReport:
    """Run every bound check that applies at mosaic size ``n``."""
    if n > AUDIT_LIMIT:
        raise FeasibilityLimit(f"audit at n={n} exceeds the limit {AUDIT_LIMIT}")
    report = BoundReport(n)
    report.checks.append(tile_bound_check(n))
    if n == 4:
        report.checks.append(even_corollary_check(4))
    if n == 5:
        report.checks.append(odd_corollary_check(5, report))
        for name, expect in (("figure-eight", 4), ("7-crossing", 7)):
            m = witness(name)
            cnt = counts(m)
            ok = cnt.components == 1 and cnt.crossings == expect and span_crossing_bound(m) == expect
            report.checks.append(Check(f"witness-{name}", ok, f"{cnt.crossings} crossings, span bound {span_crossing_bound(m)}"))
    report.conjecture = conjecture_rows(n)
    return report
