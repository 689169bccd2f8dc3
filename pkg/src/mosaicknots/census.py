"""Exhaustive enumeration, transfer-matrix counting and knot censuses.

The depth-first search fills cells in row-major order.  A tile is only tried
when its north side matches the tile above and its west side matches the
tile to the left, and it may not reach the outer boundary, so every complete
filling is suitably connected and no prefix is ever extended past its first
mismatch.  The transfer matrix uses the same frontier: the set of south
connection points of a finished row.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from .errors import FeasibilityLimit, UnsupportedFilter
from .invariants import jones
from .laurent import LaurentPoly
from .tiles import (
    CLASSICAL,
    CONN,
    D4,
    NUM_KINDS,
    VIRTUAL,
    Kind,
    Mosaic,
    serialize_mosaic,
    transform,
)
from .topology import _trace_unchecked

ALL_INTERIOR_CROSSINGS = "all-crossings"
FULL_CENSUS_LIMIT = 4


@dataclass(frozen=True)
class CensusOptions:
    knots_only: bool = False
    canonical_only: bool = False
    interior_constraint: Optional[str] = None
    max_results: Optional[int] = None
    alphabet: str = CLASSICAL
    # cell -> allowed kinds; a finer-grained local filter than interior_constraint
    fixed: Optional[dict] = field(default=None, hash=False, compare=False)
    min_crossings: int = 0
    jobs: int = 1


@dataclass(frozen=True)
class CensusRecord:
    mosaic: Mosaic
    components: int
    crossings: int
    virtual_crossings: int
    jones: Optional[LaurentPoly]
    multiplicity: int

    def stats_line(self) -> str:
        j = "-" if self.jones is None else self.jones.format("t")
        return (
            f"# components={self.components} crossings={self.crossings} "
            f"virtual={self.virtual_crossings} jones={j}"
        )


def _kinds(alphabet: str) -> range:
    return range(NUM_KINDS if alphabet == VIRTUAL else NUM_KINDS - 1)


def _crossing_kinds(alphabet: str) -> frozenset:
    base = {Kind.T9, Kind.T10}
    if alphabet == VIRTUAL:
        base.add(Kind.TV)
    return frozenset(int(k) for k in base)


def _allowed_table(n: int, opts: CensusOptions) -> list[list[tuple[int, ...]]]:
    """Per cell, the candidate kinds in increasing order."""
    kinds = _kinds(opts.alphabet)
    crossing = _crossing_kinds(opts.alphabet)
    if opts.interior_constraint not in (None, ALL_INTERIOR_CROSSINGS):
        raise UnsupportedFilter(f"unknown interior constraint {opts.interior_constraint!r}")
    table = []
    for r in range(n):
        row = []
        for c in range(n):
            cand = list(kinds)
            interior = 0 < r < n - 1 and 0 < c < n - 1
            if opts.interior_constraint == ALL_INTERIOR_CROSSINGS and interior:
                cand = [k for k in cand if k in crossing]
            if opts.fixed and (r, c) in opts.fixed:
                allowed = {int(k) for k in opts.fixed[(r, c)]}
                cand = [k for k in cand if k in allowed]
            # the outer boundary never carries connection points
            if r == 0:
                cand = [k for k in cand if not CONN[k] & 1]
            if c == n - 1:
                cand = [k for k in cand if not CONN[k] & 2]
            if r == n - 1:
                cand = [k for k in cand if not CONN[k] & 4]
            if c == 0:
                cand = [k for k in cand if not CONN[k] & 8]
            row.append(tuple(cand))
        table.append(row)
    return table


def _split_by_needs(cands: tuple[int, ...]) -> dict[tuple[int, int], tuple[int, ...]]:
    out: dict[tuple[int, int], list[int]] = {(a, b): [] for a in (0, 1) for b in (0, 1)}
    for k in cands:
        out[(CONN[k] & 1, CONN[k] >> 3 & 1)].append(k)
    return {key: tuple(v) for key, v in out.items()}


def iter_fillings(n: int, opts: CensusOptions = CensusOptions(), prefix: tuple = ()) -> Iterator[tuple[int, ...]]:
    """Yield every suitably connected filling as a flat row-major tuple.

    ``prefix`` pins the first cells (used to split work across processes).
    Output order is lexicographic in the flat tuple.
    """
    table = _allowed_table(n, opts)
    split = [[_split_by_needs(table[r][c]) for c in range(n)] for r in range(n)]
    crossing = _crossing_kinds(opts.alphabet) - {int(Kind.TV)}
    total = n * n
    # cells at index >= i that could still host a classical crossing
    room = [0] * (total + 1)
    for i in range(total - 1, -1, -1):
        r, c = divmod(i, n)
        room[i] = room[i + 1] + any(k in crossing for k in table[r][c])
    need = opts.min_crossings
    cells = [0] * total

    def rec(i: int, xs: int):
        if xs + room[i] < need:
            return
        if i == total:
            yield tuple(cells)
            return
        r, c = divmod(i, n)
        north = CONN[cells[i - n]] >> 2 & 1 if r else 0
        west = CONN[cells[i - 1]] >> 1 & 1 if c else 0
        cands = split[r][c][(north, west)]
        if i < len(prefix):
            if prefix[i] not in cands:
                return
            cands = (prefix[i],)
        for k in cands:
            cells[i] = k
            yield from rec(i + 1, xs + (k in crossing))

    yield from rec(0, 0)


def first_rows(n: int, opts: CensusOptions = CensusOptions()) -> list[tuple[int, ...]]:
    """All admissible first rows; the unit of work for parallel census."""
    table = _allowed_table(n, opts)
    rows = [()]
    for c in range(n):
        nxt = []
        for row in rows:
            west = CONN[row[-1]] >> 1 & 1 if row else 0
            nxt.extend(row + (k,) for k in table[0][c] if (CONN[k] >> 3 & 1) == west)
        rows = nxt
    return rows


def canonical_form(m: Mosaic) -> Mosaic:
    """Least of the eight symmetric images under serialized-text order."""
    return min((transform(m, g) for g in D4), key=serialize_mosaic)


def orbit_size(m: Mosaic) -> int:
    return len({transform(m, g) for g in D4})


def _record(m: Mosaic, opts: CensusOptions) -> Optional[CensusRecord]:
    comps = len(_trace_unchecked(m))
    if opts.knots_only and comps != 1:
        return None
    flat = m.flat()
    xs = sum(1 for k in flat if k in (Kind.T9, Kind.T10))
    vs = sum(1 for k in flat if k == Kind.TV)
    j = jones(m) if comps == 1 and vs == 0 else None
    return CensusRecord(m, comps, xs, vs, j, orbit_size(m))


def _to_mosaic(n: int, flat: tuple[int, ...], alphabet: str) -> Mosaic:
    return Mosaic(n, tuple(flat[r * n:(r + 1) * n] for r in range(n)), alphabet)


def _records_for_prefix(args) -> list[CensusRecord]:
    n, opts, prefix = args
    out = []
    for flat in iter_fillings(n, opts, prefix):
        m = _to_mosaic(n, flat, opts.alphabet)
        if opts.canonical_only and canonical_form(m) != m:
            continue
        rec = _record(m, opts)
        if rec is not None:
            out.append(rec)
    return out


def enumerate_mosaics(n: int, opts: CensusOptions = CensusOptions()) -> Iterator[CensusRecord]:
    """Stream every suitably connected ``n``-mosaic that passes ``opts``.

    With ``canonical_only`` one representative (the canonical form) per
    symmetry orbit is emitted.  Output order is deterministic and does not
    depend on ``opts.jobs``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    emitted = 0
    if opts.jobs > 1:
        work = [(n, _serial(opts), row) for row in first_rows(n, opts)]
        with ProcessPoolExecutor(opts.jobs) as pool:
            batches = pool.map(_records_for_prefix, work)
            for batch in batches:
                for rec in batch:
                    yield rec
                    emitted += 1
                    if opts.max_results is not None and emitted >= opts.max_results:
                        return
        return
    for flat in iter_fillings(n, opts):
        m = _to_mosaic(n, flat, opts.alphabet)
        if opts.canonical_only and canonical_form(m) != m:
            continue
        rec = _record(m, opts)
        if rec is None:
            continue
        yield rec
        emitted += 1
        if opts.max_results is not None and emitted >= opts.max_results:
            return


def _serial(opts: CensusOptions) -> CensusOptions:
    return CensusOptions(
        opts.knots_only, opts.canonical_only, opts.interior_constraint, None,
        opts.alphabet, opts.fixed, opts.min_crossings, 1,
    )


def search(
    n: int,
    predicate: Callable[[Mosaic], bool],
    opts: CensusOptions = CensusOptions(),
) -> Iterator[Mosaic]:
    """Targeted search: suitably connected mosaics accepted by ``predicate``."""
    for flat in iter_fillings(n, opts):
        m = _to_mosaic(n, flat, opts.alphabet)
        if predicate(m):
            yield m


# ---------------------------------------------------------------------------
# transfer matrix


def _row_transitions(table_row, n, top_mask):
    """Map bottom mask -> number of row fillings compatible with ``top_mask``."""
    out: dict[int, int] = {}

    def rec(c, west, bottom):
        if c == n:
            if west == 0:
                out[bottom] = out.get(bottom, 0) + 1
            return
        north = top_mask >> c & 1
        for k in table_row[c]:
            bits = CONN[k]
            if (bits & 1) != north or (bits >> 3 & 1) != west:
                continue
            rec(c + 1, bits >> 1 & 1, bottom | ((bits >> 2 & 1) << c))

    rec(0, 0, 0)
    return out


def count(n: int, opts: CensusOptions = CensusOptions()) -> int:
    """Number of suitably connected ``n``-mosaics, by transfer matrix.

    Only cell-local filters are supported; ``knots_only`` and
    ``canonical_only`` depend on the whole mosaic.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if opts.knots_only or opts.canonical_only or opts.min_crossings or opts.max_results is not None:
        raise UnsupportedFilter("count supports cell-local filters only")
    table = _allowed_table(n, opts)
    vec = {0: 1}
    cache: dict[tuple, dict[int, int]] = {}
    for r in range(n):
        key_row = tuple(table[r])
        nxt: dict[int, int] = {}
        for mask, ways in vec.items():
            key = (key_row, mask)
            if key not in cache:
                cache[key] = _row_transitions(table[r], n, mask)
            for bottom, mult in cache[key].items():
                nxt[bottom] = nxt.get(bottom, 0) + ways * mult
        vec = nxt
    return vec.get(0, 0)


# ---------------------------------------------------------------------------
# knot census


@dataclass(frozen=True)
class KnotClass:
    jones: LaurentPoly
    witness: Mosaic
    witness_crossings: int
    count: int


def knot_census(n: int, limit: int = FULL_CENSUS_LIMIT, jobs: int = 1) -> list[KnotClass]:
    """Group every knot ``n``-mosaic by Jones polynomial.

    The witness of a class is its member with fewest crossings, ties broken
    by canonical serialized text.  Classes are sorted by witness crossings
    then by polynomial text.
    """
    if n > limit:
        raise FeasibilityLimit(f"full census at n={n} exceeds the limit {limit}")
    groups: dict[LaurentPoly, list] = {}
    for rec in enumerate_mosaics(n, CensusOptions(knots_only=True, jobs=jobs)):
        canon = canonical_form(rec.mosaic)
        key = (rec.crossings, serialize_mosaic(canon))
        slot = groups.setdefault(rec.jones, [None, None, 0])
        if slot[0] is None or key < slot[0]:
            slot[0], slot[1] = key, canon
        slot[2] += 1
    classes = [KnotClass(j, w, k[0], cnt) for j, (k, w, cnt) in groups.items()]
    classes.sort(key=lambda kc: (kc.witness_crossings, str(kc.jones)))
    return classes


def max_components(n: int, alphabet: str = CLASSICAL) -> int:
    """Largest component count seen over all suitably connected n-mosaics."""
    best = 0
    for flat in iter_fillings(n, CensusOptions(alphabet=alphabet)):
        best = max(best, len(_trace_unchecked(_to_mosaic(n, flat, alphabet))))
    return best
