"""Strand tracing: components, crossing counts, Gauss codes and writhe."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple

from .errors import NotAKnot, NotSuitablyConnected
from .tiles import OPPOSITE, PARTNER, STEP, Kind, Mosaic, is_suitably_connected

# unit travel direction (x right, y up) when leaving through each side
_DIRECTION = ((0, 1), (1, 0), (0, -1), (-1, 0))


class StrandStep(NamedTuple):
    cell: tuple[int, int]
    entry: int
    exit: int


@dataclass(frozen=True)
class ComponentSet:
    components: tuple[tuple[StrandStep, ...], ...]

    def __len__(self):
        return len(self.components)


class Counts(NamedTuple):
    components: int
    crossings: int
    virtual_crossings: int


def _require_connected(m: Mosaic):
    diag = is_suitably_connected(m)
    if diag:
        raise NotSuitablyConnected(diag)


def _trace_unchecked(m: Mosaic) -> tuple[tuple[StrandStep, ...], ...]:
    t = m.tiles
    n = m.n
    seen = set()
    comps = []
    for r in range(n):
        for c in range(n):
            partner = PARTNER[t[r][c]]
            for side in range(4):
                other = partner[side]
                if other < 0 or (r, c, min(side, other)) in seen:
                    continue
                steps = []
                rr, cc, entry = r, c, side
                while True:
                    ex = PARTNER[t[rr][cc]][entry]
                    seen.add((rr, cc, min(entry, ex)))
                    steps.append(StrandStep((rr, cc), entry, ex))
                    dr, dc = STEP[ex]
                    rr, cc, entry = rr + dr, cc + dc, OPPOSITE[ex]
                    if (rr, cc, entry) == (r, c, side):
                        break
                comps.append(tuple(steps))
    return tuple(comps)


def trace(m: Mosaic) -> ComponentSet:
    """Partition the strands of a suitably connected mosaic into closed
    components.

    Components are ordered by their smallest ``(row, col, side)`` connection
    point and each is traversed starting by entering through that side.
    """
    _require_connected(m)
    return ComponentSet(_trace_unchecked(m))


def counts(m: Mosaic) -> Counts:
    comps = trace(m)
    flat = m.flat()
    return Counts(
        len(comps),
        sum(1 for k in flat if k in (Kind.T9, Kind.T10)),
        sum(1 for k in flat if k == Kind.TV),
    )


def _sign(kind: int, first: StrandStep, second: StrandStep) -> int:
    # T9: the N-S pass is over; T10: the E-W pass is over
    vertical = first if first.entry in (0, 2) else second
    horizontal = second if vertical is first else first
    over, under = (vertical, horizontal) if kind == Kind.T9 else (horizontal, vertical)
    ox, oy = _DIRECTION[over.exit]
    ux, uy = _DIRECTION[under.exit]
    return 1 if (-oy, ox) == (ux, uy) else -1


def crossing_signs(m: Mosaic) -> dict[tuple[int, int], int]:
    """Sign of every classical crossing under the traced orientation."""
    _require_connected(m)
    passes: dict[tuple[int, int], list[StrandStep]] = {}
    for comp in _trace_unchecked(m):
        for step in comp:
            if m.tiles[step.cell[0]][step.cell[1]] in (Kind.T9, Kind.T10):
                passes.setdefault(step.cell, []).append(step)
    return {
        cell: _sign(m.tiles[cell[0]][cell[1]], a, b) for cell, (a, b) in passes.items()
    }


# ---------------------------------------------------------------------------
# Gauss codes


class GaussEntry(NamedTuple):
    label: int
    over: bool
    sign: int = 0  # +1, -1, or 0 when unspecified

    def __str__(self):
        mark = {1: "+", -1: "-", 0: ""}[self.sign]
        return f"{'O' if self.over else 'U'}{self.label}{mark}"


@dataclass(frozen=True)
class GaussCode:
    entries: tuple[GaussEntry, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(GaussEntry(*e) for e in self.entries))

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self):
        return "".join(map(str, self.entries))

    @property
    def labels(self) -> list[int]:
        return [e.label for e in self.entries]

    @property
    def crossing_count(self) -> int:
        return len(set(self.labels))

    @property
    def signed(self) -> bool:
        return any(e.sign for e in self.entries)

    def relabeled(self) -> "GaussCode":
        """Relabel crossings 1, 2, ... in order of first occurrence."""
        order: dict[int, int] = {}
        for e in self.entries:
            order.setdefault(e.label, len(order) + 1)
        return GaussCode(tuple(GaussEntry(order[e.label], e.over, e.sign) for e in self.entries))

    def rotated(self, k: int) -> "GaussCode":
        return GaussCode(self.entries[k:] + self.entries[:k])

    def reversed(self) -> "GaussCode":
        return GaussCode(self.entries[::-1])

    def normal_form(self, signs: bool = True) -> tuple:
        """Smallest relabeled form over all cyclic rotations and reversal."""
        if not self.entries:
            return ()
        best = None
        for code in (self, self.reversed()):
            for k in range(len(code)):
                key = tuple(
                    (e.label, e.over, e.sign if signs else 0)
                    for e in code.rotated(k).relabeled().entries
                )
                if best is None or key < best:
                    best = key
        return best

    def equivalent(self, other: "GaussCode", signs: bool = True) -> bool:
        return self.normal_form(signs) == other.normal_form(signs)


_ENTRY = re.compile(r"([OU])(\d+)([+-]?)")


def format_gauss(code: GaussCode) -> str:
    return str(code)


def parse_gauss_text(text: str) -> GaussCode:
    """Tokenize the ``O1+U2-...`` text form without validating label counts."""
    from .errors import BadToken

    compact = "".join(text.split())
    pos = 0
    entries = []
    while pos < len(compact):
        mt = _ENTRY.match(compact, pos)
        if mt is None:
            raise BadToken(f"bad Gauss-code token at {compact[pos:pos + 4]!r}", 1, pos + 1)
        label = int(mt.group(2))
        if label < 1:
            raise BadToken("crossing labels must be positive", 1, pos + 1)
        sign = {"+": 1, "-": -1, "": 0}[mt.group(3)]
        entries.append(GaussEntry(label, mt.group(1) == "O", sign))
        pos = mt.end()
    return GaussCode(tuple(entries))


def _knot_steps(m: Mosaic) -> tuple[StrandStep, ...]:
    comps = trace(m).components
    if len(comps) != 1:
        raise NotAKnot(f"mosaic has {len(comps)} components")
    return comps[0]


def gauss_code_with_cells(m: Mosaic) -> tuple[GaussCode, list[tuple[int, int]]]:
    """Gauss code of a knot mosaic and the cell visited by each entry."""
    steps = _knot_steps(m)
    t = m.tiles
    signs = crossing_signs(m)
    labels: dict[tuple[int, int], int] = {}
    entries, cells = [], []
    for step in steps:
        r, c = step.cell
        kind = t[r][c]
        if kind not in (Kind.T9, Kind.T10):
            continue
        label = labels.setdefault(step.cell, len(labels) + 1)
        vertical = step.entry in (0, 2)
        over = vertical if kind == Kind.T9 else not vertical
        entries.append(GaussEntry(label, over, signs[step.cell]))
        cells.append(step.cell)
    return GaussCode(tuple(entries)), cells


def gauss_code(m: Mosaic) -> GaussCode:
    """Signed Gauss code of a one-component mosaic.

    Crossings are numbered in first-visit order from the deterministic trace
    start; virtual crossings are not recorded.
    """
    return gauss_code_with_cells(m)[0]


def writhe(m: Mosaic) -> int:
    _knot_steps(m)
    return sum(crossing_signs(m).values())


def total_writhe(m: Mosaic) -> int:
    """Sum of crossing signs for any number of components."""
    return sum(crossing_signs(m).values())
