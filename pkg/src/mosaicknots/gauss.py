"""Gauss-code parsing, list inversion, realizability, and mosaic layout.

Layout works on the inverted list.  Reversing the stretch between the two
occurrences of every label turns the knot diagram into one simple closed
curve (a vertical spine closed around the left edge of the grid) carrying
``2c`` sites.  Each crossing becomes a ribbon: two parallel strands leave the
spine at the first site, swap once at a single crossing tile and come back
at the second site.  Ribbons sit to the left or right of the spine according
to a two-colouring of the chord interlacement graph.  When no proper colouring
exists the code is not planar and ribbons that still cross each other get
virtual crossing tiles.

Every site takes two rows and the closure one row above and one below, so the
grid is ``4c + 2`` tall.  Each ribbon needs two columns, so the grid is at
most ``2c + 2`` wide.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product

from .errors import LabelCountMismatch, MosaicError, NotRealizable, ParseError
from .tiles import (
    CLASSICAL,
    FLIP,
    VIRTUAL,
    Kind,
    Mosaic,
    E,
    N,
    S,
    W,
    transform,
)
from .topology import _trace_unchecked
from .topology import GaussCode, GaussEntry, gauss_code, gauss_code_with_cells, parse_gauss_text


def validate(code: GaussCode) -> GaussCode:
    seen: dict[int, list[GaussEntry]] = {}
    for e in code:
        seen.setdefault(e.label, []).append(e)
    for label, occ in seen.items():
        if len(occ) != 2:
            raise LabelCountMismatch(f"label {label} occurs {len(occ)} times")
        if occ[0].over == occ[1].over:
            raise LabelCountMismatch(f"label {label} has the same passage twice")
        if occ[0].sign != occ[1].sign:
            raise ParseError(f"label {label} carries inconsistent signs")
    return code


def parse_gauss(text: str) -> GaussCode:
    """Parse and validate ``O1+U2+...``; every label must occur once over
    and once under."""
    return validate(parse_gauss_text(text))


def invert_lists(code: GaussCode) -> GaussCode:
    """For each label in ascending order, reverse the entries strictly
    between its two occurrences."""
    entries = list(code.entries)
    for label in sorted({e.label for e in entries}):
        i, j = [k for k, e in enumerate(entries) if e.label == label]
        entries[i + 1:j] = entries[i + 1:j][::-1]
    return GaussCode(tuple(entries))


def _positions(labels) -> dict[int, tuple[int, int]]:
    pos: dict[int, list[int]] = {}
    for i, lab in enumerate(labels):
        pos.setdefault(lab, []).append(i)
    return {lab: (p[0], p[1]) for lab, p in pos.items()}


def interlacement(labels) -> dict[int, set[int]]:
    """Graph on labels; two labels are adjacent when their chords cross."""
    pos = _positions(labels)
    graph = {lab: set() for lab in pos}
    for a, (p, q) in pos.items():
        for b, (r, s) in pos.items():
            if a < b and (p < r < q) != (p < s < q):
                graph[a].add(b)
                graph[b].add(a)
    return graph


def is_realizable(code: GaussCode) -> bool:
    """Planarity of a Gauss word by the interlacement parity conditions.

    With ``I(v)`` the labels interlaced with ``v``: every ``|I(v)|`` is even;
    ``|I(u) & I(v)|`` is even for every non-interlaced pair; and the
    interlaced pairs with even ``|I(u) & I(v)|`` form an edge cut of the
    interlacement graph.
    """
    graph = interlacement(code.labels)
    if any(len(nb) % 2 for nb in graph.values()):
        return False
    labels = sorted(graph)
    for i, u in enumerate(labels):
        for v in labels[i + 1:]:
            if v not in graph[u] and len(graph[u] & graph[v]) % 2:
                return False
    # 2-colour so that cut edges are exactly the even ones
    colour: dict[int, int] = {}
    for start in labels:
        if start in colour:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in graph[u]:
                want = colour[u] ^ (len(graph[u] & graph[v]) % 2 == 0)
                if v not in colour:
                    colour[v] = want
                    queue.append(v)
                elif colour[v] != want:
                    return False
    return True


# ---------------------------------------------------------------------------
# layout


@dataclass(frozen=True)
class Chord:
    label: int
    first: int  # site index along the spine
    second: int
    side: str  # "L" or "R"
    level: int  # 1 = closest to the spine


@dataclass(frozen=True)
class LayoutPlan:
    """Geometry of a compiled code.

    Site ``i`` of the inverted word owns rows ``2i + 1`` and ``2i + 2``;
    row 0 and the last row carry the closure together with column 0.
    """

    word: GaussCode
    chords: tuple[Chord, ...]
    spine: int
    width: int
    height: int


def _colourings(labels, graph, allow_virtual: bool):
    """Side assignments; several when the interlacement graph is disconnected."""
    comps = []
    colour: dict[int, int] = {}
    conflicts = False
    for start in labels:
        if start in colour:
            continue
        comp = [start]
        colour[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in sorted(graph[u]):
                if v not in colour:
                    colour[v] = 1 - colour[u]
                    comp.append(v)
                    queue.append(v)
                elif colour[v] == colour[u]:
                    conflicts = True
        comps.append(comp)
    if conflicts:
        if not allow_virtual:
            raise NotRealizable("Gauss code has no planar realization")
        # greedy: each label joins the side with fewer interlaced neighbours
        colour = {}
        for lab in labels:
            same = [sum(1 for v in graph[lab] if colour.get(v) == side) for side in (0, 1)]
            colour[lab] = 0 if same[0] <= same[1] else 1
        yield colour
        return
    for flips in product((0, 1), repeat=max(len(comps) - 1, 0)):
        out = dict(colour)
        for comp, flip in zip(comps[1:], flips):
            for lab in comp:
                out[lab] ^= flip
        yield out


def plan_layout(word: GaussCode, colour: dict[int, int]) -> LayoutPlan:
    pos = _positions(word.labels)
    chords = []
    for side_bit, side in ((1, "R"), (0, "L")):
        mine = sorted((q - p, p, lab) for lab, (p, q) in pos.items() if colour[lab] == side_bit)
        placed: list[tuple[int, int, int]] = []
        for _, p, lab in mine:
            q = pos[lab][1]
            level = 1 + max((lv for a, b, lv in placed if a < q and p < b), default=0)
            placed.append((p, q, level))
            chords.append(Chord(lab, p, q, side, level))
    chords.sort(key=lambda ch: ch.first)
    left = max((ch.level for ch in chords if ch.side == "L"), default=0)
    right = max((ch.level for ch in chords if ch.side == "R"), default=0)
    spine = 1 + 2 * left
    return LayoutPlan(word, tuple(chords), spine, spine + 1 + 2 * right, 2 * len(word) + 2)


class _Canvas:
    def __init__(self, width, height):
        self.width, self.height = width, height
        self.strokes: dict[tuple[int, int], list] = {}

    def put(self, r, c, a, b, tag=None):
        self.strokes.setdefault((r, c), []).append((frozenset((a, b)), tag))

    def hline(self, r, c0, c1):
        for c in range(min(c0, c1), max(c0, c1) + 1):
            self.put(r, c, E, W)

    def vline(self, c, r0, r1):
        for r in range(min(r0, r1), max(r0, r1) + 1):
            self.put(r, c, N, S)

    def tiles(self, crossing_kind):
        n = max(self.width, self.height)
        rows = [[0] * n for _ in range(n)]
        single = {
            frozenset((S, W)): Kind.T1, frozenset((E, S)): Kind.T2,
            frozenset((N, E)): Kind.T3, frozenset((N, W)): Kind.T4,
            frozenset((N, S)): Kind.T5, frozenset((E, W)): Kind.T6,
        }
        for (r, c), strokes in self.strokes.items():
            if len(strokes) == 1:
                rows[r][c] = single[strokes[0][0]]
                continue
            pairs = {p for p, _ in strokes}
            if len(strokes) != 2 or pairs != {frozenset((N, S)), frozenset((E, W))}:
                raise AssertionError(f"overlapping strokes at {(r, c)}")
            tags = [t for _, t in strokes if t is not None]
            rows[r][c] = crossing_kind.get((r, c), Kind.T9) if tags else Kind.TV
        return rows


def _draw(plan: LayoutPlan, twisted=frozenset(), active=None):
    """Paint the plan; chords outside ``active`` leave the spine straight.

    A twisted ribbon swaps its two strands a second time through a virtual
    crossing just before the second site.
    """
    s, h = plan.spine, plan.height
    cv = _Canvas(plan.width, h)
    cells: dict[tuple[int, int], int] = {}
    # closure: row 0, column 0 and the last row
    cv.put(0, 0, E, S)
    cv.put(h - 1, 0, N, E)
    if s > 1:
        cv.hline(0, 1, s - 1)
        cv.hline(h - 1, 1, s - 1)
    cv.put(0, s, W, S)
    cv.put(h - 1, s, N, W)
    cv.vline(0, 1, h - 2)
    chords = [ch for ch in plan.chords if active is None or ch.label in active]
    sites = set()
    for ch in chords:
        sites.update((ch.first, ch.second))
    for i in range(len(plan.word)):
        if i not in sites:
            cv.vline(s, 2 * i + 1, 2 * i + 2)
    for ch in chords:
        r, r2 = 2 * ch.first + 1, 2 * ch.second + 1
        d = 1 if ch.side == "R" else -1
        out_side, in_side = (E, W) if d == 1 else (W, E)
        x_in = s + d * (2 * ch.level - 1)
        x_out = x_in + d
        for row in (r, r2):
            cv.put(row, s, N, out_side)
            cv.put(row + 1, s, out_side, S)
        # first site: top strand turns down at x_in, bottom strand at x_out
        if abs(x_in - s) > 1:
            cv.hline(r, s + d, x_in - d)
            cv.hline(r + 1, s + d, x_in - d)
            cv.hline(r2, s + d, x_in - d)
        cv.put(r, x_in, in_side, S)
        cv.put(r + 1, x_in, N, S, tag=ch.label)
        cv.put(r + 1, x_in, E, W, tag=ch.label)
        cells[(r + 1, x_in)] = ch.label
        cv.put(r + 1, x_out, in_side, S)
        if r2 - 1 >= r + 2:
            cv.vline(x_in, r + 2, r2 - 1)
        if ch.label in twisted:
            cv.vline(x_out, r + 2, r2 - 1)
            cv.put(r2, x_out, N, in_side)
            cv.put(r2, x_in, N, S)
            cv.put(r2, x_in, E, W)
            if abs(x_in - s) > 1:
                cv.hline(r2 + 1, s + d, x_in - d)
            cv.put(r2 + 1, x_in, N, in_side)
        else:
            cv.vline(x_out, r + 2, r2)
            cv.put(r2, x_in, N, in_side)
            cv.hline(r2 + 1, s + d, x_in)
            cv.put(r2 + 1, x_out, N, in_side)
    return cv, cells


def _mosaic(cv: _Canvas, kinds=None) -> Mosaic:
    rows = cv.tiles(kinds or {})
    alphabet = VIRTUAL if any(Kind.TV in row for row in rows) else CLASSICAL
    return Mosaic.from_rows(rows, alphabet)


def _twists(plan: LayoutPlan) -> frozenset:
    """Undo the inversions in reverse label order; a ribbon that would split
    the curve in two gets a twist."""
    twisted: set[int] = set()
    active: set[int] = set()
    for label in sorted((ch.label for ch in plan.chords), reverse=True):
        active.add(label)
        cv, _ = _draw(plan, frozenset(twisted), active)
        if len(_trace_unchecked(_mosaic(cv))) != 1:
            twisted.add(label)
    return frozenset(twisted)


def _realize(code: GaussCode, word: GaussCode, colour, allow_virtual: bool) -> Mosaic:
    plan = plan_layout(word, colour)
    twisted = _twists(plan)
    if twisted and not allow_virtual:
        raise NotRealizable("Gauss code has no planar realization")
    cv, cells = _draw(plan, twisted)
    draft = _mosaic(cv)
    realized, visit_cells = gauss_code_with_cells(draft)
    cell_label = [cells[cell] for cell in visit_cells]
    target = code.labels
    steps = _find_alignment(cell_label, target)
    if steps is None:
        raise AssertionError("layout does not reproduce the Gauss word")
    order, shift = steps
    # realized visit i corresponds to input entry index idx(i)
    kinds = {}
    m = len(target)
    for i, cell in enumerate(visit_cells):
        idx = (shift + i) % m if order == 1 else (shift - i) % m
        entry = code.entries[idx]
        # the draft is all T9, so a visit is over iff it runs vertically
        vertical = realized.entries[i].over
        kinds[cell] = Kind.T9 if entry.over == vertical else Kind.T10
    return _mosaic(cv, kinds)


def _find_alignment(seq, target):
    m = len(seq)
    if m != len(target):
        return None
    for order in (1, -1):
        for shift in range(m):
            if all(target[(shift + order * i) % m] == seq[i] for i in range(m)):
                return order, shift
    return None


def layout(code: GaussCode, allow_virtual: bool = False) -> Mosaic:
    """Compile a validated Gauss code into a suitably connected mosaic of
    size at most ``4c + 2``.

    Raises :class:`NotRealizable` for non-planar codes unless
    ``allow_virtual``.  When the input is signed the realization (and its
    reflection) whose signs agree is preferred.
    """
    validate(code)
    if not len(code):
        return Mosaic.from_rows([[2, 1], [3, 4]])
    word = invert_lists(code)
    labels = sorted(set(code.labels))
    graph = interlacement(word.labels)
    first = None
    for colour in _colourings(labels, graph, allow_virtual):
        m = _realize(code, word, colour, allow_virtual)
        if first is None:
            first = m
        if not code.signed:
            return m
        for cand in (m, transform(m, FLIP)):
            if roundtrip_check(code, cand):
                return cand
    return first


def layout_plan(code: GaussCode, allow_virtual: bool = False) -> LayoutPlan:
    validate(code)
    word = invert_lists(code)
    colour = next(_colourings(sorted(set(code.labels)), interlacement(word.labels), allow_virtual))
    return plan_layout(word, colour)


def roundtrip_check(code: GaussCode, m: Mosaic) -> bool:
    """Does ``m`` trace back to ``code`` up to relabeling, rotation and
    reversal?  Signs are compared only when ``code`` carries them."""
    try:
        realized = gauss_code(m)
    except MosaicError:
        return False
    return realized.normal_form(code.signed) == code.normal_form(code.signed)


def compile_gauss(text: str, allow_virtual: bool = False) -> Mosaic:
    return layout(parse_gauss(text), allow_virtual)
