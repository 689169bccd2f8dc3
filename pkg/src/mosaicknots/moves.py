"""Planar isotopy and Reidemeister moves as local rewrites of a mosaic.

Planar rules are generated: every pair of crossing-free, loop-free 2x2
patches that share a boundary profile and an endpoint pairing.  Reidemeister
and virtual base rules live in ``data/moves-v1.txt`` and are closed under the
square symmetries, global crossing change and reversal.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import product
from typing import NamedTuple, Optional

from .errors import NonEmptyBorder, NotApplicable
from .laurent import DELTA, LaurentPoly
from .tiles import (
    CLASSICAL,
    CONN,
    D4,
    MIRROR_KIND,
    OPPOSITE,
    PARTNER,
    ROTATIONS,
    STEP,
    VIRTUAL,
    Kind,
    Mosaic,
    E,
    N,
    S,
    W,
    _TILE_IMAGE,
    grow,
    is_suitably_connected,
    parse_mosaic,
    serialize_mosaic,
    shrink,
    transform,
)

WILDCARD = -1
KINDS = ("planar", "R1", "R2", "R3", "virtual")


@dataclass(frozen=True)
class Pattern:
    k: int
    cells: tuple  # k x k tuple of kind ints, WILDCARD for "?"

    def transformed(self, g) -> "Pattern":
        rows = [[0] * self.k for _ in range(self.k)]
        image = _TILE_IMAGE[g._index]
        for r in range(self.k):
            for c in range(self.k):
                rr, cc = g.cell(r, c, self.k)
                v = self.cells[r][c]
                rows[rr][cc] = v if v == WILDCARD else image[v]
        return Pattern(self.k, tuple(map(tuple, rows)))

    def mirrored(self) -> "Pattern":
        return Pattern(self.k, tuple(
            tuple(v if v == WILDCARD else MIRROR_KIND[v] for v in row) for row in self.cells))

    def flat(self) -> tuple:
        return tuple(v for row in self.cells for v in row)

    def has_virtual(self) -> bool:
        return Kind.TV in self.flat()

    def text(self) -> str:
        head = "#alphabet: virtual\n" if self.has_virtual() else ""
        body = "\n".join(
            " ".join("?" if v == WILDCARD else Kind(v).token for v in row) for row in self.cells)
        return f"{head}{self.k}\n{body}\n"


@dataclass(frozen=True)
class MoveRule:
    before: Pattern
    after: Pattern
    kind: str

    def reverse(self) -> "MoveRule":
        return MoveRule(self.after, self.before, self.kind)


class Placement(NamedTuple):
    rule: int
    anchor: tuple[int, int]


# ---------------------------------------------------------------------------
# boundary profiles and pairings


def boundary_slots(k: int) -> list[tuple[int, int, int]]:
    """Boundary connection slots of a k x k patch, clockwise from top-left."""
    top = [(0, c, N) for c in range(k)]
    right = [(r, k - 1, E) for r in range(k)]
    bottom = [(k - 1, c, S) for c in reversed(range(k))]
    left = [(r, 0, W) for r in reversed(range(k))]
    return top + right + bottom + left


def boundary_profile(p: Pattern) -> tuple[int, ...]:
    return tuple(
        -1 if p.cells[r][c] == WILDCARD else CONN[p.cells[r][c]] >> s & 1
        for r, c, s in boundary_slots(p.k)
    )


def _internally_matched(p: Pattern) -> bool:
    k = p.k
    for r in range(k):
        for c in range(k):
            v = p.cells[r][c]
            if v == WILDCARD:
                continue
            if c + 1 < k and p.cells[r][c + 1] != WILDCARD:
                if (CONN[v] >> E & 1) != (CONN[p.cells[r][c + 1]] >> W & 1):
                    return False
            if r + 1 < k and p.cells[r + 1][c] != WILDCARD:
                if (CONN[v] >> S & 1) != (CONN[p.cells[r + 1][c]] >> N & 1):
                    return False
    return True


def endpoint_pairing(p: Pattern, smoothing: Optional[dict] = None):
    """Pair the boundary endpoints of a wildcard-free patch.

    Strands pass straight through crossing and virtual tiles unless
    ``smoothing`` maps a cell to replacement side pairs.  Returns
    ``(pairs, closed_loops)`` where ``pairs`` is a sorted tuple of index
    pairs into :func:`boundary_slots`.
    """
    k = p.k
    slots = boundary_slots(k)
    index = {s: i for i, s in enumerate(slots)}

    def partner(r, c, side):
        if smoothing and (r, c) in smoothing:
            for a, b in smoothing[(r, c)]:
                if side == a:
                    return b
                if side == b:
                    return a
            return -1
        return PARTNER[p.cells[r][c]][side]

    seen = set()
    pairs = []
    for i, (r, c, side) in enumerate(slots):
        if partner(r, c, side) < 0 or i in seen:
            continue
        rr, cc, entry = r, c, side
        while True:
            ex = partner(rr, cc, entry)
            seen.add((rr, cc, min(entry, ex), "s"))
            dr, dc = STEP[ex]
            if not (0 <= rr + dr < k and 0 <= cc + dc < k):
                j = index[(rr, cc, ex)]
                break
            rr, cc, entry = rr + dr, cc + dc, OPPOSITE[ex]
        seen.update((i, j))
        pairs.append((min(i, j), max(i, j)))
    # strands not reached from the boundary form closed loops
    loops = 0
    for r in range(k):
        for c in range(k):
            for side in range(4):
                ex = partner(r, c, side)
                if ex < 0 or (r, c, min(side, ex), "s") in seen:
                    continue
                loops += 1
                rr, cc, entry = r, c, side
                while True:
                    ex = partner(rr, cc, entry)
                    seen.add((rr, cc, min(entry, ex), "s"))
                    dr, dc = STEP[ex]
                    rr, cc, entry = rr + dr, cc + dc, OPPOSITE[ex]
                    if (rr, cc, entry) == (r, c, side):
                        break
    return tuple(sorted(pairs)), loops


_A_SMOOTH = {Kind.T9: ((N, E), (S, W)), Kind.T10: ((N, W), (E, S))}
_B_SMOOTH = {Kind.T9: ((N, W), (E, S)), Kind.T10: ((N, E), (S, W))}


def tangle_bracket(p: Pattern) -> dict:
    """Bracket of a patch as a map ``endpoint pairing -> LaurentPoly``.

    Each state contributes ``A^(a-b) d^loops`` to the entry of its boundary
    pairing; two patches with equal maps are interchangeable inside any
    mosaic without changing the bracket.
    """
    crossings = [(r, c) for r in range(p.k) for c in range(p.k)
                 if p.cells[r][c] in (Kind.T9, Kind.T10)]
    out: dict = {}
    for state in product((0, 1), repeat=len(crossings)):
        smoothing = {}
        for choice, (r, c) in zip(state, crossings):
            kind = Kind(p.cells[r][c])
            smoothing[(r, c)] = (_B_SMOOTH if choice else _A_SMOOTH)[kind]
        pairs, loops = endpoint_pairing(p, smoothing)
        term = LaurentPoly.monomial(len(state) - 2 * sum(state)) * DELTA ** loops
        out[pairs] = out.get(pairs, LaurentPoly()) + term
    return {k: v for k, v in out.items() if v}


def bracket_factor(rule: MoveRule) -> Optional[LaurentPoly]:
    """The unit ``u`` with ``tangle(before) = u * tangle(after)``, or None."""
    tb, ta = tangle_bracket(rule.before), tangle_bracket(rule.after)
    for u in (LaurentPoly.constant(1), LaurentPoly.monomial(3, -1), LaurentPoly.monomial(-3, -1)):
        if set(tb) == set(ta) and all(tb[key] == u * ta[key] for key in ta):
            return u
    return None


# ---------------------------------------------------------------------------
# catalog


def _generate_planar() -> list[MoveRule]:
    groups: dict[tuple, list[Pattern]] = {}
    for flat in product(range(9), repeat=4):
        p = Pattern(2, (flat[:2], flat[2:]))
        if not _internally_matched(p):
            continue
        pairs, loops = endpoint_pairing(p)
        if loops:
            continue
        groups.setdefault((boundary_profile(p), pairs), []).append(p)
    rules = []
    for members in groups.values():
        for a in members:
            for b in members:
                if a != b:
                    rules.append(MoveRule(a, b, "planar"))
    return rules


def load_base_rules(text: Optional[str] = None) -> list[MoveRule]:
    """Parse a catalog document (defaults to the shipped ``moves-v1``)."""
    if text is None:
        text = resources.files(__package__).joinpath("data/moves-v1.txt").read_text()
    rules = []
    for block in text.split("\nkind:")[1:]:
        head, _, body = block.partition("\n")
        kind = head.strip()
        if kind not in KINDS:
            raise ValueError(f"unknown move kind {kind!r}")
        before_text, _, after_text = body.partition("\n->\n")
        pats = []
        for chunk in (before_text, after_text):
            lines = [ln for ln in chunk.strip("\n").split("\n") if ln.strip()]
            k, rows, _ = parse_mosaic("\n".join(lines) + "\n", wildcard="?")
            pats.append(Pattern(k, rows))
        rules.append(MoveRule(pats[0], pats[1], kind))
    return rules


def _close(rules: list[MoveRule]) -> list[MoveRule]:
    seen = {}
    for rule in rules:
        for g in D4:
            for mirror_it in (False, True):
                b, a = rule.before.transformed(g), rule.after.transformed(g)
                if mirror_it:
                    b, a = b.mirrored(), a.mirrored()
                for r in (MoveRule(b, a, rule.kind), MoveRule(a, b, rule.kind)):
                    seen.setdefault((r.before, r.after), r)
    return list(seen.values())


class Catalog:
    """Immutable rule list plus an index from ``before`` patterns to rules."""

    def __init__(self, rules: list[MoveRule]):
        self.rules = tuple(rules)
        self.by_before: dict[tuple[int, tuple], list[int]] = {}
        self.wild: list[int] = []
        for i, rule in enumerate(self.rules):
            if WILDCARD in rule.before.flat():
                self.wild.append(i)
            else:
                self.by_before.setdefault((rule.before.k, rule.before.flat()), []).append(i)
        self.sizes = sorted({r.before.k for r in self.rules})
        self._ids = {(r.before, r.after): i for i, r in enumerate(self.rules)}

    def __len__(self):
        return len(self.rules)

    def __getitem__(self, i) -> MoveRule:
        return self.rules[i]

    def __iter__(self):
        return iter(self.rules)

    def index_of(self, rule: MoveRule) -> int:
        return self._ids[(rule.before, rule.after)]


def _sort_key(rule: MoveRule):
    return (KINDS.index(rule.kind), rule.before.k, rule.before.flat(), rule.after.flat())


@lru_cache(maxsize=None)
def move_catalog(alphabet: str = CLASSICAL) -> Catalog:
    """All rules for an alphabet, deduplicated, in deterministic order."""
    base = [r for r in load_base_rules()
            if alphabet == VIRTUAL or not (r.before.has_virtual() or r.after.has_virtual())]
    rules = _generate_planar() + _close(base)
    rules.sort(key=_sort_key)
    return Catalog(rules)


# ---------------------------------------------------------------------------
# application


def _window(m: Mosaic, k: int, r: int, c: int) -> tuple:
    return tuple(v for row in m.tiles[r:r + k] for v in row[c:c + k])


def _matches(p: Pattern, window: tuple) -> bool:
    return all(a == WILDCARD or a == b for a, b in zip(p.flat(), window))


def _rewrite(m: Mosaic, rule: MoveRule, anchor) -> Mosaic:
    r0, c0 = anchor
    updates = {}
    for r in range(rule.after.k):
        for c in range(rule.after.k):
            v = rule.after.cells[r][c]
            if v != WILDCARD:
                updates[(r0 + r, c0 + c)] = v
    return m.replace(updates)


def _window_connected(m: Mosaic, r0: int, c0: int, k: int) -> bool:
    """Suitable connectivity of every side touching the ``k x k`` window."""
    n, t = m.n, m.tiles
    for r in range(r0, r0 + k):
        for c in range(c0, c0 + k):
            bits = CONN[t[r][c]]
            for s in range(4):
                dr, dc = STEP[s]
                rr, cc = r + dr, c + dc
                has = bits >> s & 1
                if not (0 <= rr < n and 0 <= cc < n):
                    if has:
                        return False
                elif has != CONN[t[rr][cc]] >> OPPOSITE[s] & 1:
                    return False
    return True


def applicable_moves(m: Mosaic, catalog: Optional[Catalog] = None) -> list[Placement]:
    """Every (rule, anchor) whose ``before`` matches and whose result stays
    suitably connected, sorted by rule id then anchor."""
    catalog = catalog or move_catalog(m.alphabet)
    out = []
    n = m.n
    for k in catalog.sizes:
        for r in range(n - k + 1):
            for c in range(n - k + 1):
                window = _window(m, k, r, c)
                for i in catalog.by_before.get((k, window), ()):
                    out.append(Placement(i, (r, c)))
                for i in catalog.wild:
                    if catalog[i].before.k == k and _matches(catalog[i].before, window):
                        out.append(Placement(i, (r, c)))
    # a rewrite of a connected mosaic can only break the sides it touches
    local = not is_suitably_connected(m)
    good = []
    for pl in out:
        rule = catalog[pl.rule]
        if m.alphabet == CLASSICAL and rule.after.has_virtual():
            continue
        new = _rewrite(m, rule, pl.anchor)
        if local:
            ok = _window_connected(new, *pl.anchor, rule.after.k)
        else:
            ok = not is_suitably_connected(new)
        if ok:
            good.append(pl)
    good.sort()
    return good


def apply_move(m: Mosaic, rule_id: int, anchor, catalog: Optional[Catalog] = None) -> Mosaic:
    catalog = catalog or move_catalog(m.alphabet)
    if not 0 <= rule_id < len(catalog):
        raise NotApplicable(f"no rule {rule_id}")
    rule = catalog[rule_id]
    r, c = anchor
    k = rule.before.k
    if r < 0 or c < 0 or r + k > m.n or c + k > m.n or not _matches(rule.before, _window(m, k, r, c)):
        raise NotApplicable(f"rule {rule_id} does not match at {anchor}")
    if m.alphabet == CLASSICAL and rule.after.has_virtual():
        raise NotApplicable("virtual rule on a classical mosaic")
    out = _rewrite(m, rule, anchor)
    if is_suitably_connected(out):
        raise NotApplicable("rewrite breaks suitable connectivity")
    return out


def transform_placement(pl: Placement, g, n: int, catalog: Catalog) -> Placement:
    """Image of a placement under a square symmetry of an ``n``-mosaic."""
    rule = catalog[pl.rule]
    k = rule.before.k
    r, c = pl.anchor
    corners = [g.cell(r + dr, c + dc, n) for dr in (0, k - 1) for dc in (0, k - 1)]
    anchor = (min(x for x, _ in corners), min(y for _, y in corners))
    image = MoveRule(rule.before.transformed(g), rule.after.transformed(g), rule.kind)
    return Placement(catalog.index_of(image), anchor)


# ---------------------------------------------------------------------------
# search


def _crossings(m: Mosaic) -> int:
    return sum(1 for k in m.flat() if k in (Kind.T9, Kind.T10, Kind.TV))


def _key(m: Mosaic):
    return (_crossings(m), m.n, serialize_mosaic(m))


def _shrink_all(m: Mosaic) -> Mosaic:
    while m.n > 1:
        try:
            m = shrink(m)
        except NonEmptyBorder:
            break
    return m


def simplify(m: Mosaic, max_steps: int = 2000, max_grow: int = 1) -> Mosaic:
    """Best-first search for a smaller diagram of the same link.

    States are ranked by ``(crossings, n, serialized text)``; the search
    expands at most ``max_steps`` states and never grows past
    ``m.n + max_grow``.  Returns the best mosaic seen.
    """
    limit = m.n + max_grow
    catalog = move_catalog(m.alphabet)
    start = _shrink_all(m)
    best = start
    heap = [(_key(start), start)]
    seen = {start}
    steps = 0
    while heap and steps < max_steps:
        _, cur = heapq.heappop(heap)
        steps += 1
        if _key(cur) < _key(best):
            best = cur
        nbrs = [_rewrite(cur, catalog[pl.rule], pl.anchor) for pl in applicable_moves(cur, catalog)]
        nbrs = [_shrink_all(x) for x in nbrs]
        if cur.n < limit:
            nbrs.append(grow(cur))
        for x in nbrs:
            if x not in seen:
                seen.add(x)
                heapq.heappush(heap, (_key(x), x))
    return best


def equivalent_bfs(a: Mosaic, b: Mosaic, max_states: int = 20000, max_grow: int = 1):
    """Breadth-first search for a move sequence turning ``a`` into ``b``.

    Steps are ``("move", rule_id, anchor)``, ``("grow",)``, ``("shrink",)``
    and ``("rotate", quarter_turns)``.  Returns the path, or None when the
    budget runs out (which proves nothing).
    """
    if a == b:
        return []
    limit = max(a.n, b.n) + max_grow
    alphabet = VIRTUAL if VIRTUAL in (a.alphabet, b.alphabet) else CLASSICAL
    a, b = a.with_alphabet(alphabet), b.with_alphabet(alphabet)
    catalog = move_catalog(alphabet)
    parent = {a: None}
    queue = deque([a])
    while queue and len(parent) < max_states:
        cur = queue.popleft()
        succ = []
        for g in ROTATIONS[1:]:
            succ.append((("rotate", g.rotation), transform(cur, g)))
        if cur.n < limit:
            succ.append((("grow",), grow(cur)))
        try:
            succ.append((("shrink",), shrink(cur)))
        except NonEmptyBorder:
            pass
        for pl in applicable_moves(cur, catalog):
            succ.append((("move", pl.rule, pl.anchor), _rewrite(cur, catalog[pl.rule], pl.anchor)))
        for step, nxt in succ:
            if nxt in parent:
                continue
            parent[nxt] = (cur, step)
            if nxt == b:
                path = []
                node = nxt
                while parent[node] is not None:
                    node, st = parent[node]
                    path.append(st)
                return path[::-1]
            queue.append(nxt)
    return None

