"""Kauffman bracket by state sum, Jones polynomial, and the span bound."""

from __future__ import annotations

from itertools import product

from .errors import NotAKnot, TooManyCrossings
from .laurent import DELTA, LaurentPoly
from .tiles import CONN, PAIRING, Kind, Mosaic, E, N, S, W
from .topology import counts, total_writhe, trace

DEFAULT_CROSSING_LIMIT = 24

# smoothing pairs: A-smoothing joins the regions swept when the over strand
# turns counterclockwise
_A_SMOOTH = {Kind.T9: ((N, E), (S, W)), Kind.T10: ((N, W), (E, S))}
_B_SMOOTH = {Kind.T9: ((N, W), (E, S)), Kind.T10: ((N, E), (S, W))}


def _point_ids(m: Mosaic):
    """Map each (row, col, side) connection point to a shared-edge id."""
    ids = {}
    n = m.n
    nxt = 0
    for r in range(n):
        for c in range(n):
            bits = CONN[m.tiles[r][c]]
            if bits >> E & 1:
                ids[(r, c, E)] = ids[(r, c + 1, W)] = nxt
                nxt += 1
            if bits >> S & 1:
                ids[(r, c, S)] = ids[(r + 1, c, N)] = nxt
                nxt += 1
    return ids, nxt


def _find(parent, x):
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def kauffman_bracket(m: Mosaic, max_crossings: int = DEFAULT_CROSSING_LIMIT) -> LaurentPoly:
    """State-sum bracket normalized so that a single circle evaluates to 1.

    Virtual tiles are transparent: both strands pass straight through.
    """
    comps = trace(m)  # raises on bad connectivity
    if not len(comps):
        raise NotAKnot("empty mosaic has no components")
    crossings = [(r, c) for r, c in m.cells() if m.tiles[r][c] in (Kind.T9, Kind.T10)]
    if len(crossings) > max_crossings:
        raise TooManyCrossings(f"{len(crossings)} crossings exceeds limit {max_crossings}")
    ids, size = _point_ids(m)

    parent = list(range(size))
    for r, c in m.cells():
        k = m.tiles[r][c]
        if k in (Kind.T9, Kind.T10):
            continue
        for a, b in PAIRING[k]:
            x, y = _find(parent, ids[(r, c, a)]), _find(parent, ids[(r, c, b)])
            if x != y:
                parent[x] = y
    roots = sorted({_find(parent, i) for i in range(size)})
    local = {root: i for i, root in enumerate(roots)}
    nodes = len(roots)
    options = []
    for r, c in crossings:
        k = m.tiles[r][c]
        per = []
        for pairs in (_A_SMOOTH[k], _B_SMOOTH[k]):
            joins = []
            for a, b in pairs:
                ra = local[_find(parent, ids[(r, c, a)])]
                rb = local[_find(parent, ids[(r, c, b)])]
                joins.append((ra, rb))
            per.append(joins)
        options.append(per)

    acc: dict[tuple[int, int], int] = {}
    for state in product((0, 1), repeat=len(crossings)):
        p = list(range(nodes))
        loops = nodes
        for choice, per in zip(state, options):
            for a, b in per[choice]:
                x, y = _find(p, a), _find(p, b)
                if x != y:
                    p[x] = y
                    loops -= 1
        a_count = len(state) - sum(state)
        key = (a_count - sum(state), loops)
        acc[key] = acc.get(key, 0) + 1

    total = LaurentPoly()
    for (exp, loops), mult in acc.items():
        total = total + LaurentPoly.monomial(exp, mult) * DELTA ** (loops - 1)
    return total


def jones_in_A(m: Mosaic) -> LaurentPoly:
    """Writhe-normalized bracket ``(-A^3)^(-w) <K>`` as a polynomial in A."""
    if counts(m).components != 1:
        raise NotAKnot("Jones polynomial is computed for knots only")
    bracket = kauffman_bracket(m)
    w = total_writhe(m)
    return LaurentPoly.monomial(-3 * w, (-1) ** w) * bracket


def jones(m: Mosaic) -> LaurentPoly:
    """Jones polynomial in ``t`` via ``t = A^-4``."""
    return jones_in_A(m).scale_exponents(-4)


def span_crossing_bound(m: Mosaic) -> int:
    """``span(<K>) / 4``, a lower bound on the crossing number of the knot."""
    if counts(m).components != 1:
        raise NotAKnot("span bound is computed for knots only")
    return kauffman_bracket(m).span() // 4


TREFOIL = LaurentPoly({-4: -1, -3: 1, -1: 1})
FIGURE_EIGHT = LaurentPoly({-2: 1, -1: -1, 0: 1, 1: -1, 2: 1})
UNKNOT = LaurentPoly.constant(1)


def same_up_to_mirror(p: LaurentPoly, q: LaurentPoly) -> bool:
    return p == q or p == q.substitute(-1)
