"""Tile alphabet, mosaic grids, symmetry actions and the ``.mosaic`` text format.

Sides are numbered clockwise from the top: ``N=0, E=1, S=2, W=3``.  A tile
kind is described by the pairs of sides its strands join.  The classical
alphabet has eleven kinds ``T0``..``T10``; the virtual alphabet adds ``TV``.

==== ============================== =========
kind strands                        over
==== ============================== =========
T0   (none)
T1   W-S
T2   S-E
T3   E-N
T4   N-W
T5   N-S
T6   E-W
T7   N-E, S-W
T8   N-W, S-E
T9   N-S, E-W                       N-S
T10  N-S, E-W                       E-W
TV   N-S, E-W                       (virtual)
==== ============================== =========
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BadToken, NonEmptyBorder, ParseError, RaggedRow, WrongRowCount

N, E, S, W = 0, 1, 2, 3
SIDE_NAMES = "NESW"
OPPOSITE = (S, W, N, E)
# (drow, dcol) to the neighbour across each side
STEP = ((-1, 0), (0, 1), (1, 0), (0, -1))

CLASSICAL = "classical"
VIRTUAL = "virtual"


class Kind(enum.IntEnum):
    T0 = 0
    T1 = 1
    T2 = 2
    T3 = 3
    T4 = 4
    T5 = 5
    T6 = 6
    T7 = 7
    T8 = 8
    T9 = 9
    T10 = 10
    TV = 11

    @property
    def token(self) -> str:
        return "v" if self is Kind.TV else str(int(self))


_PAIRINGS = (
    (),
    ((S, W),),
    ((E, S),),
    ((N, E),),
    ((N, W),),
    ((N, S),),
    ((E, W),),
    ((N, E), (S, W)),
    ((N, W), (E, S)),
    ((N, S), (E, W)),
    ((N, S), (E, W)),
    ((N, S), (E, W)),
)
# index into the pairing of the over strand; None for non-crossings and TV
_OVER = (None,) * 9 + (0, 1, None)

PAIRING = _PAIRINGS
CROSSINGS = frozenset({Kind.T9, Kind.T10})
FOUR_POINT = frozenset({Kind.T7, Kind.T8, Kind.T9, Kind.T10, Kind.TV})
NUM_KINDS = 12
CLASSICAL_KINDS = tuple(Kind)[:11]
ALL_KINDS = tuple(Kind)

# PARTNER[kind][side] is the side joined to ``side`` or -1
PARTNER = tuple(
    tuple(next((b if a == s else a for a, b in pairs if s in (a, b)), -1) for s in range(4))
    for pairs in _PAIRINGS
)
# bitmask of connected sides, bit i set for side i
CONN = tuple(sum(1 << s for pair in pairs for s in pair) for pairs in _PAIRINGS)


def tile_profile(kind):
    """Return ``(connections, pairing, over_strand)`` for a tile kind.

    ``connections`` is a frozenset of side indices, ``pairing`` a tuple of
    side pairs and ``over_strand`` the over pair for T9/T10, else None.
    """
    kind = Kind(kind)
    pairs = _PAIRINGS[kind]
    conns = frozenset(s for pair in pairs for s in pair)
    over = _OVER[kind]
    return conns, pairs, (pairs[over] if over is not None else None)


def token_to_kind(token: str) -> Kind:
    if token == "v":
        return Kind.TV
    if token.isdigit() and int(token) <= 10 and str(int(token)) == token:
        return Kind(int(token))
    raise ValueError(token)


# ---------------------------------------------------------------------------
# symmetry group of the square


@dataclass(frozen=True, order=True)
class D4Element:
    """``rotation`` clockwise quarter turns applied after an optional
    left-right reflection."""

    rotation: int = 0
    reflect: bool = False

    def __post_init__(self):
        object.__setattr__(self, "rotation", self.rotation % 4)

    def __matmul__(self, other: "D4Element") -> "D4Element":
        # (r^a f^s)(r^b f^t) = r^(a + (-1)^s b) f^(s+t)
        b = -other.rotation if self.reflect else other.rotation
        return D4Element(self.rotation + b, self.reflect != other.reflect)

    compose = __matmul__

    def inverse(self) -> "D4Element":
        if self.reflect:
            return self
        return D4Element(-self.rotation, False)

    def side(self, s: int) -> int:
        if self.reflect and s in (E, W):
            s = OPPOSITE[s]
        return (s + self.rotation) % 4

    def cell(self, r: int, c: int, n: int) -> tuple[int, int]:
        if self.reflect:
            c = n - 1 - c
        for _ in range(self.rotation):
            r, c = c, n - 1 - r
        return r, c

    def tile(self, kind) -> Kind:
        return Kind(_TILE_IMAGE[self._index][kind])

    @property
    def _index(self) -> int:
        return self.rotation + 4 * self.reflect

    def __repr__(self):
        return f"D4Element(r{90 * self.rotation}{', flip' if self.reflect else ''})"


IDENTITY = D4Element(0)
R90 = D4Element(1)
R180 = D4Element(2)
R270 = D4Element(3)
FLIP = D4Element(0, True)
D4 = tuple(D4Element(k, s) for s in (False, True) for k in range(4))
ROTATIONS = D4[:4]


def _image_kind(g: D4Element, kind: int) -> int:
    if kind == Kind.TV:
        return kind
    pairs = _PAIRINGS[kind]
    mapped = {tuple(sorted((g.side(a), g.side(b)))) for a, b in pairs}
    if kind in CROSSINGS:
        a, b = pairs[_OVER[kind]]
        over = tuple(sorted((g.side(a), g.side(b))))
        return Kind.T9 if over == (N, S) else Kind.T10
    for k in range(9):
        if {tuple(sorted(p)) for p in _PAIRINGS[k]} == mapped:
            return k
    raise AssertionError(kind)


_TILE_IMAGE = tuple(tuple(_image_kind(g, k) for k in range(NUM_KINDS)) for g in D4)
MIRROR_KIND = tuple({9: 10, 10: 9}.get(k, k) for k in range(NUM_KINDS))


# ---------------------------------------------------------------------------
# mosaics


@dataclass(frozen=True)
class Violation:
    cell: tuple[int, int]
    side: int
    message: str

    def __str__(self):
        return f"({self.cell[0]},{self.cell[1]}) {SIDE_NAMES[self.side]}: {self.message}"


@dataclass(frozen=True)
class Mosaic:
    """An ``n x n`` grid of tiles, row 0 at the top.

    ``tiles`` is stored as a tuple of row tuples of plain ints so that
    mosaics hash and compare cheaply; indexing returns :class:`Kind`.
    """

    n: int
    tiles: tuple
    alphabet: str = CLASSICAL

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("mosaic dimension must be positive")
        if self.alphabet not in (CLASSICAL, VIRTUAL):
            raise ValueError(f"unknown alphabet {self.alphabet!r}")
        rows = tuple(tuple(int(k) for k in row) for row in self.tiles)
        if len(rows) != self.n or any(len(row) != self.n for row in rows):
            raise ValueError("tile array is not n x n")
        for row in rows:
            for k in row:
                if not 0 <= k < NUM_KINDS:
                    raise ValueError(f"bad tile kind {k}")
                if k == Kind.TV and self.alphabet == CLASSICAL:
                    raise ValueError("virtual tile in a classical mosaic")
        object.__setattr__(self, "tiles", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], alphabet: str | None = None) -> "Mosaic":
        if alphabet is None:
            alphabet = VIRTUAL if any(k == Kind.TV for row in rows for k in row) else CLASSICAL
        return cls(len(rows), tuple(tuple(row) for row in rows), alphabet)

    @classmethod
    def blank(cls, n: int, alphabet: str = CLASSICAL) -> "Mosaic":
        return cls(n, ((0,) * n,) * n, alphabet)

    def __getitem__(self, rc) -> Kind:
        r, c = rc
        return Kind(self.tiles[r][c])

    def cells(self):
        for r in range(self.n):
            for c in range(self.n):
                yield r, c

    def flat(self) -> tuple[int, ...]:
        return tuple(k for row in self.tiles for k in row)

    def replace(self, updates: dict) -> "Mosaic":
        rows = [list(row) for row in self.tiles]
        for (r, c), k in updates.items():
            rows[r][c] = int(k)
        return Mosaic(self.n, tuple(map(tuple, rows)), self.alphabet)

    def with_alphabet(self, alphabet: str) -> "Mosaic":
        return Mosaic(self.n, self.tiles, alphabet)

    def __str__(self):
        return serialize_mosaic(self)


def is_suitably_connected(m: Mosaic) -> list[Violation]:
    """Check every shared edge and the outer boundary.

    Returns the list of violations; an empty list means the mosaic is
    suitably connected.
    """
    n, t = m.n, m.tiles
    out = []
    for r in range(n):
        for c in range(n):
            bits = CONN[t[r][c]]
            for s in range(4):
                dr, dc = STEP[s]
                rr, cc = r + dr, c + dc
                has = bits >> s & 1
                if not (0 <= rr < n and 0 <= cc < n):
                    if has:
                        out.append(Violation((r, c), s, "connection point on the outer boundary"))
                    continue
                if s in (E, S):
                    other = CONN[t[rr][cc]] >> OPPOSITE[s] & 1
                    if has != other:
                        out.append(Violation((r, c), s, "unmatched connection across shared edge"))
    return out


def transform(m: Mosaic, g: D4Element) -> Mosaic:
    n = m.n
    rows = [[0] * n for _ in range(n)]
    image = _TILE_IMAGE[g._index]
    for r in range(n):
        for c in range(n):
            rr, cc = g.cell(r, c, n)
            rows[rr][cc] = image[m.tiles[r][c]]
    return Mosaic(n, tuple(map(tuple, rows)), m.alphabet)


def mirror(m: Mosaic) -> Mosaic:
    """Crossing change at every classical crossing (T9 <-> T10)."""
    return Mosaic(m.n, tuple(tuple(MIRROR_KIND[k] for k in row) for row in m.tiles), m.alphabet)


def grow(m: Mosaic) -> Mosaic:
    rows = [row + (0,) for row in m.tiles]
    rows.append((0,) * (m.n + 1))
    return Mosaic(m.n + 1, tuple(rows), m.alphabet)


def shrink(m: Mosaic) -> Mosaic:
    if m.n < 2:
        raise NonEmptyBorder("cannot shrink a 1-mosaic")
    if any(m.tiles[-1]) or any(row[-1] for row in m.tiles):
        raise NonEmptyBorder("last row or column contains non-blank tiles")
    return Mosaic(m.n - 1, tuple(row[:-1] for row in m.tiles[:-1]), m.alphabet)


def pad_to(m: Mosaic, n: int) -> Mosaic:
    while m.n < n:
        m = grow(m)
    return m


# ---------------------------------------------------------------------------
# text format

ALPHABET_HEADER = "#alphabet:"


_TOKENS = tuple(Kind(k).token for k in range(NUM_KINDS))


def serialize_mosaic(m: Mosaic) -> str:
    lines = []
    if m.alphabet == VIRTUAL:
        lines.append(f"{ALPHABET_HEADER} {VIRTUAL}")
    lines.append(str(m.n))
    for row in m.tiles:
        lines.append(" ".join([_TOKENS[k] for k in row]))
    return "\n".join(lines) + "\n"


def _tokens(line: str) -> Iterable[tuple[int, str]]:
    col = 0
    for part in line.split():
        col = line.index(part, col)
        yield col + 1, part
        col += len(part)


def parse_mosaic(text: str, wildcard: str | None = None) -> Mosaic:
    """Parse the ``.mosaic`` text format.

    ``wildcard`` is an internal hook for move patterns: when given, that
    token is accepted and decoded as ``-1`` in a plain tuple grid (the
    result is then a ``(n, rows, alphabet)`` tuple rather than a Mosaic).
    """
    if not text.endswith("\n"):
        raise ParseError("missing trailing newline")
    lines = text[:-1].split("\n")
    lineno = 1
    alphabet = CLASSICAL
    if lines and lines[0].startswith("#"):
        head = lines[0]
        if not head.startswith(ALPHABET_HEADER):
            raise ParseError(f"unknown header {head!r}", 1, 1)
        alphabet = head[len(ALPHABET_HEADER):].strip()
        if alphabet not in (CLASSICAL, VIRTUAL):
            raise ParseError(f"unknown alphabet {alphabet!r}", 1, len(ALPHABET_HEADER) + 1)
        lines = lines[1:]
        lineno = 2
    if not lines or not lines[0].strip():
        raise ParseError("missing grid dimension", lineno, 1)
    size = lines[0].strip()
    if not size.isdigit() or int(size) < 1:
        raise BadToken(f"bad grid dimension {size!r}", lineno, 1)
    n = int(size)
    body = lines[1:]
    while body and not body[-1].strip():
        body.pop()
    if len(body) > n:
        raise WrongRowCount(f"expected {n} rows, found {len(body)}", lineno + n + 1, 1)
    rows = []
    for i, line in enumerate(body):
        ln = lineno + 1 + i
        row = []
        for col, tok in _tokens(line):
            if wildcard is not None and tok == wildcard:
                row.append(-1)
                continue
            try:
                kind = token_to_kind(tok)
            except ValueError:
                raise BadToken(f"bad tile token {tok!r}", ln, col) from None
            if kind == Kind.TV and alphabet == CLASSICAL:
                raise BadToken("virtual tile 'v' in a classical mosaic", ln, col)
            row.append(int(kind))
        if len(row) != n:
            raise RaggedRow(f"expected {n} tokens, found {len(row)}", ln, 1)
        rows.append(tuple(row))
    if len(rows) < n:
        raise WrongRowCount(f"expected {n} rows, found {len(rows)}", lineno + len(rows) + 1, 1)
    if wildcard is not None:
        return n, tuple(rows), alphabet
    return Mosaic(n, tuple(rows), alphabet)
