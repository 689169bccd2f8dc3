"""ASCII and SVG pictures of mosaics.

The ASCII form is one glyph per tile and parses back exactly (see
``parse_ascii``).  An alphabet header line precedes virtual mosaics.
"""

from __future__ import annotations

from .errors import BadToken, WrongRowCount, RaggedRow
from .tiles import PAIRING, Kind, Mosaic

GLYPHS = {
    Kind.T0: ".",
    Kind.T1: "┐",
    Kind.T2: "┌",
    Kind.T3: "└",
    Kind.T4: "┘",
    Kind.T5: "│",
    Kind.T6: "─",
    Kind.T7: "\\",
    Kind.T8: "/",
    Kind.T9: "╂",
    Kind.T10: "┿",
    Kind.TV: "v",
}
_FROM_GLYPH = {g: k for k, g in GLYPHS.items()}

_HEADER = "#alphabet: virtual"


def render_ascii(m: Mosaic) -> str:
    rows = ["".join(GLYPHS[Kind(k)] for k in row) for row in m.tiles]
    if m.alphabet == "virtual":
        rows.insert(0, _HEADER)
    return "\n".join(rows) + "\n"


def parse_ascii(text: str) -> Mosaic:
    """Inverse of ``render_ascii``."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    alphabet = "classical"
    if lines and lines[0].strip() == _HEADER:
        alphabet = "virtual"
        lines = lines[1:]
    n = len(lines)
    rows = []
    for i, ln in enumerate(lines, 1):
        ln = ln.strip()
        if len(ln) != n:
            raise RaggedRow(f"row has {len(ln)} tiles, expected {n}", line=i)
        row = []
        for j, ch in enumerate(ln, 1):
            if ch not in _FROM_GLYPH:
                raise BadToken(f"unknown glyph {ch!r}", line=i, column=j)
            row.append(int(_FROM_GLYPH[ch]))
        rows.append(row)
    if n == 0:
        raise WrongRowCount("empty picture", line=1)
    return Mosaic.from_rows(rows, alphabet)


# SVG: each tile is a unit square, strands are drawn between side midpoints
_MID = {0: (0.5, 0.0), 1: (1.0, 0.5), 2: (0.5, 1.0), 3: (0.0, 0.5)}


def _arc(a: int, b: int, x: float, y: float, s: float) -> str:
    (ax, ay), (bx, by) = _MID[a], _MID[b]
    if (a + b) % 2 == 0:  # straight through
        return f'<line x1="{x + ax * s:g}" y1="{y + ay * s:g}" x2="{x + bx * s:g}" y2="{y + by * s:g}"/>'
    # quarter arc around the shared corner
    return (f'<path d="M {x + ax * s:g} {y + ay * s:g} '
            f'Q {x + (ax + bx - 0.5) * s:g} {y + (ay + by - 0.5) * s:g} '
            f'{x + bx * s:g} {y + by * s:g}"/>')


def render_svg(m: Mosaic, size: int = 40) -> str:
    s = size
    w = m.n * s
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{w}" viewBox="0 0 {w} {w}">',
        f'<rect width="{w}" height="{w}" fill="white"/>',
        '<g stroke="#ccc" fill="none" stroke-width="1">',
    ]
    for i in range(m.n + 1):
        out.append(f'<line x1="0" y1="{i * s}" x2="{w}" y2="{i * s}"/>')
        out.append(f'<line x1="{i * s}" y1="0" x2="{i * s}" y2="{w}"/>')
    out.append('</g>')
    out.append(f'<g stroke="black" fill="none" stroke-width="{max(s // 10, 1)}">')
    gap = s * 0.18
    for r, c in m.cells():
        k = Kind(m.tiles[r][c])
        x, y = c * s, r * s
        if k in (Kind.T9, Kind.T10):
            over_vertical = k == Kind.T9
            if over_vertical:
                out.append(f'<line x1="{x:g}" y1="{y + s / 2:g}" x2="{x + s / 2 - gap:g}" y2="{y + s / 2:g}"/>')
                out.append(f'<line x1="{x + s / 2 + gap:g}" y1="{y + s / 2:g}" x2="{x + s:g}" y2="{y + s / 2:g}"/>')
                out.append(_arc(0, 2, x, y, s))
            else:
                out.append(f'<line x1="{x + s / 2:g}" y1="{y:g}" x2="{x + s / 2:g}" y2="{y + s / 2 - gap:g}"/>')
                out.append(f'<line x1="{x + s / 2:g}" y1="{y + s / 2 + gap:g}" x2="{x + s / 2:g}" y2="{y + s:g}"/>')
                out.append(_arc(1, 3, x, y, s))
            continue
        if k == Kind.TV:
            out.append(_arc(0, 2, x, y, s))
            out.append(_arc(1, 3, x, y, s))
            out.append(f'<circle cx="{x + s / 2:g}" cy="{y + s / 2:g}" r="{gap:g}"/>')
            continue
        for a, b in PAIRING[k]:
            out.append(_arc(a, b, x, y, s))
    out.append('</g>')
    out.append('</svg>')
    return "\n".join(out) + "\n"
