"""Gauss codes to mosaics, with virtual crossings when the code has no
planar diagram.

Run: python demos/05_gauss_compiler.py
"""
from mosaicknots import compile_gauss, counts, is_realizable, jones, parse_gauss
from mosaicknots.render import render_ascii

for text in ("O1U2O3U1O2U3", "O1U2O3U4O2U1O4U3", "O1U2U1O2"):
    code = parse_gauss(text)
    planar = is_realizable(code)
    m = compile_gauss(text, allow_virtual=not planar)
    c = counts(m)
    print(f"{text}: planar={planar} n={m.n} (limit {4 * code.crossing_count + 2}) "
          f"crossings={c.crossings} virtual={c.virtual_crossings}")
    if planar:
        print("  jones:", jones(m).format("t"))
    print(render_ascii(m))
