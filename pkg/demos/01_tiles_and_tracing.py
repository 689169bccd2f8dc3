"""Tiles, suitable connectivity and strand tracing.

Run: python demos/01_tiles_and_tracing.py
"""
from mosaicknots import Mosaic, counts, gauss_code, is_suitably_connected, parse_mosaic, writhe
from mosaicknots.render import render_ascii

# A 2-mosaic made of four arcs is the smallest unknot.
circle = parse_mosaic("2\n2 1\n3 4\n")
print(render_ascii(circle))
print("violations:", is_suitably_connected(circle))
print("counts:", counts(circle))

# A single arc tile leaks through the outer boundary on two sides.
for v in is_suitably_connected(Mosaic.from_rows([[1]])):
    print("leak:", v)

# The trefoil fits on a 4-mosaic.
trefoil = parse_mosaic("4\n0 2 1 0\n2 10 7 1\n3 9 10 4\n0 3 4 0\n")
print(render_ascii(trefoil))
print("counts:", counts(trefoil), "writhe:", writhe(trefoil))
print("gauss code:", gauss_code(trefoil))
