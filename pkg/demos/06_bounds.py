"""Crossing number against mosaic number: formulas and the census audits.

Run: python demos/06_bounds.py   (about ten seconds)
"""
from mosaicknots.bounds import audit, bound_table, max_crossings

print(" c  min_n  max_n")
for c, lo, hi in bound_table(range(11)):
    print(f"{c:>2}  {lo:>5}  {hi:>5}")

print("largest crossing count of a knot on an n-mosaic:",
      {n: max_crossings(n, "knot") for n in range(2, 9)})

for n in (4, 5):
    print(audit(n).format())
