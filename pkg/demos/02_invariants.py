"""Bracket and Jones polynomials, and the crossing-number lower bound
from the span of the bracket.

Run: python demos/02_invariants.py
"""
from mosaicknots.bounds import witness
from mosaicknots.invariants import jones, kauffman_bracket, span_crossing_bound
from mosaicknots.tiles import mirror

for name in ("unknot", "trefoil", "figure-eight", "7-crossing"):
    m = witness(name)
    print(f"{name:>13}  n={m.n}  bracket={kauffman_bracket(m).format('A')}")
    print(f"{'':>13}  jones={jones(m).format('t')}  span bound={span_crossing_bound(m)}")

# Changing every crossing sends t to 1/t; the figure-eight is amphichiral.
t = witness("trefoil")
print("trefoil mirror:", jones(mirror(t)).format("t"))
f8 = witness("figure-eight")
print("figure-eight mirror equal:", jones(mirror(f8)) == jones(f8))
