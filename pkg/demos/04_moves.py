"""Local rewrite moves: the catalog, a kink, and simplification.

Run: python demos/04_moves.py
"""
from collections import Counter

from mosaicknots import applicable_moves, apply_move, counts, grow, move_catalog, simplify
from mosaicknots.bounds import witness
from mosaicknots.render import render_ascii

cat = move_catalog("classical")
print("classical rules:", Counter(r.kind for r in cat))
print("virtual rules:", len(move_catalog("virtual")))

# Put a Reidemeister I kink on the trefoil, then let simplify take it out.
big = grow(witness("trefoil"))
for pl in applicable_moves(big, cat):
    kinked = apply_move(big, pl.rule, pl.anchor, cat)
    if counts(kinked).crossings == 4:
        break
print(render_ascii(kinked))
clean = simplify(kinked)
print(render_ascii(clean))
print("crossings:", counts(kinked).crossings, "->", counts(clean).crossings)
