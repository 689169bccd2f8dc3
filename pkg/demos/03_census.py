"""Exhaustive census of small mosaics, two counting engines and the knot
classes they contain.

Run: python demos/03_census.py
"""
import time

from mosaicknots import CensusOptions, count, enumerate_mosaics, knot_census

for n in range(1, 5):
    t0 = time.perf_counter()
    listed = sum(1 for _ in enumerate_mosaics(n))
    print(f"n={n}: enumerated {listed}, transfer matrix {count(n)} "
          f"({time.perf_counter() - t0:.2f}s)")

# The transfer matrix reaches sizes the enumerator cannot.
print("n=5:", count(5), " n=5 virtual:", count(5, CensusOptions(alphabet="virtual")))

for n in (3, 4):
    print(f"knot classes at n={n}:")
    for kc in knot_census(n):
        print(f"  jones={kc.jones.format('t'):<20} mosaics={kc.count:<5} "
              f"fewest crossings={kc.witness_crossings}")
