"""Enumerate the extreme exponent tuples and split them into Kraft bins."""
import time

from approxconvex.kraft import ExponentTuple, enumerate_extreme, kraft_weight, partition_tuple

for B in (2, 3):
    for n in range(1, 6):
        t0 = time.perf_counter()
        s = enumerate_extreme(n, B)
        dt = time.perf_counter() - t0
        print(f"B={B} n={n}: {len(s.tuples)} tuples ({dt:.3f}s)")
        for t in s:
            bins = partition_tuple(ExponentTuple(t, B))
            print("   ", t, "weight", kraft_weight(t, B), "bins", bins)

# Each tuple carries an interior point where it attains the minimum.
s = enumerate_extreme(4, 2)
for t, x in zip(s, s.certificates):
    print(t, "is optimal at", [str(c) for c in x])
