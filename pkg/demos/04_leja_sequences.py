#!/usr/bin/env python3
"""Leja points: greedy, deterministic, and nested for free.

Each new Leja point maximizes the product of distances to all previous
points.  Prefixes of one master sequence are automatically nested, which
is why any non-decreasing growth function pairs with them.  The symmetric
variant starts at 0 and adds +-pairs, so its odd-length prefixes are
symmetric sets.
"""

import math

from smolcount import leja_sequence, make_leja

print("first 10 Leja points seeded at 1:")
for i, x in enumerate(leja_sequence(10), start=1):
    print(f"  x{i:<2} = {x:+.15f}")

print()
print("the greedy objective, step by step:")
points = leja_sequence(6)
for n in range(2, 6):
    prev = points[:n]
    product = math.prod(abs(points[n] - p) for p in prev)
    print(f"  x{n + 1} = {points[n]:+.6f} maximizes the distance product ({product:.6f})")

print()
print("symmetric variant (0, then +-pairs):")
for i, x in enumerate(leja_sequence(7, symmetric=True), start=1):
    print(f"  x{i:<2} = {x:+.15f}")

print()
ns = make_leja(5)
print("node-set view: keys are sequence indices, so prefixes nest exactly")
print("  keys:  ", ns.keys)
print("  coords:", tuple(round(c, 6) for c in ns.coords))
