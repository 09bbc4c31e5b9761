#!/usr/bin/env python3
"""Where the counting formulas come from: one series, two readouts.

The base series lists the per-level node counts f(1), f(2), ... as its
coefficients.  Raising it to the d-th power convolves d axes together and
its x^mu coefficient is the level-mu count with duplicates; multiplying by
(1 - x)^(d-1) cancels exactly the overlap between nested levels and leaves
the distinct-node count.
"""

from smolcount import (
    GrowthSpec,
    g1_series,
    one_minus_x_pow,
    series_mul,
    series_pow,
)

growth = GrowthSpec.clenshaw_curtis()
order = 6

base = g1_series(growth, order)
print(f"growth {growth}: per-level node counts f(1..{order + 1})")
print("  base series coefficients:", base.coeffs)

for d in (2, 3):
    powered = series_pow(base, d)
    nested = series_mul(powered, one_minus_x_pow(d - 1, order))
    print(f"\nd = {d}")
    print("  with duplicates per level:", powered.coeffs)
    print("  distinct nodes per level: ", nested.coeffs)

print()
print("the alternating factor that removes the overlap:")
for e in range(4):
    print(f"  (1 - x)^{e} ->", one_minus_x_pow(e, 5).coeffs)

print()
print("exactness matters: coefficients quickly leave 64-bit range")
big = series_pow(g1_series(GrowthSpec.power(3), 25), 12)
print(f"  d=12 tripling rule, x^25 coefficient: {big[25]}")
