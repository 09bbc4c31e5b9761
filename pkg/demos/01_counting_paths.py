#!/usr/bin/env python3
"""Count sparse-grid nodes four independent ways and watch them agree.

The library computes the same number through a closed formula, a
dimension-wise recursion, generating-function coefficient extraction, and
by literally building the grid and counting distinct points.  Any bug in
one path shows up as a disagreement against the other three.
"""

from smolcount import (
    CountQuery,
    GridSpec,
    GrowthSpec,
    NodeFamily,
    count_dup_sum,
    count_nested_closed,
    count_nested_recursion,
    count_sigma,
    count_via_genfun,
    grid_cardinality_oracle,
)

growth = GrowthSpec.power(3)  # tripling rule: 3, 9, 27, ... nodes per level

print("distinct-node counts for the tripling rule (Chebyshev-1 nodes)")
print(f"{'d':>2} {'mu':>3} {'closed':>8} {'recursion':>9} {'genfun':>8} {'grid':>8}")
for d, mu in [(2, 0), (2, 1), (2, 2), (3, 0), (3, 1), (3, 2)]:
    q = CountQuery(d, mu, growth)
    closed = count_nested_closed(q)
    recursion = count_nested_recursion(q)
    genfun = count_via_genfun(growth, d, mu, "nested")
    oracle = grid_cardinality_oracle(GridSpec(d, mu, NodeFamily.CHEBYSHEV1, growth))
    assert closed == recursion == genfun == oracle
    print(f"{d:>2} {mu:>3} {closed:>8} {recursion:>9} {genfun:>8} {oracle:>8}")

print()
print("the same cells, counted with duplicates and before deduplication")
print(f"{'d':>2} {'mu':>3} {'distinct':>9} {'top shell':>10} {'streamed':>9}")
for d, mu in [(2, 1), (2, 2), (3, 2)]:
    q = CountQuery(d, mu, growth)
    print(
        f"{d:>2} {mu:>3} {count_nested_recursion(q):>9} "
        f"{count_dup_sum(q):>10} {count_sigma(q):>9}"
    )

print()
print("counts grow fast; exact integers never overflow")
q = CountQuery(20, 12, growth)
print(f"d=20, mu=12 distinct nodes: {count_nested_recursion(q)}")
