#!/usr/bin/env python3
"""Run the full cross-verification matrix in-process.

Every growth family is counted by every applicable method on every cell,
the literature identities are evaluated, and each nested (node family,
growth) pairing is checked against the grid-construction oracle.  The same
machinery backs `smolcount verify`.
"""

from smolcount import NodeFamily, parse_growth
from smolcount.cli import DEFAULT_VERIFY_GROWTHS, run_verification

growths = [parse_growth(s) for s in DEFAULT_VERIFY_GROWTHS.split(",")]
families = list(NodeFamily)

result = run_verification(d_max=3, mu_max=4, growths=growths, families=families)

print()
print(f"cells checked:      {result.cells_checked}")
print(f"oracle cells:       {result.oracle_cells} ({result.oracle_skipped} over budget)")
print(f"methods exercised:  {len(result.methods_exercised)}")
for name in sorted(result.methods_exercised):
    print(f"  - {name}")
print(f"overall: {'OK' if result.ok else 'FAILED'}")
