#!/usr/bin/env python3
"""Build actual grids, deduplicate them exactly, and export the result.

Writes a 2-D scatter (svg), a coordinate table (csv), and a schema'd json
file into the current directory.  Node identity is symbolic (reduced
fractions or sequence indices), so deduplication across tensor blocks has
no float tolerance in it.
"""

import pathlib

from smolcount import (
    GridSpec,
    GrowthSpec,
    NodeFamily,
    build_grid,
    duplicate_count_oracle,
    export_grid,
)

out_dir = pathlib.Path.cwd()
growth = GrowthSpec.power(3)

for mu in (0, 1, 2):
    spec = GridSpec(2, mu, NodeFamily.CHEBYSHEV1, growth)
    grid = build_grid(spec)
    streamed = duplicate_count_oracle(spec)
    print(
        f"d=2 mu={mu}: {grid.cardinality} distinct points "
        f"(deduplicated from {streamed} streamed)"
    )
    path = out_dir / f"chebyshev_grid_mu{mu}.svg"
    path.write_bytes(export_grid(grid, "svg2d"))
    print(f"  wrote {path.name}")

grid = build_grid(GridSpec(2, 2, NodeFamily.CHEBYSHEV1, growth))
(out_dir / "chebyshev_grid_mu2.csv").write_bytes(export_grid(grid, "csv"))
(out_dir / "chebyshev_grid_mu2.json").write_bytes(export_grid(grid, "json"))
print("wrote chebyshev_grid_mu2.csv and chebyshev_grid_mu2.json")

print()
print("a few exact keys of the mu=1 grid (angle fractions, times pi):")
small = build_grid(GridSpec(2, 1, NodeFamily.CHEBYSHEV1, growth))
for point, coords in list(zip(small.points, small.coords()))[:5]:
    print(f"  {tuple(str(k) for k in point)} -> ({coords[0]:+.4f}, {coords[1]:+.4f})")
