"""Smolyak index sets, exact grid construction, and brute-force counters.

The grid of dimension d and level mu is the union of tensor-product blocks
S_{i_1} x ... x S_{i_d} over all multi-indices i with
max(d, mu + 1) <= |i| <= d + mu; for nested level sets only the top shell
|i| = d + mu contributes.  Blocks are deduplicated by exact node keys, so
the resulting cardinality is a zero-tolerance oracle for the counting
formulas.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from typing import Iterator

from .growth import GrowthSpec, is_nested_pairing
from .nodes import NodeFamily, NodeKey, key_to_coord, make_nodes

#: build_grid refuses specs that would stream more tuples than this; the
#: cardinality oracle and the closed formulas remain available beyond it.
BUILD_GUARD_TUPLES = 10**8


class ResourceGuardError(RuntimeError):
    """A grid build would exceed the in-memory tuple guard."""


def compositions(d: int, total: int) -> Iterator[tuple[int, ...]]:
    """All compositions of `total` into d positive parts, lexicographically.

    Yields nothing when total < d; the number of compositions is
    binomial(total - 1, d - 1).
    """
    if d < 1:
        raise ValueError("number of parts must be >= 1")
    if total < d:
        return
    if d == 1:
        yield (total,)
        return
    for first in range(1, total - d + 2):
        for rest in compositions(d - 1, total - first):
            yield (first,) + rest


def index_set(d: int, mu: int, nested_mode: bool = True) -> Iterator[tuple[int, ...]]:
    """Multi-indices of the level-mu construction in d dimensions.

    nested_mode keeps only the top shell |i| = d + mu; otherwise the full
    range max(d, mu + 1) <= |i| <= d + mu is enumerated, shell by shell.
    """
    if d < 1:
        raise ValueError("dimension must be >= 1")
    if mu < 0:
        raise ValueError("level must be >= 0")
    if nested_mode:
        yield from compositions(d, d + mu)
        return
    for s in range(max(d, mu + 1), d + mu + 1):
        yield from compositions(d, s)


@dataclass(frozen=True)
class GridSpec:
    """A (dimension, level, node family, growth) grid request.

    nested_mode = True is only legal for pairings whose level sets actually
    nest; it is rejected here rather than silently miscounting later.
    """

    d: int
    mu: int
    family: NodeFamily
    growth: GrowthSpec
    nested_mode: bool = True

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError("dimension must be >= 1")
        if self.mu < 0:
            raise ValueError("level must be >= 0")
        if self.nested_mode and not is_nested_pairing(self.family, self.growth):
            raise ValueError(
                f"({self.family.value}, {self.growth}) is not a nested pairing; "
                "use nested_mode=False"
            )


@dataclass(frozen=True)
class Grid:
    """A fully built grid: deduplicated node-key tuples in sorted order."""

    spec: GridSpec
    points: tuple[tuple[NodeKey, ...], ...]

    @property
    def cardinality(self) -> int:
        return len(self.points)

    def coords(self) -> list[tuple[float, ...]]:
        """Float coordinates of every point, in the key order."""
        fam = self.spec.family
        return [tuple(key_to_coord(k, fam) for k in pt) for pt in self.points]


def _level_key_ids(spec: GridSpec) -> tuple[list[list[int]], list[NodeKey]]:
    """Node keys of levels 1..mu+1, interned to small ints for fast hashing."""
    intern: dict[NodeKey, int] = {}
    keys: list[NodeKey] = []
    per_level: list[list[int]] = []
    for level in range(1, spec.mu + 2):
        node_set = make_nodes(spec.family, spec.growth(level))
        ids = []
        for key in node_set.keys:
            idx = intern.get(key)
            if idx is None:
                idx = intern[key] = len(keys)
                keys.append(key)
            ids.append(idx)
        per_level.append(ids)
    return per_level, keys


def _distinct_point_ids(spec: GridSpec) -> tuple[set[tuple[int, ...]], list[NodeKey]]:
    per_level, keys = _level_key_ids(spec)
    seen: set[tuple[int, ...]] = set()
    for mi in index_set(spec.d, spec.mu, spec.nested_mode):
        seen.update(itertools.product(*(per_level[i - 1] for i in mi)))
    return seen, keys


def build_grid(spec: GridSpec) -> Grid:
    """Materialize the grid as deduplicated, sorted node-key tuples."""
    streamed = duplicate_count_oracle(spec)
    if streamed > BUILD_GUARD_TUPLES:
        raise ResourceGuardError(
            f"grid would stream {streamed} tuples (guard: {BUILD_GUARD_TUPLES}); "
            "use grid_cardinality_oracle or the counting formulas instead"
        )
    seen, keys = _distinct_point_ids(spec)
    points = sorted(tuple(keys[i] for i in ids) for ids in seen)
    return Grid(spec, tuple(points))


def grid_cardinality_oracle(spec: GridSpec) -> int:
    """Number of distinct grid points, without retaining coordinates."""
    seen, _ = _distinct_point_ids(spec)
    return len(seen)


def duplicate_count_oracle(spec: GridSpec) -> int:
    """Total block sizes over the index set, i.e. the count before dedup.

    With nested_mode this is the top-shell count with duplicates; in
    general mode it is the full pre-deduplication total.
    """
    f = [spec.growth(k) for k in range(1, spec.mu + 2)]
    return sum(
        math.prod(f[i - 1] for i in mi)
        for mi in index_set(spec.d, spec.mu, spec.nested_mode)
    )


# ---------------------------------------------------------------------------
# Export
# ---------------------------------------------------------------------------


def export_grid(grid: Grid, format: str) -> bytes:
    """Serialize a grid as csv, json, or (for d = 2) an svg scatter."""
    fmt = format.lower()
    if fmt == "csv":
        return _export_csv(grid)
    if fmt == "json":
        return _export_json(grid)
    if fmt in ("svg", "svg2d"):
        if grid.spec.d != 2:
            raise ValueError("svg export requires d = 2")
        return _export_svg(grid)
    raise ValueError(f"unknown export format {format!r} (expected csv, json, or svg2d)")


def _export_csv(grid: Grid) -> bytes:
    header = ",".join(f"x{i + 1}" for i in range(grid.spec.d))
    lines = [header]
    for point in grid.coords():
        lines.append(",".join(f"{x:.17g}" for x in point))
    return ("\n".join(lines) + "\n").encode("utf-8")


def _export_json(grid: Grid) -> bytes:
    spec = grid.spec
    payload = {
        "d": spec.d,
        "mu": spec.mu,
        "family": spec.family.value,
        "growth": str(spec.growth),
        "nested": spec.nested_mode,
        "cardinality": str(grid.cardinality),
        "points": [list(point) for point in grid.coords()],
    }
    return (json.dumps(payload, indent=2) + "\n").encode("utf-8")


def _export_svg(grid: Grid) -> bytes:
    size, pad, radius = 600, 8, 3
    scale = (size - 2 * pad) / 2.0
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {size} {size}">',
        f'<rect width="{size}" height="{size}" fill="white"/>',
    ]
    for x, y in grid.coords():
        cx = pad + (x + 1.0) * scale
        cy = size - pad - (y + 1.0) * scale  # svg y grows downward
        lines.append(f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="{radius}" fill="black"/>')
    lines.append("</svg>")
    return ("\n".join(lines) + "\n").encode("utf-8")
