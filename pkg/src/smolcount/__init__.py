"""Exact node counting for Smolyak sparse grids.

Counts the nodes of sparse tensor-product grids three independent ways --
closed formulas, a dimension recursion, and generating-function coefficient
extraction -- and cross-checks them against a brute-force grid constructor
that deduplicates nodes by exact symbolic keys.
"""

__version__ = "0.1.0"

from .counting import (
    CountQuery,
    CountReport,
    UnsupportedFamilyError,
    binomial,
    combination_coefficient,
    count_bungartz,
    count_dup_closed,
    count_dup_sum,
    count_nested_closed,
    count_nested_closed_alt,
    count_nested_recursion,
    count_report,
    count_sigma,
    count_sigma_linear_closed,
    count_ullrich,
    muller_gronbach_poly_check,
)
from .grid import (
    BUILD_GUARD_TUPLES,
    Grid,
    GridSpec,
    ResourceGuardError,
    build_grid,
    compositions,
    duplicate_count_oracle,
    export_grid,
    grid_cardinality_oracle,
    index_set,
)
from .growth import GrowthRangeError, GrowthSpec, is_nested_pairing, parse_growth
from .nodes import (
    LEJA_MAX_POINTS,
    NodeFamily,
    NodeKey,
    NodeSet,
    key_to_coord,
    leja_sequence,
    make_leja,
    make_nodes,
    parse_family,
)
from .series import (
    TruncatedSeries,
    count_via_genfun,
    g1_series,
    one_minus_x_pow,
    series_mul,
    series_pow,
)

__all__ = [
    "BUILD_GUARD_TUPLES",
    "CountQuery",
    "CountReport",
    "Grid",
    "GridSpec",
    "GrowthRangeError",
    "GrowthSpec",
    "LEJA_MAX_POINTS",
    "NodeFamily",
    "NodeKey",
    "NodeSet",
    "ResourceGuardError",
    "TruncatedSeries",
    "UnsupportedFamilyError",
    "binomial",
    "build_grid",
    "combination_coefficient",
    "compositions",
    "count_bungartz",
    "count_dup_closed",
    "count_dup_sum",
    "count_nested_closed",
    "count_nested_closed_alt",
    "count_nested_recursion",
    "count_report",
    "count_sigma",
    "count_sigma_linear_closed",
    "count_ullrich",
    "count_via_genfun",
    "duplicate_count_oracle",
    "export_grid",
    "g1_series",
    "grid_cardinality_oracle",
    "index_set",
    "is_nested_pairing",
    "key_to_coord",
    "leja_sequence",
    "make_leja",
    "make_nodes",
    "muller_gronbach_poly_check",
    "one_minus_x_pow",
    "parse_family",
    "parse_growth",
    "series_mul",
    "series_pow",
]
