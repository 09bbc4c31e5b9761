import json
from fractions import Fraction

import pytest

import smolcount.grid as gridmod
from smolcount import (
    CountQuery,
    Grid,
    GridSpec,
    GrowthSpec,
    NodeFamily,
    ResourceGuardError,
    binomial,
    build_grid,
    compositions,
    count_dup_sum,
    count_nested_closed,
    count_nested_recursion,
    count_sigma,
    duplicate_count_oracle,
    export_grid,
    grid_cardinality_oracle,
    index_set,
)

P3 = GrowthSpec.power(3)
C1 = NodeFamily.CHEBYSHEV1


class TestCompositions:
    def test_two_parts(self):
        assert list(compositions(2, 3)) == [(1, 2), (2, 1)]

    def test_tight(self):
        assert list(compositions(3, 3)) == [(1, 1, 1)]

    def test_count(self):
        assert len(list(compositions(2, 5))) == 4

    def test_empty_when_total_too_small(self):
        assert list(compositions(3, 2)) == []

    def test_lexicographic_and_counted(self):
        for d in range(1, 6):
            for total in range(d, d + 7):
                out = list(compositions(d, total))
                assert out == sorted(out)
                assert len(out) == binomial(total - 1, d - 1)
                assert all(len(c) == d and sum(c) == total and min(c) >= 1 for c in out)


class TestIndexSet:
    def test_nested(self):
        assert set(index_set(2, 1, True)) == {(1, 2), (2, 1)}

    def test_general(self):
        assert set(index_set(2, 1, False)) == {(1, 1), (1, 2), (2, 1)}

    def test_level_zero(self):
        assert list(index_set(3, 0, False)) == [(1, 1, 1)]

    def test_general_contains_nested_shell(self):
        for d in range(1, 5):
            for mu in range(5):
                nested = set(index_set(d, mu, True))
                general = set(index_set(d, mu, False))
                assert nested <= general
                assert all(max(d, mu + 1) <= sum(i) <= d + mu for i in general)


class TestGridSpec:
    def test_rejects_non_nested_pairing(self):
        with pytest.raises(ValueError):
            GridSpec(2, 1, C1, GrowthSpec.power(2), nested_mode=True)

    def test_general_mode_always_allowed(self):
        GridSpec(2, 1, C1, GrowthSpec.power(2), nested_mode=False)

    def test_bad_dims(self):
        with pytest.raises(ValueError):
            GridSpec(0, 1, C1, P3)


class TestBuildGrid:
    def test_figure_cells(self):
        assert build_grid(GridSpec(2, 0, C1, P3)).cardinality == 9
        assert build_grid(GridSpec(2, 1, C1, P3)).cardinality == 45
        assert build_grid(GridSpec(3, 1, C1, P3)).cardinality == 189

    def test_leja_linear_one_dimension(self):
        grid = build_grid(GridSpec(1, 2, NodeFamily.LEJA, GrowthSpec.linear()))
        assert grid.cardinality == 3
        assert grid.points == ((1,), (2,), (3,))

    def test_points_are_exactly_deduplicated(self):
        grid = build_grid(GridSpec(2, 1, C1, P3))
        assert len(set(grid.points)) == grid.cardinality
        assert all(isinstance(k, Fraction) for pt in grid.points for k in pt)

    def test_refinement_inclusion(self):
        previous = None
        for mu in range(3):
            pts = set(build_grid(GridSpec(2, mu, C1, P3)).points)
            if previous is not None:
                assert previous <= pts
            previous = pts

    def test_guard(self, monkeypatch):
        monkeypatch.setattr(gridmod, "BUILD_GUARD_TUPLES", 10)
        with pytest.raises(ResourceGuardError):
            build_grid(GridSpec(2, 1, C1, P3))


class TestOracles:
    def test_cardinality_examples(self):
        assert grid_cardinality_oracle(GridSpec(2, 2, C1, P3)) == 189
        assert (
            grid_cardinality_oracle(
                GridSpec(4, 0, NodeFamily.EQUIDISTANT_INTERIOR, GrowthSpec.power_minus_one(2))
            )
            == 1
        )

    def test_symmetric_leja_cell(self):
        odd = GrowthSpec.odd()
        spec = GridSpec(2, 3, NodeFamily.SYMMETRIC_LEJA, odd)
        assert grid_cardinality_oracle(spec) == count_nested_closed(CountQuery(2, 3, odd)) == 25

    def test_duplicate_count_examples(self):
        assert duplicate_count_oracle(GridSpec(2, 1, C1, P3, nested_mode=True)) == 54
        assert duplicate_count_oracle(GridSpec(2, 1, C1, P3, nested_mode=False)) == 63
        assert (
            duplicate_count_oracle(GridSpec(3, 0, NodeFamily.LEJA, GrowthSpec.linear())) == 1
        )

    @pytest.mark.parametrize(
        "family, growth",
        [
            (NodeFamily.CHEBYSHEV2, GrowthSpec.power_plus_one(3)),
            (NodeFamily.EQUIDISTANT_INTERIOR, GrowthSpec.power_minus_one(3)),
            (NodeFamily.EQUIDISTANT_BOUNDARY, GrowthSpec.clenshaw_curtis()),
            (NodeFamily.CHEBYSHEV2, GrowthSpec.clenshaw_curtis()),
            (NodeFamily.LEJA, GrowthSpec.custom([1, 2, 2, 4, 5])),
            (NodeFamily.LEJA, GrowthSpec.odd()),
        ],
        ids=lambda v: str(v),
    )
    def test_oracle_matches_recursion(self, family, growth):
        for d in range(1, 4):
            for mu in range(5):
                spec = GridSpec(d, mu, family, growth)
                expected = count_nested_recursion(CountQuery(d, mu, growth))
                assert grid_cardinality_oracle(spec) == expected

    def test_duplicate_count_matches_composition_sum(self):
        for growth in (P3, GrowthSpec.odd(), GrowthSpec.clenshaw_curtis()):
            for d in range(1, 5):
                for mu in range(6):
                    spec = GridSpec(d, mu, NodeFamily.LEJA, growth, nested_mode=True)
                    assert duplicate_count_oracle(spec) == count_dup_sum(CountQuery(d, mu, growth))
                    general = GridSpec(d, mu, NodeFamily.LEJA, growth, nested_mode=False)
                    assert duplicate_count_oracle(general) == count_sigma(CountQuery(d, mu, growth))

    def test_general_mode_union_bound(self):
        # non-nested pairing: distinct points never exceed the streamed total
        for d in range(1, 4):
            for mu in range(4):
                spec = GridSpec(d, mu, C1, GrowthSpec.power(2), nested_mode=False)
                assert grid_cardinality_oracle(spec) <= duplicate_count_oracle(spec)

    def test_general_equals_nested_for_nested_pairings(self):
        for d in range(1, 4):
            for mu in range(4):
                nested = GridSpec(d, mu, C1, P3, nested_mode=True)
                general = GridSpec(d, mu, C1, P3, nested_mode=False)
                assert grid_cardinality_oracle(nested) == grid_cardinality_oracle(general)


class TestExport:
    def _nine_point_grid(self) -> Grid:
        return build_grid(GridSpec(2, 0, C1, P3))

    def test_csv(self):
        text = export_grid(self._nine_point_grid(), "csv").decode()
        lines = text.strip().split("\n")
        assert lines[0] == "x1,x2"
        assert len(lines) == 10
        x = float(lines[1].split(",")[0])
        assert -1.0 <= x <= 1.0

    def test_csv_uses_17_significant_digits(self):
        grid = build_grid(GridSpec(1, 1, NodeFamily.LEJA, GrowthSpec.linear()))
        text = export_grid(grid, "csv").decode()
        row = text.strip().split("\n")[2]
        assert float(row) == grid.coords()[1][0]

    def test_json_schema(self):
        grid = build_grid(GridSpec(2, 1, C1, P3))
        payload = json.loads(export_grid(grid, "json").decode())
        assert payload["d"] == 2
        assert payload["mu"] == 1
        assert payload["family"] == "chebyshev1"
        assert payload["growth"] == "power:3"
        assert payload["nested"] is True
        assert payload["cardinality"] == "45"
        assert len(payload["points"]) == 45
        assert all(len(p) == 2 for p in payload["points"])

    def test_svg(self):
        data = export_grid(self._nine_point_grid(), "svg2d").decode()
        assert data.count("<circle") == 9
        assert 'viewBox="0 0 600 600"' in data

    def test_svg_requires_two_dimensions(self):
        grid = build_grid(GridSpec(3, 0, C1, P3))
        with pytest.raises(ValueError):
            export_grid(grid, "svg2d")

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            export_grid(self._nine_point_grid(), "parquet")

    def test_determinism(self):
        a = export_grid(build_grid(GridSpec(2, 1, C1, P3)), "json")
        b = export_grid(build_grid(GridSpec(2, 1, C1, P3)), "json")
        assert a == b


def test_grid_coords_match_cardinality():
    grid = build_grid(GridSpec(2, 1, C1, P3))
    coords = grid.coords()
    assert len(coords) == grid.cardinality == 45
    assert all(-1.0 <= x <= 1.0 for pt in coords for x in pt)
    # coordinate tuples must be as distinct as the exact keys say they are
    assert len(set(coords)) == 45
