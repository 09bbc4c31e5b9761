import pytest

from smolcount import (
    CountQuery,
    GrowthSpec,
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
    count_via_genfun,
    index_set,
    muller_gronbach_poly_check,
)

P3 = GrowthSpec.power(3)


class TestBinomial:
    def test_values(self):
        assert binomial(5, 2) == 10
        assert binomial(4, 0) == 1

    def test_out_of_range_convention(self):
        assert binomial(3, 5) == 0
        assert binomial(3, -1) == 0

    def test_negative_n(self):
        with pytest.raises(ValueError):
            binomial(-1, 0)


class TestRecursion:
    def test_one_dimensional_base(self):
        assert count_nested_recursion(CountQuery(1, 4, P3)) == 243

    def test_reference_values(self):
        assert count_nested_recursion(CountQuery(2, 2, P3)) == 189
        assert count_nested_recursion(CountQuery(3, 2, P3)) == 999

    @pytest.mark.parametrize(
        "g",
        [
            GrowthSpec.power_minus_one(2),
            GrowthSpec.power_plus_one(3),
            GrowthSpec.linear(),
            GrowthSpec.odd(),
            GrowthSpec.clenshaw_curtis(),
            GrowthSpec.custom([1, 2, 4, 4, 9, 9, 9]),
        ],
        ids=str,
    )
    def test_base_cases_any_growth(self, g):
        for mu in range(6):
            assert count_nested_recursion(CountQuery(1, mu, g)) == g(mu + 1)
        for d in range(1, 5):
            assert count_nested_recursion(CountQuery(d, 0, g)) == g(1) ** d

    def test_monotone_in_level(self):
        for g in (P3, GrowthSpec.linear(), GrowthSpec.clenshaw_curtis()):
            for d in range(1, 5):
                values = [count_nested_recursion(CountQuery(d, mu, g)) for mu in range(8)]
                assert all(b >= a for a, b in zip(values, values[1:]))


class TestClosedForms:
    def test_power3(self):
        assert count_nested_closed(CountQuery(2, 1, P3)) == 45

    def test_linear(self):
        assert count_nested_closed(CountQuery(3, 4, GrowthSpec.linear())) == 35

    def test_odd(self):
        # pinned by the recursion, the genfun coefficient, and the
        # symmetric-Leja grid oracle (see test_grid)
        assert count_nested_closed(CountQuery(2, 2, GrowthSpec.odd())) == 13

    def test_unsupported_families(self):
        with pytest.raises(UnsupportedFamilyError):
            count_nested_closed(CountQuery(2, 1, GrowthSpec.clenshaw_curtis()))
        with pytest.raises(UnsupportedFamilyError):
            count_nested_closed(CountQuery(2, 1, GrowthSpec.custom([1, 2, 3])))

    def test_alt_power3(self):
        assert count_nested_closed_alt(CountQuery(2, 1, P3)) == 45

    def test_alt_one_dimensional(self):
        assert count_nested_closed_alt(CountQuery(1, 0, GrowthSpec.power(2))) == 2

    def test_alt_power_plus_one(self):
        q = CountQuery(3, 2, GrowthSpec.power_plus_one(2))
        assert count_nested_closed_alt(q) == count_nested_closed(q) == 225

    def test_alt_unsupported(self):
        with pytest.raises(UnsupportedFamilyError):
            count_nested_closed_alt(CountQuery(2, 1, GrowthSpec.linear()))

    @pytest.mark.parametrize("n", [2, 3])
    def test_alt_agrees_everywhere(self, n):
        for family in (GrowthSpec.power(n), GrowthSpec.power_plus_one(n)):
            for d in range(1, 6):
                for mu in range(9):
                    q = CountQuery(d, mu, family)
                    assert count_nested_closed_alt(q) == count_nested_closed(q)


class TestLiteratureForms:
    def test_ullrich_one_dimensional(self):
        assert count_ullrich(1, 3) == 8

    def test_ullrich_small_cell(self):
        # direct evaluation of the halved-doubling sum, cross-checked by the
        # recursion with f(k) = 2^(k-1)
        assert count_ullrich(2, 1) == 3
        assert count_nested_recursion(CountQuery(2, 1, GrowthSpec.custom([1, 2, 4]))) == 3

    @pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
    def test_ullrich_level_zero(self, d):
        assert count_ullrich(d, 0) == 1

    def test_ullrich_scaling_identity(self):
        p2 = GrowthSpec.power(2)
        for d in range(1, 6):
            for mu in range(9):
                assert count_ullrich(d, mu) * 2**d == count_nested_closed(CountQuery(d, mu, p2))

    def test_bungartz_values(self):
        assert count_bungartz(1, 0) == 3
        assert count_bungartz(3, 0) == 27
        assert count_bungartz(2, 1) == count_nested_closed(CountQuery(2, 1, GrowthSpec.power_plus_one(2))) == 21

    def test_bungartz_identity(self):
        pp2 = GrowthSpec.power_plus_one(2)
        for d in range(1, 6):
            for mu in range(9):
                assert count_bungartz(d, mu) == count_nested_closed(CountQuery(d, mu, pp2))


class TestDuplicateCounts:
    def test_closed_examples(self):
        assert count_dup_closed(CountQuery(2, 1, P3)) == 54
        assert count_dup_closed(CountQuery(2, 0, GrowthSpec.linear())) == 1
        assert count_dup_closed(CountQuery(2, 2, GrowthSpec.linear())) == 10

    def test_closed_unsupported(self):
        with pytest.raises(UnsupportedFamilyError):
            count_dup_closed(CountQuery(2, 1, GrowthSpec.odd()))

    def test_sum_examples(self):
        assert count_dup_sum(CountQuery(1, 3, GrowthSpec.linear())) == 4
        assert count_dup_sum(CountQuery(2, 1, P3)) == 54
        assert count_dup_sum(CountQuery(3, 0, GrowthSpec.power_plus_one(2))) == 27

    @pytest.mark.parametrize(
        "g",
        [
            GrowthSpec.power_minus_one(2),
            GrowthSpec.power(3),
            GrowthSpec.power_plus_one(2),
            GrowthSpec.linear(),
        ],
        ids=str,
    )
    def test_closed_matches_sum(self, g):
        for d in range(1, 6):
            for mu in range(9):
                q = CountQuery(d, mu, g)
                assert count_dup_closed(q) == count_dup_sum(q)


class TestSigma:
    def test_examples(self):
        assert count_sigma(CountQuery(2, 2, GrowthSpec.linear())) == 14
        assert count_sigma(CountQuery(1, 2, GrowthSpec.linear())) == 3
        for g in (P3, GrowthSpec.odd(), GrowthSpec.clenshaw_curtis()):
            assert count_sigma(CountQuery(3, 0, g)) == g(1) ** 3

    def test_linear_closed_examples(self):
        assert count_sigma_linear_closed(2, 2) == 14
        assert count_sigma_linear_closed(1, 0) == 1
        assert count_sigma_linear_closed(3, 1) == count_sigma(CountQuery(3, 1, GrowthSpec.linear())) == 7

    def test_linear_closed_sweep(self):
        for d in range(1, 7):
            for mu in range(11):
                assert count_sigma_linear_closed(d, mu) == count_sigma(
                    CountQuery(d, mu, GrowthSpec.linear())
                )

    def test_sigma_is_partial_sum_of_duplicates(self):
        for g in (P3, GrowthSpec.odd(), GrowthSpec.clenshaw_curtis()):
            for d in range(1, 5):
                for mu in range(7):
                    expected = sum(
                        count_dup_sum(CountQuery(d, k, g))
                        for k in range(max(0, mu + 1 - d), mu + 1)
                    )
                    assert count_sigma(CountQuery(d, mu, g)) == expected


class TestCombinationCoefficients:
    def test_examples(self):
        assert combination_coefficient(2, 1, 3) == 1
        assert combination_coefficient(2, 1, 2) == -1
        assert combination_coefficient(3, 2, 4) == -2

    def test_out_of_range_shells(self):
        with pytest.raises(ValueError):
            combination_coefficient(2, 1, 1)
        with pytest.raises(ValueError):
            combination_coefficient(2, 1, 4)

    def test_telescoping_identity(self):
        # the signed block weights reproduce constants: summed over the full
        # index range they collapse to exactly 1
        for d in range(1, 6):
            for mu in range(9):
                total = sum(
                    combination_coefficient(d, mu, sum(mi))
                    for mi in index_set(d, mu, nested_mode=False)
                )
                assert total == 1


class TestMullerGronbachStructure:
    @pytest.mark.parametrize("d, mu_max", [(1, 5), (2, 8), (3, 10)])
    def test_examples(self, d, mu_max):
        assert muller_gronbach_poly_check(d, mu_max) is True

    def test_needs_enough_levels(self):
        with pytest.raises(ValueError):
            muller_gronbach_poly_check(3, 3)


class TestReport:
    def test_agreeing_cell(self):
        report = count_report(CountQuery(2, 2, P3))
        assert report.agreement
        assert report.n_nested == 189
        assert report.n_dup == count_dup_sum(CountQuery(2, 2, P3))
        assert report.n_sigma >= report.n_dup >= report.n_nested >= 1
        assert {"nested:closed", "nested:closed_alt", "nested:recursion", "nested:genfun"} <= report.methods

    def test_methods_shrink_without_closed_forms(self):
        report = count_report(CountQuery(2, 2, GrowthSpec.clenshaw_curtis()))
        assert report.agreement
        assert "nested:closed" not in report.methods
        assert {"nested:recursion", "nested:genfun", "dup:sum", "dup:genfun"} <= report.methods

    def test_linear_includes_closed_sigma(self):
        report = count_report(CountQuery(3, 4, GrowthSpec.linear()))
        assert report.agreement
        assert "sigma:closed" in report.methods

    def test_count_ordering_invariant(self):
        for g in (P3, GrowthSpec.linear(), GrowthSpec.odd(), GrowthSpec.clenshaw_curtis()):
            for d in range(1, 4):
                for mu in range(5):
                    report = count_report(CountQuery(d, mu, g))
                    assert report.n_sigma >= report.n_dup >= report.n_nested >= 1


class TestQueryValidation:
    def test_bad_dimension(self):
        with pytest.raises(ValueError):
            CountQuery(0, 1, P3)

    def test_bad_level(self):
        with pytest.raises(ValueError):
            CountQuery(1, -1, P3)


def test_example_polynomials_match_closed_path():
    # dimension 2 and 3 tripling-rule counts follow simple polynomials in mu
    for mu in range(9):
        assert count_nested_closed(CountQuery(2, mu, P3)) == 3 ** (mu + 1) * (2 * mu + 3)
        assert count_nested_closed(CountQuery(3, mu, P3)) == 3 ** (mu + 1) * (
            2 * mu * mu + 10 * mu + 9
        )


def test_genfun_available_from_counting_surface():
    assert count_via_genfun(P3, 3, 2, "nested") == 999
