import pytest

from treedegree import (
    TruncatedSeries,
    binomial,
    catalan,
    catalan_series,
    count_kary_outdegree,
    count_plane_outdegree,
    enumerate_kary_trees,
    kary_derivative_series,
    kary_series,
    plane_derivative_series,
    verify_catalan_power_coeff,
    verify_kary_power_coeff,
)


class TestTruncatedSeries:
    def test_arithmetic(self):
        a = TruncatedSeries([1, 2, 3])
        b = TruncatedSeries([0, 1, 0])
        assert (a + b).coefficients == (1, 3, 3)
        assert (a - b).coefficients == (1, 1, 3)
        assert (a * b).coefficients == (0, 1, 2)
        assert (a**2).coefficients == (1, 4, 10)
        assert (3 * a).coefficients == (3, 6, 9)
        assert (1 - b).coefficients == (1, -1, 0)

    def test_shift_and_truncate(self):
        a = TruncatedSeries([1, 2, 3])
        assert a.shift(1).coefficients == (0, 1, 2)
        assert a.shift(5).coefficients == (0, 0, 0)
        assert a.truncate(1).coefficients == (1, 2)

    def test_mixed_orders_rejected(self):
        a = TruncatedSeries([1, 2, 3])
        b = TruncatedSeries([1, 2])
        for op in (lambda: a + b, lambda: a * b, lambda: a - b):
            with pytest.raises(ValueError):
                op()

    def test_coefficient_bounds(self):
        a = TruncatedSeries([1, 2, 3])
        assert a[2] == 3
        with pytest.raises(IndexError):
            a[3]

    def test_immutable(self):
        a = TruncatedSeries([1, 2, 3])
        with pytest.raises(AttributeError):
            a.coefficients = (0,)

    def test_truncation_is_consistent(self):
        # Coefficient n of a product must not depend on dropped tails.
        a = catalan_series(12)
        b = kary_series(3, 12)
        low = (a.truncate(6) * b.truncate(6)).coefficients
        assert (a * b).truncate(6).coefficients == low


class TestDefiningEquations:
    def test_catalan_coefficients(self):
        assert catalan_series(3).coefficients == (1, 1, 2, 5)
        assert catalan_series(0)[0] == 1
        series = catalan_series(30)
        for n in range(31):
            assert series[n] == catalan(n)

    def test_catalan_residual(self):
        c = catalan_series(30)
        assert c - (1 + (c * c).shift(1)) == TruncatedSeries.constant(0, 30)
        assert (1 - c.shift(1)) * c == TruncatedSeries.constant(1, 30)

    def test_kary_coefficients(self):
        assert kary_series(2, 3).coefficients == (1, 2, 5, 14)
        assert kary_series(1, 8).coefficients == (1,) * 9
        assert kary_series(3, 2)[2] == 12

    def test_kary_residuals(self):
        for k in range(1, 6):
            b = kary_series(k, 30)
            assert b - (b.shift(1) + 1) ** k == TruncatedSeries.constant(0, 30)

    def test_kary_closed_form(self):
        for k in range(1, 6):
            series = kary_series(k, 10)
            for n in range(11):
                assert (n + 1) * series[n] == binomial(k * (n + 1), n)

    def test_kary_matches_enumeration(self):
        for k, top in [(2, 5), (3, 4), (4, 3)]:
            series = kary_series(k, top)
            for n in range(top + 1):
                assert series[n] == sum(1 for _ in enumerate_kary_trees(k, n))


class TestPowerCoefficientLaws:
    def test_catalan_examples(self):
        assert verify_catalan_power_coeff(0, 7) == (1, 1)
        assert verify_catalan_power_coeff(2, 1) == (2, 2)
        assert verify_catalan_power_coeff(3, 2) == (14, 14)

    def test_catalan_sweep(self):
        for n in range(0, 21):
            for l in range(1, 11):
                lhs, rhs = verify_catalan_power_coeff(n, l)
                assert lhs == rhs

    def test_kary_examples(self):
        assert verify_kary_power_coeff(2, 2, 1) == (5, 5)
        assert verify_kary_power_coeff(2, 1, 1) == (2, 2)
        assert verify_kary_power_coeff(4, 0, 3) == (1, 1)

    def test_kary_sweep(self):
        for k in range(1, 6):
            for n in range(0, 13):
                for l in range(1, 7):
                    lhs, rhs = verify_kary_power_coeff(k, n, l)
                    assert lhs == rhs

    def test_naive_kary_law_fails(self):
        # The naive law [z^n] B_k^l = l/n * C(kn, n) is wrong at
        # k=2, n=2, l=1; compare cross-multiplied to stay in integers.
        series_value = kary_series(2, 2)[2]
        assert series_value == 5
        assert 2 * series_value != 1 * binomial(4, 2)

    def test_shifted_form_used_by_derivative_series(self):
        # [z^(n-r-i)] B_k^(i+r) = (i+r)/n * C(kn, n-r-i) for the cells the
        # derivative expansion consumes.
        from treedegree import exact_div

        for k in range(1, 5):
            b = kary_series(k, 10)
            for n in range(1, 11):
                for i in range(0, k + 1):
                    for r in range(0, n - i + 1):
                        power = i + r
                        if power == 0:
                            continue
                        lhs = (b**power)[n - r - i]
                        rhs = exact_div(
                            power * binomial(k * n, n - r - i), n, "shifted law"
                        )
                        assert lhs == rhs

    def test_validation(self):
        with pytest.raises(ValueError):
            verify_catalan_power_coeff(3, 0)
        with pytest.raises(ValueError):
            verify_kary_power_coeff(0, 3, 1)


class TestDerivativeSeries:
    def test_plane_values(self):
        series = plane_derivative_series(0, 3)
        assert [series[n] for n in (1, 2, 3)] == [1, 3, 10]
        assert plane_derivative_series(2, 2)[2] == 1
        assert plane_derivative_series(5, 3)[3] == 0

    def test_plane_matches_closed_form(self):
        for i in range(0, 8):
            series = plane_derivative_series(i, 20)
            for n in range(1, 21):
                assert series[n] == count_plane_outdegree(n, i)

    def test_kary_values(self):
        assert kary_derivative_series(2, 1, 2)[2] == 8
        assert kary_derivative_series(2, 2, 3)[3] == 6
        assert kary_derivative_series(3, 0, 1)[1] == 3

    def test_kary_matches_closed_form(self):
        for k in range(1, 6):
            for i in range(0, k + 1):
                series = kary_derivative_series(k, i, 12)
                for n in range(1, 13):
                    assert series[n] == count_kary_outdegree(n, k, i)

    def test_truncation_of_infinite_sums_is_stable(self):
        # Adding one more term of either expansion cannot change any kept
        # coefficient: the extra term's lowest degree exceeds the order.
        order, i = 9, 2
        c = catalan_series(order)
        extra = (c ** (2 * (order - i + 1) + i)).shift(order + 1)
        assert plane_derivative_series(i, order) + extra == plane_derivative_series(
            i, order
        )
        k = 3
        b = kary_series(k, order)
        r = order - i + 1
        extra_kary = binomial(k, i) * (
            ((b ** (i + r)).shift(i + r) + (b ** (i + r + 1)).shift(i + r + 1))
            * (k - 1) ** r
        )
        assert (
            kary_derivative_series(k, i, order) + extra_kary
            == kary_derivative_series(k, i, order)
        )

    def test_validation(self):
        with pytest.raises(ValueError):
            plane_derivative_series(-1, 5)
        with pytest.raises(ValueError):
            kary_derivative_series(2, 3, 5)
