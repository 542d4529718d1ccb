"""Direct summation, exact binomials and the term recurrence."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from invbinom import (
    ArgumentError,
    ConvergenceError,
    Domain,
    DomainError,
    SeriesParams,
    beta_term_identity,
    binomial_exact,
    convergence_radius,
    series_terms,
    sum_direct,
    term_ratio,
    term_ratio_stride,
)

# Frozen from exact-fraction partial sums (math.comb over Fraction).
S22_AT_1 = 0.06717778880529868
S11_AT_HALF = 0.17552982924699026
S01_AT_HALF = 0.18495901209107352


class TestDomainModel:
    def test_classify_interior_boundary_outside(self):
        assert SeriesParams(2, 1, 3.0).classify() is Domain.INTERIOR
        assert SeriesParams(2, 1, 27 / 4).classify() is Domain.BOUNDARY
        assert SeriesParams(2, 1, 6.7500001).classify() is Domain.OUTSIDE
        assert SeriesParams(2, 2, 45.5625).classify() is Domain.BOUNDARY
        assert SeriesParams(2, 2, complex(0, 45.5625)).classify() is Domain.BOUNDARY

    def test_summable_needs_weight_two_on_the_rim(self):
        assert SeriesParams(2, 1, 27 / 4).summable()
        assert not SeriesParams(1, 1, 27 / 4).summable()
        assert SeriesParams(0, 1, 1.0).summable()

    def test_radius_values_are_exact(self):
        assert convergence_radius(1) == 6.75
        assert convergence_radius(2) == 45.5625
        assert convergence_radius(3) == 307.546875

    def test_invalid_params_raise(self):
        with pytest.raises(ArgumentError):
            SeriesParams(-1, 1, 0.5)
        with pytest.raises(ArgumentError):
            SeriesParams(2, 0, 0.5)


class TestTermRatio:
    def test_ratio_at_k1_weight0(self):
        # 2*3*4 / (4*5*6)
        assert term_ratio(1, 0, 1.0) == pytest.approx(0.2, abs=0)

    def test_ratio_at_k1_weight2(self):
        # (1/2)**2 * 1/5
        assert term_ratio(1, 2, 1.0) == pytest.approx(0.05, abs=0)

    def test_zero_argument_kills_the_ratio(self):
        assert term_ratio(1, 0, 0.0) == 0

    def test_modulus_tends_to_4x_over_27(self):
        limit = 4.0 / 27.0
        assert abs(term_ratio(4000, 3, 1.0)) == pytest.approx(limit, rel=1e-3)

    @pytest.mark.parametrize("n", [0, 1, 2, 4, 6])
    def test_modulus_monotone_for_large_k(self, n):
        values = [abs(term_ratio(k, n, 1.0)) for k in range(20, 80)]
        diffs = [b - a for a, b in zip(values, values[1:])]
        assert all(d <= 0 for d in diffs) or all(d >= 0 for d in diffs)

    def test_stride_ratio_reduces_to_stride_one(self):
        assert term_ratio_stride(3, 2, 1, 0.7) == term_ratio(3, 2, 0.7)


class TestBinomialExact:
    @pytest.mark.parametrize("a,b,expected", [(3, 1, 3), (6, 2, 15), (18, 6, 18564)])
    def test_known_values(self, a, b, expected):
        assert binomial_exact(a, b) == expected

    def test_matches_math_comb_on_a_block(self):
        for a in range(0, 40):
            for b in range(0, a + 1):
                assert binomial_exact(a, b) == math.comb(a, b)

    def test_lower_index_above_upper_raises(self):
        with pytest.raises(ArgumentError):
            binomial_exact(5, 6)

    def test_cap_enforced(self):
        with pytest.raises(ArgumentError):
            binomial_exact(401, 2)


class TestBetaTermIdentity:
    @pytest.mark.parametrize("k,expected", [(1, 1 / 3), (2, 1 / 15), (5, 1 / 3003)])
    def test_small_k(self, k, expected):
        assert beta_term_identity(k) == pytest.approx(expected, rel=1e-13)

    def test_equals_inverse_binomial_up_to_50(self):
        for k in range(1, 51):
            exact = 1.0 / binomial_exact(3 * k, k)
            assert beta_term_identity(k) == pytest.approx(exact, rel=1e-12)

    def test_out_of_range_raises(self):
        with pytest.raises(ArgumentError):
            beta_term_identity(0)
        with pytest.raises(ArgumentError):
            beta_term_identity(101)


class TestTermRecurrence:
    @pytest.mark.parametrize("m", [1, 2, 3])
    @pytest.mark.parametrize("n", [0, 2, 5])
    @pytest.mark.parametrize("x", [1.0, -2.5, 0.5, 0.3 + 0.7j])
    def test_recursive_terms_match_exact_binomials(self, m, n, x):
        terms = series_terms(n, m, x, 30)
        for k, t in enumerate(terms, start=1):
            exact = x**k / (k**n * binomial_exact(3 * m * k, m * k))
            assert abs(t - exact) <= 1e-13 * (1.0 + abs(exact))


class TestSumDirect:
    def test_weight1_at_half_matches_exact_form(self):
        ev = sum_direct(SeriesParams(1, 1, 0.5))
        exact = math.pi / 10 - math.log(2) / 5
        assert abs(ev.value - exact) < 1e-14
        assert abs(ev.value - S11_AT_HALF) < 1e-14
        assert ev.method == "direct-sum"

    def test_weight0_at_half_matches_exact_form(self):
        ev = sum_direct(SeriesParams(0, 1, 0.5))
        exact = 2 / 25 - (6 / 125) * math.log(2) + (11 / 250) * math.pi
        assert abs(ev.value - exact) < 1e-14
        assert abs(ev.value - S01_AT_HALF) < 1e-14

    def test_stride_two_at_one(self):
        ev = sum_direct(SeriesParams(2, 2, 1.0))
        assert abs(ev.value - S22_AT_1) < 1e-14

    def test_zero_argument_is_exactly_zero(self):
        ev = sum_direct(SeriesParams(5, 3, 0.0))
        assert ev.value == 0
        assert ev.abs_error_est == 0.0
        assert ev.work == 0

    def test_error_estimate_covers_truth(self):
        exact = math.pi / 10 - math.log(2) / 5
        ev = sum_direct(SeriesParams(1, 1, 0.5), rel_tol=1e-10)
        assert abs(ev.value - exact) <= ev.abs_error_est

    @pytest.mark.parametrize("m", [1, 2, 3])
    @pytest.mark.parametrize("n", [0, 3, 6])
    @pytest.mark.parametrize("x", [-6.0, -1.0, 0.5, 6.0])
    def test_interior_converges_within_400_terms(self, m, n, x):
        ev = sum_direct(SeriesParams(n, m, x), rel_tol=1e-15)
        assert ev.work <= 400

    def test_outside_raises_domain_error(self):
        with pytest.raises(DomainError):
            sum_direct(SeriesParams(2, 1, 7.0))

    def test_rim_needs_weight_two(self):
        with pytest.raises(DomainError):
            sum_direct(SeriesParams(1, 1, 27 / 4))

    def test_rim_hits_term_cap(self):
        with pytest.raises(ConvergenceError):
            sum_direct(SeriesParams(2, 1, 27 / 4), max_terms=20_000)

    def test_env_var_caps_terms(self, monkeypatch):
        monkeypatch.setenv("SERIES_MAX_TERMS", "25")
        with pytest.raises(ConvergenceError):
            sum_direct(SeriesParams(2, 1, 6.0))
        monkeypatch.setenv("SERIES_MAX_TERMS", "not-a-number")
        with pytest.raises(ArgumentError):
            sum_direct(SeriesParams(2, 1, 6.0))

    @given(n=st.integers(0, 6), m=st.integers(1, 4))
    @settings(max_examples=30, deadline=None)
    def test_zero_argument_property(self, n, m):
        assert sum_direct(SeriesParams(n, m, 0.0)).value == 0

    @given(
        n=st.integers(0, 4),
        m=st.integers(1, 3),
        x=st.floats(-6.0, 6.0).filter(lambda v: abs(v) > 1e-3),
    )
    @settings(max_examples=40, deadline=None)
    def test_tail_estimate_dominates_next_partial_move(self, n, m, x):
        loose = sum_direct(SeriesParams(n, m, x), rel_tol=1e-8)
        tight = sum_direct(SeriesParams(n, m, x), rel_tol=1e-15)
        assert abs(loose.value - tight.value) <= loose.abs_error_est + 1e-15 * abs(tight.value)


class TestSeriesTerms:
    def test_empty_prefix(self):
        assert series_terms(2, 1, 0.5, 0) == []

    def test_negative_count_rejected(self):
        with pytest.raises(ArgumentError):
            series_terms(2, 1, 0.5, -1)

    def test_explicit_max_terms_threading(self):
        with pytest.raises(ConvergenceError):
            sum_direct(SeriesParams(2, 1, 6.0), rel_tol=1e-15, max_terms=50)
        ev = sum_direct(SeriesParams(2, 1, 6.0), rel_tol=1e-15, max_terms=400)
        assert ev.work <= 400
