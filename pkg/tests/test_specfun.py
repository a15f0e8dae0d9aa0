"""Tests for the special-function layer: log-gamma, regularized incomplete
gamma, and the standard normal band."""

import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gamma_extremes.specfun import (
    MAX_SHAPE,
    MIN_SHAPE,
    Probability,
    ln_gamma,
    log_std_normal_sf,
    lower_series,
    reg_lower_gamma,
    std_normal_band,
    std_normal_cdf,
    upper_continued_fraction,
)


class TestProbability:
    def test_accepts_interval(self):
        assert Probability(0.0) == 0.0
        assert Probability(1.0) == 1.0
        assert Probability(0.25) == 0.25

    def test_clamps_within_slack(self):
        assert Probability(1.0 + 1e-13) == 1.0
        assert Probability(-1e-13) == 0.0

    def test_rejects_beyond_slack(self):
        with pytest.raises(ValueError):
            Probability(1.0 + 1e-11)
        with pytest.raises(ValueError):
            Probability(-1e-11)
        with pytest.raises(ValueError):
            Probability(float("nan"))


class TestLnGamma:
    def test_known_values(self):
        assert ln_gamma(1.0) == pytest.approx(0.0, abs=1e-14)
        assert ln_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi), rel=1e-13)
        assert ln_gamma(10.0) == pytest.approx(math.log(362880.0), rel=1e-13)

    def test_against_stdlib_over_range(self):
        rng = random.Random(20240817)
        for _ in range(2000):
            a = math.exp(rng.uniform(math.log(1e-6), math.log(1e8)))
            ref = math.lgamma(a)
            tol = 1e-13 * max(1.0, abs(ref))
            assert abs(ln_gamma(a) - ref) <= tol, a

    def test_domain_errors(self):
        for bad in (0.0, -1.0, float("nan"), float("inf")):
            with pytest.raises(ValueError):
                ln_gamma(bad)


class TestRegLowerGamma:
    def test_exponential_closed_form(self):
        assert reg_lower_gamma(1.0, 1.0) == pytest.approx(1.0 - math.exp(-1.0), abs=1e-14)

    def test_zero_argument(self):
        for a in (1e-6, 0.5, 1.0, 100.0, 1e7):
            assert reg_lower_gamma(a, 0.0) == 0.0

    def test_shape_two_closed_form(self):
        assert reg_lower_gamma(2.0, 3.0) == pytest.approx(
            1.0 - math.exp(-3.0) * 4.0, abs=1e-13
        )

    def test_integer_shape_closed_forms(self):
        # P(n, x) = 1 - e^{-x} sum_{k<n} x^k / k!
        rng = random.Random(7)
        for _ in range(1000):
            n = rng.randint(1, 10)
            x = rng.uniform(0.0, 30.0)
            partial = sum(x ** k / math.factorial(k) for k in range(n))
            expected = 1.0 - math.exp(-x) * partial
            assert abs(reg_lower_gamma(n, x) - expected) <= 1e-12

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            reg_lower_gamma(1e-7, 1.0)
        with pytest.raises(ValueError):
            reg_lower_gamma(2e7, 1.0)
        with pytest.raises(ValueError):
            reg_lower_gamma(1.0, -0.5)
        with pytest.raises(ValueError):
            reg_lower_gamma(1.0, float("inf"))

    def test_recurrence_in_log_space(self):
        # P(a+1, x) = P(a, x) - x^a e^{-x} / Gamma(a+1)
        rng = random.Random(99)
        for _ in range(500):
            a = math.exp(rng.uniform(math.log(1e-4), math.log(100.0)))
            x = math.exp(rng.uniform(math.log(1e-3), math.log(300.0)))
            step = math.exp(a * math.log(x) - x - ln_gamma(a + 1.0))
            lhs = reg_lower_gamma(a + 1.0, x)
            rhs = reg_lower_gamma(a, x) - step
            assert abs(lhs - rhs) <= 1e-11, (a, x)

    def test_complementarity_near_crossover(self):
        """Series-path P and continued-fraction-path Q at crossover +-1%.

        |P + Q - 1| <= 1e-11 over 10^4 random shapes in the supported range.
        """
        rng = random.Random(20240818)
        worst = 0.0
        worst_at = None
        failures = 0
        for _ in range(10_000):
            a = math.exp(rng.uniform(math.log(MIN_SHAPE), math.log(MAX_SHAPE)))
            factor = rng.choice((0.99, 1.01))
            x = factor * (a + 1.0)
            try:
                err = abs(lower_series(a, x) + upper_continued_fraction(a, x) - 1.0)
            except (ValueError, ArithmeticError):
                failures += 1
                continue
            if err > worst:
                worst, worst_at = err, (a, factor)
        assert failures == 0 and worst <= 1e-11, (
            f"complementarity: {failures} path failures, worst |P+Q-1| = {worst:.3g} "
            f"at (a, crossover factor) = {worst_at}"
        )

    def test_monotone_in_x(self):
        for a in (1e-4, 0.3, 1.0, 7.0, 250.0):
            xs = [a * f for f in (0.25, 0.5, 0.9, 1.0, 1.1, 1.5, 2.5)]
            values = [reg_lower_gamma(a, x) for x in xs]
            assert all(u < v for u, v in zip(values, values[1:])), a
        # at very large shape only a few-sigma window is representable
        a = 1e5
        xs = [a * f for f in (0.97, 0.99, 1.0, 1.01, 1.03)]
        values = [reg_lower_gamma(a, x) for x in xs]
        assert all(u < v for u, v in zip(values, values[1:]))

    def test_monotone_in_a(self):
        for x in (0.1, 1.0, 5.0, 40.0):
            shapes = [x * f for f in (0.3, 0.6, 1.0, 1.4, 2.0, 3.0)]
            values = [reg_lower_gamma(a, x) for a in shapes]
            assert all(u > v for u, v in zip(values, values[1:])), x

    @given(
        a=st.floats(min_value=1e-3, max_value=1e3),
        x=st.floats(min_value=0.0, max_value=5e3),
    )
    @settings(max_examples=200, deadline=None)
    def test_result_is_probability(self, a, x):
        value = reg_lower_gamma(a, x)
        assert 0.0 <= value <= 1.0


class TestStdNormal:
    def test_reference_bands(self):
        assert std_normal_band(1.0) == pytest.approx(0.6826895, abs=1e-7)
        assert std_normal_band(0.5) == pytest.approx(0.3829249, abs=1e-7)
        assert std_normal_band(2.0) == pytest.approx(0.9544997, abs=1e-7)

    def test_erf_identity(self):
        for kappa in (0.1, 0.7, 1.0, 1.8, 3.0, 5.0):
            assert std_normal_band(kappa) == pytest.approx(
                math.erf(kappa / math.sqrt(2.0)), abs=1e-13
            )

    def test_strictly_increasing_and_limit(self):
        grid = [0.05 * i for i in range(1, 161)]
        values = [std_normal_band(k) for k in grid]
        assert all(u < v for u, v in zip(values, values[1:]))
        assert abs(std_normal_band(8.0) - 1.0) <= 1e-12

    def test_domain_errors(self):
        for bad in (0.0, -1.0, float("nan")):
            with pytest.raises(ValueError):
                std_normal_band(bad)

    def test_cdf_symmetry(self):
        for z in (0.3, 1.0, 2.5):
            assert std_normal_cdf(z) + std_normal_cdf(-z) == pytest.approx(1.0, abs=1e-14)
        assert std_normal_cdf(0.0) == 0.5

    def test_log_sf_matches_cdf_midrange(self):
        for z in (0.5, 1.5, 2.0):
            assert log_std_normal_sf(z) == pytest.approx(
                math.log(1.0 - std_normal_cdf(z)), rel=1e-12
            )

    def test_log_sf_deep_tail(self):
        # log Q(z) ~ -z^2/2 - log(z sqrt(2 pi)) for large z
        for z in (10.0, 50.0, 1e3, 1e5):
            asymptotic = -0.5 * z * z - math.log(z * math.sqrt(2.0 * math.pi))
            assert log_std_normal_sf(z) == pytest.approx(asymptotic, rel=1e-3)
