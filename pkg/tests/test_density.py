from __future__ import annotations

import math
import warnings
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from levy_laplace.density import (
    EXPONENT_MAX,
    DensityEvaluator,
    RationalOrder,
    density,
    levy_smirnov,
    log_density,
    normalization,
    verify_defining_property,
)
from levy_laplace.errors import DomainError
from levy_laplace.laplace import complex_power, talbot_inverse

R = RationalOrder
GRID_ALPHAS = [R(1, 3), R(1, 2), R(2, 3), R(3, 4), R(5, 6)]

# 30-digit mpmath Talbot inversions of exp(-p**alpha)
PINNED = [
    (R(1, 3), 1.0, 0.13207982656883420),
    (R(1, 4), 1.0, 0.09583385414267088),
    (R(2, 3), 1.0, 0.35056807592011158),
    (R(3, 4), 2.0, 0.10718999293584146),
]


class TestRationalOrder:
    def test_validation(self):
        with pytest.raises(DomainError, match="0 < l/k < 1"):
            R(3, 2)
        with pytest.raises(DomainError, match="coprime"):
            R(2, 4)
        with pytest.raises(DomainError):
            R(1, 65)

    def test_parse_and_reduce(self):
        assert RationalOrder.from_fraction("3/4") == R(3, 4)
        with pytest.warns(UserWarning, match="reduced"):
            assert RationalOrder.from_fraction("2/4") == R(1, 2)
        with pytest.raises(DomainError):
            RationalOrder.from_fraction("2/4", reduce=False)
        with pytest.raises(DomainError):
            RationalOrder.from_fraction("half")
        assert RationalOrder.from_fraction(Fraction(2, 3)) == R(2, 3)

    def test_product_and_str(self):
        assert R(2, 3) * R(3, 4) == R(1, 2)
        assert str(R(5, 6)) == "5/6"
        assert float(R(1, 4)) == 0.25


class TestDensity:
    def test_levy_smirnov_example(self):
        assert density(R(1, 2), 1.0) == pytest.approx(math.exp(-0.25) / (2 * math.sqrt(math.pi)), rel=1e-15, abs=0)
        assert density(R(1, 2), 1e-4) < 1e-100

    @pytest.mark.parametrize("order,x,ref", PINNED)
    def test_pinned_values(self, order, x, ref):
        assert density(order, x) == pytest.approx(ref, rel=1e-12, abs=0)

    def test_general_path_matches_closed_form(self):
        ev = DensityEvaluator(R(1, 2), fast_path=False)
        xs = np.array([0.05, 0.1, 0.5, 1, 5, 20, 100])
        np.testing.assert_allclose(ev(xs), levy_smirnov(xs), rtol=1e-10)

    @pytest.mark.parametrize("order", [R(1, 3), R(2, 3), R(3, 4)])
    def test_talbot_oracle(self, order):
        xs = np.array([0.2, 1.0, 5.0])
        ref = talbot_inverse(lambda s: np.exp(-complex_power(s, order.value)), xs)
        np.testing.assert_allclose(density(order, xs), ref, rtol=1e-6)

    def test_float_order(self):
        assert density(0.5, 2.0) == pytest.approx(levy_smirnov(2.0), rel=1e-12, abs=0)

    def test_log_density_extremes(self):
        # the closed form keeps the exact exponent far below the double range
        assert log_density(R(1, 2), math.log(1e-300)) == pytest.approx(-0.25e300, rel=1e-12, abs=0)
        assert log_density(R(1, 3), -800.0) == -math.inf
        assert log_density(R(2, 3), math.log(5e-3)) == pytest.approx(-5916.307116556758, rel=1e-13, abs=0)  # 40-digit mpmath
        big = log_density(R(1, 3), 700.0)
        assert np.isfinite(big) and big < -700

    def test_domain(self):
        with pytest.raises(DomainError):
            density(R(1, 2), 0.0)
        with pytest.raises(DomainError):
            density(1.2, 1.0)

    @settings(max_examples=300, deadline=None)
    @given(st.sampled_from(GRID_ALPHAS + [R(1, 10), R(9, 10)]), st.floats(0.0, 1.0), st.floats(1e-2, 1e4))
    def test_positive(self, order, u, x_hi):
        # near 0 g drops below the smallest double, so positivity is checked in log space
        a = order.value
        a0 = a ** (a / (1 - a)) * (1 - a)
        x_min = (EXPONENT_MAX / a0) ** (-(1 - a) / a) * (1 + 1e-9)
        x = x_min * (x_hi / x_min) ** u if x_hi > x_min else x_min
        assert np.isfinite(log_density(order, math.log(x)))
        assert density(order, x) >= 0

    @pytest.mark.parametrize("order", GRID_ALPHAS)
    def test_positive_on_bulk(self, order):
        assert np.all(density(order, np.geomspace(0.5, 1e4, 200)) > 0)

    @pytest.mark.parametrize("order", GRID_ALPHAS)
    def test_normalization(self, order):
        assert normalization(order) == pytest.approx(1.0, abs=1e-8)


class TestDefiningProperty:
    @pytest.mark.parametrize("order", GRID_ALPHAS[:4])
    @pytest.mark.parametrize("p", [0.1, 0.5, 1, 2, 5])
    def test_grid(self, order, p):
        rep = verify_defining_property(order, p)
        assert rep.passed and rep.tolerance == 1e-8

    def test_examples(self):
        assert verify_defining_property(R(1, 2), 1.0).computed == pytest.approx(math.exp(-1), abs=1e-8)
        assert verify_defining_property(R(2, 3), 2.0).computed == pytest.approx(math.exp(-2 ** (2 / 3)), abs=1e-8)
        # p -> 0 is the normalization limit; exp(-p**alpha) itself is 1 - 1e-6 here
        rep = verify_defining_property(R(3, 4), 1e-8)
        assert rep.passed and rep.computed == pytest.approx(1.0, abs=2e-6)

    def test_no_accuracy_warning_on_grid(self):
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            density(R(1, 10), np.geomspace(1e-3, 1e4, 50))
