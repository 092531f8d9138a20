from __future__ import annotations

import math

import numpy as np
import pytest

from levy_laplace.density import RationalOrder
from levy_laplace.errors import DomainError, UnsupportedError
from levy_laplace.transforms import (
    CATALOG,
    Growth,
    Variant,
    bar_transform,
    get_pair,
    levy_smirnov_bar_reference,
    levy_smirnov_tilde_reference,
    theorem1_target,
    tilde_transform,
    verify_theorem1,
)

R = RationalOrder
HALF = R(1, 2)
ERFC1_E = math.e * math.erfc(1.0)


class TestTransforms:
    def test_constant_tilde(self):
        np.testing.assert_allclose(tilde_transform(CATALOG["one"], HALF, [1.0, 4.0]),
                                   [1 / math.sqrt(math.pi), 1 / (2 * math.sqrt(math.pi))], rtol=1e-12)

    @pytest.mark.parametrize("order", [R(1, 3), R(1, 2), R(2, 3), R(3, 4)])
    def test_constant_bar_fixed_point(self, order):
        xs = np.geomspace(0.1, 10, 7)
        np.testing.assert_allclose(bar_transform(CATALOG["one"], order, xs), 1.0, atol=1e-7)

    def test_exponential_at_half(self):
        # inverse transforms of 1/(1+sqrt p) and p**-0.5/(1+sqrt p) at x = 1
        assert tilde_transform(CATALOG["exp"], HALF, 1.0) == pytest.approx(1 / math.sqrt(math.pi) - ERFC1_E, rel=1e-11, abs=0)
        assert bar_transform(CATALOG["exp"], HALF, 1.0) == pytest.approx(ERFC1_E, rel=1e-11, abs=0)
        assert bar_transform(CATALOG["t"], HALF, 1.0) == pytest.approx(2 / math.sqrt(math.pi), rel=1e-11, abs=0)

    @pytest.mark.parametrize("x", [0.5, 1.0, 2.0])
    def test_tabulated_formulas(self, x):
        f = CATALOG["exp"]
        assert tilde_transform(f, HALF, x) == pytest.approx(levy_smirnov_tilde_reference(f, x), rel=1e-8, abs=0)
        assert bar_transform(f, HALF, x) == pytest.approx(levy_smirnov_bar_reference(f, x), rel=1e-8, abs=0)

    def test_bare_callable_needs_growth(self):
        with pytest.raises(TypeError):
            tilde_transform(np.exp, HALF, 1.0)
        v = tilde_transform(lambda t: np.exp(-t), HALF, 1.0, growth=Growth(decay_rate=1.0))
        assert v == pytest.approx(tilde_transform(CATALOG["exp"], HALF, 1.0), rel=1e-13, abs=0)

    def test_divergence_checks(self):
        with pytest.raises(DomainError):
            bar_transform(lambda t: 1 / t, HALF, 1.0, growth=Growth(power_at_zero=-1.0))
        assert tilde_transform(lambda t: 1 / t, HALF, 1.0, growth=Growth(power_at_zero=-1.0)) > 0
        with pytest.raises(UnsupportedError):
            tilde_transform(np.exp, HALF, 1.0, growth=Growth(decay_rate=-1.0))
        with pytest.raises(DomainError):
            tilde_transform(CATALOG["one"], HALF, 0.0)


class TestCatalog:
    def test_get_pair(self):
        assert get_pair("texp").name == "texp"
        with pytest.raises(KeyError, match="available"):
            get_pair("nosuch")

    @pytest.mark.parametrize("name", list(CATALOG))
    def test_self_test(self, name):
        assert all(r.passed for r in CATALOG[name].self_test())


class TestTheorem1:
    def test_targets(self):
        exp = CATALOG["exp"]
        assert theorem1_target(exp, HALF, "tilde", 1.0) == pytest.approx(0.5)
        assert theorem1_target(exp, HALF, "bar", 4.0) == pytest.approx(1 / 6)
        assert theorem1_target(CATALOG["texp"], R(2, 3), Variant.TILDE, 1.0) == pytest.approx(0.25)

    @pytest.mark.parametrize("variant", list(Variant))
    @pytest.mark.parametrize("name", ["one", "exp", "texp"])
    def test_nested_and_swapped_orders(self, name, variant):
        a = verify_theorem1(CATALOG[name], R(2, 3), variant, 2.0)
        b = verify_theorem1(CATALOG[name], R(2, 3), variant, 2.0, fubini=True)
        assert a.passed and b.passed
        assert a.computed == pytest.approx(b.computed, rel=1e-8, abs=0)

    def test_float_order_and_sqrt_pair(self):
        assert verify_theorem1(CATALOG["sqrt"], 0.4, "bar", 1.5).passed
