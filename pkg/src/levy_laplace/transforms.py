"""Levy integral transformations and the numerical check of their Laplace images.

For a function ``f`` on ``(0, inf)`` with Laplace transform ``F``:

    tilde f_alpha(x) = int_0^inf M_alpha(t, x) f(t) dt,   L[tilde f_alpha](p) = F(p**alpha)
    bar f_alpha(x)   = int_0^inf N_alpha(t, x) f(t) dt,   L[bar f_alpha](p)   = p**(alpha-1) F(p**alpha)

Functions are black-box vectorised callables.  Because convergence of the
integrals cannot be read off a callable, every transform call needs a
:class:`Growth` description (catalog pairs carry their own).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable

import numpy as np

from .density import Order, alpha_value
from .errors import DomainError, UnsupportedError
from .kernels import log_m_kernel, log_n_kernel
from .laplace import complex_power, forward_laplace
from .quadrature import QuadratureConfig, integrate_positive_axis
from .report import VerificationReport

DEFAULT_QUAD = QuadratureConfig(abs_tol=1e-14, rel_tol=1e-11)


@dataclass(frozen=True)
class Growth:
    """Asymptotics of ``f``: ``~ t**power_at_zero`` as t -> 0 and
    ``~ t**power_at_infinity * exp(-decay_rate * t)`` as t -> inf."""

    power_at_zero: float = 0.0
    power_at_infinity: float = 0.0
    decay_rate: float = 0.0


class Variant(str, Enum):
    TILDE = "tilde"
    BAR = "bar"


@dataclass(frozen=True)
class LaplacePair:
    """A function, its Laplace transform (complex capable) and growth metadata."""

    name: str
    f: Callable[[np.ndarray], np.ndarray]
    F: Callable
    f_growth: Growth
    description: str = ""

    def self_test(self, ps=(0.5, 1.0, 2.0), tol: float = 1e-9) -> list[VerificationReport]:
        """Compare numerical forward transforms of ``f`` with ``F`` at ``ps``."""
        quad = QuadratureConfig(abs_tol=1e-15 + 1e-16, rel_tol=1e-12)
        values = forward_laplace(self.f, np.asarray(ps, dtype=float), quad)
        return [
            VerificationReport.compare("catalog-self-test", {"pair": self.name, "p": float(p)},
                                       float(v), float(np.real(self.F(complex(p)))), tol)
            for p, v in zip(ps, values)
        ]


def _one(t):
    return np.ones_like(t)


CATALOG: dict[str, LaplacePair] = {
    pair.name: pair
    for pair in (
        LaplacePair("one", _one, lambda p: 1.0 / p, Growth(0.0, 0.0, 0.0), "1 <-> 1/p"),
        LaplacePair("exp", lambda t: np.exp(-t), lambda p: 1.0 / (1.0 + p),
                    Growth(0.0, 0.0, 1.0), "exp(-t) <-> 1/(1+p)"),
        LaplacePair("texp", lambda t: t * np.exp(-t), lambda p: 1.0 / (1.0 + p) ** 2,
                    Growth(1.0, 1.0, 1.0), "t exp(-t) <-> 1/(1+p)^2"),
        LaplacePair("t", lambda t: t, lambda p: 1.0 / p ** 2, Growth(1.0, 1.0, 0.0), "t <-> 1/p^2"),
        LaplacePair("sqrt", np.sqrt, lambda p: 0.5 * math.sqrt(math.pi) / complex_power(p, 1.5),
                    Growth(0.5, 0.5, 0.0), "sqrt(t) <-> sqrt(pi)/(2 p^(3/2))"),
    )
}

# pairs used by the Theorem 1 grid
THEOREM1_PAIRS = ("one", "exp", "texp")


def get_pair(name: str) -> LaplacePair:
    try:
        return CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown catalog function {name!r}; available: {', '.join(CATALOG)}") from None


def _resolve(f, growth: Growth | None) -> tuple[Callable, Growth]:
    if isinstance(f, LaplacePair):
        return f.f, growth or f.f_growth
    if growth is None:
        raise TypeError("growth metadata is required for a bare callable; pass growth=Growth(...)")
    return f, growth


def _check_convergence(growth: Growth, variant: Variant) -> None:
    # M ~ t and N ~ const as t -> 0; both decay faster than any exponential at infinity.
    limit = -2.0 if variant is Variant.TILDE else -1.0
    if not growth.power_at_zero > limit:
        raise DomainError(
            f"{variant.value} transform diverges at t=0 for f ~ t**{growth.power_at_zero:g}")
    if growth.decay_rate < 0:
        raise UnsupportedError("exponentially growing f is not supported")


def _transform(variant: Variant, f, order: Order, x, quad, growth):
    func, growth = _resolve(f, growth)
    _check_convergence(growth, variant)
    alpha = alpha_value(order)
    quad = quad or DEFAULT_QUAD
    x_arr = np.asarray(x, dtype=float)
    if np.any(~(x_arr > 0)):
        raise DomainError(f"{variant.value}_transform: x must be positive")
    logx = np.log(x_arr.ravel())[:, None]
    log_kernel = log_m_kernel if variant is Variant.TILDE else log_n_kernel

    def integrand(t):
        with np.errstate(under="ignore"):
            return np.exp(log_kernel(order, np.log(t), logx)) * func(t)

    # M_alpha(., x) has its mass around t ~ x**alpha
    center = alpha * logx[:, 0]
    if growth.decay_rate > 0:
        center = np.minimum(center, -math.log(growth.decay_rate) + 1.0)
    values, _ = integrate_positive_axis(integrand, quad, center=center)
    values = np.asarray(values).reshape(x_arr.shape)
    return float(values) if values.ndim == 0 else values


def tilde_transform(f, order: Order, x, quad: QuadratureConfig | None = None, *,
                    growth: Growth | None = None):
    """``int_0^inf M_alpha(t, x) f(t) dt`` for scalar or array ``x``."""
    return _transform(Variant.TILDE, f, order, x, quad, growth)


def bar_transform(f, order: Order, x, quad: QuadratureConfig | None = None, *,
                  growth: Growth | None = None):
    """``int_0^inf N_alpha(t, x) f(t) dt`` for scalar or array ``x``."""
    return _transform(Variant.BAR, f, order, x, quad, growth)


def levy_smirnov_tilde_reference(f, x, quad: QuadratureConfig | None = None):
    """Tabulated inversion formula for ``F(sqrt p)``:
    ``(4 pi x**3)**(-1/2) int_0^inf t exp(-t**2/(4x)) f(t) dt``.

    Uses only elementary functions, so it checks the ``alpha = 1/2`` case
    of :func:`tilde_transform` independently of the density code.
    """
    return _gaussian_reference(f, x, quad, weight_power=1)


def levy_smirnov_bar_reference(f, x, quad: QuadratureConfig | None = None):
    """Tabulated inversion formula for ``p**(-1/2) F(sqrt p)``:
    ``(pi x)**(-1/2) int_0^inf exp(-t**2/(4x)) f(t) dt``."""
    return _gaussian_reference(f, x, quad, weight_power=0)


def _gaussian_reference(f, x, quad, weight_power):
    func = f.f if isinstance(f, LaplacePair) else f
    quad = quad or DEFAULT_QUAD
    x_arr = np.asarray(x, dtype=float)
    if np.any(~(x_arr > 0)):
        raise DomainError("x must be positive")
    col = x_arr.ravel()[:, None]

    def integrand(t):
        return t ** weight_power * np.exp(-t * t / (4.0 * col)) * func(t)

    values, _ = integrate_positive_axis(integrand, quad, center=0.5 * np.log(4.0 * col[:, 0]))
    values = np.asarray(values)
    if weight_power == 1:
        values = values / (2.0 * np.sqrt(math.pi * col[:, 0] ** 3))
    else:
        values = values / np.sqrt(math.pi * col[:, 0])
    values = values.reshape(x_arr.shape)
    return float(values) if values.ndim == 0 else values


def theorem1_target(pair: LaplacePair, order: Order, variant: Variant | str, p: float) -> float:
    """``F(p**alpha)`` (tilde) or ``p**(alpha-1) F(p**alpha)`` (bar)."""
    alpha = alpha_value(order)
    pa = p ** alpha
    value = complex(pair.F(complex(pa))).real
    if Variant(variant) is Variant.BAR:
        value *= p ** (alpha - 1.0)
    return value


def verify_theorem1(
    pair: LaplacePair,
    order: Order,
    variant: Variant | str,
    p: float,
    quad: QuadratureConfig | None = None,
    *,
    tol: float = 1e-6,
    fubini: bool = False,
) -> VerificationReport:
    """Numerically Laplace-transform the Levy transform of ``pair.f`` at ``p``.

    The default evaluation is nested: an outer quadrature in ``x`` of
    ``exp(-p x)`` times the transform, whose inner integral runs with
    tolerances 100 times tighter.  ``fubini=True`` swaps the order instead
    (inner integral in ``x`` of the kernel against ``exp(-p x)``), a cross
    check on the quadrature rather than on the identity.
    """
    variant = Variant(variant)
    if not p > 0:
        raise DomainError("p must be positive")
    quad = quad or QuadratureConfig(abs_tol=1e-12, rel_tol=1e-9)
    inner = quad.tightened(100.0)
    alpha = alpha_value(order)
    transform = tilde_transform if variant is Variant.TILDE else bar_transform

    if not fubini:
        value = forward_laplace(lambda x: transform(pair, order, x.ravel(), inner).reshape(x.shape),
                                p, quad)
    else:
        log_kernel = log_m_kernel if variant is Variant.TILDE else log_n_kernel

        def kernel_laplace(t):
            logt = np.log(t.ravel())[:, None]

            def integrand(x):
                with np.errstate(under="ignore"):
                    return np.exp(-p * x + log_kernel(order, logt, np.log(x)))

            vals, _ = integrate_positive_axis(integrand, inner, center=logt[:, 0] / alpha)
            return np.asarray(vals).reshape(t.shape)

        def integrand(t):
            return kernel_laplace(t) * pair.f(t)

        value, _ = integrate_positive_axis(integrand, quad, center=0.0)

    target = theorem1_target(pair, order, variant, p)
    return VerificationReport.compare(
        f"theorem1-{variant.value}",
        {"pair": pair.name, "alpha": str(order), "p": p, "fubini": fubini},
        float(value), target, tol,
    )
