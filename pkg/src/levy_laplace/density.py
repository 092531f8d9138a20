"""One-sided Levy stable densities g_alpha, 0 < alpha < 1.

``g_alpha`` is the probability density on ``(0, inf)`` whose Laplace
transform is ``exp(-p**alpha)``.  Two evaluation paths are combined:

* large ``x``: the convergent inverse-power series

      g(x) = 1/(pi x) * sum_{n>=1} (-1)**(n+1) Gamma(n alpha + 1)/n!
                                   * sin(pi n alpha) * x**(-n alpha)

  summed by Horner's rule in ``z = x**(-alpha)`` with a running bound on
  the cancellation ``sum|term| / |sum|``;
* small ``x`` (and wherever the series cancels too much or needs more than
  ``large_x_terms`` terms): the positive-integrand representation

      g(x) = alpha/((1-alpha) pi) * x**(-1/(1-alpha))
             * int_0^pi A(phi) exp(-x**(-alpha/(1-alpha)) A(phi)) dphi,
      A(phi) = (sin(alpha phi)/sin(phi))**(1/(1-alpha))
               * sin((1-alpha) phi)/sin(alpha phi),

  integrated with a fixed tanh-sinh rule.  The integrand is positive, so
  the result keeps full relative accuracy even where ``g`` is
  exponentially small.

For ``alpha = 1/2`` the Levy-Smirnov closed form is used unless disabled.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Union

import numpy as np

from .errors import AccuracyWarning, DomainError
from .quadrature import QuadratureConfig, integrate_positive_axis, tanh_sinh_rule
from .report import VerificationReport
from .special import loggamma

MAX_DENOMINATOR = 64
# Largest leading exponent lambda * A(0), lambda = x**(-alpha/(1-alpha)), kept by the
# integral path (log g ~ -1e5).  Smaller x gives log g = -inf.  Relative accuracy of g
# there is limited to about exponent * eps by the conditioning of exp itself.
EXPONENT_MAX = 1e5


@dataclass(frozen=True, order=True)
class RationalOrder:
    """Stability index ``alpha = l/k`` with ``gcd(l, k) = 1`` and ``0 < l < k <= 64``."""

    l: int
    k: int

    def __post_init__(self) -> None:
        if not (isinstance(self.l, int) and isinstance(self.k, int)):
            raise DomainError("l and k must be integers")
        if not 0 < self.l < self.k:
            raise DomainError(f"alpha must satisfy 0 < l/k < 1, got {self.l}/{self.k}")
        if math.gcd(self.l, self.k) != 1:
            raise DomainError(f"l and k must be coprime, got {self.l}/{self.k}")
        if self.k > MAX_DENOMINATOR:
            raise DomainError(f"denominator k must be <= {MAX_DENOMINATOR}, got {self.k}")

    @classmethod
    def from_fraction(cls, value: Fraction | str, *, reduce: bool = True) -> "RationalOrder":
        """Build from ``Fraction`` or ``"l/k"``; a non-reduced input is reduced with a warning."""
        if isinstance(value, str):
            text = value.strip()
            num, sep, den = text.partition("/")
            try:
                l, k = int(num), int(den) if sep else 1
            except ValueError:
                raise DomainError(f"cannot parse rational order {value!r}; expected 'l/k'") from None
        else:
            l, k = value.numerator, value.denominator
        if k == 0:
            raise DomainError("denominator must be nonzero")
        g = math.gcd(l, k)
        if g > 1:
            if not reduce:
                raise DomainError(f"l and k must be coprime, got {l}/{k}")
            warnings.warn(f"alpha {l}/{k} reduced to {l // g}/{k // g}", stacklevel=2)
            l, k = l // g, k // g
        return cls(l, k)

    @property
    def value(self) -> float:
        return self.l / self.k

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.l, self.k)

    def __mul__(self, other: "RationalOrder") -> "RationalOrder":
        if not isinstance(other, RationalOrder):
            return NotImplemented
        prod = self.fraction * other.fraction
        return RationalOrder(prod.numerator, prod.denominator)

    def __float__(self) -> float:
        return self.value

    def __str__(self) -> str:
        return f"{self.l}/{self.k}"


Order = Union[RationalOrder, float]


def alpha_value(order: Order) -> float:
    """Real value of an order given as :class:`RationalOrder` or a float in (0, 1)."""
    a = order.value if isinstance(order, RationalOrder) else float(order)
    if not 0 < a < 1:
        raise DomainError(f"alpha must lie in (0, 1), got {a!r}")
    return a


def _default_crossover(alpha: float) -> float:
    return 0.5 * alpha ** (1.0 / (1.0 - alpha))


@dataclass(frozen=True)
class DensityEvaluator:
    """Immutable evaluator of ``g_alpha`` with tunable regime switch.

    Parameters
    ----------
    order:
        Stability index, rational or float in (0, 1).
    large_x_terms:
        Series length budget; points that need more terms fall back to the
        integral path.
    crossover_x:
        The series is only tried for ``x >= crossover_x``.  Defaults to
        ``0.5 * alpha**(1/(1-alpha))``.
    target_rel_err:
        Bound on the relative error the evaluator aims for.  Sets the
        largest tolerated series cancellation ratio and the threshold of
        the integral path's self-check.
    fast_path:
        Use the closed form for ``alpha = 1/2``.
    """

    order: Order
    large_x_terms: int = 200
    crossover_x: float | None = None
    target_rel_err: float = 1e-12
    fast_path: bool = True
    _alpha: float = field(init=False, repr=False, compare=False)
    _coef: np.ndarray = field(init=False, repr=False, compare=False)
    _abs_coef: np.ndarray = field(init=False, repr=False, compare=False)
    _log_abs_coef: np.ndarray = field(init=False, repr=False, compare=False)
    _phi: np.ndarray = field(init=False, repr=False, compare=False)
    _weights: np.ndarray = field(init=False, repr=False, compare=False)
    _shape: np.ndarray = field(init=False, repr=False, compare=False)
    _shape_min: float = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        alpha = alpha_value(self.order)
        if not 1e-14 < self.target_rel_err < 1e-2:
            raise DomainError("target_rel_err must lie in (1e-14, 1e-2)")
        if self.crossover_x is not None and not self.crossover_x > 0:
            raise DomainError("crossover_x must be positive")
        if self.large_x_terms < 1:
            raise DomainError("large_x_terms must be positive")
        set_ = object.__setattr__
        set_(self, "_alpha", alpha)
        if self.crossover_x is None:
            set_(self, "crossover_x", _default_crossover(alpha))

        n = np.arange(1, self.large_x_terms + 1)
        log_mag = np.array([loggamma(k * alpha + 1.0) - loggamma(k + 1.0) for k in n])
        sines = self._sines(n)
        coef = np.where(sines == 0.0, 0.0, np.exp(log_mag) * sines * np.where(n % 2 == 1, 1.0, -1.0))
        set_(self, "_coef", coef)
        set_(self, "_abs_coef", np.abs(coef))
        with np.errstate(divide="ignore"):
            set_(self, "_log_abs_coef", np.log(np.abs(coef)))

        phi, w = tanh_sinh_rule(0.0, math.pi, 1.0 / 48.0, 3.6)
        with np.errstate(over="ignore"):
            shape = (np.sin(alpha * phi) / np.sin(phi)) ** (1.0 / (1.0 - alpha)) * (
                np.sin((1.0 - alpha) * phi) / np.sin(alpha * phi))
        keep = np.isfinite(shape)
        set_(self, "_phi", phi[keep])
        set_(self, "_weights", w[keep])
        set_(self, "_shape", shape[keep])
        set_(self, "_shape_min", alpha ** (alpha / (1.0 - alpha)) * (1.0 - alpha))

    def _sines(self, n: np.ndarray) -> np.ndarray:
        if isinstance(self.order, RationalOrder):
            # reduce n*l mod 2k exactly so multiples of k give exact zeros
            l, k = self.order.l, self.order.k
            m = (n * l) % (2 * k)
            return np.where(m % k == 0, 0.0, np.sin(np.pi * m / k))
        return np.sin(np.pi * n * self._alpha)

    @property
    def alpha(self) -> float:
        return self._alpha

    @property
    def is_levy_smirnov(self) -> bool:
        return self.fast_path and self._alpha == 0.5

    # -- evaluation paths ------------------------------------------------

    def _series(self, logx: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        """Return (log g, ok-mask) from the inverse-power series."""
        z = np.exp(-self._alpha * logx)
        if z.size == 0:
            return np.empty(0), np.zeros(0, bool)
        # series length needed by the largest z in the batch
        lz = math.log(float(z.max()))
        log_terms = self._log_abs_coef + np.arange(1, self._coef.size + 1) * lz
        peak = int(np.argmax(log_terms))
        small = np.nonzero(np.isfinite(log_terms) & (log_terms < log_terms[peak] - 60.0))[0]
        small = small[small > peak]
        n_eff = int(small[0]) + 1 if small.size else self._coef.size

        acc = np.zeros_like(z)
        abs_acc = np.zeros_like(z)
        with np.errstate(over="ignore", invalid="ignore"):
            for c, ac in zip(self._coef[n_eff - 1::-1], self._abs_coef[n_eff - 1::-1]):
                acc = acc * z + c
                abs_acc = abs_acc * z + ac
            acc *= z
            abs_acc *= z
            n_last = int(np.nonzero(self._abs_coef[:n_eff])[0][-1]) + 1
            last = self._abs_coef[n_last - 1] * z ** n_last
            cond = abs_acc / np.abs(acc)
            max_cond = 0.1 * self.target_rel_err / np.finfo(float).eps
            ok = (acc > 0) & np.isfinite(abs_acc) & (cond <= max_cond) & (last <= 1e-17 * acc)
            logg = np.log(np.where(ok, acc, 1.0)) - math.log(math.pi) - logx
        return logg, ok

    def _integral(self, logx: np.ndarray) -> np.ndarray:
        """log g from the positive-integrand representation."""
        a = self._alpha
        lam = np.exp(-a / (1.0 - a) * logx)[:, None]
        excess = self._shape[None, :] - self._shape_min
        with np.errstate(under="ignore"):
            weighted = self._weights * self._shape * np.exp(-lam * excess)
        total = weighted.sum(axis=1)
        coarse = 2.0 * weighted[:, ::2].sum(axis=1)
        with np.errstate(divide="ignore", invalid="ignore"):
            rel = np.abs(total - coarse) / total
        if np.any(rel > math.sqrt(self.target_rel_err)):
            warnings.warn(
                "density integral path may miss target accuracy "
                f"(self-check {float(np.nanmax(rel)):.1e}) at extreme x",
                AccuracyWarning,
                stacklevel=3,
            )
        with np.errstate(divide="ignore"):
            return (math.log(a / ((1.0 - a) * math.pi)) - logx / (1.0 - a)
                    - lam[:, 0] * self._shape_min + np.log(total))

    def log_density(self, logx) -> np.ndarray:
        """``log g_alpha(exp(logx))``, finite far below the double range of ``g``.

        Returns ``-inf`` once the leading exponent exceeds ``EXPONENT_MAX``.
        """
        logx = np.asarray(logx, dtype=float)
        flat = logx.ravel()
        if self.is_levy_smirnov:
            with np.errstate(over="ignore"):
                out = -1.5 * flat - 0.25 * np.exp(-flat) - math.log(2.0 * math.sqrt(math.pi))
            return out.reshape(logx.shape)
        out = np.full(flat.shape, -np.inf)
        a = self._alpha
        with np.errstate(over="ignore"):
            lam = np.exp(-a / (1.0 - a) * flat)
        live = lam * self._shape_min <= EXPONENT_MAX
        use_series = live & (flat >= math.log(self.crossover_x))
        idx = np.nonzero(use_series)[0]
        if idx.size:
            vals, ok = self._series(flat[idx])
            out[idx[ok]] = vals[ok]
            use_series[idx[~ok]] = False
        rest = np.nonzero(live & ~use_series)[0]
        for chunk in np.array_split(rest, max(1, rest.size // 4096)):
            if chunk.size:
                out[chunk] = self._integral(flat[chunk])
        return out.reshape(logx.shape)

    def __call__(self, x):
        x_arr = np.asarray(x, dtype=float)
        if np.any(~(x_arr > 0)):
            raise DomainError("density: x must be positive")
        with np.errstate(under="ignore"):
            out = np.exp(self.log_density(np.log(x_arr)))
        return float(out) if out.ndim == 0 else out


@lru_cache(maxsize=64)
def evaluator_for(order: Order, fast_path: bool = True) -> DensityEvaluator:
    """Shared default evaluator for an order (evaluators are immutable)."""
    return DensityEvaluator(order, fast_path=fast_path)


def density(order: Order, x):
    """``g_alpha(x)`` for ``x > 0`` (scalar or array)."""
    return evaluator_for(order)(x)


def log_density(order: Order, logx):
    """``log g_alpha(exp(logx))``, accepting the logarithm to avoid overflow."""
    return evaluator_for(order).log_density(logx)


def levy_smirnov(x):
    """Closed form ``g_{1/2}(x) = exp(-1/(4x)) / (2 sqrt(pi) x**1.5)``."""
    x = np.asarray(x, dtype=float)
    if np.any(~(x > 0)):
        raise DomainError("levy_smirnov: x must be positive")
    with np.errstate(under="ignore"):
        out = np.exp(-1.5 * np.log(x) - 0.25 / x) / (2.0 * math.sqrt(math.pi))
    return float(out) if out.ndim == 0 else out


def verify_defining_property(
    order: Order,
    p: float,
    quad: QuadratureConfig | None = None,
    *,
    evaluator: DensityEvaluator | None = None,
) -> VerificationReport:
    """Check ``int_0^inf exp(-p x) g_alpha(x) dx = exp(-p**alpha)`` by quadrature.

    The report's error is absolute and the tolerance is ``quad.abs_tol``
    scaled up to at least 1e-8 unless the config asks for less.
    """
    quad = quad or QuadratureConfig(abs_tol=1e-11, rel_tol=1e-11)
    if not p > 0:
        raise DomainError("verify_defining_property: p must be positive")
    ev = evaluator or evaluator_for(order)
    alpha = ev.alpha

    def integrand(x):
        with np.errstate(under="ignore"):
            return np.exp(-p * x + ev.log_density(np.log(x)))

    value, err = integrate_positive_axis(integrand, quad, center=min(0.0, -math.log(p)))
    reference = math.exp(-p ** alpha)
    return VerificationReport.compare(
        "laplace-of-density",
        {"alpha": str(order), "p": p},
        float(value),
        reference,
        max(quad.abs_tol, 1e-8),
        error_kind="absolute",
        quadrature_error=float(err),
    )


def normalization(order: Order, quad: QuadratureConfig | None = None) -> float:
    """``int_0^inf g_alpha(x) dx`` by quadrature (should be 1)."""
    quad = quad or QuadratureConfig(abs_tol=1e-11, rel_tol=1e-11, tail_cut=400.0)
    ev = evaluator_for(order)

    def integrand(x):
        with np.errstate(under="ignore"):
            return np.exp(ev.log_density(np.log(x)))

    value, _ = integrate_positive_axis(integrand, quad)
    return float(value)
