"""Convolution identities of the M/N kernels and the mixed-kernel integral J.

* Transitivity: ``int M_a(t, x) M_b(y, t) dt = M_ab(y, x)`` and the same for N.
* Correlation: the Laplace transform in ``x`` of
  ``J_ab(x, y) = int M_a(t, x) N_b(y, t) dt`` is
  ``p**(a(b-1)) exp(-y p**(ab))`` for any real ``a, b`` in (0, 1).
* Closed forms of ``J`` for (a, b) = (2/3, 1/2), (1/2, 2/3), (1/2, 1/2).

Two closed forms differ from their commonly printed versions; both were
settled against the quadrature of ``J`` and Talbot inversion of its
transform (see ``j_closed_case_a`` and ``j_closed_case_b``).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numpy as np

from .density import Order, RationalOrder, alpha_value
from .errors import AccuracyWarning, DomainError
from .kernels import log_m_kernel, log_n_kernel, m_kernel, n_kernel
from .laplace import TalbotConfig, complex_power, forward_laplace, talbot_inverse
from .quadrature import QuadratureConfig, integrate_positive_axis
from .report import VerificationReport
from .special import PFqParams, bessel_k, gamma, hyp_pfq_condition

DEFAULT_QUAD = QuadratureConfig(abs_tol=1e-15 + 1e-16, rel_tol=1e-11)

Number = Union[int, float, Fraction]


# ------------------------------------------------------------- Delta(k, a)

@dataclass(frozen=True)
class DeltaSequence:
    """``a/k, (a+1)/k, ..., (a+k-1)/k``."""

    k: int
    a: Number
    values: tuple

    def __post_init__(self) -> None:
        if len(self.values) != self.k:
            raise DomainError("DeltaSequence must have exactly k values")

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return self.k


def delta_sequence(k: int, a: Number) -> DeltaSequence:
    """Meijer-G parameter block Delta(k, a); exact when ``a`` is rational."""
    if not isinstance(k, int) or k < 1:
        raise DomainError(f"delta_sequence needs a positive integer k, got {k!r}")
    base = a if isinstance(a, (int, Fraction)) else float(a)
    step = Fraction(1, k) if isinstance(base, (int, Fraction)) else 1.0 / k
    start = Fraction(base) / k if isinstance(base, (int, Fraction)) else base / k
    return DeltaSequence(k, a, tuple(start + j * step for j in range(k)))


# -------------------------------------------------------- parameter pairs

@dataclass(frozen=True)
class CorrelationParams:
    """Orders (alpha, beta) of the mixed integral, with ``alpha*beta = l/k`` reduced."""

    alpha: Order
    beta: Order

    def __post_init__(self) -> None:
        alpha_value(self.alpha)
        alpha_value(self.beta)

    @property
    def product(self) -> Order:
        if isinstance(self.alpha, RationalOrder) and isinstance(self.beta, RationalOrder):
            frac = self.alpha.fraction * self.beta.fraction
            if frac.denominator <= 64:
                return RationalOrder(frac.numerator, frac.denominator)
        return alpha_value(self.alpha) * alpha_value(self.beta)

    @property
    def product_fraction(self) -> Fraction | None:
        if isinstance(self.alpha, RationalOrder) and isinstance(self.beta, RationalOrder):
            return self.alpha.fraction * self.beta.fraction
        return None


def _positive(name: str, *values) -> None:
    for v in values:
        if np.any(~(np.asarray(v, dtype=float) > 0)):
            raise DomainError(f"{name}: arguments must be positive")


def _shape_out(values, *args):
    shape = np.broadcast(*[np.asarray(a) for a in args]).shape
    values = np.asarray(values).reshape(shape)
    return float(values) if values.ndim == 0 else values


# ---------------------------------------------------------- transitivity

def _convolution(log_first, log_second, alpha, beta, y, x, quad):
    quad = quad or DEFAULT_QUAD
    xb, yb = np.broadcast_arrays(np.asarray(x, float), np.asarray(y, float))
    logx = np.log(xb.ravel())[:, None]
    logy = np.log(yb.ravel())[:, None]

    def integrand(t):
        logt = np.log(t)
        with np.errstate(under="ignore"):
            return np.exp(log_first(alpha, logt, logx) + log_second(beta, logy, logt))

    # second kernel carries its mass near t ~ y**(1/beta)
    center = logy[:, 0] / alpha_value(beta)
    values, _ = integrate_positive_axis(integrand, quad, center=center)
    return _shape_out(values, x, y)


def m_convolution_lhs(alpha: Order, beta: Order, y, x, quad: QuadratureConfig | None = None):
    """``int_0^inf M_alpha(t, x) M_beta(y, t) dt`` by quadrature."""
    _positive("m_convolution_lhs", x, y)
    return _convolution(log_m_kernel, log_m_kernel, alpha, beta, y, x, quad)


def n_convolution_lhs(alpha: Order, beta: Order, y, x, quad: QuadratureConfig | None = None):
    """``int_0^inf N_alpha(t, x) N_beta(y, t) dt`` by quadrature."""
    _positive("n_convolution_lhs", x, y)
    return _convolution(log_n_kernel, log_n_kernel, alpha, beta, y, x, quad)


def j_integral(alpha: Order, beta: Order, x, y, quad: QuadratureConfig | None = None):
    """``J_{alpha,beta}(x, y) = int_0^inf M_alpha(t, x) N_beta(y, t) dt`` by quadrature."""
    _positive("j_integral", x, y)
    return _convolution(log_m_kernel, log_n_kernel, alpha, beta, y, x, quad)


def _product_order(alpha: Order, beta: Order) -> Order:
    return CorrelationParams(alpha, beta).product


def verify_transitivity(kind: str, alpha: Order, beta: Order, y: float, x: float,
                        quad: QuadratureConfig | None = None, tol: float = 1e-6) -> VerificationReport:
    """Compare the kernel convolution with ``M_{alpha beta}`` or ``N_{alpha beta}``."""
    gamma_ = _product_order(alpha, beta)
    if kind == "M":
        lhs = m_convolution_lhs(alpha, beta, y, x, quad)
        rhs = m_kernel(gamma_, y, x)
    elif kind == "N":
        lhs = n_convolution_lhs(alpha, beta, y, x, quad)
        rhs = n_kernel(gamma_, y, x)
    else:
        raise DomainError(f"kind must be 'M' or 'N', got {kind!r}")
    return VerificationReport.compare(
        f"{kind}-transitivity",
        {"alpha": str(alpha), "beta": str(beta), "x": x, "y": y},
        lhs, rhs, tol,
    )


# ----------------------------------------------------------- correlation

def correlation_F(params: CorrelationParams, p, y):
    """``p**(alpha(beta-1)) * exp(-y p**(alpha beta))``; accepts complex ``p``."""
    a = alpha_value(params.alpha)
    b = alpha_value(params.beta)
    if np.iscomplexobj(p):
        return complex_power(p, a * (b - 1.0)) * np.exp(-np.asarray(y) * complex_power(p, a * b))
    p_arr = np.asarray(p, dtype=float)
    y_arr = np.asarray(y, dtype=float)
    if np.any(~(p_arr > 0)) or np.any(y_arr < 0):
        raise DomainError("correlation_F: need p > 0 and y >= 0")
    out = p_arr ** (a * (b - 1.0)) * np.exp(-y_arr * p_arr ** (a * b))
    return float(out) if out.ndim == 0 else out


def correlation_F_by_quadrature(params: CorrelationParams, p: float, y: float,
                                quad: QuadratureConfig | None = None) -> float:
    """Laplace transform in ``x`` of :func:`j_integral`, both done numerically.

    The inner integral runs with tolerances 100 times tighter than ``quad``.
    """
    _positive("correlation_F_by_quadrature", p, y)
    quad = quad or QuadratureConfig(abs_tol=1e-12, rel_tol=1e-9)
    inner = quad.tightened(100.0)

    def j_of_x(x):
        return j_integral(params.alpha, params.beta, x.ravel(), y, inner).reshape(x.shape)

    return float(forward_laplace(j_of_x, p, quad))


# F_ab / F_ba = p**(ab - a) / p**(ab - b) = p**(b - a).  The printed form of
# this relation carries p**(a - b), which holds only at p = 1 or a = b.
SYMMETRY_EXPONENT_SIGN = -1


def symmetry_factor(params: CorrelationParams, p, *, printed: bool = False):
    """Ratio ``F_ab(p, y) / F_ba(p, y) = p**(b-a)``; ``printed=True`` gives ``p**(a-b)``."""
    a = alpha_value(params.alpha)
    b = alpha_value(params.beta)
    sign = -SYMMETRY_EXPONENT_SIGN if printed else SYMMETRY_EXPONENT_SIGN
    return np.asarray(p, dtype=float) ** (sign * (a - b))


def symmetry_residual(params: CorrelationParams, p, y, *, printed: bool = False):
    """``F_ab(p, y) - factor * F_ba(p, y)``, zero up to rounding for the true factor."""
    swapped = CorrelationParams(params.beta, params.alpha)
    out = correlation_F(params, p, y) - symmetry_factor(params, p, printed=printed) * correlation_F(swapped, p, y)
    return float(out) if np.ndim(out) == 0 else out


def verify_symmetry(params: CorrelationParams, p: float, y: float, tol: float = 1e-15) -> VerificationReport:
    swapped = CorrelationParams(params.beta, params.alpha)
    return VerificationReport.compare(
        "correlation-symmetry",
        {"alpha": str(params.alpha), "beta": str(params.beta), "p": p, "y": y},
        correlation_F(params, p, y),
        float(symmetry_factor(params, p)) * correlation_F(swapped, p, y), tol,
    )


def verify_correlation(params: CorrelationParams, p: float, y: float,
                       quad: QuadratureConfig | None = None, tol: float = 1e-5) -> VerificationReport:
    return VerificationReport.compare(
        "correlation-closed-form",
        {"alpha": str(params.alpha), "beta": str(params.beta), "p": p, "y": y},
        correlation_F_by_quadrature(params, p, y, quad), correlation_F(params, p, y), tol,
    )


def j_talbot(alpha: Order, beta: Order, x, y: float, cfg: TalbotConfig | None = None):
    """``J_{alpha,beta}(x, y)`` by Talbot inversion of its Laplace transform."""
    params = CorrelationParams(alpha, beta)
    return talbot_inverse(lambda s: correlation_F(params, s, y), x, cfg)


# ----------------------------------------------------------- closed forms

_THIRD = 1.0 / 3.0
# Exponent of y inside the Bessel argument of case (a).  The reduction
# G^{2,0}_{0,2}(z | 0, 2/3) = 2 z^{1/3} K_{2/3}(2 sqrt z) with z = y^3/(27x)
# gives y^{3/2}; the printed form of this result shows y^{2/3}, which
# disagrees with quadrature and Talbot inversion except at y = 1.
CASE_A_Y_EXPONENT = 1.5
# Power of y in the second term of case (b).  Slater's expansion of
# G^{3,0}_{1,3} contributes z^{1/3} = y / (3 x^{1/3}), i.e. y^1; the
# printed form shows y^{1/3}, again matching the oracles only at y = 1.
CASE_B_SECOND_Y_POWER = 1.0


def _case_a(x: float, y: float, y_exponent: float) -> float:
    if y == 0:
        # K_nu(z) ~ Gamma(nu)/2 (z/2)^(-nu): the limit is L^{-1}[p^{-1/3}]
        return x ** (-2.0 / 3.0) / gamma(_THIRD)
    z = 2.0 * y ** y_exponent / (3.0 * math.sqrt(3.0 * x))
    return y / (math.sqrt(3.0) * math.pi * x) * bessel_k(2.0 / 3.0, z)


def j_closed_case_a(x: float, y: float) -> float:
    """``J_{2/3,1/2}(x, y) = y/(sqrt(3) pi x) K_{2/3}(2 y**1.5 / (3 sqrt(3x)))``."""
    if not x > 0 or not y >= 0:
        raise DomainError("j_closed_case_a: need x > 0, y >= 0")
    return _case_a(float(x), float(y), CASE_A_Y_EXPONENT)


def _sum_terms(terms: list[tuple[float, float, float]], label: str) -> float:
    # terms: (prefactor, series value, series condition number)
    value = sum(pre * s for pre, s, _ in terms)
    spread = sum(abs(pre * s) * cond for pre, s, cond in terms)
    if value == 0 or spread * 2.2e-16 > 1e-9 * abs(value):
        warnings.warn(f"{label}: cancellation may limit accuracy "
                      f"(condition ~ {spread / abs(value) if value else math.inf:.1e})",
                      AccuracyWarning, stacklevel=3)
    return value


def _case_b(x: float, y: float, second_power: float) -> float:
    z = y ** 3 / (27.0 * x)
    g56 = gamma(5.0 / 6.0)
    s1 = hyp_pfq_condition(PFqParams([5 / 6], [1 / 3, 2 / 3]), z)
    s2 = hyp_pfq_condition(PFqParams([7 / 6], [2 / 3, 4 / 3]), z)
    s3 = hyp_pfq_condition(PFqParams([1.5], [4 / 3, 5 / 3]), z)
    return _sum_terms([
        (g56 / (2.0 * math.pi * x ** (5.0 / 6.0)), *s1),
        (y ** second_power / (6.0 * g56 * x ** (7.0 / 6.0)), *s2),
        (-(y ** 2) / (4.0 * math.sqrt(math.pi) * x ** 1.5), *s3),
    ], "j_closed_case_b")


def j_closed_case_b(x: float, y: float) -> float:
    """``J_{1/2,2/3}(x, y)`` as three 1F2 terms in ``z = y**3/(27x)``."""
    if not x > 0 or not y >= 0:
        raise DomainError("j_closed_case_b: need x > 0, y >= 0")
    return _case_b(float(x), float(y), CASE_B_SECOND_Y_POWER)


def j_closed_case_c(x: float, y: float) -> float:
    """``J_{1/2,1/2}(x, y)`` as three 0F2 terms in ``-w``, ``w = y**4/(256x)``."""
    if not x > 0 or not y >= 0:
        raise DomainError("j_closed_case_c: need x > 0, y >= 0")
    x, y = float(x), float(y)
    w = -(y ** 4) / (256.0 * x)
    g34 = gamma(0.75)
    s1 = hyp_pfq_condition(PFqParams([], [0.25, 0.5]), w)
    s2 = hyp_pfq_condition(PFqParams([], [0.75, 1.5]), w)
    s3 = hyp_pfq_condition(PFqParams([], [1.25, 1.75]), w)
    return _sum_terms([
        (g34 / (math.sqrt(2.0) * math.pi * x ** 0.75), *s1),
        (-(y ** 2) / (8.0 * g34 * x ** 1.25), *s2),
        (y ** 3 / (12.0 * math.sqrt(math.pi) * x ** 1.5), *s3),
    ], "j_closed_case_c")


J_CASES = {
    "a": (RationalOrder(2, 3), RationalOrder(1, 2), j_closed_case_a),
    "b": (RationalOrder(1, 2), RationalOrder(2, 3), j_closed_case_b),
    "c": (RationalOrder(1, 2), RationalOrder(1, 2), j_closed_case_c),
}


def verify_j_case(case: str, x: float, y: float, quad: QuadratureConfig | None = None,
                  cfg: TalbotConfig | None = None, tol: float = 1e-6) -> list[VerificationReport]:
    """Check a closed form against both ``j_integral`` and Talbot inversion."""
    alpha, beta, closed = J_CASES[case]
    value = closed(x, y)
    params = {"case": case, "alpha": str(alpha), "beta": str(beta), "x": x, "y": y}
    return [
        VerificationReport.compare(f"j-case-{case}-vs-quadrature", params, value,
                                   j_integral(alpha, beta, x, y, quad), tol),
        VerificationReport.compare(f"j-case-{case}-vs-talbot", params, value,
                                   j_talbot(alpha, beta, x, y, cfg), tol),
    ]
