"""Scalar special functions: gamma, log-gamma, K_nu and pFq.

All functions take and return Python floats.  Invalid input raises one of
the typed errors in :mod:`levy_laplace.errors`; no function returns NaN.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from typing import Sequence

import numpy as np

from .errors import ConvergenceError, DomainError, SeriesOverflowError, UnsupportedError
from .quadrature import gauss_kronrod

# Lanczos approximation, g = 7, n = 9.
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_HALF_LOG_TWO_PI = 0.5 * math.log(2.0 * math.pi)


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0 and x == math.floor(x)


def _sin_pi(x: float) -> float:
    """sin(pi x) with exact zeros at integers."""
    r = math.fmod(x, 2.0)
    if r == math.floor(r):
        return 0.0
    return math.sin(math.pi * r)


def _lanczos_sum(x: float) -> float:
    # x is the shifted argument (z - 1)
    acc = _LANCZOS_COEF[0]
    for i, c in enumerate(_LANCZOS_COEF[1:], start=1):
        acc += c / (x + i)
    return acc


def gamma(x: float) -> float:
    """Gamma function for real ``x`` off the non-positive integers."""
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"gamma: non-finite argument {x!r}")
    if _is_nonpositive_integer(x):
        raise DomainError(f"gamma: pole at x = {x:g}")
    if x < 0.5:
        return math.pi / (_sin_pi(x) * gamma(1.0 - x))
    if x > 171.6:
        raise SeriesOverflowError("gamma overflows double precision", math.inf)
    z = x - 1.0
    t = z + _LANCZOS_G + 0.5
    # split the power to keep t**(z + 0.5) finite up to x ~ 171
    half_pow = t ** (0.5 * (z + 0.5))
    return math.sqrt(2.0 * math.pi) * half_pow * (half_pow * math.exp(-t)) * _lanczos_sum(z)


def loggamma(x: float) -> float:
    """log|Gamma(x)|, finite for every real ``x`` that is not a pole."""
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"loggamma: non-finite argument {x!r}")
    if _is_nonpositive_integer(x):
        raise DomainError(f"loggamma: pole at x = {x:g}")
    if x < 0.5:
        return math.log(math.pi / abs(_sin_pi(x))) - loggamma(1.0 - x)
    if x < 15.0:
        return math.log(abs(gamma(x)))
    z = x - 1.0
    t = z + _LANCZOS_G + 0.5
    return _HALF_LOG_TWO_PI + (z + 0.5) * math.log(t) - t + math.log(_lanczos_sum(z))


def rgamma(x: float) -> float:
    """1/Gamma(x), equal to zero at the poles of Gamma."""
    if _is_nonpositive_integer(float(x)):
        return 0.0
    if x > 171.6:
        return 0.0 if x > 200 else math.exp(-loggamma(x))
    return 1.0 / gamma(x)


# ---------------------------------------------------------------- Bessel K

BESSEL_MAX_ORDER = 10.0
_SERIES_CROSSOVER = 2.0
# Minimum distance of nu from an integer for the I_{-nu}, I_nu difference
# formula; closer orders use the integral representation.
_NEAR_INTEGER = 0.05


def _bessel_k_half_integer(nu: float, z: float) -> float:
    n = int(round(nu - 0.5))
    acc = 0.0
    term = 1.0
    for k in range(n + 1):
        if k:
            # (n+k)! / (k! (n-k)!) / (2z)^k, built up recursively
            term *= (n + k) * (n - k + 1) / (k * 2.0 * z)
        acc += term
    return math.sqrt(math.pi / (2.0 * z)) * math.exp(-z) * acc


def _bessel_i_series(mu: float, z: float) -> float:
    half = 0.5 * z
    term = half ** mu * rgamma(mu + 1.0)
    acc = term
    q = half * half
    k = 0
    while True:
        k += 1
        denom = k * (k + mu)
        term *= q / denom
        acc += term
        if abs(term) <= 1e-17 * abs(acc) and k > abs(mu):
            return acc
        if k > 500:
            raise ConvergenceError("Bessel I series did not converge")


def _bessel_k_integral(nu: float, z: float) -> float:
    # K_nu(z) = int_0^inf exp(-z cosh t) cosh(nu t) dt, rescaled by its peak.
    t_peak = math.asinh(nu / z)
    peak = -z * math.cosh(t_peak) + nu * t_peak

    def exponent(t):
        return -z * np.cosh(t) + nu * t - peak

    upper = t_peak + 1.0
    while exponent(upper) > -60.0:
        upper += 1.0

    def integrand(t):
        return 0.5 * (np.exp(exponent(t)) + np.exp(exponent(t) - 2.0 * nu * t))

    value, _ = gauss_kronrod(integrand, 0.0, upper, abs_tol=0.0 + 1e-300, rel_tol=1e-14)
    return math.exp(peak) * value


def bessel_k(nu: float, z: float) -> float:
    """Modified Bessel function of the second kind K_nu(z), real order.

    Supports ``|nu| <= 10`` and ``z > 0``.  Half-integer orders use the
    elementary closed form; otherwise the ``I_{-nu} - I_nu`` series is used
    for ``z <= 2`` and the integral ``int_0^inf exp(-z cosh t) cosh(nu t) dt``
    for larger ``z`` or orders within 0.05 of an integer.
    """
    nu = float(nu)
    z = float(z)
    if not (math.isfinite(z) and z > 0):
        raise DomainError(f"bessel_k: argument must be positive, got z={z!r}")
    if not math.isfinite(nu) or abs(nu) > BESSEL_MAX_ORDER:
        raise UnsupportedError(f"bessel_k: order |nu| <= {BESSEL_MAX_ORDER:g} supported, got {nu!r}")
    nu = abs(nu)
    if (2.0 * nu) % 2.0 == 1.0:
        return _bessel_k_half_integer(nu, z)
    if z <= _SERIES_CROSSOVER and abs(nu - round(nu)) >= _NEAR_INTEGER:
        diff = _bessel_i_series(-nu, z) - _bessel_i_series(nu, z)
        return 0.5 * math.pi * diff / _sin_pi(nu)
    return _bessel_k_integral(nu, z)


# -------------------------------------------------------------------- pFq

@dataclass(frozen=True)
class PFqParams:
    """Upper and lower parameter lists of a generalized hypergeometric series."""

    upper: tuple[float, ...] = ()
    lower: tuple[float, ...] = ()

    def __init__(self, upper: Sequence[float] = (), lower: Sequence[float] = ()) -> None:
        object.__setattr__(self, "upper", tuple(float(a) for a in upper))
        object.__setattr__(self, "lower", tuple(float(b) for b in lower))
        for b in self.lower:
            if _is_nonpositive_integer(b):
                raise DomainError(f"pFq lower parameter {b:g} is a pole of the series")

    @property
    def terminates(self) -> bool:
        return any(_is_nonpositive_integer(a) for a in self.upper)

    def check_convergent(self, z: float) -> None:
        p, q = len(self.upper), len(self.lower)
        if self.terminates or z == 0:
            return
        if p > q + 1:
            raise UnsupportedError(f"{p}F{q} series diverges for every z != 0")
        if p == q + 1 and abs(z) >= 1:
            raise UnsupportedError(f"{p}F{q} series requires |z| < 1, got z={z!r}")


_PFQ_EPS = 1e-16
_PFQ_MAX_TERMS = 10_000


def _pfq_sum(params: PFqParams, z: float) -> tuple[float, float]:
    """Return the series sum and the sum of absolute values of its terms."""
    total = 1.0
    abs_total = 1.0
    term = 1.0
    quiet = 0
    for n in range(_PFQ_MAX_TERMS):
        ratio = z / (n + 1.0)
        for a in params.upper:
            ratio *= a + n
        for b in params.lower:
            ratio /= b + n
        term *= ratio
        if term == 0.0:
            return total, abs_total
        total += term
        abs_total += abs(term)
        if not math.isfinite(total) or not math.isfinite(abs_total):
            raise SeriesOverflowError("pFq partial sum overflowed", abs_total)
        if abs(term) < _PFQ_EPS * abs(total):
            quiet += 1
            if quiet == 3:
                return total, abs_total
        else:
            quiet = 0
    raise ConvergenceError(f"pFq series not converged after {_PFQ_MAX_TERMS} terms (z={z!r})")


# Above this cancellation ratio the double-precision sum is redone in decimal.
_PFQ_RESUM_COND = 8.0


def _pfq_sum_decimal(params: PFqParams, z: float, digits: int) -> tuple[Decimal, Decimal]:
    """Series sum and sum of |terms| with ``digits`` significant digits; inputs are exact."""
    with localcontext() as ctx:
        ctx.prec = digits
        zd = Decimal(z)
        upper = [Decimal(a) for a in params.upper]
        lower = [Decimal(b) for b in params.lower]
        total = Decimal(1)
        abs_total = Decimal(1)
        term = Decimal(1)
        stop = Decimal(10) ** -18
        quiet = 0
        for n in range(_PFQ_MAX_TERMS):
            num = zd
            for a in upper:
                num *= a + n
            den = Decimal(n + 1)
            for b in lower:
                den *= b + n
            term = term * num / den
            if term == 0:
                return total, abs_total
            total += term
            abs_total += abs(term)
            if abs(term) < stop * abs(total):
                quiet += 1
                if quiet == 3:
                    return total, abs_total
            else:
                quiet = 0
    raise ConvergenceError(f"pFq series not converged after {_PFQ_MAX_TERMS} terms (z={z!r})")


def _pfq_evaluate(params: PFqParams, z: float) -> tuple[float, float]:
    z = float(z)
    if not math.isfinite(z):
        raise DomainError("hyp_pfq: non-finite argument")
    params.check_convergent(z)
    value, abs_total = _pfq_sum(params, z)
    cond = abs_total / abs(value) if value != 0 else math.inf
    if cond <= _PFQ_RESUM_COND:
        return value, cond
    # cancellation: redo the sum with enough extra digits to absorb it.  The
    # double estimate of the loss can itself be wrong, so check it in decimal.
    lost = min(math.log10(cond), 300.0) if math.isfinite(cond) else 40.0
    digits = 24 + int(lost)
    for _ in range(8):
        total, abs_dec = _pfq_sum_decimal(params, z, digits)
        needed = 24 + (int((abs_dec / abs(total)).log10()) if total != 0 else digits)
        if needed <= digits:
            result = float(total)
            if not math.isfinite(result):
                raise SeriesOverflowError("pFq value overflows double precision", float(abs_dec))
            return result, 1.0
        digits = max(needed + 8, 2 * digits)
    raise ConvergenceError(f"pFq cancellation too severe at z={z!r}")


def hyp_pfq(params: PFqParams, z: float) -> float:
    """Sum the generalized hypergeometric series pFq(upper; lower; z).

    Alternating series with heavy cancellation are re-summed in extended
    decimal precision, so the result keeps close to full double accuracy.
    """
    return _pfq_evaluate(params, z)[0]


def hyp_pfq_condition(params: PFqParams, z: float) -> tuple[float, float]:
    """Like :func:`hyp_pfq` but also return the rounding amplification of the value.

    The second item is ``sum|term| / |sum|`` of the double-precision pass
    when that pass is accurate enough, and 1 after an extended-precision
    re-summation.  Roughly ``log10`` of it digits are lost.
    """
    return _pfq_evaluate(params, z)
