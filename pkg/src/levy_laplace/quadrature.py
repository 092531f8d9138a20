"""Adaptive quadrature used throughout the package.

Three integrators live here:

* :func:`gauss_kronrod` -- scalar adaptive Gauss-Kronrod (7/15) on a finite
  interval, for one-off integrals of smooth functions.
* :func:`tanh_sinh_rule` -- nodes and weights of a fixed double-exponential
  rule on a finite interval; callers that need the same rule many times
  (the density evaluator) precompute it once.
* :func:`integrate_positive_axis` -- batched adaptive integration over
  ``(0, inf)`` in the logarithmic variable ``t = exp(c + u)``.  Every
  integrand in this package is a Mellin-type (scale) convolution, so after
  the substitution it decays exponentially at both ends of the ``u`` axis and
  a uniform panel grid resolves features at every scale.  A batch of
  integrals with different centres ``c`` shares one adaptive grid in ``u``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .errors import DomainError, IntegrationError

# Gauss-Kronrod 7/15 abscissae on [-1, 1] (positive half, Kronrod order).
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
KRONROD_WEIGHTS = np.concatenate([_WGK[:-1], _WGK[::-1]])
# Gauss nodes sit at odd Kronrod positions (1, 3, 5, 7 counting from 0).
GAUSS_WEIGHTS = np.zeros(15)
GAUSS_WEIGHTS[[1, 3, 5]] = _WG[:3]
GAUSS_WEIGHTS[7] = _WG[3]
GAUSS_WEIGHTS[[9, 11, 13]] = _WG[2::-1]


@dataclass(frozen=True)
class QuadratureConfig:
    """Tolerances and budgets for adaptive integration.

    ``tail_cut`` bounds the half-width (in natural-log units of the
    integration variable) that the window may grow to on either side of its
    centre before the tail is declared non-negligible.
    """

    abs_tol: float = 1e-13
    rel_tol: float = 1e-10
    max_subdivisions: int = 2000
    tail_cut: float = 120.0

    def __post_init__(self) -> None:
        for name in ("abs_tol", "rel_tol"):
            value = getattr(self, name)
            if not 1e-15 < value < 1e-2:
                raise DomainError(f"{name} must lie in (1e-15, 1e-2), got {value!r}")
        if not 0 < self.max_subdivisions <= 10_000:
            raise DomainError("max_subdivisions must lie in [1, 10000]")
        if not self.tail_cut > 0:
            raise DomainError("tail_cut must be positive")

    def tightened(self, factor: float = 100.0) -> "QuadratureConfig":
        """Return a copy with both tolerances divided by ``factor`` (clamped)."""
        return QuadratureConfig(
            abs_tol=max(self.abs_tol / factor, 1.01e-15),
            rel_tol=max(self.rel_tol / factor, 1.01e-15),
            max_subdivisions=self.max_subdivisions,
            tail_cut=self.tail_cut,
        )


def gauss_kronrod(
    f: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    *,
    abs_tol: float = 1e-14,
    rel_tol: float = 1e-13,
    max_subdivisions: int = 500,
) -> tuple[float, float]:
    """Integrate a vectorised ``f`` over ``[a, b]``; return ``(value, error)``."""
    panels = [(a, b)]
    done_val = 0.0
    done_err = 0.0
    subdivisions = 0
    while panels:
        lo = np.array([p[0] for p in panels])
        hi = np.array([p[1] for p in panels])
        half = 0.5 * (hi - lo)
        mid = 0.5 * (hi + lo)
        x = mid[:, None] + half[:, None] * NODES[None, :]
        fx = np.asarray(f(x.ravel()), dtype=float).reshape(x.shape)
        k = (fx @ KRONROD_WEIGHTS) * half
        g = (fx @ GAUSS_WEIGHTS) * half
        err = np.abs(k - g)
        total = done_val + k.sum()
        budget = max(abs_tol, rel_tol * abs(total))
        if done_err + err.sum() <= budget:
            return float(total), float(done_err + err.sum())
        # Accept panels whose error is small relative to their share of the interval.
        share = budget * (hi - lo) / (b - a)
        keep = err <= 0.5 * share
        done_val += float(k[keep].sum())
        done_err += float(err[keep].sum())
        panels = []
        for l_, m_, h_ in zip(lo[~keep], mid[~keep], hi[~keep]):
            panels += [(l_, m_), (m_, h_)]
        subdivisions += int((~keep).sum())
        if subdivisions > max_subdivisions:
            raise IntegrationError(
                "gauss_kronrod did not converge",
                estimate=float(total),
                error=float(done_err + err.sum()),
                subdivisions=subdivisions,
            )
    return done_val, done_err


@lru_cache(maxsize=32)
def tanh_sinh_rule(a: float, b: float, step: float, cutoff: float = 4.0) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights of the tanh-sinh rule on ``(a, b)``.

    The rule samples ``k * step`` for ``|k * step| <= cutoff``; nodes that
    round onto an endpoint are dropped.  Returned arrays are read-only.
    """
    k = np.arange(-math.floor(cutoff / step), math.floor(cutoff / step) + 1)
    s = k * step
    u = 0.5 * math.pi * np.sinh(s)
    # Distance from the nearer endpoint, kept accurate near both ends.
    half = 0.5 * (b - a)
    dist = half * np.exp(-np.abs(u)) / np.cosh(u)
    x = np.where(s < 0, a + dist, b - dist)
    w = step * half * 0.5 * math.pi * np.cosh(s) / np.cosh(u) ** 2
    ok = (x > a) & (x < b) & (w > 0)
    x, w = x[ok], w[ok]
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def integrate_positive_axis(
    f: Callable[[np.ndarray], np.ndarray],
    quad: QuadratureConfig,
    center: float | np.ndarray = 0.0,
    *,
    half_width: float = 8.0,
    panel_width: float = 1.0,
) -> tuple[np.ndarray, np.ndarray]:
    """Integrate ``f(t)`` over ``t in (0, inf)`` for a batch of integrands.

    ``f`` receives ``t`` with shape ``(batch, n)`` (where ``batch`` is the
    size of ``center``) and must return an array of the same shape.  Row
    ``i`` is integrated in the variable ``u`` with ``t = exp(center[i] + u)``.

    Returns ``(values, errors)`` with shape of ``center``.  The window in
    ``u`` starts at ``[-half_width, half_width]`` and grows panel by panel
    until the outermost panel on each side is negligible; the remaining tail
    is estimated assuming geometric decay between the last two panels.
    """
    centers = np.atleast_1d(np.asarray(center, dtype=float))
    scalar = np.ndim(center) == 0
    batch = centers.size

    def evaluate(lo: np.ndarray, hi: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        # -> Kronrod estimates and error estimates, shape (batch, n_panels)
        half = 0.5 * (hi - lo)
        mid = 0.5 * (hi + lo)
        u = (mid[:, None] + half[:, None] * NODES[None, :]).ravel()
        logt = centers[:, None] + u[None, :]
        t = np.exp(logt)
        with np.errstate(over="ignore", under="ignore", invalid="ignore"):
            fx = np.asarray(f(t), dtype=float) * t
        fx = np.where(np.isfinite(t), fx, 0.0)
        if not np.all(np.isfinite(fx)):
            raise IntegrationError("integrand returned non-finite values", subdivisions=0)
        fx = fx.reshape(batch, lo.size, 15)
        k = (fx @ KRONROD_WEIGHTS) * half
        g = (fx @ GAUSS_WEIGHTS) * half
        return k, np.abs(k - g)

    n0 = max(2, int(round(2 * half_width / panel_width)))
    edges = np.linspace(-half_width, half_width, n0 + 1)
    lo, hi = edges[:-1], edges[1:]
    k, err = evaluate(lo, hi)
    subdivisions = 0
    tail = np.zeros(batch)

    # Grow the window until the edge panels stop contributing.
    for side in (-1, 1):
        while True:
            total = np.abs(k.sum(axis=1))
            edge = np.argmin(lo) if side < 0 else np.argmax(hi)
            inner = np.argsort(lo)[1] if side < 0 else np.argsort(hi)[-2]
            contribution = np.abs(k[:, edge])
            limit = 0.01 * np.maximum(quad.abs_tol, quad.rel_tol * total)
            reach = -lo.min() if side < 0 else hi.max()
            if np.all(contribution <= limit) or reach >= quad.tail_cut:
                # geometric tail beyond the edge panel
                a_in = np.abs(k[:, inner])
                ratio = np.where(a_in > 0, contribution / np.where(a_in > 0, a_in, 1.0), 0.0)
                ratio = np.minimum(ratio, 0.999)
                tail += contribution * ratio / (1.0 - ratio)
                if reach >= quad.tail_cut and not np.all(contribution <= limit * 100):
                    raise IntegrationError(
                        "integrand not negligible at the window edge (tail_cut reached)",
                        estimate=k.sum(axis=1),
                        error=contribution,
                        subdivisions=subdivisions,
                    )
                break
            width = panel_width * 2 ** min(4, int(reach // 16))
            new_lo = np.array([lo.min() - width]) if side < 0 else np.array([hi.max()])
            new_hi = new_lo + width
            nk, ne = evaluate(new_lo, new_hi)
            lo, hi = np.concatenate([lo, new_lo]), np.concatenate([hi, new_hi])
            k, err = np.concatenate([k, nk], axis=1), np.concatenate([err, ne], axis=1)

    # Bisect panels until every row meets its tolerance.
    while True:
        values = k.sum(axis=1)
        budget = np.maximum(quad.abs_tol, quad.rel_tol * np.abs(values))
        total_err = err.sum(axis=1) + tail
        if np.all(total_err <= budget):
            break
        span = hi.max() - lo.min()
        share = budget[:, None] * (hi - lo)[None, :] / span
        bad = np.any((err > 0.5 * share) & (total_err > budget)[:, None], axis=0)
        if not np.any(bad):
            # errors spread thinly everywhere: split the worst panels
            bad = np.zeros(lo.size, bool)
            bad[np.argsort(err.max(axis=0))[-max(1, lo.size // 4):]] = True
        subdivisions += int(bad.sum())
        if subdivisions > quad.max_subdivisions:
            raise IntegrationError(
                "adaptive quadrature exceeded max_subdivisions",
                estimate=values if not scalar else float(values[0]),
                error=total_err if not scalar else float(total_err[0]),
                subdivisions=subdivisions,
            )
        mid = 0.5 * (lo[bad] + hi[bad])
        new_lo = np.concatenate([lo[bad], mid])
        new_hi = np.concatenate([mid, hi[bad]])
        nk, ne = evaluate(new_lo, new_hi)
        lo = np.concatenate([lo[~bad], new_lo])
        hi = np.concatenate([hi[~bad], new_hi])
        k = np.concatenate([k[:, ~bad], nk], axis=1)
        err = np.concatenate([err[:, ~bad], ne], axis=1)

    values = k.sum(axis=1) + 0.0
    errors = err.sum(axis=1) + tail
    if scalar:
        return values[0], errors[0]
    return values.reshape(np.shape(center)), errors.reshape(np.shape(center))
