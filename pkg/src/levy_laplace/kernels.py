"""The rescaled-density kernels M_alpha(t, x) and N_alpha(t, x).

    M_alpha(t, x) = t**(-1/alpha) * g_alpha(x * t**(-1/alpha))
    N_alpha(t, x) = x / (alpha t) * M_alpha(t, x)

Both are evaluated in log space and exponentiated once, so extreme scalings
``t**(-1/alpha)`` underflow cleanly to zero instead of producing inf * 0.
Accuracy is exactly that of :mod:`levy_laplace.density`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .density import Order, alpha_value, evaluator_for
from .errors import DomainError


class KernelKind(str, Enum):
    M = "M"
    N = "N"


def log_m_kernel(order: Order, logt, logx):
    """``log M_alpha(e**logt, e**logx)`` with numpy broadcasting."""
    inv = 1.0 / alpha_value(order)
    logt = np.asarray(logt, dtype=float)
    return -inv * logt + evaluator_for(order).log_density(np.asarray(logx, dtype=float) - inv * logt)


def log_n_kernel(order: Order, logt, logx):
    """``log N_alpha(e**logt, e**logx)`` with numpy broadcasting."""
    logx = np.asarray(logx, dtype=float)
    logt = np.asarray(logt, dtype=float)
    return logx - math.log(alpha_value(order)) - logt + log_m_kernel(order, logt, logx)


def _logs(t, x) -> tuple[np.ndarray, np.ndarray]:
    t = np.asarray(t, dtype=float)
    x = np.asarray(x, dtype=float)
    if np.any(~(t > 0)) or np.any(~(x > 0)):
        raise DomainError("kernel arguments t and x must be positive")
    return np.log(t), np.log(x)


def _finish(logv):
    with np.errstate(under="ignore"):
        out = np.exp(logv)
    return float(out) if np.ndim(out) == 0 else out


def m_kernel(order: Order, t, x):
    """``M_alpha(t, x) = t**(-1/alpha) g_alpha(x t**(-1/alpha))``."""
    lt, lx = _logs(t, x)
    return _finish(log_m_kernel(order, lt, lx))


def n_kernel(order: Order, t, x):
    """``N_alpha(t, x) = x/(alpha t) * M_alpha(t, x)``."""
    lt, lx = _logs(t, x)
    return _finish(log_n_kernel(order, lt, lx))


@dataclass(frozen=True)
class KernelSpec:
    """A kernel of either kind bound to an order; call it as ``spec(t, x)``."""

    order: Order
    kind: KernelKind = KernelKind.M

    def __post_init__(self) -> None:
        alpha_value(self.order)
        object.__setattr__(self, "kind", KernelKind(self.kind))

    def __call__(self, t, x):
        if self.kind is KernelKind.M:
            return m_kernel(self.order, t, x)
        return n_kernel(self.order, t, x)

    def log(self, logt, logx):
        if self.kind is KernelKind.M:
            return log_m_kernel(self.order, logt, logx)
        return log_n_kernel(self.order, logt, logx)
