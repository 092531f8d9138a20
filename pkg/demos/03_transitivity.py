"""Composition of kernels: int M_alpha(t, x) M_beta(y, t) dt = M_{alpha beta}(y, x).

The same holds for N.  Composing two transforms is therefore a single transform
of order alpha*beta.

Run:  python3 demos/03_transitivity.py
"""

from __future__ import annotations

from levy_laplace import CorrelationParams, RationalOrder as R
from levy_laplace import m_convolution_lhs, m_kernel, n_convolution_lhs, n_kernel

for a, b in ((R(1, 2), R(1, 2)), (R(2, 3), R(1, 2)), (R(3, 4), R(2, 3))):
    ab = CorrelationParams(a, b).product
    print(f"alpha={a}, beta={b}, product={ab}")
    for x, y in ((0.5, 1.0), (1.0, 1.0), (2.0, 0.5)):
        lhs_m, rhs_m = m_convolution_lhs(a, b, y, x), m_kernel(ab, y, x)
        lhs_n, rhs_n = n_convolution_lhs(a, b, y, x), n_kernel(ab, y, x)
        print(f"  x={x:<4} y={y:<4} M: {lhs_m:.12e} vs {rhs_m:.12e}   N: {lhs_n:.12e} vs {rhs_n:.12e}")

# %% Two half-order steps give order 1/4.
two = m_convolution_lhs(R(1, 2), R(1, 2), 1.0, 1.0)
print(f"\nM_1/2 * M_1/2 at (1, 1) = {two:.12e};  M_1/4(1, 1) = {m_kernel(R(1, 4), 1.0, 1.0):.12e}")
