"""The correlation function J_{alpha,beta}(x, y) and its Laplace image.

    J(x, y) = int_0^inf N_alpha(t, x) M_beta(y, t) dt
    F(p, y) = L[J](p) = p^(alpha(beta-1)) exp(-y p^(alpha beta))

Swapping the orders multiplies the image by a power of p:

    F_{alpha,beta}(p, y) = p^(beta-alpha) F_{beta,alpha}(p, y)

Run:  python3 demos/04_correlation.py
"""

from __future__ import annotations

import numpy as np

from levy_laplace import CorrelationParams, RationalOrder as R
from levy_laplace import correlation_F, correlation_F_by_quadrature, symmetry_residual
from levy_laplace.identities import symmetry_factor

params = CorrelationParams(R(2, 3), R(1, 2))
print(f"alpha={params.alpha}, beta={params.beta}, alpha*beta={params.product}")
for p in (0.5, 1.0, 2.0):
    q = correlation_F_by_quadrature(params, p, 1.0)
    c = correlation_F(params, p, 1.0)
    print(f"  p={p}: quadrature {q:.12f}  closed form {c:.12f}  rel diff {abs(q / c - 1):.1e}")

# %% The exchange relation holds to rounding.  With the opposite sign in the
# exponent it only holds at p = 1.
swapped = CorrelationParams(params.beta, params.alpha)
print("\np     residual       residual with p^(alpha-beta)")
for p in (0.5, 1.0, 3.0):
    r = symmetry_residual(params, p, 1.0)
    r_alt = symmetry_residual(params, p, 1.0, printed=True)
    print(f"{p:<5} {r:<14.2e} {r_alt:.2e}")
print("factor p^(beta-alpha) at p=3:", symmetry_factor(params, 3.0), "=", 3.0 ** (0.5 - 2 / 3))

# %% F accepts complex p, which is what a Talbot inversion needs.
print("\nF at p = 1+1j:", correlation_F(params, np.complex128(1 + 1j), 1.0))
