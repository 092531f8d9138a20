"""The one-sided stable density g_alpha and its Laplace image.

Run:  python3 demos/01_density.py
"""

from __future__ import annotations

import numpy as np

from levy_laplace import RationalOrder as R
from levy_laplace import density, levy_smirnov, log_density, normalization, verify_defining_property

# %% Shape of g_alpha for a few orders.  Small alpha pushes mass to larger x
# and the density rises steeply out of an essential zero at the origin.
xs = np.geomspace(0.05, 20, 9)
print("x      " + "".join(f"alpha={a!s:<9}" for a in ("1/3", "1/2", "2/3", "3/4")))
table = {a: density(R.from_fraction(a), xs) for a in ("1/3", "1/2", "2/3", "3/4")}
for i, x in enumerate(xs):
    print(f"{x:<7.3g}" + "".join(f"{table[a][i]:<15.6e}" for a in table))

# %% alpha = 1/2 has the closed form x^{-3/2} exp(-1/(4x)) / (2 sqrt(pi)).
# The general integral route must agree with it.
from levy_laplace import DensityEvaluator

general = DensityEvaluator(R(1, 2), fast_path=False)
worst = max(abs(general(x) / levy_smirnov(x) - 1) for x in xs)
print(f"\nalpha=1/2, general route vs closed form: worst relative error {worst:.1e}")

# %% Near zero the density underflows long before it stops being meaningful,
# so the log is available separately.
for x in (1e-2, 5e-3, 1e-3):
    print(f"log g_(2/3)({x:g}) = {float(log_density(R(2, 3), np.log(x))):.6f}")

# %% Normalisation and the defining transform L[g](p) = exp(-p^alpha).
for a in (R(1, 3), R(2, 3), R(5, 6)):
    rep = verify_defining_property(a, 2.0)
    print(f"alpha={a}: integral={normalization(a):.12f}  "
          f"L[g](2)={rep.computed:.12f}  exp(-2^alpha)={rep.reference:.12f}")
