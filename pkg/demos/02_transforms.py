"""Levy integral transforms and their Laplace images.

For an original f with Laplace image F the two transforms

    tilde f(x) = int_0^inf f(t) M_alpha(t, x) dt      L[tilde f](p) = F(p^alpha)
    bar f(x)   = int_0^inf f(t) N_alpha(t, x) dt      L[bar f](p)   = p^(alpha-1) F(p^alpha)

are checked here by numerical forward Laplace transform of the tabulated result.

Run:  python3 demos/02_transforms.py
"""

from __future__ import annotations

import numpy as np

from levy_laplace import CATALOG, RationalOrder as R, Variant, bar_transform, tilde_transform, verify_theorem1
from levy_laplace.transforms import levy_smirnov_bar_reference, levy_smirnov_tilde_reference

for name, pair in CATALOG.items():
    print(f"{name:6s} {pair.description}")

# %% A transform on a grid.
f = CATALOG["exp"]
xs = np.array([0.25, 0.5, 1.0, 2.0, 4.0])
print("\nx     tilde exp (alpha=2/3)   bar exp (alpha=2/3)")
for x, t, b in zip(xs, tilde_transform(f, R(2, 3), xs), bar_transform(f, R(2, 3), xs)):
    print(f"{x:<5g} {t:<23.12e} {b:.12e}")

# %% At alpha = 1/2 both transforms of exp(-t) reduce to erfc expressions.
for x in (0.5, 1.0, 2.0):
    t_err = abs(tilde_transform(f, R(1, 2), x) / levy_smirnov_tilde_reference(f, x) - 1)
    b_err = abs(bar_transform(f, R(1, 2), x) / levy_smirnov_bar_reference(f, x) - 1)
    print(f"alpha=1/2, x={x}: tilde rel err {t_err:.1e}, bar rel err {b_err:.1e}")

# %% The Laplace images.
print()
for variant in Variant:
    for a in (R(1, 3), R(3, 4)):
        rep = verify_theorem1(CATALOG["texp"], a, variant, 2.0)
        print(f"{variant.value:5s} alpha={a}: numeric {rep.computed:.10f}  closed {rep.reference:.10f}  "
              f"{'ok' if rep.passed else 'FAIL'}")

# %% The bar transform leaves the constant 1 fixed.
print("\nbar[1](x) on a grid:", np.round(bar_transform(CATALOG["one"], R(1, 3), np.geomspace(0.1, 10, 4)), 10))
