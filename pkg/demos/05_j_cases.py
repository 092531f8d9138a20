"""Closed forms of J for three order pairs, cross-checked two ways.

    (alpha, beta) = (2/3, 1/2)   Bessel K_{1/3}
    (alpha, beta) = (1/2, 2/3)   hypergeometric 1F2 / 0F2 terms
    (alpha, beta) = (1/2, 1/2)   hypergeometric terms in y^2/x

Each closed form is compared with direct quadrature of the kernel product and
with Talbot inversion of F(p, y).

Run:  python3 demos/05_j_cases.py
"""

from __future__ import annotations

from levy_laplace import TalbotConfig, j_integral, j_talbot
from levy_laplace.identities import J_CASES

for case, (alpha, beta, closed) in J_CASES.items():
    print(f"case {case}: alpha={alpha}, beta={beta}")
    for x, y in ((0.5, 1.0), (1.0, 1.0), (2.0, 0.5)):
        c = closed(x, y)
        q = j_integral(alpha, beta, x, y)
        t = j_talbot(alpha, beta, x, y, TalbotConfig())
        print(f"  x={x:<4} y={y:<4} closed {c:.12e}  quad rel {abs(q / c - 1):.1e}  talbot rel {abs(t / c - 1):.1e}")

# %% Case (a) carries y^(3/2) in its exponential.  Using y^(2/3) instead is
# visibly wrong once y differs from 1.
from levy_laplace.identities import _case_a

ref = j_integral(2 / 3, 1 / 2, 1.0, 2.0)
print(f"\ncase a at (1, 2): y^(3/2) -> {_case_a(1.0, 2.0, 1.5):.10f}, "
      f"y^(2/3) -> {_case_a(1.0, 2.0, 2 / 3):.10f}, quadrature {ref:.10f}")
