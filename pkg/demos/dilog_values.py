"""Special values of the higher-degree dilogarithms.

Degree one with z = (1, 1) recovers the classical functions, so
Li2(1) = pi^2/6 and L(infinity) = pi^2/6 for the shifted Rogers function.
Higher degrees give new constants; a duality relates x and 1/x.
"""

import math

from hdilog import DilogParams, li2_hd, rogers_hd_tilde, rogers_inf

print(f"Li2(1)          {li2_hd(1.0, (1, 1)):.15f}")
print(f"pi^2/6          {math.pi ** 2 / 6:.15f}")

for z in [(1, 1), (1, 1, 1), (1, 2, 1), (1, 3, 3, 1), (1, 1, 1, 1, 1)]:
    p = DilogParams(len(z) - 1, z)
    x = 2.5
    dual = rogers_hd_tilde(x, p) + rogers_hd_tilde(1 / x, p.star)
    print(f"z={z}: L(inf) = {rogers_inf(p):.12f}, L(x)+L*(1/x) at x={x}: {dual:.12f}")
