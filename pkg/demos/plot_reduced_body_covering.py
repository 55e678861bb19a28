"""
Covering reduced bodies of small thickness
==========================================

Every catalog body of thickness delta <= pi/2 fits in a cap of radius
arctan(sqrt2 tan(delta/2)), and the quarter-disk needs all of it. The
second half follows the isosceles triangles used to compare the two
candidate extremal cases: their circumradius is largest at an end of the
admissible range of apex angles.
"""

import math

import numpy as np

from sphcover import bounds
from sphcover.caps import circumcap3, min_enclosing_cap
from sphcover.shapes import alpha_equilateral, make_isosceles_two_height
from sphcover.verify import reduced_body_catalog

for d in (0.3, 0.6, 1.0, math.pi / 2):
    bound = bounds.rho_reduced(d)
    print(f"delta={d:.4f}  bound={bound:.8f}")
    for name, body in reduced_body_catalog(d, 1024):
        r = min_enclosing_cap(body.vertices).radius
        print(f"  {name:13s} radius={r:.8f}  slack={bound - r:.2e}")

# isosceles triangles with two heights equal to delta
d = 1.0
a_eq = alpha_equilateral(d)
print(f"delta={d}: half-apex angle runs from {a_eq:.6f} (equilateral) to pi/4 (right angle)")
for alpha in np.linspace(a_eq, math.pi / 4, 6):
    tri = make_isosceles_two_height(alpha, d)
    print(f"  alpha={alpha:.6f}  circumradius={circumcap3(*tri).radius:.10f}  formula={bounds.sigma_isosceles(alpha, d):.10f}")
print(f"  equilateral end {bounds.rho_equilateral(d):.10f} < right-angle end {bounds.rho_quarter(d):.10f}")
