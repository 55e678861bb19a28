"""
Circumradii of the basic reduced bodies
=======================================

Builds the quarter-disk, the Reuleaux triangle and the equilateral
triangle at several thicknesses, measures their smallest enclosing caps
and compares them with the closed-form circumradii.
"""

import math

import numpy as np

from sphcover import bounds
from sphcover.caps import circumcap3, min_enclosing_cap
from sphcover.shapes import make_equilateral_triangle, make_quarter_disk, make_reuleaux_triangle

deltas = [0.3, 0.6, 1.0, 1.4, math.pi / 2]

# quarter-disk: the cap is fixed by the apex and the two arc ends
print("quarter-disk")
for d in deltas:
    r = min_enclosing_cap(make_quarter_disk(d, 1024).vertices).radius
    print(f"  delta={d:.4f}  measured={r:.10f}  formula={bounds.rho_quarter(d):.10f}")

# Reuleaux triangle: the cap passes through the three corners
print("Reuleaux triangle")
for d in deltas:
    r = min_enclosing_cap(make_reuleaux_triangle(d, 1024).vertices).radius
    print(f"  delta={d:.4f}  measured={r:.10f}  formula={bounds.rho_reuleaux(d):.10f}")

# equilateral triangle: defined only below pi/2
print("equilateral triangle")
for d in deltas[:-1]:
    r = circumcap3(*make_equilateral_triangle(d)).radius
    print(f"  delta={d:.4f}  measured={r:.10f}  formula={bounds.rho_equilateral(d):.10f}")

# the Reuleaux triangle never needs a larger cap than the quarter-disk; they meet at pi/2
grid = np.linspace(0.01, math.pi / 2, 200)
gap = min(bounds.rho_quarter(d) - bounds.rho_reuleaux(d) for d in grid)
print(f"smallest quarter-disk minus Reuleaux radius on (0, pi/2], attained at pi/2: {gap:.3e}")
