"""
Covering bodies of constant width
=================================

Polars of Reuleaux triangles are bodies of constant width pi - delta.
For widths of at least pi/2 their smallest enclosing caps meet the
covering bound exactly, while polars of Reuleaux pentagons and heptagons
of the same width stay below it.
"""

import math

from sphcover import bounds
from sphcover.body import is_constant_width, polar, thickness
from sphcover.caps import min_enclosing_cap
from sphcover.shapes import make_polar_constant_width, make_reuleaux_odd_gon

for width in (math.pi / 2, 1.8, 2 * math.pi / 3, 2.5):
    body = make_polar_constant_width(width, 2048)
    r = min_enclosing_cap(body.vertices).radius
    bound = bounds.rho_constant_width_large(width)
    print(f"width={width:.4f}  thickness={thickness(body):.6f}  constant width: {is_constant_width(body, 2e-3)}")
    print(f"  triangle polar: radius={r:.8f}  bound={bound:.8f}")
    for k in (5, 7):
        rk = min_enclosing_cap(polar(make_reuleaux_odd_gon(math.pi - width, k, 2048)).vertices).radius
        print(f"  {k}-gon polar:    radius={rk:.8f}  below bound by {bound - rk:.2e}")

# at width pi/2 the bound meets the diameter bound for sets of diameter pi/2
print(f"seam at pi/2: {bounds.rho_constant_width_large(math.pi / 2):.15f} {bounds.dekster_bound(math.pi / 2):.15f}")
