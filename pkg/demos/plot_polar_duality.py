"""
Polar bodies and widths
=======================

The polar of a convex polygon has the edge poles as vertices. Taking it
twice gives the polygon back, and the thickness of a body is pi minus the
diameter of its polar.
"""

import math

import numpy as np

from sphcover.body import diameter, polar, thickness, widths
from sphcover.shapes import make_disk, make_quarter_disk
from sphcover.verify import _hausdorff, random_convex_polygon

rng = np.random.default_rng(1)
body = random_convex_polygon(rng, 30)
back = polar(polar(body))
print(f"random polygon with {body.n} vertices")
print(f"  polar of polar, Hausdorff distance to original: {_hausdorff(body.vertices, back.vertices):.2e}")
print(f"  thickness + diameter of polar: {thickness(body) + diameter(polar(body)):.15f}")
print(f"  thickness of polar + diameter: {thickness(polar(body)) + diameter(body):.15f}")

# a disk of radius r is polar to the disk of radius pi/2 - r about the same centre
for r in (0.2, 0.5, 1.0):
    colat = np.arccos(polar(make_disk(r=r, n=512)).vertices[:, 2])
    print(f"disk r={r}: polar vertex colatitude in [{colat.min():.6f}, {colat.max():.6f}], pi/2 - r = {math.pi / 2 - r:.6f}")

# the quarter-disk is reduced but not of constant width
w = widths(make_quarter_disk(1.2, 1024))
print(f"quarter-disk 1.2: widths from {w.min():.6f} to {w.max():.6f}; arccos(cos^2 1.2) = {math.acos(math.cos(1.2) ** 2):.6f}")
