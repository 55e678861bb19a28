"""
Smallest enclosing caps
=======================

The randomized incremental solver against the exhaustive pair and triple
search, on random point clouds of growing spread, followed by the
diameter bound for sets of diameter at most 2pi/3.
"""

import math
import time

import numpy as np

from sphcover import bounds
from sphcover.caps import min_enclosing_cap, min_enclosing_cap_bruteforce
from sphcover.core import distances
from sphcover.verify import random_cap_points

rng = np.random.default_rng(0)
for spread in (0.1, 0.5, 1.0, 1.4):
    P = random_cap_points(rng, 50, spread)
    t0 = time.perf_counter()
    fast = min_enclosing_cap(P)
    t1 = time.perf_counter()
    slow = min_enclosing_cap_bruteforce(P)
    t2 = time.perf_counter()
    on_rim = int(np.sum(np.abs(distances(fast.center, P) - fast.radius) < 1e-9))
    print(
        f"spread={spread}: radius={fast.radius:.12f}  |fast - brute|={abs(fast.radius - slow.radius):.1e}"
        f"  points on rim={on_rim}  {1e3 * (t1 - t0):.1f} ms vs {1e3 * (t2 - t1):.0f} ms"
    )

# large inputs are cheap for the incremental solver
P = random_cap_points(rng, 100_000, 1.2)
t0 = time.perf_counter()
cap = min_enclosing_cap(P)
print(f"100000 points: radius={cap.radius:.10f} in {time.perf_counter() - t0:.2f} s")

# sin(circumradius) <= (2/sqrt3) sin(diameter/2)
worst = -1.0
for _ in range(200):
    P = random_cap_points(rng, 30, rng.uniform(0.05, math.pi / 3))
    d = float(np.arccos(np.clip(P @ P.T, -1, 1)).max())
    worst = max(worst, min_enclosing_cap(P).radius - bounds.dekster_bound(d))
print(f"largest circumradius minus diameter bound over 200 sets: {worst:.3e}")
