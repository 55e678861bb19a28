"""Circumscribed and minimal enclosing caps.

Within an open hemisphere the minimal enclosing cap problem has the same
combinatorial structure as the planar smallest enclosing circle: the optimum
is fixed by at most three boundary points. `min_enclosing_cap` is the
randomized incremental (Welzl) solver; `min_enclosing_cap_bruteforce` tries
every pair and triple cap and is kept independent of it as an oracle.
"""

import itertools
import math

import numpy as np

from .body import hemisphere_witness
from .core import (
    EPS_ANG,
    Cap,
    DegenerateError,
    HemisphereError,
    SpherePoint,
    as_points,
    as_vec,
)

# Containment slack used inside both solvers, in radians.
SOLVER_TOL = 1e-12

# |(b - a) x (c - a) . a| below this (relative) means a, b, c share a great circle.
COCIRCULAR_TOL = 1e-14


def _cap(center, radius):
    return Cap(SpherePoint.from_vector(center), min(max(radius, 0.0), math.pi / 2))


def _angle(u, v):
    return math.atan2(float(np.linalg.norm(np.cross(u, v))), float(u @ v))


def circumcap2(p, q):
    """Cap with the arc pq as a diameter. Coincident points give a radius-0 cap."""
    p = as_vec(p)
    q = as_vec(q)
    d = _angle(p, q)
    if d > math.pi - EPS_ANG:
        raise DegenerateError("antipodal points have no diametral cap")
    m = p + q
    return _cap(m / np.linalg.norm(m), d / 2)


def circumcap3(a, b, c):
    """Cap whose boundary circle passes through a, b and c (radius <= pi/2).

    Raises DegenerateError when the three points lie on one great circle;
    callers wanting a fallback use `circumcap3_or_pair`.
    """
    a = as_vec(a)
    b = as_vec(b)
    c = as_vec(c)
    n = np.cross(b - a, c - a)
    nn = np.linalg.norm(n)
    if nn < 1e-300:
        raise DegenerateError("points are not pairwise distinct")
    n = n / nn
    h = float(n @ a)
    if abs(h) <= COCIRCULAR_TOL:
        raise DegenerateError("points lie on one great circle")
    if h < 0:
        n = -n
    r = max(_angle(n, a), _angle(n, b), _angle(n, c))
    return _cap(n, r)


def circumcap3_or_pair(a, b, c):
    """circumcap3, falling back to the largest pair cap for co-circular triples."""
    try:
        return circumcap3(a, b, c)
    except DegenerateError:
        caps = [circumcap2(a, b), circumcap2(a, c), circumcap2(b, c)]
        return max(caps, key=lambda k: k.radius)


def _outside(center, cos_r_chord, P):
    # chord length is the robust monotone proxy for angular distance
    return np.linalg.norm(P - center, axis=1) > cos_r_chord


def _chord_limit(radius):
    return 2.0 * math.sin(min(radius + SOLVER_TOL, math.pi) / 2.0)


def _check_hemisphere(P):
    _, margin = hemisphere_witness(P)
    if margin <= 0.0:
        raise HemisphereError("points are not contained in an open hemisphere")


def min_enclosing_cap(points, rng=None):
    """Smallest cap containing all points.

    Parameters
    ----------
    points : (n, 3) array_like or sequence of SpherePoint
        Points inside one open hemisphere.
    rng : numpy.random.Generator or int, optional
        Source of the random insertion order. Defaults to a fixed seed so
        that results are reproducible.

    Returns
    -------
    Cap
    """
    P = as_points(points)
    if len(P) == 0:
        raise DegenerateError("need at least one point")
    if len(P) == 1:
        return _cap(P[0], 0.0)
    _check_hemisphere(P)
    rng = np.random.default_rng(0 if rng is None else rng)
    P = P[rng.permutation(len(P))]

    def first_outside(cap, stop, start=0):
        if stop <= start:
            return -1
        c = as_vec(cap.center)
        bad = np.flatnonzero(_outside(c, _chord_limit(cap.radius), P[start:stop]))
        return int(bad[0]) + start if len(bad) else -1

    cap = _cap(P[0], 0.0)
    for i in range(1, len(P)):
        if first_outside(cap, i + 1, i) < 0:
            continue
        cap = _cap(P[i], 0.0)
        j = first_outside(cap, i)
        while j >= 0:
            cap = circumcap2(P[i], P[j])
            k = first_outside(cap, j)
            while k >= 0:
                cap = circumcap3_or_pair(P[i], P[j], P[k])
                k = first_outside(cap, j, k + 1)
            j = first_outside(cap, i, j + 1)
    if cap.radius >= math.pi / 2:
        raise HemisphereError("enclosing cap would exceed a hemisphere")
    return cap


def _pair_caps(P, pairs):
    a, b = P[pairs[:, 0]], P[pairs[:, 1]]
    m = a + b
    centers = m / np.linalg.norm(m, axis=1)[:, None]
    radii = np.arctan2(np.linalg.norm(np.cross(a, b), axis=1), np.einsum("ij,ij->i", a, b)) / 2
    return centers, radii


def _triple_caps(P, triples):
    a, b, c = P[triples[:, 0]], P[triples[:, 1]], P[triples[:, 2]]
    n = np.cross(b - a, c - a)
    nn = np.linalg.norm(n, axis=1)
    ok = nn > 1e-300
    n = n[ok] / nn[ok][:, None]
    a, b, c = a[ok], b[ok], c[ok]
    h = np.einsum("ij,ij->i", n, a)
    ok = np.abs(h) > COCIRCULAR_TOL
    n, a, b, c, h = n[ok], a[ok], b[ok], c[ok], h[ok]
    n *= np.sign(h)[:, None]

    def ang(u, v):
        return np.arctan2(np.linalg.norm(np.cross(u, v), axis=1), np.einsum("ij,ij->i", u, v))

    radii = np.maximum(np.maximum(ang(n, a), ang(n, b)), ang(n, c))
    return n, radii


def _best_enclosing(P, centers, radii, chunk=4096):
    best = None
    for s in range(0, len(centers), chunk):
        C = centers[s : s + chunk]
        R = radii[s : s + chunk]
        chord = np.linalg.norm(P[None, :, :] - C[:, None, :], axis=2)
        lim = 2.0 * np.sin(np.minimum(R + SOLVER_TOL, math.pi) / 2.0)
        ok = np.all(chord <= lim[:, None], axis=1)
        if np.any(ok):
            i = np.flatnonzero(ok)[np.argmin(R[ok])]
            if best is None or R[i] < best[1]:
                best = (C[i], float(R[i]))
    return best


def min_enclosing_cap_bruteforce(points):
    """O(n^4) oracle: the smallest pair or triple cap that contains every point."""
    P = as_points(points)
    if len(P) == 0:
        raise DegenerateError("need at least one point")
    if len(P) == 1:
        return _cap(P[0], 0.0)
    _check_hemisphere(P)
    n = len(P)
    pairs = np.array(list(itertools.combinations(range(n), 2)))
    best = _best_enclosing(P, *_pair_caps(P, pairs))
    if n >= 3:
        triples = np.array(list(itertools.combinations(range(n), 3)))
        cand = _best_enclosing(P, *_triple_caps(P, triples))
        if cand is not None and (best is None or cand[1] < best[1]):
            best = cand
    if best is None or best[1] >= math.pi / 2:
        raise HemisphereError("no enclosing cap smaller than a hemisphere")
    return _cap(best[0], best[1])
