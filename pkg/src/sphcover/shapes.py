"""Constructors for the bodies whose circumradii are studied.

Shapes are built in a canonical pose: the apex (quarter-disk, isosceles
triangle) or the centre of symmetry (disk, Reuleaux polygons, equilateral
triangle) sits at the north pole and the first corner is on the prime
meridian. Circular arcs are sampled uniformly in arc parameter and always
include their exact endpoints.
"""

import enum
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from .body import convex_hull, polar
from .core import (
    NORTH,
    DomainError,
    SpherePoint,
    as_vec,
    distance_to_great_circle,
    rotate,
    tangent_frame,
)
from .bounds import rho_equilateral

HALF_PI = math.pi / 2
MIN_SAMPLES = 64


class ShapeKind(str, enum.Enum):
    DISK = "disk"
    QUARTER_DISK = "quarter_disk"
    REULEAUX_TRIANGLE = "reuleaux_triangle"
    REULEAUX_ODD_GON = "reuleaux_odd_gon"
    EQUILATERAL_TRIANGLE = "equilateral_triangle"
    ISOSCELES_TWO_HEIGHT = "isosceles_two_height"
    POLAR_CONSTANT_WIDTH = "polar_constant_width"


def _colatlon(colat, lon):
    s = math.sin(colat)
    return np.array([s * math.cos(lon), s * math.sin(lon), math.cos(colat)])


def _check_n(n):
    if n < MIN_SAMPLES:
        raise DomainError(f"sampling density must be at least {MIN_SAMPLES}, got {n}")


def _arc_about(center, start, end, count):
    """Points on the circle about `center` from `start` to `end` (short way), endpoints exact."""
    c = as_vec(center)
    u = start - (start @ c) * c
    v = end - (end @ c) * c
    sweep = math.atan2(float(np.cross(u, v) @ c), float(u @ v))
    t = np.linspace(0.0, 1.0, count + 1)[1:-1]
    inner = np.array([rotate(start, c, s * sweep) for s in t]).reshape(-1, 3)
    return np.vstack([start, inner, end])


def _to_center(P, center):
    """Rigidly move points from the north-pole frame to a frame centred at `center`."""
    c = as_vec(center)
    if np.allclose(c, [0.0, 0.0, 1.0]):
        return P
    e1, e2 = tangent_frame(c)
    R = np.column_stack([e1, e2, c])
    return P @ R.T


def make_disk(center=NORTH, r=0.5, n=512):
    """Regular n-gon inscribed in the circle of radius `r` about `center`."""
    if not 0.0 < r < HALF_PI:
        raise DomainError(f"disk radius must lie in (0, pi/2), got {r!r}")
    _check_n(n)
    lon = 2 * math.pi * np.arange(n) / n
    P = np.column_stack([math.sin(r) * np.cos(lon), math.sin(r) * np.sin(lon), np.full(n, math.cos(r))])
    return convex_hull(_to_center(P, center))


def quarter_disk_corners(delta):
    """Apex c and the two extreme points a, b of the quarter-disk of thickness `delta`."""
    return _colatlon(0.0, 0.0), _colatlon(delta, 0.0), _colatlon(delta, HALF_PI)


def make_quarter_disk(delta, n=512):
    """Quarter of the disk of radius `delta` about the north pole.

    The two straight edges run along longitudes 0 and pi/2 and meet at a
    right angle at the pole; the boundary arc is sampled with `n` segments.
    """
    if not 0.0 < delta <= HALF_PI:
        raise DomainError(f"quarter-disk thickness must lie in (0, pi/2], got {delta!r}")
    _check_n(n)
    c, a, b = quarter_disk_corners(delta)
    lon = np.linspace(0.0, HALF_PI, n + 1)[1:-1]
    arc = np.column_stack([math.sin(delta) * np.cos(lon), math.sin(delta) * np.sin(lon), np.full(len(lon), math.cos(delta))])
    return convex_hull(np.vstack([c, a, arc, b]))


def reuleaux_corners(delta, k=3):
    """Corners of the regular Reuleaux k-gon of width `delta` about the north pole."""
    m = (k - 1) // 2
    # corners j and j+m are delta apart: sin R = sin(delta/2) / sin(pi m / k)
    R = math.asin(math.sin(delta / 2) / math.sin(math.pi * m / k))
    return np.array([_colatlon(R, 2 * math.pi * j / k) for j in range(k)])


def make_reuleaux_odd_gon(delta, k, n=512):
    """Reuleaux polygon with k (odd) corners and constant width `delta`.

    The edge between corners j and j+1 is the arc of radius `delta` about
    the opposite corner j + (k+1)/2; each arc gets about n/k samples.
    """
    if k < 3 or k % 2 == 0:
        raise DomainError(f"Reuleaux polygon order must be odd and >= 3, got {k!r}")
    if not 0.0 < delta <= HALF_PI:
        raise DomainError(f"Reuleaux width must lie in (0, pi/2], got {delta!r}")
    _check_n(n)
    corners = reuleaux_corners(delta, k)
    if delta == HALF_PI:
        # arcs of radius pi/2 are great-circle segments; samples on them only add rounding noise
        return convex_hull(corners)
    per_arc = max(2, n // k)
    parts = []
    for j in range(k):
        opposite = corners[(j + (k + 1) // 2) % k]
        arc = _arc_about(opposite, corners[j], corners[(j + 1) % k], per_arc)
        parts.append(arc[:-1])
    return convex_hull(np.vstack(parts))


def make_reuleaux_triangle(delta, n=512):
    """Intersection of three caps of radius `delta` centred at mutually delta-apart points."""
    return make_reuleaux_odd_gon(delta, 3, n)


def make_equilateral_triangle(delta):
    """Vertices of the equilateral triangle whose heights equal `delta` (< pi/2)."""
    if not 0.0 < delta < HALF_PI:
        raise DomainError(f"equilateral height must lie in (0, pi/2), got {delta!r}")
    rho = rho_equilateral(delta)
    return tuple(SpherePoint.from_colatlon(rho, 2 * math.pi * j / 3) for j in range(3))


def _isosceles_vertices(alpha, delta):
    s = math.sin(delta) / math.sin(2 * alpha)
    if s > 1.0 + 1e-15:
        raise DomainError("sin(delta) exceeds sin(2 alpha); no such triangle")
    B = math.asin(min(1.0, s))
    return _colatlon(0.0, 0.0), _colatlon(B, -alpha), _colatlon(B, alpha)


def apex_height(alpha, delta):
    """Height from the apex of the isosceles triangle built by `make_isosceles_two_height`."""
    e1, g, j = _isosceles_vertices(alpha, delta)
    return distance_to_great_circle(e1, g, j)


def alpha_equilateral(delta, xtol=1e-15):
    """Half-apex angle at which the two-height isosceles triangle becomes equilateral.

    The apex height decreases from pi/2 at alpha = delta/2 to below `delta`
    at alpha = pi/4; the crossing is found by bracketed root finding.
    """
    if not 0.0 < delta <= HALF_PI:
        raise DomainError(f"delta must lie in (0, pi/2], got {delta!r}")
    lo, hi = delta / 2, math.pi / 4
    if hi - lo < 1e-12:
        return math.pi / 4
    return brentq(lambda a: apex_height(a, delta) - delta, lo, hi, xtol=xtol, rtol=4 * np.finfo(float).eps)


def make_isosceles_two_height(alpha, delta):
    """Isosceles triangle (e1, g, j) with apex angle 2*alpha and two heights equal to `delta`.

    The equal sides have length arcsin(sin(delta) / sin(2 alpha)).
    """
    if not 0.0 < delta <= HALF_PI:
        raise DomainError(f"delta must lie in (0, pi/2], got {delta!r}")
    if not 0.0 < alpha <= math.pi / 4 + 1e-15:
        raise DomainError(f"half-apex angle must lie in (0, pi/4], got {alpha!r}")
    if alpha < alpha_equilateral(delta) - 1e-12:
        raise DomainError("half-apex angle below the equilateral limit")
    return tuple(SpherePoint.from_vector(v) for v in _isosceles_vertices(alpha, delta))


def make_polar_constant_width(delta, n=512):
    """Body of constant width `delta` in [pi/2, pi): the polar of a Reuleaux triangle."""
    if not HALF_PI <= delta < math.pi:
        raise DomainError(f"width must lie in [pi/2, pi), got {delta!r}")
    return polar(make_reuleaux_triangle(math.pi - delta, n))


@dataclass(frozen=True)
class ShapeSpec:
    """Declarative description of a catalog shape; `build()` constructs it."""

    kind: ShapeKind
    delta: float
    n: int = 512
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "kind", ShapeKind(self.kind))

    def build(self):
        kind = self.kind
        if kind is ShapeKind.DISK:
            return make_disk(NORTH, self.delta / 2, self.n)
        if kind is ShapeKind.QUARTER_DISK:
            return make_quarter_disk(self.delta, self.n)
        if kind is ShapeKind.REULEAUX_TRIANGLE:
            return make_reuleaux_triangle(self.delta, self.n)
        if kind is ShapeKind.REULEAUX_ODD_GON:
            return make_reuleaux_odd_gon(self.delta, int(self.extra.get("k", 5)), self.n)
        if kind is ShapeKind.EQUILATERAL_TRIANGLE:
            return convex_hull(make_equilateral_triangle(self.delta))
        if kind is ShapeKind.ISOSCELES_TWO_HEIGHT:
            alpha = self.extra.get("alpha", math.pi / 4)
            return convex_hull(make_isosceles_two_height(alpha, self.delta))
        return make_polar_constant_width(self.delta, self.n)
