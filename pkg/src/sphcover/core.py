"""Geodesic primitives on the unit sphere S^2.

Points are unit 3-vectors. Everything downstream (polygons, caps, shape
constructors) is built on the handful of functions here, so they are kept
numerically careful: distances use the atan2(|p x q|, p.q) form, which keeps
full relative precision near 0 and near pi.
"""

import math
from dataclasses import dataclass

import numpy as np

# Single angular tolerance shared by every geometric predicate.
EPS_ANG = 1e-10

# Vectors shorter than this are refused rather than normalized.
MIN_NORM = 1e-8


class GeometryError(ValueError):
    """Base class for every geometric failure raised by the package."""


class DomainError(GeometryError):
    """A scalar argument lies outside the domain of a formula or constructor."""


class DegenerateError(GeometryError):
    """Coincident, antipodal or co-circular input where a proper object is needed."""


class HemisphereError(GeometryError):
    """The input is not contained in any open hemisphere."""


@dataclass(frozen=True)
class SpherePoint:
    """A point of S^2. Coordinates are normalized on construction."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        n = math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)
        if not n >= MIN_NORM:
            raise DegenerateError(f"cannot normalize vector of norm {n!r}")
        object.__setattr__(self, "x", self.x / n)
        object.__setattr__(self, "y", self.y / n)
        object.__setattr__(self, "z", self.z / n)

    @classmethod
    def from_vector(cls, v):
        v = np.asarray(v, dtype=float)
        return cls(float(v[0]), float(v[1]), float(v[2]))

    @classmethod
    def from_colatlon(cls, colat, lon):
        """Point at colatitude `colat` (from +z) and longitude `lon`, radians."""
        s = math.sin(colat)
        return cls(s * math.cos(lon), s * math.sin(lon), math.cos(colat))

    def as_array(self):
        return np.array([self.x, self.y, self.z])

    def antipode(self):
        return SpherePoint(-self.x, -self.y, -self.z)

    def __iter__(self):
        return iter((self.x, self.y, self.z))


NORTH = SpherePoint(0.0, 0.0, 1.0)
SOUTH = SpherePoint(0.0, 0.0, -1.0)


def as_vec(p):
    """Return `p` (SpherePoint or 3-sequence) as a float ndarray of shape (3,)."""
    if isinstance(p, SpherePoint):
        return np.array([p.x, p.y, p.z])
    return np.asarray(p, dtype=float).reshape(3)


def as_points(points):
    """Stack points into an (n, 3) unit-vector array, normalizing each row."""
    if isinstance(points, np.ndarray):
        arr = np.array(points, dtype=float, copy=True).reshape(-1, 3)
    else:
        arr = np.array([as_vec(p) for p in points], dtype=float).reshape(-1, 3)
    norms = np.linalg.norm(arr, axis=1)
    if np.any(~(norms >= MIN_NORM)):
        raise DegenerateError("point set contains a near-zero vector")
    return arr / norms[:, None]


def normalize(v):
    v = np.asarray(v, dtype=float)
    n = np.linalg.norm(v)
    if not n >= MIN_NORM:
        raise DegenerateError(f"cannot normalize vector of norm {n!r}")
    return v / n


def distance(p, q):
    """Spherical distance |pq| in [0, pi]; antipodes are at distance pi."""
    p = as_vec(p)
    q = as_vec(q)
    return math.atan2(float(np.linalg.norm(np.cross(p, q))), float(p @ q))


def distances(p, points):
    """Vectorized `distance` from one point to each row of an (n, 3) array."""
    p = as_vec(p)
    points = np.asarray(points, dtype=float)
    return np.arctan2(np.linalg.norm(np.cross(points, p), axis=1), points @ p)


def tangent_frame(center):
    """Orthonormal (e1, e2) spanning the tangent plane at `center`.

    (e1, e2, center) is right-handed, so increasing angle in the (e1, e2)
    plane runs counterclockwise when the sphere is viewed from outside.
    """
    c = as_vec(center)
    helper = np.array([1.0, 0.0, 0.0]) if abs(c[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
    e1 = helper - (helper @ c) * c
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(c, e1)
    return e1, e2


def point_at(center, radius, angle, frame=None):
    """Point at distance `radius` from `center` in direction `angle` of `frame`."""
    c = as_vec(center)
    e1, e2 = tangent_frame(c) if frame is None else frame
    return math.cos(radius) * c + math.sin(radius) * (math.cos(angle) * e1 + math.sin(angle) * e2)


def rotate(v, axis, angle):
    """Rodrigues rotation of vector(s) `v` about the unit `axis`."""
    k = as_vec(axis)
    v = np.asarray(v, dtype=float)
    c, s = math.cos(angle), math.sin(angle)
    return v * c + np.cross(k, v) * s + np.outer(v @ k, k).reshape(v.shape) * (1.0 - c)


def midpoint(p, q):
    """Geodesic midpoint of two non-antipodal points."""
    p = as_vec(p)
    q = as_vec(q)
    m = p + q
    if np.linalg.norm(m) < MIN_NORM:
        raise DegenerateError("antipodal points have no unique midpoint")
    return m / np.linalg.norm(m)


def spherical_angle(vertex, a, b):
    """Angle at `vertex` between the arcs towards `a` and `b`, in [0, pi]."""
    t = as_vec(vertex)
    u = as_vec(a) - (as_vec(a) @ t) * t
    w = as_vec(b) - (as_vec(b) @ t) * t
    return math.atan2(float(np.linalg.norm(np.cross(u, w))), float(u @ w))


def distance_to_great_circle(p, a, b):
    """Distance from `p` to the great circle through `a` and `b`."""
    n = np.cross(as_vec(a), as_vec(b))
    nn = np.linalg.norm(n)
    if nn < MIN_NORM:
        raise DegenerateError("a and b do not determine a great circle")
    return abs(math.asin(max(-1.0, min(1.0, float(as_vec(p) @ n) / nn))))


# ---------------------------------------------------------------------------
# Right spherical triangles


@dataclass(frozen=True)
class RightTriangleData:
    """Right spherical triangle: legs A, B, hypotenuse C, angles alpha (opp. A), beta (opp. B)."""

    A: float
    B: float
    C: float
    alpha: float
    beta: float

    def identity_residuals(self):
        """Absolute residuals of the four right-triangle identities, in order
        tan A = cos(beta) tan C, sin A = sin(alpha) sin C, cos C = cos A cos B
        and cos C = cot(alpha) cot(beta).

        The tangent and cotangent identities are checked with denominators
        cleared, as sin A cos C = cos(beta) sin C cos A and
        cos C sin(alpha) sin(beta) = cos(alpha) cos(beta), since tan A and
        tan C are unbounded near the octant limit.
        """
        sA, cA = math.sin(self.A), math.cos(self.A)
        sC, cC = math.sin(self.C), math.cos(self.C)
        sa, ca = math.sin(self.alpha), math.cos(self.alpha)
        sb, cb = math.sin(self.beta), math.cos(self.beta)
        return (
            abs(sA * cC - cb * sC * cA),
            abs(sA - sa * sC),
            abs(cC - cA * math.cos(self.B)),
            abs(cC * sa * sb - ca * cb),
        )


def solve_right_triangle(A, B):
    """Solve the right spherical triangle with legs `A`, `B` in (0, pi/2).

    The hypotenuse is arccos(cos A cos B) and the angles satisfy
    sin(alpha) = sin A / sin C; both are evaluated through atan2 forms so
    that the octant and degenerate-leg limits keep full precision.
    """
    if not (0.0 < A < math.pi / 2 and 0.0 < B < math.pi / 2):
        raise DomainError(f"legs must lie in (0, pi/2), got A={A!r}, B={B!r}")
    sA, cA = math.sin(A), math.cos(A)
    sB, cB = math.sin(B), math.cos(B)
    # sin^2 C = 1 - cos^2 A cos^2 B = sin^2 A + cos^2 A sin^2 B
    C = math.atan2(math.hypot(sA, cA * sB), cA * cB)
    # tan alpha = tan A / sin B
    alpha = math.atan2(sA, cA * sB)
    beta = math.atan2(sB, cB * sA)
    return RightTriangleData(A, B, C, alpha, beta)


# ---------------------------------------------------------------------------
# Caps and lunes


@dataclass(frozen=True)
class Cap:
    """Closed spherical cap (disk) with radius in [0, pi/2].

    Radius pi/2 is a hemisphere; radius 0 is allowed only as the degenerate
    cap of a single point.
    """

    center: SpherePoint
    radius: float

    def __post_init__(self):
        if not isinstance(self.center, SpherePoint):
            object.__setattr__(self, "center", SpherePoint.from_vector(self.center))
        if not 0.0 <= self.radius <= math.pi / 2:
            raise DomainError(f"cap radius must lie in [0, pi/2], got {self.radius!r}")

    def contains(self, p, tol=EPS_ANG):
        return cap_contains(self, p, tol)


def hemisphere(pole):
    """H(pole): the closed hemisphere centred at `pole`."""
    if not isinstance(pole, SpherePoint):
        pole = SpherePoint.from_vector(pole)
    return Cap(pole, math.pi / 2)


def cap_contains(c, p, tol=EPS_ANG):
    return distance(c.center, p) <= c.radius + tol


@dataclass(frozen=True)
class Lune:
    """Intersection of the hemispheres H(pole_g) and H(pole_h)."""

    pole_g: SpherePoint
    pole_h: SpherePoint

    def __post_init__(self):
        d = distance(self.pole_g, self.pole_h)
        if d < EPS_ANG or d > math.pi - EPS_ANG:
            raise DegenerateError("lune poles must be distinct and not antipodal")


def lune_thickness(lune):
    """Thickness of a lune: pi minus the distance between its hemisphere poles."""
    d = distance(lune.pole_g, lune.pole_h)
    if d < EPS_ANG or d > math.pi - EPS_ANG:
        raise DegenerateError("lune poles must be distinct and not antipodal")
    return math.pi - d
