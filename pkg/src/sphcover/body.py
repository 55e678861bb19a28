"""Spherical convex polygons and their measurements.

Every body is stored as a counterclockwise (seen from outside the sphere)
cycle of unit vectors inside an open hemisphere. Smooth bodies are sampled.
Width and thickness are computed through the polar body

    C+ = {p : C is contained in H(p)},

whose vertices are the outward poles of the edges of C. A hemisphere H(a)
supports C exactly when a lies on the boundary of C+, and the narrowest lune
H(a) & H(b) containing C has thickness pi - max |ab| over b in C+. Hence
thickness(C) = pi - diameter(C+).
"""

import math

import numpy as np
from scipy.optimize import linprog

from .core import (
    EPS_ANG,
    DegenerateError,
    GeometryError,
    HemisphereError,
    SpherePoint,
    as_points,
    as_vec,
    distances,
    tangent_frame,
)

# Relative sine of the turn angle below which three hull points count as collinear.
COLLINEAR_SIN = 1e-12

# A hemisphere supports a sampled body if every vertex is within pi/2 + SUPPORT_OUT
# of its pole and at least one vertex is beyond pi/2 - SUPPORT_IN.
SUPPORT_OUT = 1e-9
SUPPORT_IN = 1e-6


class NotSupportingError(GeometryError):
    """The given hemisphere does not support the body."""


def hemisphere_witness(points):
    """Return (pole, margin): a pole w maximizing min_i w.p_i over |w|_inf <= 1.

    `margin` > 0 iff all points lie in the open hemisphere H(w). The pole is
    normalized; the margin is the min dot product with the normalized pole.
    """
    P = as_points(points)
    # variables (w1, w2, w3, t); maximize t subject to P w >= t
    A_ub = np.hstack([-P, np.ones((len(P), 1))])
    res = linprog(
        c=[0.0, 0.0, 0.0, -1.0],
        A_ub=A_ub,
        b_ub=np.zeros(len(P)),
        bounds=[(-1, 1), (-1, 1), (-1, 1), (None, 1)],
        method="highs",
    )
    w = res.x[:3]
    n = np.linalg.norm(w)
    if not res.success or n < 1e-12:
        return np.array([0.0, 0.0, 1.0]), -1.0
    w = w / n
    return w, float(np.min(P @ w))


def _gnomonic(P, center):
    e1, e2 = tangent_frame(center)
    h = P @ center
    return np.column_stack([(P @ e1) / h, (P @ e2) / h])


def _planar_hull(xy):
    """Andrew's monotone chain; returns CCW indices without collinear points."""
    order = sorted(range(len(xy)), key=lambda i: (xy[i, 0], xy[i, 1]))

    def turn(o, a, b):
        u = xy[a] - xy[o]
        v = xy[b] - xy[o]
        cr = u[0] * v[1] - u[1] * v[0]
        scale = math.hypot(*u) * math.hypot(*v)
        if scale == 0.0:
            return 0.0
        return cr / scale

    def chain(idx):
        out = []
        for i in idx:
            while len(out) >= 2 and turn(out[-2], out[-1], i) <= COLLINEAR_SIN:
                out.pop()
            out.append(i)
        return out

    lower = chain(order)
    upper = chain(order[::-1])
    return lower[:-1] + upper[:-1]


def convex_hull(points):
    """Spherical convex hull of points lying in an open hemisphere.

    The points are projected centrally onto the tangent plane at a hemisphere
    witness pole, where great circles become lines; a planar hull is taken
    and lifted back. Output vertices are a subset of the inputs.
    """
    P = as_points(points)
    if len(P) < 3:
        raise DegenerateError("a convex body needs at least 3 points")
    w, margin = hemisphere_witness(P)
    if margin <= EPS_ANG:
        raise HemisphereError("points are not contained in an open hemisphere")
    idx = _planar_hull(_gnomonic(P, w))
    if len(idx) < 3:
        raise DegenerateError("points lie on one great circle")
    return SphericalConvexPolygon(P[idx], check=True)


def _edge_normals(V):
    N = np.cross(V, np.roll(V, -1, axis=0))
    norms = np.linalg.norm(N, axis=1)
    return N, norms


class SphericalConvexPolygon:
    """Convex spherical polygon with counterclockwise vertices.

    Parameters
    ----------
    vertices : (n, 3) array_like or sequence of SpherePoint
        Vertex cycle. Rows are normalized.
    check : bool
        Validate the hemisphere, convexity and edge invariants. Clockwise
        input is reversed rather than rejected.
    """

    def __init__(self, vertices, check=True):
        V = as_points(vertices)
        if len(V) < 3:
            raise DegenerateError("a polygon needs at least 3 vertices")
        if check:
            V = self._validated(V)
        V.setflags(write=False)
        self._V = V
        N, norms = _edge_normals(V)
        N = N / norms[:, None]
        N.setflags(write=False)
        self._normals = N

    @staticmethod
    def _validated(V):
        _, margin = hemisphere_witness(V)
        if margin <= EPS_ANG:
            raise HemisphereError("vertices are not contained in an open hemisphere")
        N, norms = _edge_normals(V)
        nxt = np.roll(V, -1, axis=0)
        if np.any(norms < EPS_ANG) or np.any(np.einsum("ij,ij->i", V, nxt) < -1 + EPS_ANG):
            raise DegenerateError("consecutive vertices coincide or are antipodal")
        N = N / norms[:, None]
        side = N @ V.T
        if np.all(side >= -EPS_ANG):
            return V
        if np.all(side <= EPS_ANG):
            return V[::-1].copy()
        raise GeometryError("vertex cycle is not convex")

    @property
    def vertices(self):
        """Read-only (n, 3) vertex array."""
        return self._V

    @property
    def normals(self):
        """Outward-to-body unit normals of the edge great circles (the polar vertices)."""
        return self._normals

    @property
    def n(self):
        return len(self._V)

    def points(self):
        return [SpherePoint.from_vector(v) for v in self._V]

    def __len__(self):
        return len(self._V)

    def __repr__(self):
        return f"SphericalConvexPolygon(n={self.n})"


def contains(body, p, tol=EPS_ANG):
    """True iff `p` is on the closed positive side of every edge great circle."""
    return bool(np.all(body.normals @ as_vec(p) >= -tol))


def polar(body):
    """Polar body {q : body is contained in H(q)}.

    Its vertices are the edge poles of `body`, in order; the polar of the
    polar returns the original vertices.
    """
    U = np.asarray(body.normals)
    nxt = np.roll(U, -1, axis=0)
    if np.any(np.linalg.norm(np.cross(U, nxt), axis=1) < EPS_ANG):
        raise DegenerateError("consecutive edges are collinear; merge them first")
    return SphericalConvexPolygon(U, check=False)


def farthest_distances(Q, body, chunk=256):
    """max over x in `body` of |q x|, for each row q of Q.

    Past pi/2 the farthest point of a spherical polygon need not be a
    vertex: it is the point closest to the antipode -q, which can lie inside
    an edge. Both candidates are evaluated.
    """
    Q = np.atleast_2d(np.asarray(Q, dtype=float))
    V = np.asarray(body.vertices)
    N = np.asarray(body.normals)
    A, B = V, np.roll(V, -1, axis=0)
    rows = np.arange(min(chunk, len(Q)))
    out = np.empty(len(Q))
    for s in range(0, len(Q), chunk):
        q = Q[s : s + chunk]
        r = rows[: len(q)]
        # foot of -q on each edge great circle
        F = -(q[:, None, :] - (q @ N.T)[:, :, None] * N[None, :, :])
        fn = np.linalg.norm(F, axis=2)
        ok = fn > 1e-12
        F = F / np.where(ok, fn, 1.0)[:, :, None]
        on_arc = (
            ok
            & (np.einsum("ejk,jk->ej", np.cross(A[None, :, :], F), N) >= 0)
            & (np.einsum("ejk,jk->ej", np.cross(F, B[None, :, :]), N) >= 0)
        )
        foot_dot = np.where(on_arc, np.einsum("ejk,ek->ej", F, q), np.inf)
        vert_dot = q @ V.T
        jf = np.argmin(foot_dot, axis=1)
        jv = np.argmin(vert_dot, axis=1)
        use_foot = foot_dot[r, jf] < vert_dot[r, jv]
        far = np.where(use_foot[:, None], F[r, jf], V[jv])
        out[s : s + chunk] = np.arctan2(
            np.linalg.norm(np.cross(q, far), axis=1), np.einsum("ij,ij->i", q, far)
        )
    return out


def farthest_distance(p, body):
    return float(farthest_distances(as_vec(p)[None, :], body)[0])


def diameter(body):
    """Largest distance between two points of the body.

    For diameters up to pi/2 this is attained at a pair of vertices; beyond
    that one end may be interior to an edge, so each vertex is paired with
    its exact farthest point of the body.
    """
    return float(farthest_distances(body.vertices, body).max())


def diameter_vertices(body):
    """Largest vertex-to-vertex distance."""
    V = np.asarray(body.vertices)
    G = V @ V.T
    i, j = np.unravel_index(np.argmin(G), G.shape)
    return float(np.arctan2(np.linalg.norm(np.cross(V[i], V[j])), G[i, j]))


def is_supporting(body, pole):
    d = distances(pole, body.vertices)
    return bool(d.max() <= math.pi / 2 + SUPPORT_OUT and d.max() >= math.pi / 2 - SUPPORT_IN)


def width_at(body, pole):
    """Width of `body` determined by the supporting hemisphere H(pole).

    This is the thickness of the narrowest lune H(pole) & H(q) containing the
    body, i.e. pi minus the largest distance from `pole` to the polar body.
    """
    if not is_supporting(body, pole):
        raise NotSupportingError("H(pole) does not support the body")
    return math.pi - farthest_distance(pole, polar(body))


def supporting_poles(body, max_step=0.01):
    """Poles of supporting hemispheres: the polar vertices plus points along
    each polar edge, spaced at most `max_step` apart.

    A polar edge is the normal cone of a body vertex; at corners of the body
    it is long and the width varies along it.
    """
    U = np.asarray(body.normals)
    W = np.roll(U, -1, axis=0)
    out = [U]
    lengths = np.arctan2(np.linalg.norm(np.cross(U, W), axis=1), np.einsum("ij,ij->i", U, W))
    for i in np.flatnonzero(lengths > max_step):
        m = int(math.ceil(lengths[i] / max_step))
        t = np.arange(1, m)[:, None] / m
        # slerp between consecutive polar vertices
        th = lengths[i]
        pts = (np.sin((1 - t) * th) * U[i] + np.sin(t * th) * W[i]) / math.sin(th)
        out.append(pts)
    return np.vstack(out)


def widths(body, max_step=0.01):
    """Widths determined by supporting hemispheres sampled along the polar boundary."""
    return math.pi - farthest_distances(supporting_poles(body, max_step), polar(body))


def thickness(body):
    """Minimum width over all supporting hemispheres: pi - diameter(polar(body))."""
    return math.pi - diameter(polar(body))


def is_constant_width(body, tol, max_step=0.01):
    w = widths(body, max_step)
    return bool(w.max() - w.min() <= tol)
