import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sphcover.caps import (
    circumcap2,
    circumcap3,
    circumcap3_or_pair,
    min_enclosing_cap,
    min_enclosing_cap_bruteforce,
)
from sphcover.core import DegenerateError, HemisphereError, SpherePoint, as_vec, distance, distances, normalize
from sphcover.shapes import make_equilateral_triangle, make_quarter_disk, quarter_disk_corners
from sphcover.verify import random_cap_points

ATAN_SQRT2 = 0.9553166181245093


def random_rotation(rng):
    q, r = np.linalg.qr(rng.normal(size=(3, 3)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


def covers(cap, P, tol=1e-12):
    return bool(np.all(distances(cap.center, P) <= cap.radius + tol))


class TestCircumcap2:
    def test_orthogonal_axes(self):
        cap = circumcap2((1, 0, 0), (0, 1, 0))
        assert np.allclose(as_vec(cap.center), normalize([1, 1, 0]), atol=1e-15)
        assert cap.radius == pytest.approx(math.pi / 4, abs=1e-15)

    def test_coincident_points_give_radius_zero(self):
        cap = circumcap2((0, 0, 1), (0, 0, 1))
        assert cap.radius == 0.0
        assert np.allclose(as_vec(cap.center), [0, 0, 1])

    def test_antipodes(self):
        with pytest.raises(DegenerateError):
            circumcap2((1, 0, 0), (-1, 0, 0))


class TestCircumcap3:
    def test_symmetric_colatitude(self):
        pts = [SpherePoint.from_colatlon(0.7, t) for t in (0, 2 * math.pi / 3, 4 * math.pi / 3)]
        cap = circumcap3(*pts)
        assert np.allclose(as_vec(cap.center), [0, 0, 1], atol=1e-14)
        assert cap.radius == pytest.approx(0.7, abs=1e-14)

    def test_right_isosceles_triangle(self):
        c, a, b = quarter_disk_corners(math.pi / 3)
        assert circumcap3(c, a, b).radius == pytest.approx(0.6847192030022829, abs=1e-12)

    def test_equilateral_triangle(self):
        assert circumcap3(*make_equilateral_triangle(math.pi / 3)).radius == pytest.approx(0.6700201614625866, abs=1e-12)

    @settings(max_examples=200)
    @given(st.integers(0, 2**32 - 1))
    def test_equidistant(self, seed):
        rng = np.random.default_rng(seed)
        a, b, c = random_cap_points(rng, 3, 1.4)
        try:
            cap = circumcap3(a, b, c)
        except DegenerateError:
            return
        d = distances(cap.center, np.array([a, b, c]))
        assert np.max(np.abs(d - cap.radius)) < 1e-12
        assert cap.radius <= math.pi / 2

    def test_great_circle_triple(self):
        pts = [(math.cos(t), math.sin(t), 0) for t in (0.0, 0.4, 1.0)]
        with pytest.raises(DegenerateError):
            circumcap3(*pts)
        cap = circumcap3_or_pair(*pts)
        assert cap.radius == pytest.approx(0.5, abs=1e-15)


class TestMinEnclosingCap:
    def test_single_point(self):
        cap = min_enclosing_cap([(0.0, 0.6, 0.8)])
        assert cap.radius == 0.0
        assert np.allclose(as_vec(cap.center), [0, 0.6, 0.8])

    def test_octant(self):
        cap = min_enclosing_cap(np.eye(3))
        assert cap.radius == pytest.approx(ATAN_SQRT2, abs=1e-14)
        assert np.allclose(as_vec(cap.center), normalize([1, 1, 1]))

    def test_quarter_disk_half_pi(self):
        body = make_quarter_disk(math.pi / 2, 1024)
        assert min_enclosing_cap(body.vertices).radius == pytest.approx(ATAN_SQRT2, abs=1e-4)

    def test_two_points(self):
        p, q = normalize([1, 0.2, 0.3]), normalize([0.1, 1, -0.2])
        fast = min_enclosing_cap([p, q])
        ref = circumcap2(p, q)
        assert fast.radius == pytest.approx(ref.radius, abs=1e-15)
        assert min_enclosing_cap_bruteforce([p, q]).radius == pytest.approx(ref.radius, abs=1e-15)

    def test_hemisphere_error(self):
        with pytest.raises(HemisphereError):
            min_enclosing_cap([(1, 0, 0), (-1, 0, 0), (0, 1, 0)])
        with pytest.raises(HemisphereError):
            min_enclosing_cap_bruteforce(np.vstack([np.eye(3), -np.eye(3)]))

    def test_seed_does_not_change_answer(self):
        P = random_cap_points(np.random.default_rng(4), 500, 1.0)
        radii = [min_enclosing_cap(P, rng=s).radius for s in range(5)]
        assert max(radii) - min(radii) < 1e-13

    def test_many_points_fast(self):
        P = random_cap_points(np.random.default_rng(9), 20000, 1.3)
        cap = min_enclosing_cap(P)
        assert covers(cap, P)

    @pytest.mark.parametrize("points", [np.eye(3), "quarter", "single"])
    def test_oracle_on_examples(self, points):
        if isinstance(points, str):
            points = make_quarter_disk(math.pi / 2, 128).vertices if points == "quarter" else np.array([[0.0, 0, 1]])
        assert min_enclosing_cap(points).radius == pytest.approx(min_enclosing_cap_bruteforce(points).radius, abs=1e-10)


@pytest.mark.parametrize("seed", range(30))
def test_oracle_equivalence(seed):
    rng = np.random.default_rng(seed)
    P = random_cap_points(rng, int(rng.integers(2, 51)), rng.uniform(0.1, 1.4))
    fast = min_enclosing_cap(P)
    slow = min_enclosing_cap_bruteforce(P)
    assert abs(fast.radius - slow.radius) < 1e-10
    assert covers(fast, P) and covers(slow, P)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(2, 60))
def test_basis_property(seed, count):
    P = random_cap_points(np.random.default_rng(seed), count, 1.2)
    cap = min_enclosing_cap(P)
    on_boundary = np.abs(distances(cap.center, P) - cap.radius) <= 1e-9
    assert on_boundary.sum() >= 2
    assert covers(cap, P)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_rotation_equivariance(seed):
    rng = np.random.default_rng(seed)
    P = random_cap_points(rng, 40, rng.uniform(0.2, 1.4))
    Q = random_rotation(rng)
    a = min_enclosing_cap(P)
    b = min_enclosing_cap(P @ Q.T)
    assert abs(a.radius - b.radius) < 1e-12
    assert distance(Q @ as_vec(a.center), b.center) < 1e-9


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_dekster_inequality(seed):
    rng = np.random.default_rng(seed)
    # a cap of radius pi/3 has diameter at most 2 pi / 3
    P = random_cap_points(rng, int(rng.integers(2, 40)), rng.uniform(0.05, math.pi / 3))
    G = np.clip(P @ P.T, -1, 1)
    d = float(np.arccos(G.min()))
    sigma = min_enclosing_cap(P).radius
    assert math.sin(sigma) <= 2 / math.sqrt(3) * math.sin(d / 2) + 1e-9
