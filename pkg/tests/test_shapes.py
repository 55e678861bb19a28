import math

import numpy as np
import pytest

from sphcover.body import SphericalConvexPolygon, diameter, is_constant_width, thickness
from sphcover.caps import circumcap3, min_enclosing_cap
from sphcover.core import DomainError, NORTH, distance, distance_to_great_circle
from sphcover.shapes import (
    ShapeKind,
    ShapeSpec,
    alpha_equilateral,
    apex_height,
    make_disk,
    make_equilateral_triangle,
    make_isosceles_two_height,
    make_polar_constant_width,
    make_quarter_disk,
    make_reuleaux_odd_gon,
    make_reuleaux_triangle,
    quarter_disk_corners,
    reuleaux_corners,
)

HALF_PI = math.pi / 2
ATAN_SQRT2 = 0.9553166181245093
GRID = [0.3, 0.6, 1.0, HALF_PI]


def heights(tri):
    a, b, c = tri
    return (distance_to_great_circle(a, b, c), distance_to_great_circle(b, c, a), distance_to_great_circle(c, a, b))


class TestDisk:
    def test_thickness(self):
        assert thickness(make_disk(NORTH, 0.5, 1024)) == pytest.approx(1.0, abs=1e-4)

    def test_constant_width(self):
        assert is_constant_width(make_disk(NORTH, 0.5, 1024), 1e-3)

    @pytest.mark.parametrize("r", [HALF_PI, 0.0, -0.2])
    def test_domain(self, r):
        with pytest.raises(DomainError):
            make_disk(NORTH, r)

    def test_off_pole_centre(self):
        c = np.array([0.6, 0.0, 0.8])
        body = make_disk(c, 0.4, 512)
        d = np.arccos(np.clip(body.vertices @ c, -1, 1))
        assert np.allclose(d, 0.4, atol=1e-14)

    def test_too_coarse(self):
        with pytest.raises(DomainError):
            make_disk(NORTH, 0.5, 16)


class TestQuarterDisk:
    def test_half_pi_is_octant(self):
        body = make_quarter_disk(HALF_PI, 512)
        assert body.n == 3
        assert min_enclosing_cap(body.vertices).radius == pytest.approx(ATAN_SQRT2, abs=1e-14)

    def test_extreme_points(self):
        c, a, b = quarter_disk_corners(math.pi / 3)
        assert distance(a, b) == pytest.approx(1.3181160716528180, abs=1e-12)

    @pytest.mark.parametrize("delta", [0.1, 0.3, 0.6, 1.0, 1.3, HALF_PI])
    def test_far_pair_distance(self, delta):
        _, a, b = quarter_disk_corners(delta)
        assert distance(a, b) == pytest.approx(math.acos(math.cos(delta) ** 2), abs=1e-9)

    def test_small_angle_limit(self):
        r = min_enclosing_cap(make_quarter_disk(1e-3, 512).vertices).radius
        assert r == pytest.approx(7.07106722261e-4, abs=1e-9)
        assert r == pytest.approx(math.sqrt(2) / 2 * 1e-3, abs=1e-9)

    def test_corners_are_vertices(self):
        body = make_quarter_disk(1.0, 256)
        for p in quarter_disk_corners(1.0):
            assert np.min(np.linalg.norm(body.vertices - p, axis=1)) < 1e-15

    @pytest.mark.parametrize("delta", [0.0, HALF_PI + 1e-9, 2.0])
    def test_domain(self, delta):
        with pytest.raises(DomainError):
            make_quarter_disk(delta)


class TestReuleaux:
    def test_half_pi_circumradius(self):
        r = min_enclosing_cap(make_reuleaux_triangle(HALF_PI, 1024).vertices).radius
        assert r == pytest.approx(ATAN_SQRT2, abs=1e-4)

    def test_third_pi_circumradius(self):
        r = min_enclosing_cap(make_reuleaux_triangle(math.pi / 3, 1024).vertices).radius
        assert r == pytest.approx(0.6154797086703873, abs=1e-4)

    @pytest.mark.parametrize("delta", [0.1, 0.7, 1.2, HALF_PI])
    @pytest.mark.parametrize("k", [3, 5, 7, 9])
    def test_corner_spacing(self, delta, k):
        C = reuleaux_corners(delta, k)
        m = (k - 1) // 2
        for j in range(k):
            assert distance(C[j], C[(j + m) % k]) == pytest.approx(delta, abs=1e-12)

    @pytest.mark.parametrize("delta", [0.4, 1.0, 1.5])
    def test_arcs_centred_at_opposite_corner(self, delta):
        body = make_reuleaux_triangle(delta, 600)
        C = reuleaux_corners(delta, 3)
        far = np.max(np.arccos(np.clip(body.vertices @ C.T, -1, 1)), axis=1)
        assert np.allclose(far, delta, atol=1e-12)

    @pytest.mark.parametrize("delta", [0.3, 1.0, HALF_PI])
    def test_diameter_and_constant_width(self, delta):
        body = make_reuleaux_triangle(delta, 1024)
        assert diameter(body) == pytest.approx(delta, abs=2e-3)
        assert is_constant_width(body, 2e-3)

    def test_k3_matches_triangle(self):
        a = make_reuleaux_odd_gon(0.8, 3, 999).vertices
        b = make_reuleaux_triangle(0.8, 999).vertices
        assert a.shape == b.shape
        assert np.max(np.abs(a - b)) < 1e-9

    def test_pentagon(self):
        body = make_reuleaux_odd_gon(1.0, 5, 1024)
        assert thickness(body) == pytest.approx(1.0, abs=2e-3)
        assert is_constant_width(body, 2e-3)

    @pytest.mark.parametrize("k", [4, 2, 1, 6])
    def test_even_or_small_order(self, k):
        with pytest.raises(DomainError):
            make_reuleaux_odd_gon(1.0, k)


class TestEquilateral:
    def test_third_pi(self):
        assert circumcap3(*make_equilateral_triangle(math.pi / 3)).radius == pytest.approx(0.6700201614625866, abs=1e-12)

    @pytest.mark.parametrize("delta", [1e-3, 0.3, 0.6, 1.0, 1.4, 1.5707])
    def test_heights(self, delta):
        assert heights(make_equilateral_triangle(delta)) == pytest.approx((delta,) * 3, abs=1e-9)

    def test_small_angle_ratio(self):
        r = circumcap3(*make_equilateral_triangle(1e-3)).radius
        assert r / 1e-3 == pytest.approx(2 / 3, abs=1e-4)

    @pytest.mark.parametrize("delta", [HALF_PI, 0.0, 2.0])
    def test_domain(self, delta):
        with pytest.raises(DomainError):
            make_equilateral_triangle(delta)


class TestIsosceles:
    def test_right_apex(self):
        tri = make_isosceles_two_height(math.pi / 4, math.pi / 3)
        assert circumcap3(*tri).radius == pytest.approx(0.6847192030022829, abs=1e-12)

    def test_equilateral_end(self):
        d = math.pi / 3
        tri = make_isosceles_two_height(alpha_equilateral(d), d)
        assert circumcap3(*tri).radius == pytest.approx(0.6700201614625866, abs=1e-9)
        sides = [distance(tri[i], tri[(i + 1) % 3]) for i in range(3)]
        assert max(sides) - min(sides) < 1e-9

    @pytest.mark.parametrize("delta", [0.3, 0.6, 1.0, HALF_PI])
    def test_two_heights(self, delta):
        a_eq = alpha_equilateral(delta)
        for alpha in np.linspace(a_eq, math.pi / 4, 7):
            e1, g, j = make_isosceles_two_height(alpha, delta)
            assert distance_to_great_circle(g, e1, j) == pytest.approx(delta, abs=1e-9)
            assert distance_to_great_circle(j, e1, g) == pytest.approx(delta, abs=1e-9)
            assert distance(e1, g) == pytest.approx(math.asin(math.sin(delta) / math.sin(2 * alpha)), abs=1e-12)

    @pytest.mark.parametrize("delta", [0.3, 0.6, 1.0, 1.4])
    def test_alpha_eq_apex_height(self, delta):
        assert apex_height(alpha_equilateral(delta), delta) == pytest.approx(delta, abs=1e-12)

    def test_alpha_eq_half_pi(self):
        assert alpha_equilateral(HALF_PI) == math.pi / 4

    def test_no_valid_side(self):
        d = 1.0
        alpha = 0.5 * math.asin(math.sin(d)) - 0.05
        with pytest.raises(DomainError):
            make_isosceles_two_height(alpha, d)


class TestPolarConstantWidth:
    def test_half_pi(self):
        body = make_polar_constant_width(HALF_PI, 1024)
        assert thickness(body) == pytest.approx(HALF_PI, abs=2e-3)
        assert is_constant_width(body, 2e-3)

    def test_two_thirds_pi(self):
        body = make_polar_constant_width(2 * math.pi / 3, 2048)
        assert min_enclosing_cap(body.vertices).radius == pytest.approx(1.1390784842686862, abs=2e-3)

    @pytest.mark.parametrize("delta", [math.pi / 3, math.pi, 0.5])
    def test_domain(self, delta):
        with pytest.raises(DomainError):
            make_polar_constant_width(delta)


THICKNESS_KINDS = [
    (ShapeKind.DISK, {}),
    (ShapeKind.QUARTER_DISK, {}),
    (ShapeKind.REULEAUX_TRIANGLE, {}),
    (ShapeKind.REULEAUX_ODD_GON, {"k": 5}),
    (ShapeKind.REULEAUX_ODD_GON, {"k": 7}),
    (ShapeKind.EQUILATERAL_TRIANGLE, {}),
    (ShapeKind.ISOSCELES_TWO_HEIGHT, {}),
]


# the equilateral triangle only exists below pi/2
@pytest.mark.parametrize(
    "kind,extra,delta",
    [
        (kind, extra, d)
        for kind, extra in THICKNESS_KINDS
        for d in GRID
        if not (kind is ShapeKind.EQUILATERAL_TRIANGLE and d >= HALF_PI)
    ],
)
def test_thickness_grid(kind, extra, delta):
    if kind is ShapeKind.ISOSCELES_TWO_HEIGHT:
        # only the equilateral end has all three heights equal to delta
        extra = {"alpha": alpha_equilateral(delta)}
    body = ShapeSpec(kind, delta, 1024, extra).build()
    SphericalConvexPolygon(body.vertices, check=True)
    assert thickness(body) == pytest.approx(delta, abs=2e-3)


@pytest.mark.parametrize("delta", [0.3, 0.6, 1.0, HALF_PI])
def test_isosceles_thickness_is_apex_height(delta):
    for alpha in np.linspace(alpha_equilateral(delta), math.pi / 4, 5):
        body = ShapeSpec("isosceles_two_height", delta, extra={"alpha": alpha}).build()
        assert thickness(body) == pytest.approx(apex_height(alpha, delta), abs=1e-12)
        assert thickness(body) <= delta + 1e-12


@pytest.mark.parametrize("delta", [HALF_PI, 1.8, 2 * math.pi / 3, 2.5])
def test_thickness_grid_large(delta):
    body = ShapeSpec("polar_constant_width", delta, 1024).build()
    SphericalConvexPolygon(body.vertices, check=True)
    assert thickness(body) == pytest.approx(delta, abs=2e-3)


def test_shape_spec_rejects_unknown_kind():
    with pytest.raises(ValueError):
        ShapeSpec("hexagon", 1.0)
