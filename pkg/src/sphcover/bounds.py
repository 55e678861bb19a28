"""Closed-form circumradius bounds and the scalar functions behind them.

All angles are in radians. Radicands that come out within ``RADICAND_SLACK``
below zero are treated as zero: several formulas hit an exact zero (the
right root in `lemma4_f`, the right-angled case of `sigma_isosceles`) and
roundoff must not turn that into a domain error.
"""

import math
from dataclasses import dataclass

import numpy as np

from .core import DomainError

HALF_PI = math.pi / 2
TWO_OVER_SQRT3 = 2.0 * math.sqrt(3.0) / 3.0
RADICAND_SLACK = 1e-13


def _sqrt0(x):
    if x < 0.0:
        if x < -RADICAND_SLACK:
            raise DomainError(f"negative radicand {x!r}")
        return 0.0
    return math.sqrt(x)


def arccot(y):
    """Inverse cotangent with range (0, pi)."""
    return HALF_PI - math.atan(y)


def _jung_angle(d):
    """arcsin((2/sqrt3) sin(d/2)) for d in (0, 2pi/3].

    Evaluated as atan2 with cos^2 = (1 + 2 cos d)/3 written as a product of
    sines, so the value is exact at d = 2pi/3 instead of losing half its
    digits to arcsin near 1.
    """
    third = 2 * math.pi / 3
    cos2 = 4.0 * math.sin((d + third) / 2) * math.sin((third - d) / 2) / 3.0
    return math.atan2(TWO_OVER_SQRT3 * math.sin(d / 2), math.sqrt(max(cos2, 0.0)))


def rho_quarter(delta):
    """Circumradius of the quarter-disk of thickness `delta`: arctan(sqrt2 tan(delta/2))."""
    if not 0.0 < delta <= HALF_PI:
        raise DomainError(f"delta must lie in (0, pi/2], got {delta!r}")
    return math.atan(math.sqrt(2.0) * math.tan(delta / 2))


def rho_reuleaux(delta):
    """Circumradius of the Reuleaux triangle of width `delta`."""
    if not 0.0 < delta <= HALF_PI:
        raise DomainError(f"delta must lie in (0, pi/2], got {delta!r}")
    return _jung_angle(delta)


def rho_equilateral(delta):
    """Circumradius of the equilateral triangle of thickness `delta` < pi/2.

    tan(rho) is the positive root of tan(d) u^2 + 3u - 2 tan(d) = 0. The
    root is evaluated in its rationalized form 4t / (sqrt(9 + 8t^2) + 3),
    which avoids cancellation for small t.
    """
    if not 0.0 < delta < HALF_PI:
        raise DomainError(f"delta must lie in (0, pi/2), got {delta!r}")
    t = math.tan(delta)
    return math.atan(4.0 * t / (math.sqrt(9.0 + 8.0 * t * t) + 3.0))


def dekster_bound(d):
    """Upper bound arcsin((2/sqrt3) sin(d/2)) on the circumradius of a set of diameter d."""
    if not 0.0 < d <= 2 * math.pi / 3 + 1e-15:
        raise DomainError(f"diameter must lie in (0, 2pi/3], got {d!r}")
    return _jung_angle(d)


def rho_constant_width_large(delta):
    """Covering radius for bodies of constant width delta in [pi/2, pi)."""
    if not HALF_PI <= delta < math.pi:
        raise DomainError(f"delta must lie in [pi/2, pi), got {delta!r}")
    return delta + math.asin(TWO_OVER_SQRT3 * math.cos(delta / 2)) - HALF_PI


def rho_reduced(delta):
    """Covering radius for reduced bodies of thickness delta <= pi/2 (same as `rho_quarter`)."""
    return rho_quarter(delta)


def lemma4_interval(c):
    """Interval [1/2 - s, 1/2 + s], s = sqrt(1/4 - c), on which `lemma4_f` is defined."""
    if not 0.0 < c < 0.25:
        raise DomainError(f"c must lie in (0, 1/4), got {c!r}")
    s = math.sqrt(0.25 - c)
    return 0.5 - s, 0.5 + s


def lemma4_f(x, c):
    """f(x) = sqrt(1 - x) - sqrt(1 - x - c/x)."""
    lo, hi = lemma4_interval(c)
    if not lo <= x <= hi:
        raise DomainError(f"x={x!r} outside [{lo!r}, {hi!r}]")
    return math.sqrt(1.0 - x) - _sqrt0(1.0 - x - c / x)


def _lemma4_f_array(x, c):
    inner = 1.0 - x - c / x
    if np.any(inner < -RADICAND_SLACK):
        raise DomainError("negative radicand on the grid")
    return np.sqrt(1.0 - x) - np.sqrt(np.maximum(inner, 0.0))


@dataclass(frozen=True)
class EndpointMax:
    max_interior: float
    max_endpoints: float

    @property
    def holds(self):
        return self.max_interior <= self.max_endpoints + 1e-12


def lemma4_endpoint_max(c, a, grid_n=100_000):
    """Grid maximum of f on [1/2, a] next to max(f(1/2), f(a)).

    `a` may equal the right end of the domain interval.
    """
    _, hi = lemma4_interval(c)
    if not 0.5 < a <= hi:
        raise DomainError(f"a must lie in (1/2, {hi!r}], got {a!r}")
    if grid_n < 2:
        raise DomainError("grid needs at least two points")
    x = np.linspace(0.5, a, grid_n)
    return EndpointMax(
        max_interior=float(_lemma4_f_array(x, c).max()),
        max_endpoints=max(lemma4_f(0.5, c), lemma4_f(a, c)),
    )


def inscribed_angle(rho, alpha, beta):
    """Angle atb at a point t of a circle of radius rho, where the central
    angles aot and tob are 2*alpha and 2*beta.
    """
    if not 0.0 < rho < HALF_PI:
        raise DomainError(f"rho must lie in (0, pi/2), got {rho!r}")
    if not (0.0 < alpha < HALF_PI and 0.0 < beta < HALF_PI):
        raise DomainError("alpha and beta must lie in (0, pi/2)")
    k = math.cos(rho)
    return arccot(k * math.tan(alpha)) + arccot(k * math.tan(beta))


def arccot_tan_second_derivative(x, rho):
    """Closed-form second derivative of x -> arccot(cos(rho) tan(x))."""
    k = math.cos(rho)
    s, c = math.sin(x), math.cos(x)
    return 2 * k * s * c * (k * k - 1) / (c * c + k * k * s * s) ** 2


def tan_sigma_isosceles(alpha, delta):
    """tan of the circumradius of the two-height isosceles triangle.

    With x = cos^2(alpha) and c = sin^2(delta)/4 this is 2 f(x) / sin(delta),
    f being `lemma4_f`.
    """
    if not 0.0 < delta <= HALF_PI:
        raise DomainError(f"delta must lie in (0, pi/2], got {delta!r}")
    if not 0.0 < alpha <= math.pi / 4 + 1e-15:
        raise DomainError(f"alpha must lie in (0, pi/4], got {alpha!r}")
    x = math.cos(alpha) ** 2
    c = math.sin(delta) ** 2 / 4
    return 2 * (math.sqrt(1 - x) - _sqrt0(1 - x - c / x)) / math.sin(delta)


def sigma_isosceles(alpha, delta):
    """Circumradius of the isosceles triangle with apex angle 2*alpha and two heights delta."""
    return math.atan(tan_sigma_isosceles(alpha, delta))


@dataclass(frozen=True)
class BoundResult:
    claim_id: str
    input_delta: float
    value: float


RADIUS_BOUNDS = {
    "rho_quarter": rho_quarter,
    "rho_reuleaux": rho_reuleaux,
    "rho_equilateral": rho_equilateral,
    "dekster_bound": dekster_bound,
    "rho_constant_width_large": rho_constant_width_large,
    "rho_reduced": rho_reduced,
}


def evaluate(claim_id, delta):
    """Evaluate a named radius bound, returning a BoundResult."""
    try:
        fn = RADIUS_BOUNDS[claim_id]
    except KeyError:
        raise KeyError(f"unknown bound {claim_id!r}") from None
    return BoundResult(claim_id, delta, fn(delta))
