"""Numerical verification suites.

Each suite evaluates one family of claims on a grid of parameters and
returns a list of `VerificationReport` rows comparing a closed-form value
with an independently measured one. Inequality claims report the excess of
the measured value over the bound (zero when the bound holds) as their
error.
"""

import csv
import json
import math
from dataclasses import asdict, dataclass, field

import numpy as np

from . import bounds, shapes
from .body import convex_hull, diameter, is_constant_width, polar, thickness, widths
from .caps import circumcap3, min_enclosing_cap, min_enclosing_cap_bruteforce
from .core import GeometryError, as_vec, distance_to_great_circle, distances, solve_right_triangle, spherical_angle

HALF_PI = math.pi / 2

CSV_FIELDS = (
    "claim_id",
    "delta",
    "n",
    "alpha",
    "seed",
    "formula_value",
    "numeric_value",
    "abs_error",
    "tolerance",
    "passed",
)


class UnknownSuiteError(KeyError):
    pass


class InvalidConfigError(ValueError):
    pass


@dataclass(frozen=True)
class VerificationReport:
    claim_id: str
    params: dict
    formula_value: float
    numeric_value: float
    abs_error: float
    tolerance: float
    passed: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "passed", bool(self.abs_error <= self.tolerance))

    @classmethod
    def equality(cls, claim_id, params, formula, numeric, tol):
        return cls(claim_id, params, float(formula), float(numeric), abs(float(numeric) - float(formula)), tol)

    @classmethod
    def upper_bound(cls, claim_id, params, bound, numeric, tol):
        """`numeric` must not exceed `bound`; the error is the excess."""
        return cls(claim_id, params, float(bound), float(numeric), max(0.0, float(numeric) - float(bound)), tol)

    def as_row(self):
        row = {"claim_id": self.claim_id}
        for key in ("delta", "n", "alpha", "seed"):
            row[key] = self.params.get(key)
        row.update(
            formula_value=self.formula_value,
            numeric_value=self.numeric_value,
            abs_error=self.abs_error,
            tolerance=self.tolerance,
            passed=self.passed,
        )
        return row


# ---------------------------------------------------------------------------
# random fixtures


def random_cap_points(rng, count, radius, center=None):
    """`count` points uniformly distributed (by area) in a cap of `radius`."""
    if center is None:
        center = rng.normal(size=3)
        center /= np.linalg.norm(center)
    c = as_vec(center)
    colat = np.arccos(1 - rng.uniform(0, 1, count) * (1 - math.cos(radius)))
    lon = rng.uniform(0, 2 * math.pi, count)
    helper = np.array([1.0, 0.0, 0.0]) if abs(c[0]) < 0.9 else np.array([0.0, 1.0, 0.0])
    e1 = helper - (helper @ c) * c
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(c, e1)
    s = np.sin(colat)[:, None]
    return np.cos(colat)[:, None] * c + s * (np.cos(lon)[:, None] * e1 + np.sin(lon)[:, None] * e2)


def random_convex_polygon(rng, max_vertices=50, radius=None):
    """Hull of random points in a random cap; at most `max_vertices` vertices."""
    radius = rng.uniform(0.2, 1.3) if radius is None else radius
    while True:
        count = int(rng.integers(3, max_vertices + 1))
        try:
            body = convex_hull(random_cap_points(rng, count, radius))
        except GeometryError:
            continue
        if body.n >= 3:
            return body


def _hausdorff(P, Q):
    def one_way(X, Y):
        return max(float(distances(x, Y).min()) for x in X)

    return max(one_way(P, Q), one_way(Q, P))


# ---------------------------------------------------------------------------
# suites


def _lemma1(cfg):
    rows = []
    for d in cfg["delta_grid"]:
        body = shapes.make_quarter_disk(d, cfg["n"])
        r = min_enclosing_cap(body.vertices).radius
        rows.append(VerificationReport.equality("lemma1", {"delta": d, "n": cfg["n"]}, bounds.rho_quarter(d), r, cfg["tol"]))
    return rows


def _lemma2(cfg):
    rows = []
    for d in cfg["delta_grid"]:
        body = shapes.make_reuleaux_triangle(d, cfg["n"])
        r = min_enclosing_cap(body.vertices).radius
        rows.append(VerificationReport.equality("lemma2", {"delta": d, "n": cfg["n"]}, bounds.rho_reuleaux(d), r, cfg["tol"]))
    return rows


def _lemma3(cfg):
    rows = []
    for d in cfg["delta_grid"]:
        tri = shapes.make_equilateral_triangle(d)
        r = circumcap3(*tri).radius
        rows.append(VerificationReport.equality("lemma3", {"delta": d}, bounds.rho_equilateral(d), r, cfg["tol"]))
        # the triangle is placed at the formula's circumradius, so the
        # independent check is that its heights really are d
        h = [distance_to_great_circle(tri[i], tri[(i + 1) % 3], tri[(i + 2) % 3]) for i in range(3)]
        worst = max(h, key=lambda x: abs(x - d))
        rows.append(VerificationReport.equality("lemma3.height", {"delta": d}, d, worst, cfg["tol"]))
    return rows


def _prop_polar(cfg):
    rows = []
    for seed in cfg["seeds"]:
        body = random_convex_polygon(np.random.default_rng(seed), cfg["max_vertices"])
        back = polar(polar(body))
        err = _hausdorff(body.vertices, back.vertices)
        rows.append(VerificationReport.upper_bound("prop_polar.involution", {"seed": seed, "n": body.n}, 0.0, err, cfg["tol"]))
    for r in cfg["cap_radii"]:
        disk = shapes.make_disk(r=r, n=cfg["n"])
        colat = np.arccos(np.clip(np.asarray(polar(disk).vertices)[:, 2], -1, 1))
        err = float(np.abs(colat - (HALF_PI - r)).max())
        rows.append(
            VerificationReport.equality("prop_polar.cap", {"delta": r, "n": cfg["n"]}, HALF_PI - r, HALF_PI - r + err, cfg["cap_tol"])
        )
    return rows


def _prop_constant_width_polar(cfg):
    rows = []
    for d in cfg["delta_grid"]:
        p = {"delta": d, "n": cfg["n"]}
        wp = polar(shapes.make_reuleaux_triangle(d, cfg["n"]))
        rows.append(VerificationReport.equality("prop_constant_width_polar.thickness", p, math.pi - d, thickness(wp), cfg["tol"]))
        w = widths(wp)
        rows.append(VerificationReport.upper_bound("prop_constant_width_polar.spread", p, 0.0, w.max() - w.min(), cfg["tol"]))
    return rows


def _dekster(cfg):
    rows = []
    for seed in cfg["seeds"]:
        rng = np.random.default_rng(seed)
        P = random_cap_points(rng, cfg["points"], rng.uniform(0.05, math.pi / 3))
        d = float(max(distances(p, P).max() for p in P))
        sigma = min_enclosing_cap(P, rng).radius
        rows.append(
            VerificationReport.upper_bound(
                "dekster", {"seed": seed, "delta": d}, bounds.TWO_OVER_SQRT3 * math.sin(d / 2), math.sin(sigma), cfg["tol"]
            )
        )
    return rows


def _theorem1(cfg):
    rows = []
    for d in cfg["delta_grid"]:
        bound = bounds.rho_constant_width_large(d)
        body = shapes.make_polar_constant_width(d, cfg["n"])
        r = min_enclosing_cap(body.vertices).radius
        rows.append(VerificationReport.equality("theorem1.equality", {"delta": d, "n": cfg["n"]}, bound, r, cfg["tol"]))
        for k in cfg["odd_gons"]:
            body = polar(shapes.make_reuleaux_odd_gon(math.pi - d, k, cfg["n"]))
            r = min_enclosing_cap(body.vertices).radius
            rows.append(VerificationReport.upper_bound(f"theorem1.odd_gon_{k}", {"delta": d, "n": cfg["n"]}, bound, r, cfg["tol"]))
    return rows


def _lemma4(cfg):
    rows = []
    for c, a in cfg["pairs"]:
        res = bounds.lemma4_endpoint_max(c, a, cfg["grid_n"])
        rows.append(
            VerificationReport.upper_bound(
                "lemma4", {"delta": c, "alpha": a, "n": cfg["grid_n"]}, res.max_endpoints, res.max_interior, cfg["tol"]
            )
        )
    return rows


def inscribed_angle_measured(rho, alpha, beta):
    """Build a, t, b on the circle of radius rho about the north pole and measure angle atb."""
    a = shapes._colatlon(rho, 0.0)
    t = shapes._colatlon(rho, 2 * alpha)
    b = shapes._colatlon(rho, 2 * alpha + 2 * beta)
    return spherical_angle(t, a, b)


def _lemma5(cfg):
    rows = []
    for seed in cfg["seeds"]:
        rng = np.random.default_rng(seed)
        rho = rng.uniform(0.05, HALF_PI - 0.05)
        total = rng.uniform(0.05, math.pi - 0.05)
        lo, hi = max(0.0, total - HALF_PI), min(total, HALF_PI)
        split = np.linspace(lo, hi, cfg["grid_n"] + 2)[1:-1]
        k = math.cos(rho)
        grid = (HALF_PI - np.arctan(k * np.tan(split))) + (HALF_PI - np.arctan(k * np.tan(total - split)))
        equi = bounds.inscribed_angle(rho, total / 2, total / 2)
        p = {"seed": seed, "delta": rho, "alpha": total / 2}
        rows.append(VerificationReport.upper_bound("lemma5.equidistant_max", p, equi, grid.max(), cfg["tol"]))
        al = float(rng.uniform(lo, hi))
        al = min(max(al, lo + 1e-3), hi - 1e-3)
        rows.append(
            VerificationReport.equality(
                "lemma5.measured",
                {"seed": seed, "delta": rho, "alpha": al},
                bounds.inscribed_angle(rho, al, total - al),
                inscribed_angle_measured(rho, al, total - al),
                cfg["measure_tol"],
            )
        )
    return rows


def _rho_equilateral_closed(d):
    # the pi/2 octant is both equilateral and right-angled; use the limit value
    return math.atan(math.sqrt(2.0)) if d >= HALF_PI else bounds.rho_equilateral(d)


def _sigma_isosceles(cfg):
    rows = []
    for d in cfg["delta_grid"]:
        a_eq = shapes.alpha_equilateral(d)
        p = {"delta": d}
        rows.append(
            VerificationReport.equality(
                "sigma_isosceles.right", dict(p, alpha=math.pi / 4), bounds.rho_quarter(d), bounds.sigma_isosceles(math.pi / 4, d), cfg["tol"]
            )
        )
        rows.append(
            VerificationReport.equality(
                "sigma_isosceles.equilateral", dict(p, alpha=a_eq), _rho_equilateral_closed(d), bounds.sigma_isosceles(a_eq, d), cfg["tol"]
            )
        )
        rows.append(
            VerificationReport.equality(
                "sigma_isosceles.circumcap",
                dict(p, alpha=a_eq),
                bounds.sigma_isosceles(a_eq, d),
                circumcap3(*shapes.make_isosceles_two_height(a_eq, d)).radius,
                cfg["tol"],
            )
        )
        alphas = np.linspace(a_eq, math.pi / 4, cfg["grid_n"])
        tans = np.array([bounds.tan_sigma_isosceles(a, d) for a in alphas])
        ends = max(tans[0], tans[-1])
        rows.append(VerificationReport.upper_bound("sigma_isosceles.endpoint_max", dict(p, n=cfg["grid_n"]), ends, tans.max(), cfg["bridge_tol"]))
    return rows


def reduced_body_catalog(d, n):
    """(name, body) pairs for the reduced bodies of thickness d used against the covering bound."""
    return [
        ("disk", shapes.make_disk(r=d / 2, n=n)),
        ("quarter_disk", shapes.make_quarter_disk(d, n)),
        ("reuleaux_3", shapes.make_reuleaux_triangle(d, n)),
        ("reuleaux_5", shapes.make_reuleaux_odd_gon(d, 5, n)),
        ("reuleaux_7", shapes.make_reuleaux_odd_gon(d, 7, n)),
    ]


def _theorem2(cfg):
    rows = []
    for d in cfg["delta_grid"]:
        bound = bounds.rho_reduced(d)
        p = {"delta": d, "n": cfg["n"]}
        for name, body in reduced_body_catalog(d, cfg["n"]):
            r = min_enclosing_cap(body.vertices).radius
            rows.append(VerificationReport.upper_bound(f"theorem2.{name}", p, bound, r, cfg["tol"]))
            if name == "quarter_disk":
                rows.append(VerificationReport.equality("theorem2.quarter_disk_equality", p, bound, r, cfg["tol"]))
    return rows


def _napier(cfg):
    rng = np.random.default_rng(cfg["seeds"][0])
    worst = np.zeros(4)
    for _ in range(cfg["count"]):
        A, B = rng.uniform(0, HALF_PI, 2)
        if A == 0.0 or B == 0.0:
            continue
        worst = np.maximum(worst, solve_right_triangle(A, B).identity_residuals())
    p = {"seed": cfg["seeds"][0], "n": cfg["count"]}
    return [VerificationReport.upper_bound(f"napier.identity{i + 1}", p, 0.0, w, cfg["tol"]) for i, w in enumerate(worst)]


def _oracle(cfg):
    rows = []
    for seed in cfg["seeds"]:
        rng = np.random.default_rng(seed)
        P = random_cap_points(rng, cfg["points"], rng.uniform(0.1, 1.2))
        fast = min_enclosing_cap(P, rng).radius
        slow = min_enclosing_cap_bruteforce(P).radius
        rows.append(VerificationReport.equality("oracle", {"seed": seed, "n": cfg["points"]}, slow, fast, cfg["tol"]))
    return rows


SUITES = {
    "lemma1": (_lemma1, {"delta_grid": [0.3, 0.6, 1.0, HALF_PI], "n": 1024, "tol": 1e-3}),
    "lemma2": (_lemma2, {"delta_grid": [0.3, 0.6, 1.0, HALF_PI], "n": 1024, "tol": 1e-3}),
    "lemma3": (_lemma3, {"delta_grid": [0.3, 0.6, 1.0, 1.4], "tol": 1e-9}),
    "prop_polar": (
        _prop_polar,
        {"seeds": list(range(100)), "max_vertices": 50, "tol": 1e-9, "cap_radii": [0.2, 0.5, 1.0], "n": 512, "cap_tol": 1e-3},
    ),
    "prop_constant_width_polar": (_prop_constant_width_polar, {"delta_grid": [0.6, 1.0, 1.4], "n": 1024, "tol": 2e-3}),
    "dekster": (_dekster, {"seeds": list(range(100)), "points": 30, "tol": 1e-9}),
    "theorem1": (_theorem1, {"delta_grid": [HALF_PI, 1.8, 2 * math.pi / 3], "n": 2048, "tol": 2e-3, "odd_gons": [5, 7]}),
    "lemma4": (
        _lemma4,
        {"pairs": [(0.05, 0.7), (0.1, 0.6), (0.2, 0.5 + math.sqrt(0.05)), (0.24, 0.52)], "grid_n": 100_000, "tol": 1e-12},
    ),
    "lemma5": (_lemma5, {"seeds": list(range(100)), "grid_n": 1000, "tol": 1e-10, "measure_tol": 1e-9}),
    "sigma_isosceles": (
        _sigma_isosceles,
        {"delta_grid": [0.3, 0.6, 1.0, HALF_PI], "tol": 1e-9, "grid_n": 10_000, "bridge_tol": 1e-10},
    ),
    "theorem2": (_theorem2, {"delta_grid": [0.3, 0.6, 1.0, HALF_PI], "n": 1024, "tol": 2e-3}),
    "napier": (_napier, {"seeds": [0], "count": 10_000, "tol": 1e-10}),
    "oracle": (_oracle, {"seeds": list(range(100)), "points": 50, "tol": 1e-10}),
}


def suite_config(suite_id, config=None):
    """Defaults for `suite_id` overlaid with `config`; unknown keys are rejected."""
    if suite_id not in SUITES:
        raise UnknownSuiteError(suite_id)
    cfg = dict(SUITES[suite_id][1])
    for key, value in (config or {}).items():
        if key not in cfg:
            raise InvalidConfigError(f"suite {suite_id!r} has no setting {key!r}")
        cfg[key] = value
    for key in ("n", "grid_n", "points", "count", "max_vertices"):
        if key in cfg and (not isinstance(cfg[key], (int, np.integer)) or cfg[key] < 1):
            raise InvalidConfigError(f"{key} must be a positive integer")
    for key in ("tol", "cap_tol", "measure_tol", "bridge_tol"):
        if key in cfg and not cfg[key] >= 0:
            raise InvalidConfigError(f"{key} must be non-negative")
    return cfg


def run_suite(suite_id, config=None):
    """Run a verification suite; deterministic for a given (suite_id, config)."""
    cfg = suite_config(suite_id, config)
    try:
        return SUITES[suite_id][0](cfg)
    except GeometryError as exc:
        raise InvalidConfigError(f"suite {suite_id!r}: {exc}") from exc


# ---------------------------------------------------------------------------
# serialization


def _fmt(v):
    if v is None:
        return ""
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return format(float(v), ".12g")


def write_csv(reports, stream):
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in reports:
        row = r.as_row()
        w.writerow([row["claim_id"]] + [_fmt(row[k]) for k in CSV_FIELDS[1:]])
    return len(reports)


def write_json(reports, stream):
    json.dump([r.as_row() for r in reports], stream, indent=2)
    stream.write("\n")
    return len(reports)


def _parse(v):
    if v == "":
        return None
    if v in ("true", "false"):
        return v == "true"
    try:
        return int(v)
    except ValueError:
        return float(v)


def read_csv(path):
    """Read a report CSV back into VerificationReport rows."""
    out = []
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            params = {k: _parse(row[k]) for k in ("delta", "n", "alpha", "seed") if row[k] != ""}
            out.append(
                VerificationReport(
                    row["claim_id"],
                    params,
                    float(row["formula_value"]),
                    float(row["numeric_value"]),
                    float(row["abs_error"]),
                    float(row["tolerance"]),
                )
            )
    return out


def sweep_csv(suite_id, config, output_path, fmt="csv"):
    """Run a suite and write its rows to `output_path`; returns the row count."""
    reports = run_suite(suite_id, config)
    with open(output_path, "w", newline="") as fh:
        if fmt == "json":
            return write_json(reports, fh)
        return write_csv(reports, fh)


def all_passed(reports):
    return all(r.passed for r in reports)
