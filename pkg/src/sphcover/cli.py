"""Command-line entry point: ``sphcover verify|sweep|measure|circumcap``.

Exit codes: 0 all claims pass, 1 a claim failed, 2 usage or config error,
3 I/O error.
"""

import argparse
import ast
import json
import math
import operator
import sys

from . import bounds, verify
from .body import convex_hull, diameter, is_constant_width, thickness
from .caps import min_enclosing_cap
from .core import GeometryError, as_points, as_vec
from .shapes import ShapeKind, ShapeSpec

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

_OPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul, ast.Div: operator.truediv}


class UsageError(Exception):
    pass


def parse_angle(text):
    """Parse a number or simple arithmetic in ``pi`` such as ``pi/2`` or ``2*pi/3``."""

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
            return float(node.value)
        if isinstance(node, ast.Name) and node.id == "pi":
            return math.pi
        if isinstance(node, ast.BinOp) and type(node.op) in _OPS:
            return _OPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
            return -ev(node.operand)
        raise ValueError(text)

    try:
        return ev(ast.parse(text.strip(), mode="eval"))
    except (SyntaxError, ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse angle {text!r}") from None


def _grid(text):
    return [parse_angle(t) for t in text.split(",") if t.strip()]


def _config_from_args(suite, args):
    defaults = verify.SUITES[suite][1]
    cfg = {}
    if args.delta_grid is not None:
        cfg["delta_grid"] = _grid(args.delta_grid)
    elif args.delta is not None:
        cfg["delta_grid"] = [parse_angle(args.delta)]
    if args.n is not None:
        cfg["n" if "n" in defaults else "grid_n" if "grid_n" in defaults else "points"] = args.n
    if args.tol is not None:
        cfg["tol"] = args.tol
    if args.seed is not None or args.trials is not None:
        start = args.seed if args.seed is not None else 0
        count = args.trials if args.trials is not None else len(defaults.get("seeds", [0]))
        cfg["seeds"] = list(range(start, start + count))
    if args.alpha is not None:
        raise UsageError("--alpha applies to `measure` only")
    unknown = [k for k in cfg if k not in defaults]
    if unknown:
        raise UsageError(f"suite {suite!r} does not take {', '.join(unknown)}")
    return cfg


def _emit(reports, fmt, stream):
    if fmt == "json":
        verify.write_json(reports, stream)
    else:
        verify.write_csv(reports, stream)


def cmd_verify(args):
    reports = verify.run_suite(args.suite, _config_from_args(args.suite, args))
    if args.out:
        with open(args.out, "w", newline="") as fh:
            _emit(reports, args.format, fh)
    else:
        _emit(reports, args.format, sys.stdout)
    failed = sum(not r.passed for r in reports)
    print(f"{args.suite}: {len(reports) - failed}/{len(reports)} passed", file=sys.stderr)
    return EXIT_OK if failed == 0 else EXIT_FAIL


def cmd_sweep(args):
    if not args.out:
        raise UsageError("sweep needs --out")
    reports = verify.run_suite(args.suite, _config_from_args(args.suite, args))
    with open(args.out, "w", newline="") as fh:
        _emit(reports, args.format, fh)
    print(len(reports))
    return EXIT_OK if verify.all_passed(reports) else EXIT_FAIL


def _load_points(path):
    with open(path) as fh:
        doc = json.load(fh)
    try:
        return as_points(doc["points"])
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"{path}: expected {{\"points\": [[x, y, z], ...]}}") from exc


def _measure_body(body):
    cap = min_enclosing_cap(body.vertices)
    return {
        "vertices": body.n,
        "thickness": thickness(body),
        "diameter": diameter(body),
        "circumradius": cap.radius,
        "center": list(as_vec(cap.center)),
        "constant_width": is_constant_width(body, 2e-3),
    }


_BOUND_FOR = {
    ShapeKind.QUARTER_DISK: bounds.rho_quarter,
    ShapeKind.REULEAUX_TRIANGLE: bounds.rho_reuleaux,
    ShapeKind.EQUILATERAL_TRIANGLE: bounds.rho_equilateral,
    ShapeKind.POLAR_CONSTANT_WIDTH: bounds.rho_constant_width_large,
}


def cmd_measure(args):
    if args.shape in {k.value for k in ShapeKind}:
        if args.delta is None:
            raise UsageError("measure <shape> needs --delta")
        delta = parse_angle(args.delta)
        extra = {}
        if args.alpha is not None:
            extra["alpha"] = parse_angle(args.alpha)
        if args.k is not None:
            extra["k"] = args.k
        spec = ShapeSpec(args.shape, delta, args.n or 512, extra)
        out = {"shape": args.shape, "delta": delta, "n": spec.n}
        out.update(_measure_body(spec.build()))
        fn = _BOUND_FOR.get(spec.kind)
        if fn is not None:
            out["formula_circumradius"] = fn(delta)
        if delta <= math.pi / 2:
            out["reduced_bound"] = bounds.rho_reduced(delta)
    else:
        out = {"file": args.shape}
        out.update(_measure_body(convex_hull(_load_points(args.shape))))
    json.dump(out, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return EXIT_OK


def cmd_circumcap(args):
    cap = min_enclosing_cap(_load_points(args.file))
    json.dump({"center": list(as_vec(cap.center)), "radius": cap.radius}, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="sphcover", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--delta")
        sp.add_argument("--delta-grid")
        sp.add_argument("--n", type=int)
        sp.add_argument("--alpha")
        sp.add_argument("--seed", type=int)
        sp.add_argument("--trials", type=int)
        sp.add_argument("--tol", type=float)
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        sp.add_argument("--out")

    for name, fn in (("verify", cmd_verify), ("sweep", cmd_sweep)):
        sp = sub.add_parser(name)
        sp.add_argument("suite", choices=sorted(verify.SUITES))
        common(sp)
        sp.set_defaults(func=fn)

    sp = sub.add_parser("measure", help="measure a catalog shape or a JSON point file")
    sp.add_argument("shape")
    sp.add_argument("--k", type=int)
    common(sp)
    sp.set_defaults(func=cmd_measure)

    sp = sub.add_parser("circumcap", help="minimal enclosing cap of a JSON point file")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_circumcap)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, verify.InvalidConfigError, verify.UnknownSuiteError, GeometryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
