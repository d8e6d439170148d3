"""Command-line front end: grid evaluation, sampling, verification, cap areas.

Subcommands
-----------
eval     evaluate pdf/cdf/survival on a regular grid, emit CSV or JSON
sample   draw reproducible samples, emit CSV plus a JSON metadata sidecar
verify   run the verification suite, emit the report JSON
caparea  print the spherical cap intersection area for (r1, r2, d)

Exit codes: 0 success / all checks pass, 1 verification failure, 2 invalid
configuration, 3 unsupported quantity (density of the spherical model).
"""

from __future__ import annotations

import argparse
import datetime as _dt
import json
import math
import sys
from dataclasses import dataclass

from .copulas import CopulaModel, EllipticalCopula, model_from_name
from .errors import BallCopulasError
from .oracle import QuadratureSpec, VerifyConfig, verify_suite
from .special_math import cap_intersection_area

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_CONFIG = 2
EXIT_UNSUPPORTED_QUANTITY = 3

_GAMMA_LITERALS = {
    "pi/4": math.pi / 4.0,
    "pi/8": math.pi / 8.0,
    "-pi/8": -math.pi / 8.0,
    "-pi/4": -math.pi / 4.0,
}


class CliConfigError(Exception):
    pass


@dataclass(frozen=True)
class GridSpec:
    """Regular evaluation grid: points per axis, per-axis bounds, quantity."""

    axis_points: int = 101
    bounds: tuple[tuple[float, float], ...] | None = None
    quantity: str = "cdf"

    def __post_init__(self) -> None:
        if self.axis_points < 2:
            raise CliConfigError("grid needs at least 2 points per axis")
        if self.quantity not in ("pdf", "cdf", "survival"):
            raise CliConfigError(f"unknown quantity {self.quantity!r}")
        if self.bounds is not None:
            for lo, hi in self.bounds:
                if not (-1.0 <= lo < hi <= 1.0):
                    raise CliConfigError(
                        f"grid bounds must satisfy -1 <= lo < hi <= 1, got ({lo}, {hi})"
                    )

    def axes(self, dim: int) -> list[list[float]]:
        bounds = self.bounds or ((-1.0, 1.0),) * dim
        if len(bounds) != dim:
            raise CliConfigError(f"expected {dim} bound pairs, got {len(bounds)}")
        return [
            [lo + (hi - lo) * i / (self.axis_points - 1) for i in range(self.axis_points)]
            for lo, hi in bounds
        ]


def _parse_gamma(text: str) -> float:
    key = text.strip().replace(" ", "")
    if key in _GAMMA_LITERALS:
        return _GAMMA_LITERALS[key]
    try:
        return float(key)
    except ValueError:
        raise CliConfigError(
            f"invalid gamma {text!r}: expected a decimal in radians or one of "
            f"{sorted(_GAMMA_LITERALS)}"
        ) from None


def _build_model(args: argparse.Namespace) -> CopulaModel:
    gamma = None
    if args.gamma is not None:
        gamma = _parse_gamma(args.gamma)
    if args.model == "elliptical":
        if gamma is None:
            raise CliConfigError("--gamma is required for the elliptical model")
    elif gamma is not None:
        raise CliConfigError("--gamma is only valid for the elliptical model")
    return model_from_name(args.model, gamma)


def _fmt(x: float) -> str:
    # Shortest round-trip decimal form; locale independent.
    return repr(float(x))


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", newline="\n") as handle:
            handle.write(text)


def cmd_eval(args: argparse.Namespace) -> int:
    model = _build_model(args)
    if args.quantity == "pdf" and model.name == "spherical":
        print(
            "error: the spherical model is not absolutely continuous (its mass "
            "lives on the unit-sphere surface), so it has no density to evaluate",
            file=sys.stderr,
        )
        return EXIT_UNSUPPORTED_QUANTITY
    grid = GridSpec(axis_points=args.grid, quantity=args.quantity)
    fn = {
        "pdf": model.pdf,
        "cdf": model.cdf,
        "survival": model.survival,
    }[grid.quantity]
    coords = ("x", "y") if model.dim == 2 else ("x", "y", "z")

    rows: list[tuple[float, ...]] = []
    if model.dim == 2:
        ax, ay = grid.axes(2)
        for x in ax:
            for y in ay:
                rows.append((x, y, fn(x, y)))
    else:
        ax, ay, az = grid.axes(3)
        for x in ax:
            for y in ay:
                for z in az:
                    rows.append((x, y, z, fn(x, y, z)))

    if args.format == "csv":
        lines = [",".join(coords) + ",value"]
        lines.extend(",".join(_fmt(t) for t in row) for row in rows)
        _emit("\n".join(lines) + "\n", args.out)
    else:
        records = [
            {**dict(zip(coords, row[:-1])), "value": row[-1]} for row in rows
        ]
        _emit(json.dumps(records, indent=2) + "\n", args.out)
    return EXIT_OK


def cmd_sample(args: argparse.Namespace) -> int:
    model = _build_model(args)
    if args.n is None or args.n < 1:
        raise CliConfigError("--n (>= 1) is required for sample")
    if args.seed is None:
        raise CliConfigError("--seed is required for sample")
    if args.out is None:
        raise CliConfigError("--out is required for sample")
    batch = model.sample(args.n, args.seed)
    coords = ("x", "y") if model.dim == 2 else ("x", "y", "z")
    lines = [",".join(coords)]
    lines.extend(",".join(_fmt(t) for t in row) for row in batch.points)
    _emit("\n".join(lines) + "\n", args.out)

    meta = {
        "model": model.name,
        "seed": batch.seed,
        "rng_algorithm": batch.rng_algorithm,
        "n": int(args.n),
    }
    if isinstance(model, EllipticalCopula):
        meta["gamma"] = model.gamma
    if not args.no_timestamp:
        meta["timestamp"] = _dt.datetime.now(_dt.timezone.utc).isoformat()
    with open(args.out + ".meta.json", "w", newline="\n") as handle:
        handle.write(json.dumps(meta, indent=2) + "\n")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.seed is None:
        raise CliConfigError("--seed is required for verify")
    kwargs: dict = {
        "seed": args.seed,
        "tol_scale": args.tol_scale,
        "include_timestamp": not args.no_timestamp,
    }
    if args.n is not None:
        kwargs["n_samples"] = max(args.n, 1000)
        kwargs["mc_n"] = max(args.n, 1000)
    if args.rects is not None:
        kwargs["rect_count"] = max(args.rects, 1)
    if args.abs_tol is not None:
        kwargs["quadrature"] = QuadratureSpec(abs_tol=args.abs_tol)
    report = verify_suite(VerifyConfig(**kwargs))
    _emit(report.to_json(), args.out)
    for check in report.checks:
        status = "PASS" if check.passed else "FAIL"
        print(f"{status} {check.name} [{check.model}]", file=sys.stderr)
    print(
        f"{'PASS' if report.global_pass else 'FAIL'}: "
        f"{len(report.checks) - len(report.failures())}/{len(report.checks)} checks passed",
        file=sys.stderr,
    )
    return EXIT_OK if report.global_pass else EXIT_VERIFY_FAILED


def cmd_caparea(args: argparse.Namespace) -> int:
    area = cap_intersection_area(args.r1, args.r2, args.d)
    print(f"{area:.15g}")
    return EXIT_OK


def _add_model_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument(
        "--model",
        required=True,
        choices=("circular", "spherical", "elliptical", "nonlinear"),
        help="copula model",
    )
    p.add_argument(
        "--gamma",
        default=None,
        help="skew angle in radians for the elliptical model; accepts decimals "
        "or the literals pi/4, pi/8, -pi/8, -pi/4",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ballcop",
        description="Closed-form disk/ball/sphere copulas: grid evaluation, "
        "sampling, cap areas and a verification suite.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a quantity on a grid")
    _add_model_flags(p_eval)
    p_eval.add_argument(
        "--quantity", required=True, choices=("pdf", "cdf", "survival")
    )
    p_eval.add_argument("--grid", type=int, default=101, help="points per axis")
    p_eval.add_argument("--format", choices=("csv", "json"), default="csv")
    p_eval.add_argument("--out", default=None, help="output path (default stdout)")
    p_eval.set_defaults(func=cmd_eval)

    p_sample = sub.add_parser("sample", help="draw reproducible samples")
    _add_model_flags(p_sample)
    p_sample.add_argument("--n", type=int, default=None, help="number of samples")
    p_sample.add_argument("--seed", type=int, default=None, help="RNG seed (required)")
    p_sample.add_argument("--out", default=None, help="CSV output path (required)")
    p_sample.add_argument(
        "--no-timestamp",
        action="store_true",
        help="omit the timestamp from the metadata sidecar",
    )
    p_sample.set_defaults(func=cmd_sample)

    p_verify = sub.add_parser("verify", help="run the verification suite")
    p_verify.add_argument("--seed", type=int, default=None, help="master seed (required)")
    p_verify.add_argument("--n", type=int, default=None, help="samples per model")
    p_verify.add_argument("--rects", type=int, default=None, help="rectangles per model")
    p_verify.add_argument(
        "--tol-scale", type=float, default=1.0, help="scale all check tolerances"
    )
    p_verify.add_argument(
        "--abs-tol", type=float, default=None, help="quadrature absolute tolerance"
    )
    p_verify.add_argument("--out", default=None, help="report path (default stdout)")
    p_verify.add_argument(
        "--no-timestamp", action="store_true", help="omit the report timestamp"
    )
    p_verify.set_defaults(func=cmd_verify)

    p_cap = sub.add_parser(
        "caparea", help="area of the intersection of two spherical caps"
    )
    p_cap.add_argument("r1", type=float, help="angular radius of the first cap")
    p_cap.add_argument("r2", type=float, help="angular radius of the second cap")
    p_cap.add_argument("d", type=float, help="angular distance between cap centers")
    p_cap.set_defaults(func=cmd_caparea)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else int(exc.code)
    try:
        return args.func(args)
    except CliConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except BallCopulasError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
