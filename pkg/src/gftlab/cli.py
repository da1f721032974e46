"""Command-line front end.

Subcommands build members, run membership and theorem checks, emit boundary
curves and conjecture-scan tables. Angles are taken in radians; the literal
``pi`` (or ``-pi``) is accepted wherever an angle is expected. Reports
default to JSON, curves and scan tables to CSV; ``--format`` overrides
either. Exit codes: 0 verified/success, 1 a verification failed, 2 usage or
validation error (with a one-line diagnostic naming the violated invariant).

All output is a pure function of argv: seeded generators pin members and
scans are elementwise numpy, so identical invocations produce byte-identical
bytes regardless of thread settings.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import analysis, gft_ops, powser, regions
from .analysis import GridSpec, VerificationReport

__all__ = ["main", "build_parser"]


def _parse_angle(text: str) -> float:
    t = text.strip()
    if t == "pi":
        return math.pi
    if t == "-pi":
        return -math.pi
    try:
        return float(t)
    except ValueError:
        raise ValueError(f"not an angle in radians (or 'pi'): {text!r}")


def _parse_grid(text: str) -> tuple[int, int]:
    parts = text.lower().split("x")
    if len(parts) != 2:
        raise ValueError(f"grid must look like <radii>x<angles>, got {text!r}")
    try:
        radii, angles = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"grid must look like <radii>x<angles>, got {text!r}")
    return radii, angles


def _grid_from_args(args: argparse.Namespace) -> GridSpec:
    radii, angles = _parse_grid(args.grid)
    return GridSpec(num_radii=radii, num_angles=angles, r_max=args.rmax)


def _fmt(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.17g}"
    if value is None:
        return ""
    return str(value)


def _flatten(payload: dict, prefix: str = "") -> dict:
    flat: dict = {}
    for key, value in payload.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(_flatten(value, f"{name}_"))
        elif isinstance(value, (list, tuple)):
            for i, item in enumerate(value):
                flat[f"{name}_{i}"] = item
        else:
            flat[name] = value
    return flat


def _render(payload: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2, allow_nan=False) + "\n"
    flat = _flatten(payload)
    header = ",".join(flat)
    row = ",".join(_fmt(v) for v in flat.values())
    return header + "\n" + row + "\n"


def _emit(args: argparse.Namespace, text: str) -> None:
    out = getattr(args, "out", None)
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _load_input(args: argparse.Namespace) -> powser.TaylorSeries:
    path = Path(args.infile)
    if not path.exists():
        raise ValueError(f"series file not found: {path}")
    return powser.load_series(path)


def _r_params(args: argparse.Namespace) -> gft_ops.RParams:
    return gft_ops.RParams(_parse_angle(args.alpha), args.beta)


def _l_params(args: argparse.Namespace) -> gft_ops.LParams:
    return gft_ops.LParams(_parse_angle(args.alpha), args.b)


# ---------------------------------------------------------------------------
# Handlers


def _cmd_gen_extreme(args: argparse.Namespace) -> int:
    params = _r_params(args)
    x = gft_ops.cis(_parse_angle(args.x))
    series = gft_ops.extreme_function(x, params, args.order)
    _emit(args, powser.series_to_json(series) + "\n")
    return 0


def _cmd_gen_random_r(args: argparse.Namespace) -> int:
    params = _r_params(args)
    series = gft_ops.random_member_R(params, args.atoms, args.seed, args.order)
    _emit(args, powser.series_to_json(series) + "\n")
    return 0


def _cmd_gen_random_l(args: argparse.Namespace) -> int:
    params = _l_params(args)
    spec = gft_ops.seeded_schur_specs(1, args.seed)[0]
    series = gft_ops.random_member_L(params, spec, args.order)
    _emit(args, powser.series_to_json(series) + "\n")
    return 0


def _cmd_apply_op(args: argparse.Namespace) -> int:
    series = _load_input(args)
    image = gft_ops.apply_L(series, _parse_angle(args.alpha))
    _emit(args, powser.series_to_json(image) + "\n")
    return 0


def _check_result(args: argparse.Namespace, report: VerificationReport) -> int:
    _emit(args, _render(report.to_json_dict(), args.format or "json"))
    return 0 if report.passed else 1


def _cmd_check_r(args: argparse.Namespace) -> int:
    report = analysis.check_membership_R(
        _load_input(args), _r_params(args), _grid_from_args(args)
    )
    return _check_result(args, report)


def _cmd_check_l(args: argparse.Namespace) -> int:
    report = analysis.check_membership_L(
        _load_input(args), _l_params(args), _grid_from_args(args)
    )
    return _check_result(args, report)


def _sweep_summary(
    theorem_id: str,
    params: gft_ops.RParams | gft_ops.LParams,
    args: argparse.Namespace,
    reports: list[VerificationReport],
) -> dict:
    slack = [r.worst_margin + r.truncation_tail for r in reports]
    worst = min(range(len(reports)), key=lambda i: slack[i])
    ref = reports[worst]
    if isinstance(params, gft_ops.RParams):
        params_dict = {"alpha": params.alpha, "beta": params.beta}
    else:
        params_dict = {"alpha": params.alpha, "b": params.b}
    return {
        "theorem_id": theorem_id,
        "params": params_dict,
        "order": args.order,
        "seed": args.seed,
        "members": args.members,
        "grid": ref.to_json_dict()["grid"],
        "passed": all(r.passed for r in reports),
        "worst_member": worst,
        "worst_margin": ref.worst_margin,
        "worst_point": [ref.worst_point.real, ref.worst_point.imag],
        "truncation_tail": ref.truncation_tail,
    }


def _cmd_verify(args: argparse.Namespace) -> int:
    theorem = args.theorem
    fmt = args.format or "json"
    if args.points is None:
        args.points = 1024 if theorem == "h-monotone" else 256
    if theorem in ("re-fprime", "f-over-z"):
        params = _r_params(args)
        grid = _grid_from_args(args)
        members = gft_ops.seeded_members_R(params, args.members, args.seed, args.order)
        check = (
            analysis.verify_theorem_re_fprime
            if theorem == "re-fprime"
            else analysis.verify_theorem_f_over_z
        )
        reports = [check(params, m, grid) for m in members]
        payload = _sweep_summary(theorem, params, args, reports)
    elif theorem in ("strip-fprime", "radial-bounds", "arg-bound"):
        params = _l_params(args)
        members = gft_ops.seeded_members_L(params, args.members, args.seed, args.order)
        if theorem == "strip-fprime":
            grid = _grid_from_args(args)
            reports = [
                analysis.verify_theorem_strip_fprime(params, m, grid) for m in members
            ]
        elif theorem == "radial-bounds":
            reports = [
                analysis.verify_theorem_radial_bounds(params, m, num_angles=args.points)
                for m in members
            ]
        else:
            reports = [
                analysis.verify_theorem_arg_bound(params, m, num_angles=args.points)
                for m in members
            ]
        payload = _sweep_summary(theorem, params, args, reports)
    elif theorem == "strip-lemma":
        params = _l_params(args)
        radii, angles = _parse_grid(args.grid)
        report = analysis.verify_strip_lemma(params, GridSpec(radii, angles, args.rmax))
        payload = report.to_json_dict()
        reports = [report]
    elif theorem == "coeff-bounds":
        params = _r_params(args)
        report = analysis.verify_coeff_bounds(params, args.order)
        payload = report.to_json_dict()
        reports = [report]
    elif theorem == "h-monotone":
        report = analysis.verify_h_monotone(args.b, args.points)
        payload = report.to_json_dict()
        reports = [report]
    else:
        raise ValueError(f"unknown theorem id: {theorem!r}")
    _emit(args, _render(payload, fmt))
    return 0 if all(r.passed for r in reports) else 1


def _cmd_radius_s2(args: argparse.Namespace) -> int:
    value = analysis.radius_s2_closed_form(_r_params(args))
    _emit(args, str(value) + "\n")
    return 0


def _cmd_estimate_radius(args: argparse.Namespace) -> int:
    estimate = analysis.estimate_univalence_radius(_load_input(args), args.points)
    payload = {
        "radius": estimate.radius,
        "bracket_width": estimate.bracket_width,
        "criterion": estimate.criterion,
    }
    _emit(args, _render(payload, args.format or "json"))
    return 0


def _cmd_boundary_curve(args: argparse.Namespace) -> int:
    params = gft_ops.LParams(0.0, args.b)
    fmt = args.format or "csv"
    if fmt == "csv":
        _emit(args, "\n".join(regions.curve_csv_lines(params, args.points)) + "\n")
    else:
        angles = regions.boundary_angles(args.points)
        points = regions.phi_boundary_curve(params, args.points)
        payload = {
            "b": args.b,
            "points": [[float(t), w.real, w.imag] for t, w in zip(angles, points)],
        }
        _emit(args, json.dumps(payload, indent=2, allow_nan=False) + "\n")
    return 0


def _cmd_conjecture_scan(args: argparse.Namespace) -> int:
    params = _r_params(args)
    rows = analysis.conjecture_scan(
        params, args.kmax, args.members, args.seed, args.order, args.points
    )
    fmt = args.format or "csv"
    if fmt == "csv":
        _emit(args, "\n".join(analysis.scan_csv_lines(rows)) + "\n")
    else:
        payload = {
            "rows": [
                {
                    "k": r.k,
                    "member_id": r.member_id,
                    "alpha": r.alpha,
                    "beta": r.beta,
                    "estimated_radius": r.estimated_radius,
                    "closed_form_radius": r.closed_form_radius,
                    "holds": r.holds,
                }
                for r in rows
            ]
        }
        _emit(args, json.dumps(payload, indent=2, allow_nan=False) + "\n")
    return 0


# ---------------------------------------------------------------------------
# Parser


def _add_shared(parser: argparse.ArgumentParser, *names: str) -> None:
    if "alpha" in names:
        parser.add_argument("--alpha", default="0", help="angle in radians, or 'pi'")
    if "beta" in names:
        parser.add_argument("--beta", type=float, default=0.0, help="level in [0, 1)")
    if "b" in names:
        parser.add_argument("--b", type=float, default=1.0, help="disc parameter > 1/2")
    if "order" in names:
        parser.add_argument("--order", type=int, default=64, help="truncation order")
    if "grid" in names:
        parser.add_argument("--grid", default="64x256", help="<radii>x<angles>")
        parser.add_argument("--rmax", type=float, default=0.95, help="outer radius in (0,1)")
    if "seed" in names:
        parser.add_argument("--seed", type=int, default=0)
    if "members" in names:
        parser.add_argument("--members", type=int, default=20)
    if "infile" in names:
        parser.add_argument("--in", dest="infile", required=True, help="series JSON file")
    if "out" in names:
        parser.add_argument("--out", default=None, help="write output here instead of stdout")
    if "format" in names:
        parser.add_argument("--format", choices=("json", "csv"), default=None)
    if "points" in names:
        parser.add_argument("--points", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gftlab",
        description="Generators and desk-scale theorem verification for two "
        "classes of normalized analytic functions on the unit disc.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-extreme", help="extreme member of the half-plane class")
    _add_shared(p, "alpha", "beta", "order", "out")
    p.add_argument("--x", default="0", help="circle position of the extreme point, in radians or 'pi'")
    p.set_defaults(handler=_cmd_gen_extreme)

    p = sub.add_parser("gen-random-r", help="seeded half-plane class member")
    _add_shared(p, "alpha", "beta", "order", "seed", "out")
    p.add_argument("--atoms", type=int, default=4, help="number of extreme points combined")
    p.set_defaults(handler=_cmd_gen_random_r)

    p = sub.add_parser("gen-random-l", help="seeded disc-class member")
    _add_shared(p, "alpha", "b", "order", "seed", "out")
    p.set_defaults(handler=_cmd_gen_random_l)

    p = sub.add_parser("apply-op", help="apply the differential operator to a series")
    _add_shared(p, "alpha", "infile", "out")
    p.set_defaults(handler=_cmd_apply_op)

    p = sub.add_parser("check-r", help="half-plane membership check")
    _add_shared(p, "alpha", "beta", "grid", "infile", "out", "format")
    p.set_defaults(handler=_cmd_check_r)

    p = sub.add_parser("check-l", help="disc membership check")
    _add_shared(p, "alpha", "b", "grid", "infile", "out", "format")
    p.set_defaults(handler=_cmd_check_l)

    p = sub.add_parser("verify", help="run a theorem verification")
    p.add_argument(
        "theorem",
        choices=(
            "re-fprime",
            "f-over-z",
            "strip-fprime",
            "radial-bounds",
            "arg-bound",
            "strip-lemma",
            "coeff-bounds",
            "h-monotone",
        ),
    )
    _add_shared(p, "alpha", "beta", "b", "order", "grid", "seed", "members", "out", "format", "points")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("radius-s2", help="closed-form univalence radius of second sections")
    _add_shared(p, "alpha", "beta", "out")
    p.set_defaults(handler=_cmd_radius_s2)

    p = sub.add_parser("estimate-radius", help="bisection estimate of the univalence radius")
    _add_shared(p, "infile", "out", "format", "points")
    p.set_defaults(handler=_cmd_estimate_radius)

    p = sub.add_parser("boundary-curve", help="boundary curve of the Moebius disc map")
    _add_shared(p, "b", "out", "format", "points")
    p.set_defaults(handler=_cmd_boundary_curve)

    p = sub.add_parser("conjecture-scan", help="section univalence-radius sweep")
    _add_shared(p, "alpha", "beta", "order", "seed", "members", "out", "format", "points")
    p.add_argument("--kmax", type=int, default=6, help="largest section order scanned")
    p.set_defaults(handler=_cmd_conjecture_scan)

    return parser


_POINT_DEFAULTS = {
    "estimate-radius": 1024,
    "boundary-curve": 512,
    "conjecture-scan": 1024,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "points", None) is None and args.command in _POINT_DEFAULTS:
        args.points = _POINT_DEFAULTS[args.command]
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"gftlab: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
