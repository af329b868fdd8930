"""Command-line front end.

Exit codes: 0 success, 2 malformed input, 3 failed certificate under
--strict, 4 non-converged inclusion solve.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import fixtures as fx
from . import serialize as ser
from .inclusion import solve_inclusion
from .metric import MetricSpace, excess, hausdorff
from .multifun import modulus_of_variation, variation_profile
from .selector import select_bv_left, select_bv_right, select_bv_two_sided, select_single_valued

EXIT_BAD_INPUT = 2
EXIT_CERT_FAIL = 3
EXIT_NO_CONVERGE = 4


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_BAD_INPUT):
        super().__init__(message)
        self.code = code


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read {path}: {exc}")


def _load_set(path: str, space_path: str | None):
    obj = _load_json(path)
    if space_path is not None:
        space = ser.space_from_json(_load_json(space_path))
    else:
        # infer: coordinate points of equal length -> Euclidean
        try:
            dim = len(obj[0])
        except TypeError:
            raise CliError(f"{path}: table points need an explicit --space file")
        space = MetricSpace.euclidean(dim)
    try:
        return ser.set_from_json(obj, space)
    except (ValueError, TypeError, KeyError, IndexError) as exc:
        raise CliError(f"{path}: {exc}")


def _write_or_print(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _cmd_excess(args) -> int:
    A = _load_set(args.a, args.space)
    B = _load_set(args.b, args.space)
    print(excess(A, B))
    print(excess(B, A))
    return 0


def _cmd_hausdorff(args) -> int:
    A = _load_set(args.a, args.space)
    B = _load_set(args.b, args.space)
    print(hausdorff(A, B))
    return 0


def _cmd_variation(args) -> int:
    try:
        F = ser.multifunction_from_json(_load_json(args.multifunction))
    except (ValueError, TypeError, KeyError) as exc:
        raise CliError(f"{args.multifunction}: {exc}")
    if args.range:
        lo, hi = args.range
        idx = F.grid.indices_in(lo, hi)
        F = F.restrict(idx)
    report = variation_profile(F, with_modulus=False)
    if args.modulus is not None:
        report.modulus = [modulus_of_variation(F, k) for k in range(1, args.modulus + 1)]
    if args.format == "csv":
        _write_or_print(ser.report_to_csv(F, report), args.out)
    else:
        _write_or_print(ser.dumps(ser.report_to_json(F, report)), args.out)
    return 0


def _cmd_select(args) -> int:
    try:
        F = ser.multifunction_from_json(_load_json(args.multifunction))
    except (ValueError, TypeError, KeyError) as exc:
        raise CliError(f"{args.multifunction}: {exc}")
    try:
        if args.single:
            x0 = json.loads(args.single)
            x0 = x0 if isinstance(x0, int) else tuple(x0)
            pts, cert = select_single_valued(F, args.t0, x0, args.direction)
            gamma = {"grid": list(F.grid.nodes), "points": [p if isinstance(p, int) else list(p) for p in pts]}
        else:
            X0 = ser.set_from_json(_load_json(args.seed), F.space)
            build = {
                "right": select_bv_right,
                "left": select_bv_left,
                "two_sided": select_bv_two_sided,
            }[args.direction]
            G, cert = build(F, args.t0, X0)
            gamma = ser.multifunction_to_json(G)
    except ValueError as exc:
        raise CliError(str(exc))
    payload = {"selector": gamma, "certificate": ser.certificate_to_json(cert)}
    _write_or_print(ser.dumps(payload), args.out)
    if args.strict and not cert.all_pass:
        raise CliError("certificate failed", EXIT_CERT_FAIL)
    return 0


def _cmd_solve_inclusion(args) -> int:
    obj = _load_json(args.problem)
    for key, val in (("tol", args.tol), ("max_iter", args.max_iter), ("quantization", args.quant)):
        if val is not None:
            obj[key] = val
    try:
        P = ser.problem_from_json(obj)
        sol = solve_inclusion(P)
    except (ValueError, TypeError, KeyError) as exc:
        raise CliError(f"{args.problem}: {exc}")
    _write_or_print(ser.dumps(ser.solution_to_json(sol)), args.out)
    if args.iterations_csv:
        Path(args.iterations_csv).write_text(ser.iterations_to_csv(sol))
    if not sol.converged:
        raise CliError("iteration did not converge", EXIT_NO_CONVERGE)
    return 0


def _parse_params(pairs: list[str]) -> dict:
    out = {}
    for pair in pairs:
        if "=" not in pair:
            raise CliError(f"fixture parameter {pair!r} is not KEY=VALUE")
        key, raw = pair.split("=", 1)
        try:
            val = json.loads(raw)
        except json.JSONDecodeError:
            raise CliError(f"fixture parameter {pair!r} has a non-numeric value")
        out[key] = val
    return out


def _cmd_fixtures(args) -> int:
    if args.action != "emit":
        raise CliError("only the 'emit' action is supported")
    try:
        fix = fx.make_fixture(args.name, **_parse_params(args.params))
    except (ValueError, TypeError) as exc:
        raise CliError(str(exc))
    payload: dict = {"name": fix.name, "expected": fix.expected}
    if fix.multifunction is not None:
        payload["multifunction"] = ser.multifunction_to_json(fix.multifunction)
    if fix.problem is not None:
        payload["problem"] = ser.problem_to_json(fix.problem, {"name": fix.name})
    _write_or_print(json.dumps(payload, indent=2, sort_keys=True, default=list), args.out)
    return 0


def _cmd_plot_data(args) -> int:
    obj = _load_json(args.trajectory)
    if "trajectory" in obj:
        obj = obj["trajectory"]
    try:
        F = ser.multifunction_from_json(obj)
    except (ValueError, TypeError, KeyError) as exc:
        raise CliError(f"{args.trajectory}: {exc}")
    _write_or_print(ser.points_to_csv(F), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bvselect", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("excess", help="print e(A,B) and e(B,A) for two set files")
    q.add_argument("a")
    q.add_argument("b")
    q.add_argument("--space", help="metric space JSON (default: Euclidean, inferred dim)")
    q.set_defaults(func=_cmd_excess)

    q = sub.add_parser("hausdorff", help="print the symmetric set distance")
    q.add_argument("a")
    q.add_argument("b")
    q.add_argument("--space")
    q.set_defaults(func=_cmd_hausdorff)

    q = sub.add_parser("variation", help="variation report for a multifunction file")
    q.add_argument("multifunction")
    q.add_argument("--range", nargs=2, type=float, metavar=("LO", "HI"))
    q.add_argument("--modulus", type=int, help="also report modulus values up to k")
    q.add_argument("--format", choices=("json", "csv"), default="json")
    q.add_argument("--out")
    q.set_defaults(func=_cmd_variation)

    q = sub.add_parser("select", help="build a bounded-variation selector + certificate")
    q.add_argument("multifunction")
    q.add_argument("--t0", type=float, required=True)
    q.add_argument("--seed", help="compact set JSON file used as the anchor seed")
    q.add_argument("--direction", choices=("right", "left", "two_sided"), default="right")
    q.add_argument("--single", help="JSON point; build a single-valued selector instead")
    q.add_argument("--strict", action="store_true")
    q.add_argument("--out")
    q.set_defaults(func=_cmd_select)

    q = sub.add_parser("solve-inclusion", help="iterate a problem file to a fixed trajectory")
    q.add_argument("problem")
    q.add_argument("--tol", type=float)
    q.add_argument("--max-iter", type=int)
    q.add_argument("--quant", type=float)
    q.add_argument("--iterations-csv")
    q.add_argument("--out")
    q.set_defaults(func=_cmd_solve_inclusion)

    q = sub.add_parser("fixtures", help="emit a named fixture with expected values")
    q.add_argument("action", choices=("emit",))
    q.add_argument("name")
    q.add_argument("params", nargs="*", metavar="KEY=VALUE")
    q.add_argument("--out")
    q.set_defaults(func=_cmd_fixtures)

    q = sub.add_parser("plot-data", help="per-node point CSV from a trajectory file")
    q.add_argument("trajectory")
    q.add_argument("--out")
    q.set_defaults(func=_cmd_plot_data)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "select" and not args.single and not args.seed:
        print("error: select needs --seed or --single", file=sys.stderr)
        return EXIT_BAD_INPUT
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
