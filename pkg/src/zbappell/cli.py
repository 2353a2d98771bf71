"""Command-line front end: point reports, grid scans, verification suites.

Exit codes follow the usage/data/IO split: 0 success (and, for approx/grid,
all certification flags true), 1 a bound or property check failed, 2 an
evaluation error, 64 usage error, 65 domain error in elliptic inputs, 74 I/O
error.  Output is byte-deterministic for identical invocations: floats are
printed with repr (shortest round-trip form) and randomized suites are
seeded.
"""

import argparse
import json
import math
import os
import sys

from .appell import AppellParams, elliptic_f, f1_eval
from .approx import Params, _approx_bundle, f_zb, g_approx, remainder_bound
from .controls import QuadratureControl, SeriesControl
from .errors import DomainError
from .verify import run_suite

_SUITE_CHOICES = ("bounds", "lemma", "symmetry", "reductions", "elliptic", "all")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(64)


def _tol_type(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not (math.isfinite(value) and value > 0.0):
        raise argparse.ArgumentTypeError(f"tolerance must be finite and > 0, got {text}")
    return value


def _steps_type(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 2:
        raise argparse.ArgumentTypeError(f"needs at least 2 steps per axis, got {value}")
    return value


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _emit_record(record: dict, method: str, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({**record, "method": method}, separators=(",", ":")) + "\n"
    header = ",".join(record)
    row = ",".join(_fmt(v) for v in record.values())
    return header + "\n" + row + "\n"


def _emit_rows(rows: list[dict], methods: list[str], fmt: str) -> str:
    if fmt == "json":
        return "".join(json.dumps({**r, "method": m}, separators=(",", ":")) + "\n"
                       for r, m in zip(rows, methods))
    header = ",".join(rows[0])
    lines = [header]
    lines.extend(",".join(_fmt(v) for v in r.values()) for r in rows)
    return "\n".join(lines) + "\n"


def _write(text: str, out_path):
    if out_path is None:
        sys.stdout.write(text)
        return
    with open(out_path, "w") as handle:
        handle.write(text)


def _controls(args):
    tol = getattr(args, "tol", None)
    if tol is None:
        env = os.environ.get("ZB_TOL")
        if env is not None:
            try:
                tol = float(env)
            except ValueError:
                raise DomainError(f"ZB_TOL is not a number: {env!r}")
            if not (math.isfinite(tol) and tol > 0.0):
                raise DomainError(f"ZB_TOL must be finite and > 0, got {env}")
    if tol is None:
        return SeriesControl(), QuadratureControl()
    return SeriesControl(rel_tol=tol), QuadratureControl(rel_tol=max(tol, 1e-14))


def _cmd_approx(args) -> int:
    ctl, qctl = _controls(args)
    p = Params(args.a, args.b1, args.b2)
    report, parts = _approx_bundle(p, args.x, args.y, ctl, qctl)
    record = {
        "x": args.x, "y": args.y,
        "f": report.f_value, "g": report.g_value,
        "remainder": report.remainder,
        "remainder_integral": report.remainder_integral,
        "bound": report.bound, "r": report.rhombic_r,
        "within_bound": report.within_bound, "positive": report.positive,
    }
    _write(_emit_record(record, parts["f"].method, args.format), args.out)
    return 0 if (report.within_bound and report.positive) else 1


def _cmd_grid(args) -> int:
    for lo, hi, tag in ((args.xmin, args.xmax, "x"), (args.ymin, args.ymax, "y")):
        if not (0.0 <= lo < hi < 1.0):
            raise DomainError(f"grid needs 0 <= {tag}min < {tag}max < 1")
    ctl, qctl = _controls(args)
    p = Params(args.a, args.b1, args.b2)
    rows = []
    methods = []
    all_within = True
    for i in range(args.steps):
        x = args.xmin + (args.xmax - args.xmin) * i / (args.steps - 1)
        for j in range(args.steps):
            y = args.ymin + (args.ymax - args.ymin) * j / (args.steps - 1)
            f_res = f_zb(p, x, y, ctl, qctl)
            g_res = g_approx(p, x, y, ctl, qctl)
            remainder = f_res.value - g_res.value
            bound = remainder_bound(p, x, y)
            noise = 10.0 * (f_res.est_error + g_res.est_error)
            within = -noise < remainder < bound + noise
            all_within = all_within and within
            rows.append({
                "x": x, "y": y, "f": f_res.value, "g": g_res.value,
                "remainder": remainder, "bound": bound,
                "r": (1.0 - x) * p.b1 + (1.0 - y) * p.b2,
                "within_bound": within,
            })
            methods.append(f_res.method)
    _write(_emit_rows(rows, methods, args.format), args.out)
    return 0 if all_within else 1


def _cmd_verify(args) -> int:
    results = run_suite(args.suite, args.samples, args.seed)
    lines = []
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        lines.append(f"{status} {res.name}: samples={res.samples} "
                     f"failures={res.failures} worst={res.worst:.3e}")
    n_fail = sum(1 for r in results if not r.passed)
    lines.append(f"{len(results) - n_fail}/{len(results)} properties passed")
    _write("\n".join(lines) + "\n", args.out)
    return 0 if n_fail == 0 else 1


def _cmd_elliptic(args) -> int:
    ctl, qctl = _controls(args)
    if not (0.0 <= args.lam < 1.0 and 0.0 <= args.k <= 1.0):
        raise DomainError(f"requires 0 <= lambda < 1 and 0 <= k <= 1, "
                          f"got ({args.lam!r}, {args.k!r})")
    res = elliptic_f(args.lam, args.k, ctl, qctl)
    cg = math.log(4.0 / (math.sqrt(1.0 - args.lam ** 2)
                         + math.sqrt(1.0 - args.k ** 2 * args.lam ** 2)))
    record = {
        "lambda": args.lam, "k": args.k,
        "f": res.value, "cg": cg, "diff": res.value - cg,
    }
    _write(_emit_record(record, res.method, args.format), args.out)
    return 0


def _cmd_eval_f1(args) -> int:
    ctl, qctl = _controls(args)
    p = AppellParams(args.alpha, args.beta1, args.beta2, args.gamma)
    res = f1_eval(p, args.x, args.y, ctl, qctl, method=args.method)
    record = {"x": args.x, "y": args.y, "value": res.value,
              "est_error": res.est_error}
    _write(_emit_record(record, res.method, args.format), args.out)
    return 0


def _add_common(sub):
    sub.add_argument("--format", choices=("csv", "json"), default="csv")
    sub.add_argument("--out", default=None, metavar="FILE")
    sub.add_argument("--tol", type=_tol_type, default=None,
                     help="relative tolerance override (default: ZB_TOL or built-in)")


def _add_params(sub):
    sub.add_argument("--a", type=float, required=True)
    sub.add_argument("--b1", type=float, required=True)
    sub.add_argument("--b2", type=float, required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="zb", description=__doc__.splitlines()[0])
    subs = parser.add_subparsers(dest="command", required=True,
                                 parser_class=_Parser)

    sub = subs.add_parser("approx", help="f, g, remainder and certificates at one point")
    _add_params(sub)
    sub.add_argument("--x", type=float, required=True)
    sub.add_argument("--y", type=float, required=True)
    _add_common(sub)
    sub.set_defaults(func=_cmd_approx)

    sub = subs.add_parser("grid", help="scan a rectangle, one report row per point")
    _add_params(sub)
    sub.add_argument("--xmin", type=float, default=0.05)
    sub.add_argument("--xmax", type=float, default=0.95)
    sub.add_argument("--ymin", type=float, default=0.05)
    sub.add_argument("--ymax", type=float, default=0.95)
    sub.add_argument("--steps", type=_steps_type, default=9)
    _add_common(sub)
    sub.set_defaults(func=_cmd_grid)

    sub = subs.add_parser("verify", help="run a named property suite")
    sub.add_argument("--suite", choices=_SUITE_CHOICES, required=True)
    sub.add_argument("--samples", type=int, default=250)
    sub.add_argument("--seed", type=int, default=42)
    sub.add_argument("--out", default=None, metavar="FILE")
    sub.set_defaults(func=_cmd_verify)

    sub = subs.add_parser("elliptic", help="incomplete elliptic integral and its "
                                           "closed-form corner approximation")
    sub.add_argument("--lambda", dest="lam", type=float, required=True)
    sub.add_argument("--k", type=float, required=True)
    _add_common(sub)
    sub.set_defaults(func=_cmd_elliptic)

    sub = subs.add_parser("eval-f1", help="raw F1 evaluation by a chosen route")
    sub.add_argument("--alpha", type=float, required=True)
    sub.add_argument("--beta1", type=float, required=True)
    sub.add_argument("--beta2", type=float, required=True)
    sub.add_argument("--gamma", type=float, required=True)
    sub.add_argument("--x", type=float, required=True)
    sub.add_argument("--y", type=float, required=True)
    sub.add_argument("--method", choices=("auto", "double", "single", "integral"),
                     default="auto")
    _add_common(sub)
    sub.set_defaults(func=_cmd_eval_f1)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except OSError as exc:
        sys.stderr.write(f"zb: i/o error: {exc}\n")
        return 74
    except (ValueError, ArithmeticError) as exc:
        sys.stderr.write(f"zb: {exc}\n")
        return 65 if args.command == "elliptic" else 2


if __name__ == "__main__":
    sys.exit(main())
