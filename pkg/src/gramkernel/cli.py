"""Command-line surface: kernels, condition tables, variances, polynomials,
plot data, and the self-verification report, as text, CSV, or JSON.

Exact rationals are serialized as ``p/q`` strings; pi-dependent exact values
as canonical ``q*pi^m`` sums; decimals are rendered from the exact values at
``--precision-bits`` (default 256) and never feed back into any exact field.
Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .approx import (
    eval_polynomial,
    error_variance,
    function_moments,
    project,
    target_by_name,
    target_value,
    taylor_comparator,
    TARGETS,
)
from .checks import run_checks
from .conditioning import condition_table
from .exactscalar import (
    DEFAULT_PRECISION_BITS,
    MIN_PRECISION_BITS,
    PiLaurent,
    decimal_str,
    mpf_decimal_str,
)
from .families import FAMILIES, family_by_name
from .kernelbuild import build_kernel

SIG_DIGITS = 17


def exact_str(value: PiLaurent | Fraction) -> str:
    """Canonical exact serialization: 'p/q' for rationals, pi-sums otherwise."""
    if isinstance(value, PiLaurent):
        if value.is_rational():
            return str(value.constant_value())
        return str(value)
    return str(Fraction(value))


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def _precision(text: str) -> int:
    value = int(text)
    if value < MIN_PRECISION_BITS:
        raise argparse.ArgumentTypeError(
            f"precision-bits must be >= {MIN_PRECISION_BITS}, got {text}"
        )
    return value


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_text(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def cmd_kernel(args) -> int:
    family = family_by_name(args.family)
    kernel = build_kernel(family, args.size)
    cells = [[str(x) for x in row] for row in kernel.entries]
    if args.format == "json":
        payload = {
            "family": family.name,
            "size": kernel.n,
            "grade": kernel.sqrtpi_power,
            "data": cells,
        }
        _emit(args, _json_text(payload))
    elif args.format == "csv":
        header = [f"c{j + 1}" for j in range(kernel.n)] + ["grade"]
        rows = [cells[i] + [str(kernel.sqrtpi_power)] for i in range(kernel.n)]
        _emit(args, _csv_text(header, rows))
    else:
        lines = [f"family={family.name} size={kernel.n} grade={kernel.sqrtpi_power}"]
        width = max(len(c) for row in cells for c in row)
        lines += ["  ".join(c.rjust(width) for c in row) for row in cells]
        _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_cond(args) -> int:
    family = family_by_name(args.family)
    report = condition_table(family, args.max_size, SIG_DIGITS)
    if args.format == "json":
        payload = {
            "family": family.name,
            "sizes": [r.size for r in report.rows],
            "grade": 0,
            "data": [
                {
                    "size": r.size,
                    "kappa_exact": str(r.kappa_exact),
                    "kappa_decimal": r.kappa_decimal,
                }
                for r in report.rows
            ],
        }
        _emit(args, _json_text(payload))
    elif args.format == "csv":
        rows = [[str(r.size), str(r.kappa_exact), r.kappa_decimal] for r in report.rows]
        _emit(args, _csv_text(["size", "kappa_exact", "kappa_decimal"], rows))
    else:
        lines = [f"family={family.name}", "size  kappa"]
        lines += [f"{r.size:>4}  {r.kappa_decimal}  (= {r.kappa_exact})" for r in report.rows]
        _emit(args, "\n".join(lines) + "\n")
    return 0


def _variance_rows(target, max_size: int, precision_bits: int):
    rows = []
    for size in range(1, max_size + 1):
        kernel = build_kernel(target.natural_family, size)
        estimate = project(kernel, function_moments(target, size))
        taylor = taylor_comparator(target, size)
        est_exact, est_num = error_variance(target, estimate, precision_bits)
        tay_exact, tay_num = error_variance(target, taylor, precision_bits)
        rows.append((size, tay_exact, tay_num, est_exact, est_num))
    return rows


def cmd_variance(args) -> int:
    target = target_by_name(args.target)
    rows = _variance_rows(target, args.max_size, args.precision_bits)
    exact_cols = target.name == "exp-neg"  # pure rationals, worth emitting
    if args.format == "json":
        data = []
        for size, tay_e, tay_n, est_e, est_n in rows:
            entry = {
                "size": size,
                "taylor": mpf_decimal_str(tay_n, SIG_DIGITS),
                "estimate": mpf_decimal_str(est_n, SIG_DIGITS),
            }
            if exact_cols:
                entry["taylor_exact"] = exact_str(tay_e)
                entry["estimate_exact"] = exact_str(est_e)
            data.append(entry)
        payload = {
            "target": target.name,
            "sizes": [r[0] for r in rows],
            "grade": 0,
            "data": data,
        }
        _emit(args, _json_text(payload))
    elif args.format == "csv":
        header = ["size", "taylor", "estimate"]
        if exact_cols:
            header += ["taylor_exact", "estimate_exact"]
        out_rows = []
        for size, tay_e, tay_n, est_e, est_n in rows:
            row = [str(size), mpf_decimal_str(tay_n, SIG_DIGITS), mpf_decimal_str(est_n, SIG_DIGITS)]
            if exact_cols:
                row += [exact_str(tay_e), exact_str(est_e)]
            out_rows.append(row)
        _emit(args, _csv_text(header, out_rows))
    else:
        lines = [f"target={target.name}", "size  taylor_variance  estimate_variance"]
        for size, tay_e, tay_n, est_e, est_n in rows:
            extra = f"  (exact {exact_str(tay_e)}, {exact_str(est_e)})" if exact_cols else ""
            lines.append(
                f"{size:>4}  {mpf_decimal_str(tay_n, SIG_DIGITS)}  "
                f"{mpf_decimal_str(est_n, SIG_DIGITS)}{extra}"
            )
        _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_project(args) -> int:
    target = target_by_name(args.target)
    family = target.natural_family
    kernel = build_kernel(family, args.size)
    estimate = project(kernel, function_moments(target, args.size))
    taylor = taylor_comparator(target, args.size)

    by_power: dict[int, list[str | None]] = {}
    for idx, coeff in enumerate(estimate.coefficients):
        by_power.setdefault(family.basis_power(idx + 1), [None, None])[0] = exact_str(coeff)
    for idx, coeff in enumerate(taylor.coefficients):
        by_power.setdefault(family.basis_power(idx + 1), [None, None])[1] = exact_str(coeff)
    powers = sorted(by_power)

    if args.format == "json":
        payload = {
            "target": target.name,
            "size": args.size,
            "grade": 0,
            "data": [
                {
                    "power": p,
                    "estimate": by_power[p][0],
                    "taylor": by_power[p][1],
                }
                for p in powers
            ],
        }
        _emit(args, _json_text(payload))
    elif args.format == "csv":
        rows = [
            [str(p), by_power[p][0] or "", by_power[p][1] or ""] for p in powers
        ]
        _emit(args, _csv_text(["power", "estimate", "taylor"], rows))
    else:
        lines = [f"target={target.name} size={args.size}"]
        for p in powers:
            est, tay = by_power[p]
            lines.append(f"x^{p}: estimate={est if est is not None else '-'}"
                         f"  taylor={tay if tay is not None else '-'}")
        _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_plotdata(args) -> int:
    target = target_by_name(args.target)
    xmin = Fraction(args.xmin)
    xmax = Fraction(args.xmax)
    if not xmin < xmax:
        raise ValueError(f"xmin must be < xmax, got {xmin} >= {xmax}")
    family = target.natural_family
    kernel = build_kernel(family, args.size)
    estimate = project(kernel, function_moments(target, args.size))
    taylor = taylor_comparator(target, args.size)

    rows = []
    step = (xmax - xmin) / (args.samples - 1)
    for i in range(args.samples):
        x = xmin + i * step
        fx = target_value(target, x, args.precision_bits)
        ex = eval_polynomial(estimate, x, args.precision_bits)
        tx = eval_polynomial(taylor, x, args.precision_bits)
        rows.append(
            [
                decimal_str(x, SIG_DIGITS),
                mpf_decimal_str(fx, SIG_DIGITS),
                mpf_decimal_str(ex, SIG_DIGITS),
                mpf_decimal_str(tx, SIG_DIGITS),
            ]
        )
    _emit(args, _csv_text(["x", "f", "estimate", "taylor"], rows))
    return 0


def cmd_verify(args) -> int:
    results = run_checks(args.max_size, inject_corruption=args.inject_corruption)
    failed = [r for r in results if not r.passed]
    if args.format == "json":
        payload = {
            "max_size": args.max_size,
            "passed": len(results) - len(failed),
            "failed": len(failed),
            "data": [
                {
                    "check": r.name,
                    "family": r.family,
                    "size": r.size,
                    "passed": r.passed,
                }
                for r in results
            ],
        }
        _emit(args, _json_text(payload))
    elif args.format == "csv":
        rows = [[r.name, r.family, str(r.size), "pass" if r.passed else "FAIL"] for r in results]
        _emit(args, _csv_text(["check", "family", "size", "result"], rows))
    else:
        lines = []
        for r in results:
            status = "pass" if r.passed else "FAIL"
            lines.append(f"{status}  {r.name}  family={r.family}  size={r.size}")
        lines.append(
            f"{len(results) - len(failed)} passed, {len(failed)} failed "
            f"(families x sizes 1..{args.max_size})"
        )
        _emit(args, "\n".join(lines) + "\n")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gramkernel",
        description="Exact reproducing-kernel tables over the classical weighted domains.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--format", choices=("text", "csv", "json"), default="text")
        p.add_argument("--precision-bits", type=_precision, default=DEFAULT_PRECISION_BITS)
        p.add_argument("--out", metavar="PATH", default=None)

    p_kernel = sub.add_parser("kernel", help="exact kernel matrix B = G^-1")
    p_kernel.add_argument("--family", choices=sorted(FAMILIES), required=True)
    p_kernel.add_argument("--size", type=_positive_int, required=True)
    add_common(p_kernel)
    p_kernel.set_defaults(func=cmd_kernel)

    p_cond = sub.add_parser("cond", help="infinity-norm condition numbers")
    p_cond.add_argument("--family", choices=sorted(FAMILIES), required=True)
    p_cond.add_argument("--max-size", type=_positive_int, required=True)
    add_common(p_cond)
    p_cond.set_defaults(func=cmd_cond)

    p_var = sub.add_parser("variance", help="error variances: Taylor vs kernel estimate")
    p_var.add_argument("--target", choices=sorted(TARGETS), required=True)
    p_var.add_argument("--max-size", type=_positive_int, required=True)
    add_common(p_var)
    p_var.set_defaults(func=cmd_variance)

    p_proj = sub.add_parser("project", help="estimate and Taylor coefficients")
    p_proj.add_argument("--target", choices=sorted(TARGETS), required=True)
    p_proj.add_argument("--size", type=_positive_int, required=True)
    add_common(p_proj)
    p_proj.set_defaults(func=cmd_project)

    p_plot = sub.add_parser("plotdata", help="CSV samples of f, estimate, and Taylor")
    p_plot.add_argument("--target", choices=sorted(TARGETS), required=True)
    p_plot.add_argument("--size", type=_positive_int, required=True)
    p_plot.add_argument("--xmin", default="0")
    p_plot.add_argument("--xmax", default="10")
    p_plot.add_argument("--samples", type=int, default=512)
    p_plot.add_argument("--precision-bits", type=_precision, default=DEFAULT_PRECISION_BITS)
    p_plot.add_argument("--out", metavar="PATH", default=None)
    p_plot.set_defaults(func=cmd_plotdata)

    p_verify = sub.add_parser("verify", help="run the exact self-verification suites")
    p_verify.add_argument("--max-size", type=_positive_int, required=True)
    p_verify.add_argument(
        "--inject-corruption",
        action="store_true",
        help="test hook: corrupt one kernel entry so the checks must fail",
    )
    add_common(p_verify)
    p_verify.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "samples", None) is not None and args.samples < 2:
        parser.error("--samples must be >= 2")
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError) as exc:
        parser.exit(2, f"error: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())
