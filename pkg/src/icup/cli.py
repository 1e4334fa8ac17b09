"""Command-line surface: rate / sweep / verify / gdof.

Output is UTF-8 CSV (header row mandatory) or JSON, with numbers printed at
12 significant digits so repeated runs are byte-identical.  Exit codes:
0 success, 2 usage, 3 precondition, 4 I/O.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from . import _kernels, gaps, gdof
from .channel import ChannelParams, PreconditionError

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PRECONDITION = 3
EXIT_IO = 4

SWEEP_COLUMNS = (
    "P", "a", "c12", "regime", "scheme",
    "achievable_bits", "upper_bits", "bound_label", "gap_bits",
)

SCHEME_CHOICES = ("auto", "TreatAsNoise", "UniversalPA", "FullCoopPA", "OptimalGamma")


def _fmt(x: float) -> str:
    return format(float(x), ".12g")


def _axis(args, name: str) -> list[float]:
    lo = getattr(args, f"{name}_min")
    hi = getattr(args, f"{name}_max")
    count = getattr(args, f"{name}_count")
    scale = getattr(args, f"{name}_scale")
    if count < 1 or hi < lo:
        raise ValueError(f"--{name}-min/--{name}-max/--{name}-count invalid")
    if count == 1:
        return [lo]
    if scale == "log":
        if lo <= 0.0:
            raise ValueError(f"log scale needs --{name}-min > 0")
        return [float(x) for x in np.logspace(math.log10(lo), math.log10(hi), count)]
    return [float(x) for x in np.linspace(lo, hi, count)]


def _write(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _report_row(report: gaps.RateReport) -> dict[str, str]:
    p = report.params
    return {
        "P": _fmt(p.p),
        "a": _fmt(p.a),
        "c12": _fmt(p.c12),
        "regime": report.regime.value,
        "scheme": report.scheme.value,
        "achievable_bits": _fmt(report.achievable),
        "upper_bits": _fmt(report.upper),
        "bound_label": report.bound_label,
        "gap_bits": _fmt(report.gap),
    }


def cmd_rate(args) -> int:
    params = ChannelParams(args.p, args.a, args.c12)
    report = gaps.gap_report(params, args.scheme)
    row = _report_row(report)
    if args.json:
        print(json.dumps(row, indent=2))
    else:
        print(f"P = {_fmt(params.p)}, a = {_fmt(params.a)}, C12 = {_fmt(params.c12)}")
        print(f"regime:          {report.regime.value}")
        print(f"scheme:          {report.scheme.value}")
        print(f"achievable_bits: {row['achievable_bits']}")
        print(f"upper_bits:      {row['upper_bits']} ({report.bound_label})")
        print(f"gap_bits:        {row['gap_bits']}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    ps = _axis(args, "p")
    aa = _axis(args, "a")
    cs = _axis(args, "c12")
    rows = []
    for p in ps:
        for a in aa:
            for c in cs:
                rows.append(_report_row(gaps.gap_report(ChannelParams(p, a, c), args.scheme)))
    if args.format == "json":
        text = json.dumps(rows, indent=2) + "\n"
    else:
        lines = [",".join(SWEEP_COLUMNS)]
        lines += [",".join(r[c] for c in SWEEP_COLUMNS) for r in rows]
        text = "\n".join(lines) + "\n"
    _write(args.output, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    suites = list(gaps._SUITE_FNS) if args.suite == "all" else [args.suite]
    total = 0
    for name in suites:
        if name == "gdof" and args.grid == "quick":
            grid = (np.round(np.arange(0.0, 3.01, 0.25), 10), (0.0, 0.5), 1e9)
        elif args.grid == "quick":
            grid = _quick_grid(name)
        else:
            grid = None
        checks = gaps.suite_checks(name, grid)
        tol = gaps._SUITE_TOL[name]
        bad = [c for c in checks if c.observed > c.claimed + tol]
        total += len(bad)
        worst = max(checks, key=lambda c: c.observed - c.claimed, default=None)
        if worst is None:
            print(f"{name}: no applicable points")
            continue
        print(
            f"{name}: {len(checks)} checks, max observed {_fmt(worst.observed)} "
            f"vs claimed {_fmt(worst.claimed)} ({worst.label}), "
            f"{len(bad)} violation(s)"
        )
    return EXIT_OK if total == 0 else 1


def _quick_grid(name: str):
    if name in ("theorem1", "appendix"):
        return gaps.weak_grid(10, 10)
    if name == "theorem2":
        return gaps.weak_grid(10, 10) + gaps.theorem2_case1_grid(10, 4)
    if name == "strong":
        return gaps.strong_grid(8, 8)
    if name == "noise-limited":
        return gaps.noise_limited_grid(8, 8)
    if name == "oracle":
        return gaps.oracle_grid(4, 4)
    return None


def cmd_gdof(args) -> int:
    points = gdof.gdof_curve(
        args.beta, args.alpha_min, args.alpha_max, args.step, args.numeric_p
    )
    cols = ["alpha", "beta", "d_formula"]
    if args.numeric_p is not None:
        cols += ["d_numeric_ach", "d_numeric_ub"]
    lines = [",".join(cols)]
    for pt in points:
        row = [_fmt(pt.alpha), _fmt(pt.beta), _fmt(pt.d_formula)]
        if args.numeric_p is not None:
            row += [_fmt(pt.d_numeric_ach), _fmt(pt.d_numeric_ub)]
        lines.append(",".join(row))
    _write(args.output, "\n".join(lines) + "\n")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="icup",
        description=(
            "Achievable sum-rates, upper bounds, capacity gaps and GDOF curves "
            "for the symmetric Gaussian interference channel with a "
            "unidirectional cooperative link. ICUP_THREADS caps the worker "
            "count; ICUP_DISABLE_NUMBA=1 selects the pure-numpy kernels."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rate = sub.add_parser("rate", help="one achievable/upper/gap report")
    p_rate.add_argument("--p", type=float, required=True, help="transmit power (linear)")
    p_rate.add_argument("--a", type=float, required=True, help="interference gain (linear)")
    p_rate.add_argument("--c12", type=float, required=True, help="cooperative link capacity (bits)")
    p_rate.add_argument("--scheme", choices=SCHEME_CHOICES, default="auto")
    p_rate.add_argument("--json", action="store_true")
    p_rate.set_defaults(fn=cmd_rate)

    p_sweep = sub.add_parser("sweep", help="grid sweep; rows ordered P, a, c12")
    for axis, lo, hi, n in (("p", 1e-2, 1e6, 10), ("a", 1e-3, 1e4, 10), ("c12", 0.0, 10.0, 5)):
        p_sweep.add_argument(f"--{axis}-min", type=float, default=lo)
        p_sweep.add_argument(f"--{axis}-max", type=float, default=hi)
        p_sweep.add_argument(f"--{axis}-count", type=int, default=n)
        p_sweep.add_argument(
            f"--{axis}-scale", choices=("linear", "log"),
            default="log" if axis != "c12" else "linear",
        )
    p_sweep.add_argument("--scheme", choices=SCHEME_CHOICES, default="auto")
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sweep.add_argument("--output", default=None)
    p_sweep.set_defaults(fn=cmd_sweep)

    p_verify = sub.add_parser(
        "verify",
        help=(
            "run gap-claim verification suites; the default grids are "
            "P log-spaced over [1e-2, 1e6], a log-spaced over [1e-3, 1e4] "
            "(restricted per suite hypothesis), and C12 in "
            "{0, 0.1, 0.5, 1, 2, 5, 10, 1.01*C(bP)}"
        ),
    )
    p_verify.add_argument("--suite", choices=gaps.SUITE_NAMES, required=True)
    p_verify.add_argument("--grid", choices=("default", "quick"), default="default")
    p_verify.set_defaults(fn=cmd_verify)

    p_gdof = sub.add_parser("gdof", help="emit a GDOF curve as CSV")
    p_gdof.add_argument("--beta", type=float, required=True)
    p_gdof.add_argument("--alpha-min", type=float, required=True)
    p_gdof.add_argument("--alpha-max", type=float, required=True)
    p_gdof.add_argument("--step", type=float, required=True)
    p_gdof.add_argument("--numeric-p", type=float, default=None)
    p_gdof.add_argument("--output", default=None)
    p_gdof.set_defaults(fn=cmd_gdof)
    return parser


def _apply_thread_env() -> None:
    raw = os.environ.get("ICUP_THREADS")
    if raw is None:
        return
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"ICUP_THREADS must be a positive integer, got {raw!r}")
    if n < 1:
        raise ValueError(f"ICUP_THREADS must be a positive integer, got {raw!r}")
    _kernels.apply_thread_cap(n)


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_thread_env()
        return args.fn(args)
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
