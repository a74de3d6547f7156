"""Command-line entry point.

Exit codes: 0 success, 1 invalid input (graph or measurements), 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .amdahl import AmdahlModel, amdahl_table, reconcile, serial_fraction
from .analysis import detect_superlinear
from .dag import GraphError
from .fixtures import FIXTURES
from .graphfile import MeasurementError, parse_measurements, parse_number, read_graph, write_graph
from .metrics import analyze, total_work
from .render import FORMATS, render
from .scheduler import SeriesSource, TieBreak, check_bounds, make_series, speedup_series

TIEBREAKS = {"cp": TieBreak.CRITICAL_PATH_PRIORITY, "id": TieBreak.ID_ORDER}


class InputError(Exception):
    """Bad input file contents; maps to exit code 1."""


def _procs(text: str) -> list[int]:
    try:
        ps = [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not ps or any(p < 1 for p in ps):
        raise argparse.ArgumentTypeError("processor counts must be >= 1")
    if any(b <= a for a, b in zip(ps, ps[1:])):
        raise argparse.ArgumentTypeError("processor counts must be strictly increasing")
    return ps


def _positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def _rational(text: str) -> Fraction:
    try:
        return parse_number(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="table")

    parser = argparse.ArgumentParser(prog="workspan", description="Work-span analysis of task DAGs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="work, span, parallelism, serial fraction")
    p.add_argument("file")

    p = sub.add_parser("simulate", parents=[common], help="greedy p-processor simulation")
    p.add_argument("file")
    p.add_argument("--procs", type=_procs, required=True, help="e.g. 1,2,18")
    p.add_argument("--tiebreak", choices=sorted(TIEBREAKS), default="cp")

    p = sub.add_parser("amdahl", parents=[common], help="Amdahl speedup curve")
    p.add_argument("file")
    p.add_argument("--sigma", type=_rational, help="override the graph's serial fraction")
    p.add_argument("--pmax", type=_positive_int, required=True)

    p = sub.add_parser("reconcile", parents=[common], help="linear vs Amdahl vs span bounds")
    p.add_argument("file")
    p.add_argument("--pmax", type=_positive_int, required=True)

    p = sub.add_parser("check-bounds", parents=[common], help="check measured times against lower bounds")
    p.add_argument("file")
    p.add_argument("--measurements", required=True, help="CSV with header p,t_p")

    p = sub.add_parser("superlinear", parents=[common], help="diagnose superlinear speedup")
    p.add_argument("--measurements", required=True, help="CSV with header p,t_p")
    p.add_argument("--t1", type=_rational, help="serial baseline (default: t_p at p=1)")

    p = sub.add_parser("fixture", help="print a built-in graph file")
    p.add_argument("name", choices=sorted(FIXTURES))
    return parser


def _load(path: str):
    try:
        return read_graph(path)
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    except GraphError as exc:
        raise InputError(f"{path}: {exc}") from None


def _measurements(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_measurements(fh.read())
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    except MeasurementError as exc:
        raise InputError(f"{path}: {exc}") from None


def run(args, parser) -> str:
    cmd = args.command
    if cmd == "fixture":
        return write_graph(FIXTURES[args.name]())
    if cmd == "superlinear":
        points = _measurements(args.measurements)
        t1 = args.t1
        if t1 is None:
            t1 = dict(points).get(1)
            if t1 is None:
                parser.error("superlinear: no p=1 row in measurements; pass --t1")
        if t1 <= 0:
            parser.error("--t1 must be positive")
        return render(detect_superlinear(make_series(points, t1)), args.format)

    g = _load(args.file)
    if cmd == "analyze":
        report = analyze(g)
    elif cmd == "simulate":
        report = speedup_series(g, args.procs, TIEBREAKS[args.tiebreak])
    elif cmd == "amdahl":
        if args.sigma is None:
            model = serial_fraction(g)
        elif 0 <= args.sigma <= 1:
            model = AmdahlModel(args.sigma)
        else:
            parser.error("--sigma must lie in [0, 1]")
        report = amdahl_table(model, args.pmax)
    elif cmd == "reconcile":
        report = reconcile(g, args.pmax)
    elif cmd == "check-bounds":
        points = _measurements(args.measurements)
        report = check_bounds(g, make_series(points, total_work(g), SeriesSource.MEASURED))
    else:  # pragma: no cover - argparse restricts choices
        parser.error(f"unknown command {cmd}")
    return render(report, args.format)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = run(args, parser)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
