"""Command-line entry point: ``matfit fit | bench | gen``."""

from __future__ import annotations

import argparse
import os
import sys
import warnings

from . import io as mio
from .bench import run_benchmark
from .errors import BackendDisagreement, CsvParseError, FitError, InvalidDataset
from .fit import FitRequest, fit, generate_synthetic
from .model import MAX_DEGREE

EXIT_OK, EXIT_USAGE, EXIT_NUMERIC = 0, 2, 3


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="matfit", description="Polynomial least-squares fitting.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fit", help="fit a polynomial to a CSV dataset")
    p.add_argument("--input", required=True, help="CSV path or - for stdin")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--backend", choices=["normal", "qr", "both"], default="normal")
    p.add_argument("--chunks", type=int, default=os.cpu_count() or 1)
    p.add_argument("--output", default="-")

    p = sub.add_parser("bench", help="time sequential vs chunked accumulation")
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--chunks", type=int, default=os.cpu_count() or 1)
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", default="-")

    p = sub.add_parser("gen", help="write a seeded synthetic CSV dataset")
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--noise", type=float, default=0.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", required=True)
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from exc


def _check_degree(degree: int) -> None:
    if degree < 0:
        raise UsageError("--degree must be >= 0")


def _run(args) -> str:
    if args.command == "fit":
        _check_degree(args.degree)
        if args.chunks < 1:
            raise UsageError("--chunks must be >= 1")
        dataset = mio.parse_csv(_read(args.input))
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", BackendDisagreement)
            result = fit(dataset, FitRequest(args.degree, args.backend, args.chunks))
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
        return mio.emit_report(result)
    if args.command == "bench":
        _check_degree(args.degree)
        if args.degree > MAX_DEGREE:
            raise UsageError(f"--degree must be <= {MAX_DEGREE}")
        if args.points < 2 or args.chunks < 1 or args.repeat < 3:
            raise UsageError("need --points >= 2, --chunks >= 1, --repeat >= 3")
        return mio.emit_bench(run_benchmark(args.points, args.degree, args.chunks, args.repeat, args.seed))
    _check_degree(args.degree)
    if args.points < 2 or args.noise < 0:
        raise UsageError("need --points >= 2 and --noise >= 0")
    return mio.format_csv(generate_synthetic(args.points, args.degree, args.noise, args.seed))


def main(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        text = _run(args)
    except (UsageError, CsvParseError, InvalidDataset, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FitError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    try:
        _write(args.output, text)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
