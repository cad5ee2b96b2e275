"""Benchmark command line.

Exit status: 0 on success, 2 on usage errors (argparse convention), 1 on
runtime failures such as unwritable output paths.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from pssopt import objectives
from pssopt.batch import ExperimentConfig, export, render_csv, render_json, run_batch


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pss-bench",
        description="Run replicate optimization batches and export the report.",
    )
    parser.add_argument("--problem", help="problem id (see --list-problems)")
    parser.add_argument("--dims", type=int, help="dimensionality for scalable problems")
    parser.add_argument("--alpha", type=float, default=0.95,
                        help="acceptance probability (default 0.95)")
    parser.add_argument("--pop", type=int, default=30,
                        help="population size per generation (default 30)")
    parser.add_argument("--iters", type=int, help="generation count per run")
    parser.add_argument("--runs", type=int, help="number of replicate runs")
    parser.add_argument("--seed", type=int, default=1,
                        help="base seed; run k uses a seed derived from (seed, k)")
    parser.add_argument("--milestones",
                        help="comma-separated iteration indices to record, e.g. 0,100,500")
    parser.add_argument("--success-region",
                        help="LO,HI interval applied per coordinate for the success rate")
    parser.add_argument("--out", help="output file path (default: print to stdout)")
    parser.add_argument("--format", choices=("csv", "json"), default="csv",
                        help="report format (default csv)")
    parser.add_argument("--jobs", type=int, default=None,
                        help="parallel replicate workers (default: all processors)")
    parser.add_argument("--list-problems", action="store_true",
                        help="list registered problems and exit")
    return parser


def _parse_milestones(text: Optional[str], parser: argparse.ArgumentParser) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        parser.error(f"malformed --milestones value {text!r}")


def _parse_region(text: Optional[str],
                  parser: argparse.ArgumentParser) -> Optional[tuple[float, float]]:
    if not text:
        return None
    parts = text.split(",")
    if len(parts) != 2:
        parser.error(f"--success-region expects LO,HI, got {text!r}")
    try:
        return float(parts[0]), float(parts[1])
    except ValueError:
        parser.error(f"malformed --success-region value {text!r}")


def list_problems(file=None) -> None:
    file = file or sys.stdout
    for pid in objectives.ids():
        spec = objectives.get(pid)
        dims = f"n={spec.fixed_dims}" if spec.fixed_dims else f"any n>={spec.min_dims}"
        print(f"{pid:18s} {dims:10s} {spec.summary}", file=file)


def parse_cli(argv: Sequence[str]) -> Optional[ExperimentConfig]:
    """Turn argv into a validated config; None means --list-problems ran.

    Usage problems terminate with exit status 2 via argparse.
    """
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.list_problems:
        return None

    for name in ("problem", "iters", "runs"):
        if getattr(args, name) is None:
            parser.error(f"--{name} is required")
    jobs = args.jobs if args.jobs is not None else (os.cpu_count() or 1)
    try:
        return ExperimentConfig(
            problem=args.problem,
            dims=args.dims,
            alpha=args.alpha,
            pop=args.pop,
            iters=args.iters,
            runs=args.runs,
            base_seed=args.seed,
            milestones=_parse_milestones(args.milestones, parser),
            success_region=_parse_region(args.success_region, parser),
            out=args.out,
            fmt=args.format,
            jobs=jobs,
        )
    except (KeyError, ValueError) as exc:
        parser.error(str(exc))


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    config = parse_cli(argv)
    if config is None:
        list_problems()
        return 0
    try:
        report = run_batch(config)
        if config.out is None:
            text = render_csv(report) if config.fmt == "csv" else render_json(report)
            sys.stdout.write(text)
        else:
            export(report, config.fmt, config.out)
    except Exception as exc:  # runtime failures map to exit status 1
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


def entry() -> None:
    raise SystemExit(main())
