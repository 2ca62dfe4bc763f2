"""Command line entry point.

    improprietest run <experiment> [--config FILE] [--seed S] [--out DIR] [--threads K]
    improprietest run --list-experiments
    improprietest test --input data.csv [--statistic glrt] [--method adjusted-bartlett] [--alpha 0.01]
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import __version__
from .dataio import load_csv
from .harness import EXPERIMENTS, load_config, run_experiment
from .hypothesis_tests import METHODS, TestConfig, run_test
from .augmented import sample_spectrum
from .nulls import RegimeParams


def _method(text: str) -> str:
    name = text.replace("-", "_")
    if name not in METHODS:
        raise argparse.ArgumentTypeError(f"unknown method {text!r}; choose from {', '.join(METHODS)}")
    return name


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="improprietest", description="Impropriety tests for complex Gaussian data.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a seeded Monte-Carlo experiment and write CSV + JSON tables")
    run.add_argument("experiment", nargs="?", choices=list(EXPERIMENTS))
    run.add_argument("--config", help="JSON config; keys absent fall back to desk-scale defaults")
    run.add_argument("--seed", type=int, help="master seed (overrides config)")
    run.add_argument("--out", help="output directory (overrides config)")
    run.add_argument("--replicates", type=int, help="replicate count (overrides config)")
    run.add_argument("--threads", type=int, default=1, help="worker threads; results do not depend on it")
    run.add_argument("--list-experiments", action="store_true", help="list experiment names and exit")

    test = sub.add_parser("test", help="test one data set for impropriety")
    test.add_argument("--input", required=True, help="CSV with 2N real columns or N complex a+bi columns")
    test.add_argument("--statistic", choices=("glrt", "roy"), default="glrt")
    test.add_argument("--method", type=_method, default=None, help="calibration (hyphens or underscores)")
    test.add_argument("--alpha", type=float, default=0.05)
    test.add_argument("--center", action="store_true", help="subtract the sample mean first")
    test.add_argument("--mc-count", type=int, default=10**4, help="null draws for exact-mc calibration")
    test.add_argument("--mc-seed", type=int, default=0)
    return parser


def _cmd_run(args) -> int:
    if args.list_experiments:
        width = max(map(len, EXPERIMENTS))
        for name, desc in EXPERIMENTS.items():
            print(f"{name:<{width}}  {desc}")
        return 0
    if args.experiment is None and args.config is None:
        print("improprietest run: give an experiment name or --config", file=sys.stderr)
        return 2
    config = load_config(
        args.config, args.experiment,
        master_seed=args.seed, output_dir=args.out, replicates=args.replicates,
    )
    table = run_experiment(config, workers=max(1, args.threads))
    print(f"{config.experiment}: {len(table)} rows -> {config.output_dir}/{config.experiment}.csv")
    for row in table.summary:
        print("  " + ", ".join(f"{k}={v:.6g}" if isinstance(v, float) else f"{k}={v}" for k, v in row.items()))
    return 0


def _cmd_test(args) -> int:
    sample = load_csv(args.input)
    config = TestConfig(args.alpha, args.statistic, args.method, mc_count=args.mc_count, mc_seed=args.mc_seed)
    regime = RegimeParams(sample.n_dim, sample.m_obs)
    report = run_test(sample_spectrum(sample, center=args.center), config, regime)
    print(report.to_json())
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _cmd_run(args) if args.command == "run" else _cmd_test(args)
    except (ValueError, OSError) as exc:
        print(f"improprietest: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
