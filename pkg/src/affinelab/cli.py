"""Command-line entry point.

Usage: ``affinelab <experiment> --config cfg.ini [--out DIR] [--threads N]
[--seed S]``.  The subcommand must match the config's ``kind`` when both
are given; ``--seed`` and ``--threads`` override the config.  Exit codes:
0 = pass, 2 = a tolerance gate failed, 1 = error.

``estimate`` can also run without a config:
``affinelab estimate --input obs.csv --kind clse-theta-m [--m-known M]``.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
from pathlib import Path

from .config import (ESTIMATOR_KINDS, EXPERIMENT_KINDS, ConfigError,
                     load_config)
from .harness import estimate_from_series, read_observation_csv, run_experiment


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="affinelab",
        description="Monte-Carlo laboratory for a critical two-dimensional "
                    "affine diffusion: simulation, drift estimators and "
                    "limit-law verification.")
    sub = parser.add_subparsers(dest="command", required=True)
    for kind in EXPERIMENT_KINDS:
        p = sub.add_parser(kind, help=f"run the {kind} experiment")
        p.add_argument("--config", "-c", help="experiment config file")
        p.add_argument("--out", "-o", help="output directory "
                                           "(report.json, samples.csv)")
        p.add_argument("--threads", type=int, help="worker threads "
                                                   "(no effect on outputs)")
        p.add_argument("--seed", type=int, help="master seed override")
        if kind == "estimate":
            p.add_argument("--input", help="observation CSV (header i,X)")
            p.add_argument("--kind", choices=ESTIMATOR_KINDS,
                           default=None, help="estimator to apply")
            p.add_argument("--m-known", type=float, default=None,
                           help="known drift m for lse-theta")
    return parser


def _run_estimate_flags(args) -> int:
    series = read_observation_csv(args.input)
    kind = args.kind or "lse-theta-m"
    result = estimate_from_series(series, kind,
                                  args.m_known if args.m_known is not None else 0.0)
    text = json.dumps(result, indent=2, sort_keys=True)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "estimate.json").write_text(text + "\n")
    print(text)
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "estimate" and args.config is None:
            if not args.input:
                print("error: estimate needs --config or --input", file=sys.stderr)
                return 1
            return _run_estimate_flags(args)

        if args.config is None:
            print(f"error: {args.command} requires --config", file=sys.stderr)
            return 1
        cfg = load_config(args.config)
        if cfg.kind and cfg.kind != args.command:
            print(f"error: config kind {cfg.kind!r} does not match "
                  f"subcommand {args.command!r}", file=sys.stderr)
            return 1
        overrides = {}
        if args.command == "estimate":
            if getattr(args, "input", None):
                overrides["input_path"] = args.input
            if getattr(args, "kind", None):
                overrides["estimator_kind"] = args.kind
            if getattr(args, "m_known", None) is not None:
                overrides["m_known"] = args.m_known
        if overrides:
            cfg = dataclasses.replace(cfg, **overrides)
        report = run_experiment(cfg, out_dir=args.out, threads=args.threads,
                                seed=args.seed)
        if args.command == "estimate":
            print(json.dumps(report.stats, indent=2, sort_keys=True))
            return 0
        summary = {
            "experiment": report.experiment,
            "passed": report.passed,
            "gates": [g.as_dict() for g in report.gates],
            "wall_time_s": round(report.wall_time_s, 3),
        }
        print(json.dumps(summary, indent=2, sort_keys=True))
        return 0 if report.passed else 2
    except (ConfigError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
