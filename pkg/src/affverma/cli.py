"""Command-line experiment runner.

    affverma torus --config torus.json --out report.json
    affverma all --jobs 4 --seed 7
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .experiments import EXPERIMENTS, ConfigInvalid, ExperimentConfig, run_experiment

SCHEMA = 1


def _run_one(cfg: ExperimentConfig) -> dict:
    start = time.perf_counter()
    checks = run_experiment(cfg)
    return {
        "experiment": cfg.experiment,
        "config": cfg.to_json(),
        "checks": [c.to_json() for c in checks],
        "pass": all(c.passed for c in checks),
        "wall_clock_seconds": round(time.perf_counter() - start, 3),
    }


def load_config(path: str | None, experiment: str, seed: int | None) -> ExperimentConfig:
    if path is None:
        cfg = ExperimentConfig(experiment)
    else:
        try:
            data = json.loads(Path(path).read_text() or "{}")
        except json.JSONDecodeError as exc:
            raise ConfigInvalid(f"{path}: {exc}") from exc
        cfg = ExperimentConfig.from_dict(data, experiment if experiment != "all" else None)
    if seed is not None:
        cfg.seed = seed
    cfg.validate()
    return cfg


def run(configs: list[ExperimentConfig], jobs: int = 1) -> dict:
    start = time.perf_counter()
    if jobs > 1 and len(configs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_one, configs))
    else:
        results = [_run_one(c) for c in configs]
    return {
        "schema": SCHEMA,
        "experiments": results,
        "pass": all(r["pass"] for r in results),
        "wall_clock_seconds": round(time.perf_counter() - start, 3),
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="affverma", description="Exact verification experiments.")
    parser.add_argument("command", choices=sorted(EXPERIMENTS) + ["all"])
    parser.add_argument("--config", help="JSON experiment configuration")
    parser.add_argument("--experiment", help="experiment id inside a multi-experiment config")
    parser.add_argument("--out", help="write the JSON report here (default: stdout)")
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--seed", type=int, default=None)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "all":
            if args.config:
                raw = json.loads(Path(args.config).read_text() or "[]")
                if not isinstance(raw, list) or not raw:
                    raise ConfigInvalid("'all' expects a non-empty list of experiment configs")
                configs = [ExperimentConfig.from_dict(d) for d in raw]
                for c in configs:
                    if args.seed is not None:
                        c.seed = args.seed
            else:
                configs = [load_config(None, e, args.seed) for e in EXPERIMENTS]
            if args.experiment:
                configs = [c for c in configs if c.experiment == args.experiment]
        else:
            configs = [load_config(args.config, args.experiment or args.command, args.seed)]
    except ConfigInvalid as exc:
        print(f"invalid config: {exc}", file=sys.stderr)
        return 2
    report = run(configs, max(1, args.jobs))
    text = json.dumps(report, indent=2, sort_keys=True)
    out = args.out or (configs[0].out if len(configs) == 1 else None)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)
    for r in report["experiments"]:
        for c in r["checks"]:
            status = "PASS" if c["pass"] else "FAIL"
            print(f"{status} {c['statement_id']} {json.dumps(c['parameters'], sort_keys=True)}", file=sys.stderr)
    return 0 if report["pass"] else 1


if __name__ == "__main__":
    sys.exit(main())
