"""Command-line entry point.

Exit codes (stable contract):

* 0  success
* 2  configuration or usage error (nothing is simulated or written)
* 3  simulation aborted (partial telemetry is still written)
* 4  sweep finished with at least one aborted cell
"""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .errors import ConfigError
from .simulator import ScenarioConfig, apply_overrides, read_json, run_scenario, write_metrics

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_ABORT = 3
EXIT_PARTIAL = 4

SWEEP_SCHEMA_VERSION = 1


def _cli_overrides(args) -> list[str]:
    extra = list(args.override or [])
    if args.dt is not None:
        extra.append(f"sim.dt={args.dt!r}")
    if args.seed is not None:
        extra.append(f"sim.seed={args.seed}")
    if getattr(args, "adaptation", None) is not None:
        extra.append(f"controller.adaptation={'true' if args.adaptation == 'on' else 'false'}")
    return extra


def _load(path, overrides) -> ScenarioConfig:
    path = Path(path)
    data = apply_overrides(read_json(path), overrides)
    return ScenarioConfig.from_dict(data, base_dir=path.parent)


def _out_dir(config: ScenarioConfig, out) -> Path:
    return Path(out) if out is not None else Path(config.output.dir)


def write_result(result, out_dir: Path) -> None:
    """Write ``telemetry.csv``, ``metrics.json`` and the resolved scenario."""
    out_dir.mkdir(parents=True, exist_ok=True)
    result.telemetry.to_csv(out_dir / "telemetry.csv")
    write_metrics(result.metrics, out_dir / "metrics.json")
    (out_dir / "scenario.json").write_text(json.dumps(result.config.to_dict(), indent=2) + "\n")


def cmd_run(args) -> int:
    config = _load(args.scenario, _cli_overrides(args))
    result = run_scenario(config)
    write_result(result, _out_dir(config, args.out))
    if result.aborted:
        print(f"simulation aborted: {result.reason}", file=sys.stderr)
        return EXIT_ABORT
    return EXIT_OK


def _delta_metrics(off: dict, on: dict) -> dict:
    summary = {}
    for key in off:
        a, b = off.get(key), on.get(key)
        if isinstance(a, bool) or isinstance(b, bool):
            summary[key] = {"off": a, "on": b}
        elif isinstance(a, (int, float)) and isinstance(b, (int, float)):
            summary[key] = {"off": a, "on": b, "on_minus_off": b - a}
        else:
            summary[key] = {"off": a, "on": b, "on_minus_off": None}
    return summary


def cmd_compare(args) -> int:
    base = _cli_overrides(args)
    results = {}
    for mode in ("off", "on"):
        config = _load(args.scenario, base + [f"controller.adaptation={'true' if mode == 'on' else 'false'}"])
        results[mode] = run_scenario(config)
    out = _out_dir(results["on"].config, args.out)
    for mode, res in results.items():
        write_result(res, out / f"adaptation_{mode}")
    write_metrics(_delta_metrics(results["off"].metrics, results["on"].metrics),
                  out / "delta_metrics.json")
    aborted = [m for m, r in results.items() if r.aborted]
    for mode in aborted:
        print(f"adaptation {mode}: simulation aborted: {results[mode].reason}", file=sys.stderr)
    return EXIT_ABORT if aborted else EXIT_OK


def load_sweep(path, overrides=()) -> tuple[dict, Path, list[tuple[str, list]]]:
    """Parse a sweep file.

    ``{"schema_version": 1, "scenario": "step.json" | {...}, "axes":
    {"uncertainty.delta_pert": [0, 0.3], ...}, "workers": 2}``. Returns the
    raw base scenario (overrides applied), its base directory and the axes.
    """
    path = Path(path)
    sweep = read_json(path)
    if not isinstance(sweep, dict):
        raise ConfigError("sweep file must be a JSON object")
    version = sweep.get("schema_version", SWEEP_SCHEMA_VERSION)
    if version != SWEEP_SCHEMA_VERSION:
        raise ConfigError(f"unsupported sweep schema_version {version!r}")
    unknown = set(sweep) - {"schema_version", "scenario", "axes", "workers"}
    if unknown:
        raise ConfigError(f"unknown sweep keys: {sorted(unknown)}")
    scenario = sweep.get("scenario")
    if isinstance(scenario, str):
        scenario_path = path.parent / scenario
        base = read_json(scenario_path)
        base_dir = scenario_path.parent
    elif isinstance(scenario, dict):
        base, base_dir = scenario, path.parent
    else:
        raise ConfigError("sweep 'scenario' must be a path or an inline object")
    axes = sweep.get("axes")
    if not isinstance(axes, dict) or not axes:
        raise ConfigError("sweep 'axes' must be a non-empty object")
    axis_list = []
    for key, values in axes.items():
        if not isinstance(values, list) or not values:
            raise ConfigError(f"sweep axis {key!r} must be a non-empty list")
        axis_list.append((key, values))
    base = apply_overrides(base, overrides)
    return base, base_dir, axis_list


def sweep_cells(base: dict, base_dir: Path, axes) -> list[tuple[dict, ScenarioConfig]]:
    """Cross product of the axes, validated up front so bad cells fail early."""
    keys = [k for k, _ in axes]
    cells = []
    for combo in itertools.product(*(v for _, v in axes)):
        overrides = [f"{k}={json.dumps(v)}" for k, v in zip(keys, combo)]
        config = ScenarioConfig.from_dict(apply_overrides(base, overrides), base_dir=base_dir)
        cells.append((dict(zip(keys, combo)), config))
    return cells


def _run_cell(job):
    index, config, out_dir = job
    result = run_scenario(config)
    write_result(result, out_dir)
    return index, result.metrics


def cmd_sweep(args) -> int:
    sweep_raw = read_json(args.sweep)
    base, base_dir, axes = load_sweep(args.sweep, _cli_overrides(args))
    cells = sweep_cells(base, base_dir, axes)
    out = Path(args.out) if args.out is not None else Path(cells[0][1].output.dir)
    jobs = [(i, config, out / f"cell_{i:03d}") for i, (_, config) in enumerate(cells)]
    workers = args.workers or sweep_raw.get("workers") or 1
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = dict(pool.map(_run_cell, jobs))
    else:
        outcomes = dict(_run_cell(job) for job in jobs)

    keys = [k for k, _ in axes]
    metric_keys = sorted({k for m in outcomes.values() for k in m})
    out.mkdir(parents=True, exist_ok=True)
    with open(out / "sweep_metrics.csv", "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["cell"] + keys + metric_keys)
        for i, (params, _) in enumerate(cells):
            metrics = outcomes[i]
            row = [f"cell_{i:03d}"] + [json.dumps(params[k]) for k in keys]
            for mk in metric_keys:
                v = metrics.get(mk)
                row.append("" if v is None else (repr(v) if isinstance(v, float) else v))
            writer.writerow(row)
    n_aborted = sum(bool(m.get("aborted")) for m in outcomes.values())
    if n_aborted:
        print(f"{n_aborted} of {len(cells)} sweep cells aborted", file=sys.stderr)
        return EXIT_PARTIAL
    return EXIT_OK


def cmd_validate(args) -> int:
    path = Path(args.file)
    raw = read_json(path)
    if isinstance(raw, dict) and "axes" in raw:
        base, base_dir, axes = load_sweep(path, _cli_overrides(args))
        n = len(sweep_cells(base, base_dir, axes))
        print(f"{path}: valid sweep with {n} cells")
    else:
        config = _load(path, _cli_overrides(args))
        if config.command.type in ("profile", "agile_turn"):
            from .simulator import load_alpha_profile

            load_alpha_profile(config.resolve_path(config.command.path))
        print(f"{path}: valid scenario {config.name!r}")
    return EXIT_OK


def _add_common(p, adaptation=True):
    p.add_argument("--out", help="output directory (defaults to output.dir in the scenario)")
    p.add_argument("--dt", type=float, help="override sim.dt [s]")
    p.add_argument("--seed", type=int, help="override sim.seed")
    if adaptation:
        p.add_argument("--adaptation", choices=("on", "off"), help="force adaptation on or off")
    p.add_argument("--override", action="append", metavar="KEY=VALUE",
                   help="dotted scenario path, value parsed as JSON (repeatable)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="agile-autopilot",
        description="Pitch-plane agile missile simulator with an adaptive backstepping autopilot.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="run one scenario")
    p.add_argument("scenario")
    _add_common(p)
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("compare", help="run a scenario with adaptation off and on")
    p.add_argument("scenario")
    _add_common(p, adaptation=False)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("sweep", help="run the cross product of parameter axes")
    p.add_argument("sweep")
    p.add_argument("--workers", type=int, help="parallel worker processes")
    _add_common(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("validate", help="parse and validate a scenario or sweep file")
    p.add_argument("file")
    _add_common(p)
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
