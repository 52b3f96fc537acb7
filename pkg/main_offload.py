"""
Main entry point for the D2D caching offload evaluator.
Runs the analytic model, the Monte Carlo check or a full sweep from an experiment file.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

import numpy as np
from dotenv import load_dotenv
from pydantic import ValidationError

from analytics.offload_ratio import per_user_offload_ratios
from config.experiment_config import load_config, system_params, validate_config
from config.runtime_config import configure_logging, get_output_dir, get_worker_count
from models.errors import ConfigValidationError, OffloadError
from models.experiment_model import ExperimentConfig, SweepRow
from stages.mobility_stage import MobilityStage
from stages.placement_stage import PlacementStage
from workflow.sweep_workflow import sweep_speed, sweep_users

logger = logging.getLogger("main_offload")

BANNER = "=" * 70


def _float_list(text: str) -> List[float]:
    try:
        values = [float(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("list must not be empty")
    return values


def _int_list(text: str) -> List[int]:
    try:
        values = [int(item) for item in text.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("list must not be empty")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="main_offload", description="D2D caching data offloading evaluator")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(cmd: argparse.ArgumentParser, seed_required: bool) -> None:
        cmd.add_argument("--config", type=Path, help="experiment file (defaults apply when omitted)")
        cmd.add_argument("--trials", type=int, help="Monte Carlo trials, overrides the file")
        cmd.add_argument("--seed", type=int, required=seed_required, help="master seed")

    analytic = sub.add_parser("analytic", help="beta-approximation offload ratio")
    add_common(analytic, seed_required=False)

    simulate = sub.add_parser("simulate", help="analytic ratio against Monte Carlo")
    add_common(simulate, seed_required=True)
    simulate.add_argument("--out", type=Path, help="CSV destination")

    users = sub.add_parser("sweep-users", help="offload ratio against the number of users")
    add_common(users, seed_required=True)
    users.add_argument("--user-counts", type=_int_list, required=True, help="e.g. 5,10,15,20,25,30")
    users.add_argument("--out", type=Path, help="CSV destination")

    speed = sub.add_parser("sweep-speed", help="offload ratio against the speed factor")
    add_common(speed, seed_required=True)
    speed.add_argument("--speed-factors", type=_float_list, required=True, help="e.g. 1,2,4,8")
    speed.add_argument("--out", type=Path, help="CSV destination")
    return parser


def resolve_config(args: argparse.Namespace) -> ExperimentConfig:
    """Experiment file (or defaults) with the command-line overrides applied."""
    cfg = load_config(args.config) if args.config is not None else ExperimentConfig()
    overrides = {}
    if args.trials is not None:
        overrides["trials"] = args.trials
    if args.seed is not None:
        overrides["seed"] = args.seed
    if not overrides:
        return cfg
    return validate_config({**cfg.model_dump(), **overrides}, source="command line")


def resolve_output(out: Optional[Path], default_name: str) -> Path:
    """Bare file names land in D2D_OUTPUT_DIR."""
    if out is None:
        return Path(get_output_dir()) / default_name
    if out.parent == Path("."):
        return Path(get_output_dir()) / out
    return out


def print_rows(rows: List[SweepRow]) -> None:
    print(f"\n{'value':>10} {'analytic':>10} {'simulated':>10} {'95% CI':>22}")
    print("-" * 70)
    for row in rows:
        interval = f"[{row.mc_ci_low:.4f}, {row.mc_ci_high:.4f}]"
        print(f"{row.sweep_value:>10g} {row.analytic_ratio:>10.4f} {row.mc_ratio:>10.4f} {interval:>22}")


def run_analytic(cfg: ExperimentConfig) -> None:
    # Without a seed only homogeneous rates are fully determined; placements still use seed 0.
    if cfg.seed is None:
        cfg = validate_config({**cfg.model_dump(), "seed": 0}, source="command line")
    state = {
        "config": cfg,
        "sweep_name": "speed",
        "sweep_values": [cfg.speed_factor],
        "point_index": 0,
    }
    state.update(MobilityStage().process(state))
    state.update(PlacementStage().process(state))
    system = system_params(cfg)
    per_user = np.mean(
        [
            per_user_offload_ratios(net, placement, state["demand"], system)
            for net, placement in zip(state["networks"], state["placements"])
        ],
        axis=0,
    )
    print(f"\nNetwork offload ratio: {float(np.mean(per_user)):.6f}")
    print(f"Realizations: {cfg.placement_draws}, seed {cfg.seed}")
    print("\nPer-user offload ratio:")
    for user, ratio in enumerate(per_user):
        print(f"   user {user:>3}: {ratio:.6f}")


def run_simulate(cfg: ExperimentConfig, out: Optional[Path], workers: int) -> None:
    path = resolve_output(out, "simulate.csv") if out is not None else None
    row = sweep_speed(cfg, [cfg.speed_factor], output_path=path, workers=workers)[0]
    half_width = (row.mc_ci_high - row.mc_ci_low) / 2.0
    print(f"\nAnalytic offload ratio:  {row.analytic_ratio:.6f}")
    print(f"Simulated offload ratio: {row.mc_ratio:.6f} (+/- {half_width:.6f} at 95%)")
    print(f"95% CI: [{row.mc_ci_low:.6f}, {row.mc_ci_high:.6f}], {row.trials} trials, seed {row.seed}")
    if path is not None:
        print(f"\nCSV: {path}")


def main(argv: Optional[List[str]] = None) -> int:
    """Main function; returns the process exit code."""
    load_dotenv()
    args = build_parser().parse_args(argv)

    try:
        configure_logging()
        cfg = resolve_config(args)
        workers = get_worker_count()

        print("\n" + BANNER)
        print("D2D CACHING OFFLOAD EVALUATOR")
        print(BANNER)
        print(f"Command: {args.command}")
        print(f"Users: {cfg.n_users}, files: {cfg.n_files}, cache: {cfg.cache_capacity}, mobility: {cfg.mobility_mode.value}")

        if args.command == "analytic":
            run_analytic(cfg)
        elif args.command == "simulate":
            run_simulate(cfg, args.out, workers)
        else:
            if args.command == "sweep-users":
                path = resolve_output(args.out, "sweep_users.csv")
                rows = sweep_users(cfg, args.user_counts, output_path=path, workers=workers)
            else:
                path = resolve_output(args.out, "sweep_speed.csv")
                rows = sweep_speed(cfg, args.speed_factors, output_path=path, workers=workers)
            print_rows(rows)
            print(f"\nCSV: {path}")

        print("\n" + BANNER)
        print("Completed successfully!")
        print(BANNER)
        return 0

    except OffloadError as exc:
        print(f"error[{exc.category}]: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValidationError as exc:
        print(f"error[{ConfigValidationError.category}]: {exc}", file=sys.stderr)
        return ConfigValidationError.exit_code


if __name__ == "__main__":
    sys.exit(main())
