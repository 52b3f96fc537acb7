"""
Sweep row template - Assembles result rows and their CSV records.
"""
from typing import List

from models.estimate_model import McEstimate, Z_95
from models.experiment_model import SweepRow

CSV_HEADER = [
    "sweep_name",
    "sweep_value",
    "analytic_ratio",
    "mc_ratio",
    "mc_ci_low",
    "mc_ci_high",
    "trials",
    "seed",
]


def _clip_unit(value: float) -> float:
    return min(max(value, 0.0), 1.0)


def build_sweep_row(sweep_name: str, sweep_value: float, analytic_ratio: float, estimate: McEstimate) -> SweepRow:
    """
    Apply the row template to one evaluated sweep point.

    The normal-approximation interval is clipped to [0, 1].

    Args:
        sweep_name: "users" or "speed"
        sweep_value: Swept value of the point
        analytic_ratio: Beta-approximation offload ratio
        estimate: Pooled Monte Carlo estimate

    Returns:
        Validated SweepRow
    """
    low, high = estimate.confidence_interval(Z_95)
    mc_ratio = _clip_unit(estimate.mean)
    return SweepRow(
        sweep_name=sweep_name,
        sweep_value=float(sweep_value),
        analytic_ratio=_clip_unit(analytic_ratio),
        mc_ratio=mc_ratio,
        mc_ci_low=min(_clip_unit(low), mc_ratio),
        mc_ci_high=max(_clip_unit(high), mc_ratio),
        trials=estimate.trials,
        seed=estimate.seed,
    )


def format_csv_record(row: SweepRow) -> List[str]:
    """Decimals with 6 significant digits, integers verbatim."""
    return [
        row.sweep_name,
        f"{row.sweep_value:.6g}",
        f"{row.analytic_ratio:.6g}",
        f"{row.mc_ratio:.6g}",
        f"{row.mc_ci_low:.6g}",
        f"{row.mc_ci_high:.6g}",
        str(row.trials),
        str(row.seed),
    ]
