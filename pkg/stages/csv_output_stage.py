"""
CSV Output Stage - Writes sweep rows as CSV plus a JSON metadata sidecar.
Single responsibility: Format and save sweep results.
"""
import csv
import json
import logging
from pathlib import Path
from typing import Any, Dict, Iterable, List, Union

from models.errors import OutputError
from models.experiment_model import ExperimentConfig, SweepRow
from templates.sweep_row_template import CSV_HEADER, format_csv_record

logger = logging.getLogger(__name__)


def emit_csv(rows: Iterable[SweepRow], path: Union[str, Path]) -> None:
    """
    Write rows under the fixed header, UTF-8 with line-feed endings.

    Raises:
        OutputError: If the file cannot be written
    """
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", encoding="utf-8", newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(CSV_HEADER)
            for row in rows:
                writer.writerow(format_csv_record(row))
    except OSError as exc:
        raise OutputError(f"cannot write CSV: {exc.strerror or exc}", path=str(path)) from None
    logger.info("Wrote %s", path)


def metadata_path(csv_path: Union[str, Path]) -> Path:
    csv_path = Path(csv_path)
    return csv_path.with_name(csv_path.name + ".meta.json")


def sweep_metadata(cfg: ExperimentConfig, sweep_name: str, sweep_values: List[float]) -> Dict[str, Any]:
    """Everything needed to rerun a sweep, gamma hyperparameters verbatim."""
    return {
        "sweep_name": sweep_name,
        "sweep_values": [float(v) for v in sweep_values],
        "seed": cfg.seed,
        "config": cfg.model_dump(mode="json"),
        "gamma_params": {
            "inter_contact": {"shape": cfg.gamma_shape_i, "scale": cfg.gamma_scale_i},
            "contact": {"shape": cfg.contact_gamma_shape, "scale": cfg.contact_gamma_scale},
        },
    }


def emit_metadata(metadata: Dict[str, Any], csv_path: Union[str, Path]) -> Path:
    path = metadata_path(csv_path)
    try:
        with path.open("w", encoding="utf-8", newline="\n") as handle:
            json.dump(metadata, handle, indent=2, sort_keys=True)
            handle.write("\n")
    except OSError as exc:
        raise OutputError(f"cannot write metadata: {exc.strerror or exc}", path=str(path)) from None
    logger.info("Wrote %s", path)
    return path


class CsvOutputStage:
    """Stage responsible for saving the sweep."""

    def process(self, state: Dict[str, Any]) -> Dict[str, Any]:
        """
        Process state and save CSV and metadata when an output path is set.

        Args:
            state: Current workflow state

        Returns:
            Updated state with file paths
        """
        output_path = state.get("output_path")
        if not output_path:
            return {"files_created": {}}
        emit_csv(state["rows"], output_path)
        meta = emit_metadata(
            sweep_metadata(state["config"], state["sweep_name"], state["sweep_values"]), output_path
        )
        return {"files_created": {"csv": str(output_path), "metadata": str(meta)}}
