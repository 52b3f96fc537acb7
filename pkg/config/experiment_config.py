"""
Experiment file loading.

The file is sectioned key = value text:

    [network]
    n_users = 15
    [system]
    deadline_s = 300
    [mobility]
    mobility_mode = homogeneous
    [simulation]
    trials = 10000

Keys are ExperimentConfig field names and must sit in their own section.
Omitted keys take the model defaults.
"""
import configparser
from pathlib import Path
from typing import Any, Dict, Union

from pydantic import ValidationError

from models.errors import ConfigParseError, ConfigValidationError
from models.experiment_model import ExperimentConfig
from models.mobility_model import PairParams
from models.system_model import SystemParams

SECTION_KEYS = {
    "network": ("n_users", "n_files", "cache_capacity", "zipf_gamma"),
    "system": ("deadline_s", "file_size_bits", "rate_bps"),
    "mobility": (
        "mobility_mode",
        "lambda_c",
        "lambda_i",
        "gamma_shape_i",
        "gamma_scale_i",
        "contact_rate_multiplier",
        "speed_factor",
    ),
    "simulation": ("trials", "seed", "placement_draws"),
}


def _describe(error: ValidationError) -> str:
    parts = []
    for item in error.errors():
        field = ".".join(str(loc) for loc in item.get("loc", ())) or "config"
        parts.append(f"{field}: {item.get('msg', 'invalid value')}")
    return "; ".join(parts)


def parse_config_text(text: str, source: str = "<config>") -> Dict[str, Any]:
    """
    Parse experiment text into a flat field -> raw string mapping.

    Raises:
        ConfigParseError: On malformed text (with the line number)
        ConfigValidationError: On unknown sections or misplaced keys
    """
    parser = configparser.ConfigParser(interpolation=None, inline_comment_prefixes=("#", ";"))
    parser.optionxform = str
    try:
        parser.read_string(text, source=source)
    except configparser.Error as exc:
        line = getattr(exc, "lineno", None)
        if line is None and getattr(exc, "errors", None):
            line = exc.errors[0][0]
        message = exc.message.splitlines()[0] if hasattr(exc, "message") else str(exc)
        raise ConfigParseError(message, path=source, line=line) from None

    values: Dict[str, Any] = {}
    for section in parser.sections():
        if section not in SECTION_KEYS:
            raise ConfigValidationError(
                f"{source}: unknown section [{section}]; expected one of {', '.join(SECTION_KEYS)}"
            )
        for key, raw in parser.items(section):
            if key not in SECTION_KEYS[section]:
                owner = next((name for name, keys in SECTION_KEYS.items() if key in keys), None)
                hint = f" (it belongs in [{owner}])" if owner else ""
                raise ConfigValidationError(f"{source}: unknown key '{key}' in [{section}]{hint}")
            values[key] = raw.strip()
    return values


def validate_config(values: Dict[str, Any], source: str = "<config>") -> ExperimentConfig:
    """Build an ExperimentConfig, naming the violated invariant on failure."""
    try:
        return ExperimentConfig(**values)
    except ValidationError as exc:
        raise ConfigValidationError(f"{source}: {_describe(exc)}") from None


def load_config(path: Union[str, Path]) -> ExperimentConfig:
    """
    Load and validate an experiment file.

    Args:
        path: Path of the experiment file

    Returns:
        Validated ExperimentConfig

    Raises:
        ConfigParseError: If the file is missing or malformed
        ConfigValidationError: If a value violates an invariant or a key is unknown
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigParseError(f"cannot read experiment file: {exc.strerror or exc}", path=str(path)) from None
    return validate_config(parse_config_text(text, source=str(path)), source=str(path))


def system_params(cfg: ExperimentConfig) -> SystemParams:
    return SystemParams(file_size=cfg.file_size_bits, rate=cfg.rate_bps, deadline=cfg.deadline_s)


def base_pair_params(cfg: ExperimentConfig) -> PairParams:
    """Homogeneous pair rates of the config, before speed scaling."""
    return PairParams(lambda_c=cfg.lambda_c, lambda_i=cfg.lambda_i)
