"""
Runtime settings read from the environment (.env supported).
"""
import logging
import os

from dotenv import load_dotenv

from models.errors import ConfigValidationError

load_dotenv()

DEFAULT_WORKERS = 1
DEFAULT_LOG_LEVEL = "INFO"
DEFAULT_OUTPUT_DIR = "outputs"
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def get_worker_count() -> int:
    """
    Worker processes for Monte Carlo trials (D2D_WORKERS).

    Returns:
        Positive worker count; 1 runs trials inline
    """
    raw = os.getenv("D2D_WORKERS")
    if raw is None or raw.strip() == "":
        return DEFAULT_WORKERS
    try:
        workers = int(raw)
    except ValueError:
        raise ConfigValidationError(f"D2D_WORKERS must be a positive integer, got {raw!r}") from None
    if workers < 1:
        raise ConfigValidationError(f"D2D_WORKERS must be a positive integer, got {raw!r}")
    return workers


def get_log_level() -> str:
    level = os.getenv("D2D_LOG_LEVEL", DEFAULT_LOG_LEVEL).strip().upper()
    if not isinstance(logging.getLevelName(level), int):
        raise ConfigValidationError(f"D2D_LOG_LEVEL is not a logging level: {level!r}")
    return level


def get_output_dir() -> str:
    return os.getenv("D2D_OUTPUT_DIR", DEFAULT_OUTPUT_DIR)


def configure_logging(level: str = None) -> None:
    """Install one stream handler on the root logger."""
    logging.basicConfig(level=level or get_log_level(), format=LOG_FORMAT, force=True)
