"""
Deterministic block-parallel trial engine.

Trials are grouped in fixed-size blocks; block k draws from the stream
(seed, k) and block results are concatenated in block order, so the output
does not depend on how many workers ran the blocks.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Optional

import numpy as np

from config.runtime_config import get_worker_count
from models.errors import DomainError
from montecarlo.seeding import derive_generator

logger = logging.getLogger(__name__)

TRIAL_BLOCK_SIZE = 512

Trial = Callable[[np.random.Generator], float]


def _run_block(trial: Trial, seed: int, block: int, count: int) -> np.ndarray:
    rng = derive_generator(seed, block)
    return np.fromiter((trial(rng) for _ in range(count)), dtype=float, count=count)


def run_trials(trial: Trial, trials: int, seed: int, workers: Optional[int] = None) -> np.ndarray:
    """
    Run `trials` independent trials and return their values in trial order.

    Args:
        trial: Picklable callable mapping a generator to one trial value
        trials: Number of trials, >= 1
        seed: Master seed, 0 <= seed < 2**64
        workers: Worker processes; defaults to D2D_WORKERS

    Returns:
        Array of trial values
    """
    if trials < 1:
        raise DomainError(f"need at least one trial, got {trials}")
    if not 0 <= seed < 2 ** 64:
        raise DomainError(f"seed must be a 64-bit unsigned integer, got {seed}")
    workers = get_worker_count() if workers is None else workers
    if workers < 1:
        raise DomainError(f"need at least one worker, got {workers}")

    counts = [TRIAL_BLOCK_SIZE] * (trials // TRIAL_BLOCK_SIZE)
    if trials % TRIAL_BLOCK_SIZE:
        counts.append(trials % TRIAL_BLOCK_SIZE)
    logger.info("Running %d trials in %d blocks on %d worker(s), seed %d", trials, len(counts), workers, seed)

    if workers == 1 or len(counts) == 1:
        results = [_run_block(trial, seed, block, count) for block, count in enumerate(counts)]
    else:
        with ProcessPoolExecutor(max_workers=min(workers, len(counts))) as pool:
            results = list(
                pool.map(
                    _run_block,
                    [trial] * len(counts),
                    [seed] * len(counts),
                    range(len(counts)),
                    counts,
                )
            )
    return np.concatenate(results)


def standard_error(values: np.ndarray) -> float:
    """Standard error of the sample mean (0 for a single value)."""
    if values.size < 2:
        return 0.0
    return float(np.std(values, ddof=1) / np.sqrt(values.size))


def variance_standard_error(values: np.ndarray) -> float:
    """Large-sample standard error of the unbiased sample variance."""
    n = values.size
    if n < 4:
        return 0.0
    centered = values - values.mean()
    m2 = float(np.var(values, ddof=1))
    m4 = float(np.mean(centered ** 4))
    return float(np.sqrt(max(m4 - (n - 3) / (n - 1) * m2 * m2, 0.0) / n))
