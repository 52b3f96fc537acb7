"""
Content popularity.
"""
import numpy as np

from models.caching_model import RequestModel
from models.errors import DomainError


def zipf_pmf(n_files: int, gamma_r: float) -> np.ndarray:
    """p_f = f^-gamma_r / sum_k k^-gamma_r for f = 1..n_files."""
    if n_files < 1:
        raise DomainError(f"need at least one file, got {n_files}")
    if not gamma_r >= 0.0:
        raise DomainError(f"Zipf exponent must be non-negative, got {gamma_r}")
    weights = np.arange(1, n_files + 1, dtype=float) ** -gamma_r
    return weights / weights.sum()


def zipf_demand(n_files: int, gamma_r: float, n_users: int) -> RequestModel:
    """Every user requests files with the same Zipf popularity."""
    if n_users < 1:
        raise DomainError(f"need at least one user, got {n_users}")
    return RequestModel(probs=np.tile(zipf_pmf(n_files, gamma_r), (n_users, 1)))
