"""
Cache placement strategies.
"""
import numpy as np

from models.caching_model import Placement
from models.errors import DomainError


def random_caching(
    n_users: int,
    n_files: int,
    capacity: int,
    weights: np.ndarray,
    rng: np.random.Generator,
) -> Placement:
    """
    Each user independently fills its cache with `capacity` distinct files.

    Files are drawn one after another without replacement, each draw
    proportional to the weights of the files not yet chosen.

    Args:
        n_users: Number of users
        n_files: Number of files
        capacity: Files per cache, <= n_files
        weights: Strictly positive weight per file (e.g. request probabilities)
        rng: Random stream owned by the caller

    Returns:
        Placement with exactly `capacity` files per user
    """
    weights = np.asarray(weights, dtype=float)
    if weights.shape != (n_files,):
        raise DomainError(f"expected {n_files} file weights, got shape {weights.shape}")
    if not np.all(weights > 0.0) or not np.all(np.isfinite(weights)):
        raise DomainError("file weights must be finite and strictly positive")
    if not 0 <= capacity <= n_files:
        raise DomainError(f"capacity must lie in [0, {n_files}], got {capacity}")

    probs = weights / weights.sum()
    cached = np.zeros((n_users, n_files), dtype=bool)
    for user in range(n_users):
        chosen = rng.choice(n_files, size=capacity, replace=False, p=probs)
        cached[user, chosen] = True
    return Placement(cached=cached, capacity=capacity)


def uniform_all_same_placement(n_users: int, n_files: int, capacity: int) -> Placement:
    """Every user caches files 0..capacity-1; no user can help another."""
    if not 0 <= capacity <= n_files:
        raise DomainError(f"capacity must lie in [0, {n_files}], got {capacity}")
    cached = np.zeros((n_users, n_files), dtype=bool)
    cached[:, :capacity] = True
    return Placement(cached=cached, capacity=capacity)
