"""
Seed derivation: every stream is a child of a master seed addressed by a key path.
"""
import numpy as np


def seed_sequence(master: int, *path: int) -> np.random.SeedSequence:
    return np.random.SeedSequence(master, spawn_key=tuple(int(k) for k in path))


def derive_generator(master: int, *path: int) -> np.random.Generator:
    """Independent generator for the stream at `path` under `master`."""
    return np.random.default_rng(seed_sequence(master, *path))


def derive_seed(master: int, *path: int) -> int:
    """64-bit integer seed for the stream at `path` under `master`."""
    return int(seed_sequence(master, *path).generate_state(1, dtype=np.uint64)[0])
