"""Labeled sub-seed derivation.

All randomness in a run flows from one root seed. Each subsystem asks for
its own stream by label, so adding a new stage never perturbs the draws of
an existing one. Hashing (not Python's ``hash``) keeps the mapping stable
across processes.
"""

import hashlib

import numpy as np


def derive_seed(seed: int, label: str) -> int:
    """Return a 64-bit sub-seed for (seed, label)."""
    digest = hashlib.blake2b(f"{seed}/{label}".encode(), digest_size=8).digest()
    return int.from_bytes(digest, "big")


def derive_rng(seed: int, label: str) -> np.random.Generator:
    """A generator whose stream is unique to (seed, label)."""
    return np.random.default_rng(derive_seed(seed, label))
