# utils/seeding.py
"""
Seed derivation helpers
"""
import hashlib
import json
from typing import Union

import numpy as np

SeedKey = Union[int, str]


def stable_key(*args) -> int:
    """Stable non-negative integer for arbitrary JSON-serializable arguments"""
    data = json.dumps(args, sort_keys=True, default=str)
    return int(hashlib.md5(data.encode()).hexdigest()[:8], 16)


def derive_seed(master: int, *keys: SeedKey) -> int:
    """
    Counter-based seed derivation: the first word of
    SeedSequence(master, spawn_key=keys). String keys (series ids) are hashed
    so results never depend on file order.
    """
    spawn_key = tuple(k if isinstance(k, int) else stable_key(k) for k in keys)
    sequence = np.random.SeedSequence(int(master), spawn_key=spawn_key)
    return int(sequence.generate_state(1, dtype=np.uint32)[0])
