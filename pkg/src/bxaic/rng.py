"""Seeded random streams.

Every stochastic step derives its own PCG64 generator from the single master
seed plus a purpose tag, so adding or reordering pipeline stages never
perturbs the draws of another stage.
"""

from __future__ import annotations

import hashlib

import numpy as np


def derive_rng(seed: int, purpose: str) -> np.random.Generator:
    digest = hashlib.sha256(f"{seed}|{purpose}".encode("utf-8")).digest()
    return np.random.Generator(np.random.PCG64(int.from_bytes(digest[:16], "little")))
