# src/hermrank/utils/seeding.py
"""시드 파생: 실행 순서(worker 스케줄)와 무관하게 같은 결과가 나오도록 한다."""
from __future__ import annotations

import hashlib

import numpy as np


def derive_seed(master_seed: int, *keys) -> int:
    """sha256(master_seed, keys...) 의 앞 8 바이트."""
    text = ":".join(str(x) for x in (master_seed, *keys))
    digest = hashlib.sha256(text.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def make_rng(master_seed: int, *keys) -> np.random.Generator:
    return np.random.default_rng(derive_seed(master_seed, *keys) if keys else master_seed)
