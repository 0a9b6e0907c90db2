# setcodes/core/patterns.py
from __future__ import annotations

from typing import Iterator

import numpy as np

from setcodes.core.bits import SubstitutionPattern


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Generator for trial ``trial``: PCG64 seeded by SeedSequence([seed, trial])."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, trial])))


def random_below(rng: np.random.Generator, bound: int) -> int:
    """Uniform integer in [0, bound) for arbitrary-precision ``bound``."""
    if bound <= 1:
        return 0
    nbits = (bound - 1).bit_length()
    words = (nbits + 63) // 64
    mask = (1 << nbits) - 1
    while True:
        value = 0
        for w in rng.integers(0, 1 << 64, size=words, dtype=np.uint64):
            value = (value << 64) | int(w)
        value &= mask
        if value < bound:
            return value


def random_pattern(M: int, L: int, weight: int, rng: np.random.Generator) -> SubstitutionPattern:
    cells = rng.choice(M * L, size=weight, replace=False)
    return SubstitutionPattern.of((int(c) // L + 1, int(c) % L + 1) for c in cells)


def single_flip_patterns(M: int, L: int) -> Iterator[SubstitutionPattern]:
    for row in range(1, M + 1):
        for col in range(1, L + 1):
            yield SubstitutionPattern(frozenset({(row, col)}))
