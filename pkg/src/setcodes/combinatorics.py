# setcodes/combinatorics.py
"""
Ranking and unranking between integers and (subsets, permutations).

Subsets are ordered lexicographically as ascending-sorted tuples; permutations
follow the Lehmer (factoradic) order where rank 0 is the identity. All ranks
are 0-based arbitrary-precision integers.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial
from typing import Iterable, Sequence

from setcodes.errors import OUT_OF_RANGE


# ──────────────────────────────────────────────────────────────
# Rank types
# ──────────────────────────────────────────────────────────────
@dataclass(frozen=True)
class SubsetRank:
    n: int
    m: int
    rank: int

    def __post_init__(self) -> None:
        if not 0 <= self.m <= self.n:
            raise OUT_OF_RANGE({"n": self.n, "m": self.m})
        if not 0 <= self.rank < comb(self.n, self.m):
            raise OUT_OF_RANGE({"rank": self.rank, "count": f"C({self.n},{self.m})"})


@dataclass(frozen=True)
class PermRank:
    m: int
    rank: int

    def __post_init__(self) -> None:
        if not 0 <= self.rank < factorial(self.m):
            raise OUT_OF_RANGE({"rank": self.rank, "count": f"{self.m}!"})


@dataclass(frozen=True)
class SetPermRank:
    n: int
    m: int
    rank: int

    def __post_init__(self) -> None:
        if not 0 <= self.rank < set_perm_count(self.n, self.m):
            raise OUT_OF_RANGE({"rank": self.rank, "count": f"C({self.n},{self.m})*{self.m}!"})


def set_perm_count(n: int, m: int) -> int:
    return comb(n, m) * factorial(m)


# ──────────────────────────────────────────────────────────────
# Subsets (combinadic)
# ──────────────────────────────────────────────────────────────
def _colex_rank(elems: Sequence[int]) -> int:
    return sum(comb(c, j + 1) for j, c in enumerate(elems))


def _colex_unrank(rank: int, n: int, m: int) -> list[int]:
    out = []
    hi = n
    for k in range(m, 0, -1):
        # largest c < hi with C(c, k) <= rank
        lo, top = k - 1, hi - 1
        while lo < top:
            mid = (lo + top + 1) // 2
            if comb(mid, k) <= rank:
                lo = mid
            else:
                top = mid - 1
        out.append(lo)
        rank -= comb(lo, k)
        hi = lo
    return out[::-1]


def unrank_subset(r: SubsetRank) -> list[int]:
    """The ``r.rank``-th m-subset of [0, n), as an ascending list."""
    mirrored = comb(r.n, r.m) - 1 - r.rank
    colex = _colex_unrank(mirrored, r.n, r.m)
    return [r.n - 1 - c for c in reversed(colex)]


def rank_subset(s: Iterable[int], n: int, m: int | None = None) -> SubsetRank:
    elems = sorted(set(s))
    m = len(elems) if m is None else m
    if len(elems) != m or (elems and (elems[0] < 0 or elems[-1] >= n)):
        raise OUT_OF_RANGE({"reason": "not an m-subset of [0, n)", "n": n, "m": m})
    mirrored = [n - 1 - c for c in reversed(elems)]
    return SubsetRank(n, m, comb(n, m) - 1 - _colex_rank(mirrored))


# ──────────────────────────────────────────────────────────────
# Permutations (Lehmer code)
# ──────────────────────────────────────────────────────────────
def unrank_perm(r: PermRank) -> list[int]:
    digits = []
    rank = r.rank
    for base in range(1, r.m + 1):
        rank, digit = divmod(rank, base)
        digits.append(digit)
    available = list(range(r.m))
    return [available.pop(d) for d in reversed(digits)]


def rank_perm(p: Sequence[int]) -> PermRank:
    m = len(p)
    if sorted(p) != list(range(m)):
        raise OUT_OF_RANGE({"reason": "not a permutation", "perm": list(p)})
    available = list(range(m))
    rank = 0
    for i, v in enumerate(p):
        idx = available.index(v)
        rank += idx * factorial(m - 1 - i)
        available.pop(idx)
    return PermRank(m, rank)


# ──────────────────────────────────────────────────────────────
# Combined map: rank = subset_rank * m! + perm_rank
# ──────────────────────────────────────────────────────────────
def split_combined(r: SetPermRank) -> tuple[SubsetRank, PermRank]:
    q, s = divmod(r.rank, factorial(r.m))
    return SubsetRank(r.n, r.m, q), PermRank(r.m, s)


def join_combined(subset: SubsetRank, perm: PermRank) -> SetPermRank:
    if subset.m != perm.m:
        raise OUT_OF_RANGE({"reason": "degree mismatch", "subset_m": subset.m, "perm_m": perm.m})
    return SetPermRank(subset.n, subset.m, subset.rank * factorial(perm.m) + perm.rank)


def unrank_set_perm(r: SetPermRank) -> tuple[list[int], list[int]]:
    """Sorted set and permutation carried by a combined rank."""
    subset, perm = split_combined(r)
    return unrank_subset(subset), unrank_perm(perm)


def rank_set_perm(values: Iterable[int], perm: Sequence[int], n: int) -> SetPermRank:
    subset = rank_subset(values, n)
    return join_combined(subset, rank_perm(perm))
