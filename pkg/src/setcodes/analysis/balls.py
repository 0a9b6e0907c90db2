# setcodes/analysis/balls.py
"""
Brute-force balls, confusable sets and greedy packing codes.

Internally a word is a frozenset of integers (strings of a fixed length L);
the public functions take and return ``Word`` objects.
"""
from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Iterator

from setcodes.config.settings import Settings, resolve_settings
from setcodes.core.bits import BitString, Word, canonical_rows, min_pairwise_distance
from setcodes.errors import GUARD_EXCEEDED, OUT_OF_RANGE
from setcodes.schemas import BallReport, ConfusableReport

logger = logging.getLogger(__name__)

IntWord = frozenset[int]


def to_ints(w: Word) -> IntWord:
    return frozenset(s.value for s in w.strings)


def to_word(strings: Iterable[int], L: int) -> Word:
    return Word.of(BitString(v, L) for v in strings)


def word_strs(w: Word) -> list[str]:
    return [str(s) for s in canonical_rows(w)]


def ball_bound(M: int, L: int, k: int) -> int:
    """Σ_{ℓ≤k} C(ML, ℓ)."""
    return sum(comb(M * L, ell) for ell in range(min(k, M * L) + 1))


def _check_guard(work: int, guard: int, what: str) -> None:
    if work > guard:
        logger.warning("%s refused: %d objects exceed guard %d", what, work, guard)
        raise GUARD_EXCEEDED({"what": what, "work": work, "guard": guard})


def ball_ints(strings: IntWord, L: int, k: int) -> set[IntWord]:
    """All words reachable from ``strings`` with at most ``k`` flips."""
    rows = sorted(strings)
    cells = [(r, 1 << c) for r in range(len(rows)) for c in range(L)]
    out: set[IntWord] = set()
    for weight in range(min(k, len(cells)) + 1):
        for picked in combinations(cells, weight):
            flipped = list(rows)
            for r, mask in picked:
                flipped[r] ^= mask
            out.add(frozenset(flipped))
    return out


def all_words(M: int, L: int) -> Iterator[IntWord]:
    """Every M-subset of {0,1}^L, scanned in lexicographic order of sorted tuples."""
    for combo in combinations(range(1 << L), M):
        yield frozenset(combo)


# ──────────────────────────────────────────────────────────────
# Ball
# ──────────────────────────────────────────────────────────────
@dataclass(frozen=True)
class Ball:
    center: Word
    K: int
    members: frozenset[Word]

    @property
    def count(self) -> int:
        return len(self.members)

    @property
    def upper_bound(self) -> int:
        return ball_bound(self.center.size, self.center.length, self.K)

    @property
    def tight_expected(self) -> bool:
        """Pairwise distance ≥ 2K+1 forces the upper bound to be met."""
        d = min_pairwise_distance(self.center)
        return d is None or d >= 2 * self.K + 1

    def report(self) -> BallReport:
        return BallReport(
            center=word_strs(self.center),
            K=self.K,
            count=self.count,
            upper_bound=self.upper_bound,
            tight_expected=self.tight_expected,
            members=sorted(word_strs(m) for m in self.members),
        )


def enumerate_ball(w: Word, k: int, settings: Settings | dict | None = None) -> Ball:
    if k < 0:
        raise OUT_OF_RANGE({"reason": "k must be non-negative", "k": k})
    settings = resolve_settings(settings)
    _check_guard(ball_bound(w.size, w.length, k), settings.guard, "ball")
    members = ball_ints(to_ints(w), w.length, k)
    return Ball(w, k, frozenset(to_word(m, w.length) for m in members))


# ──────────────────────────────────────────────────────────────
# Reverse balls and confusable sets
# ──────────────────────────────────────────────────────────────
@dataclass
class ReverseIndex:
    """R_K for every channel output reachable from some M-word of length L."""

    M: int
    L: int
    K: int
    reverse: dict[IntWord, set[IntWord]] = field(default_factory=lambda: defaultdict(set))
    balls: dict[IntWord, set[IntWord]] = field(default_factory=dict)

    @classmethod
    def build(cls, M: int, L: int, K: int, settings: Settings | dict | None = None) -> ReverseIndex:
        settings = resolve_settings(settings)
        _check_guard(comb(1 << L, M) * ball_bound(M, L, K), settings.guard, "reverse index")
        index = cls(M, L, K)
        for u in all_words(M, L):
            ball = ball_ints(u, L, K)
            index.balls[u] = ball
            for out in ball:
                index.reverse[out].add(u)
        logger.debug("Reverse index (M=%d, L=%d, K=%d): %d outputs", M, L, K, len(index.reverse))
        return index

    def reverse_of(self, output: IntWord) -> set[IntWord]:
        return self.reverse.get(output, set())

    def confusable(self, w: IntWord) -> set[IntWord]:
        out: set[IntWord] = set()
        for v in self.balls[w]:
            out |= self.reverse[v]
        return out

    def max_confusable(self) -> int:
        return max(len(self.confusable(w)) for w in self.balls)

    @property
    def reverse_bound(self) -> int:
        """2(2ML)^K."""
        return 2 * (2 * self.M * self.L) ** self.K


@dataclass(frozen=True)
class Confusable:
    center: Word
    K: int
    reverse: dict[Word, frozenset[Word]]
    """R_K(W') for every W' in the ball around the center."""

    union: frozenset[Word]
    """D_K(center)."""

    reverse_bound: int

    @property
    def max_reverse(self) -> int:
        return max(len(r) for r in self.reverse.values())

    def report(self) -> ConfusableReport:
        return ConfusableReport(
            center=word_strs(self.center),
            K=self.K,
            ball_count=len(self.reverse),
            confusable_count=len(self.union),
            max_reverse=self.max_reverse,
            reverse_bound=self.reverse_bound,
        )


def enumerate_confusable(
    w: Word, k: int, settings: Settings | dict | None = None, index: ReverseIndex | None = None
) -> Confusable:
    M, L = w.size, w.length
    if index is None or (index.M, index.L, index.K) != (M, L, k):
        index = ReverseIndex.build(M, L, k, settings)
    center = to_ints(w)
    reverse = {
        to_word(out, L): frozenset(to_word(u, L) for u in index.reverse_of(out))
        for out in index.balls[center]
    }
    union = frozenset(to_word(u, L) for u in index.confusable(center))
    return Confusable(w, k, reverse, union, index.reverse_bound)


# ──────────────────────────────────────────────────────────────
# Greedy packing
# ──────────────────────────────────────────────────────────────
@dataclass(frozen=True)
class Packing:
    M: int
    L: int
    K: int
    code: tuple[Word, ...]
    max_confusable: int

    @property
    def size(self) -> int:
        return len(self.code)

    @property
    def floor_bound(self) -> int:
        """⌊C(2^L, M) / D⌋."""
        return comb(1 << self.L, self.M) // self.max_confusable


def greedy_packing(M: int, L: int, k: int, settings: Settings | dict | None = None) -> Packing:
    index = ReverseIndex.build(M, L, k, settings)
    removed: set[IntWord] = set()
    code: list[IntWord] = []
    for w in all_words(M, L):
        if w in removed:
            continue
        code.append(w)
        removed |= index.confusable(w)
    logger.info("Greedy packing (M=%d, L=%d, K=%d): %d codewords", M, L, k, len(code))
    return Packing(M, L, k, tuple(to_word(c, L) for c in code), index.max_confusable())


def balls_disjoint(code: Iterable[Word], k: int) -> bool:
    seen: set[IntWord] = set()
    total = 0
    for w in code:
        ball = ball_ints(to_ints(w), w.length, k)
        total += len(ball)
        seen |= ball
    return len(seen) == total
