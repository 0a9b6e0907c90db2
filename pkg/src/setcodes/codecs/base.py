# setcodes/codecs/base.py
from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Generic, Sequence, TypeVar

import numpy as np

from setcodes.config.settings import Settings, resolve_settings
from setcodes.core.bits import BitString, Word, matched_distance
from setcodes.core.params import Params, log2_int
from setcodes.core.patterns import random_below
from setcodes.codecs.message import compose, decompose
from setcodes.errors import COLLAPSED_WORD, NO_MAJORITY, RESIDUAL_INCONSISTENCY

MsgT = TypeVar("MsgT")


# ──────────────────────────────────────────────────────────────
# Codec Enum
# ──────────────────────────────────────────────────────────────
class Codec(str, Enum):
    SINGLE = "single"
    SINGLE_IMPROVED = "single-improved"
    MULTI = "multi"
    ANCHOR = "anchor"

    def __str__(self):
        return self.value


# ──────────────────────────────────────────────────────────────
# SetCodec – shared message plumbing and the strict post-check
# ──────────────────────────────────────────────────────────────
class SetCodec(ABC, Generic[MsgT]):
    codec: Codec

    def __init__(self, params: Params, settings: Settings | dict | None = None):
        self.params = params
        self.settings = resolve_settings(settings)
        self._logger = logging.getLogger(f"setcodes.codecs.{self.codec.value}")

    @property
    def budget(self) -> int:
        """Number of substitutions the code corrects."""
        return self.params.K

    # ───── Message space ─────
    @abstractmethod
    def radices(self) -> list[int]: ...

    @abstractmethod
    def to_digits(self, msg: MsgT) -> list[int]: ...

    @abstractmethod
    def from_digits(self, digits: Sequence[int]) -> MsgT: ...

    def message_space_log2(self) -> float:
        return sum(log2_int(r) for r in self.radices())

    def redundancy(self) -> float:
        """log₂ C(2^L, M) - log₂ |C|."""
        return self.params.word_space_log2() - self.message_space_log2()

    def pack(self, msg: MsgT) -> int:
        return compose(self.to_digits(msg), self.radices())

    def unpack(self, value: int) -> MsgT:
        return self.from_digits(decompose(value, self.radices()))

    def random_message(self, rng: np.random.Generator) -> MsgT:
        return self.from_digits([random_below(rng, r) for r in self.radices()])

    # ───── Encode / decode ─────
    @abstractmethod
    def encode(self, msg: MsgT) -> Word: ...

    @abstractmethod
    def _decode(self, word: Word) -> MsgT: ...

    def decode(self, word: Word, strict: bool = True) -> MsgT:
        if word.size != self.params.M or word.length != self.params.L:
            raise COLLAPSED_WORD({"size": word.size, "length": word.length, "expected": [self.params.M, self.params.L]})
        msg = self._decode(word)
        if strict:
            dist = matched_distance(self.encode(msg), word, limit=self.budget)
            if dist is None or dist > self.budget:
                raise RESIDUAL_INCONSISTENCY({"distance": dist, "budget": self.budget})
        return msg

    def encode_int(self, value: int) -> Word:
        return self.encode(self.unpack(value))

    def decode_int(self, word: Word, strict: bool = True) -> int:
        return self.pack(self.decode(word, strict))


# ──────────────────────────────────────────────────────────────
# Part geometry shared by the sorted-part codecs
# ──────────────────────────────────────────────────────────────
@dataclass(frozen=True)
class PartGeometry:
    """
    Every string is cut into ``parts`` slices of width L/parts. The first
    width-1 bits of a slice hold its sortable value, the last bit is the
    slice's reserved column.
    """

    L: int
    parts: int

    @property
    def width(self) -> int:
        return self.L // self.parts

    @property
    def value_bits(self) -> int:
        return self.width - 1

    def column(self, part: int) -> int:
        """1-based column index of the reserved bit of ``part`` (0-based)."""
        return (part + 1) * self.width

    def split(self, row: BitString) -> tuple[tuple[int, ...], tuple[int, ...]]:
        mask = (1 << self.value_bits) - 1
        values, cols = [], []
        for p in range(self.parts):
            col_shift = self.L - self.column(p)
            values.append((row.value >> (col_shift + 1)) & mask)
            cols.append((row.value >> col_shift) & 1)
        return tuple(values), tuple(cols)

    def join(self, values: Sequence[int], cols: Sequence[int]) -> BitString:
        acc = 0
        for value, col in zip(values, cols):
            acc = (((acc << self.value_bits) | value) << 1) | col
        return BitString(acc, self.L)

    def s_vector(self, ordered: Sequence[Sequence[int]]) -> BitString:
        """Concatenate part values part-major over rows in the given order."""
        acc = 0
        vb = self.value_bits
        for p in range(self.parts):
            for values in ordered:
                acc = (acc << vb) | values[p]
        return BitString(acc, self.parts * len(ordered) * vb)

    def parse_s_vector(self, s: BitString, rows: int) -> list[tuple[int, ...]]:
        vb = self.value_bits
        mask = (1 << vb) - 1
        total = self.parts * rows
        flat = [(s.value >> (vb * (total - 1 - i))) & mask for i in range(total)]
        return [tuple(flat[p * rows + r] for p in range(self.parts)) for r in range(rows)]


def part_order(values: Sequence[Sequence[int]], part: int, rows: Sequence[BitString] | None = None) -> list[int]:
    """Row indices sorted by one part; full strings break ties."""
    if rows is None:
        return sorted(range(len(values)), key=lambda i: values[i][part])
    return sorted(range(len(values)), key=lambda i: (values[i][part], rows[i].value))


def column_bits(cols: Sequence[Sequence[int]], part: int, order: Sequence[int]) -> BitString:
    return BitString.from_bits(cols[i][part] for i in order)


def set_key(tuples: Sequence[Sequence[int]], parts: int) -> tuple[frozenset[int], ...]:
    return tuple(frozenset(t[p] for t in tuples) for p in range(parts))


def majority_rows(
    candidates: Sequence[list[tuple[int, ...]] | None], parts: int, rows: int, need: int
) -> list[tuple[int, ...]]:
    """
    Row tuples of the winning candidate.

    Candidates vote with their decoded set-tuple; a set-tuple needs ``need``
    votes. Among the winners the most common row pairing is returned.
    """
    keyed = [
        (set_key(c, parts), c)
        for c in candidates
        if c is not None and all(len(s) == rows for s in set_key(c, parts))
    ]
    votes = Counter(key for key, _ in keyed)
    if not votes:
        raise NO_MAJORITY({"votes": 0, "need": need})
    winner, count = votes.most_common(1)[0]
    if count < need:
        raise NO_MAJORITY({"votes": count, "need": need})
    pairings = Counter(frozenset(c) for key, c in keyed if key == winner)
    return sorted(pairings.most_common(1)[0][0])


def match_rows(
    received: Sequence[Sequence[int]],
    truth: Sequence[Sequence[int]],
    need: int,
    parts: Sequence[int] | None = None,
) -> list[int]:
    """
    For every received row, the index of the true row it came from.

    A received row belongs to the true row sharing at least ``need`` of the
    listed parts exactly. Raises when some true row is claimed twice.
    """
    parts = list(range(len(truth[0]))) if parts is None else list(parts)
    lookup = [{t[p]: i for i, t in enumerate(truth)} for p in range(len(truth[0]))]
    owners = []
    for values in received:
        votes = Counter(lookup[p][values[p]] for p in parts if values[p] in lookup[p])
        best = votes.most_common(2)
        if not best or best[0][1] < need or (len(best) > 1 and best[1][1] == best[0][1]):
            raise RESIDUAL_INCONSISTENCY({"reason": "row matches no unique codeword row"})
        owners.append(best[0][0])
    if len(set(owners)) != len(owners):
        raise RESIDUAL_INCONSISTENCY({"reason": "two received rows claim one codeword row"})
    return owners
