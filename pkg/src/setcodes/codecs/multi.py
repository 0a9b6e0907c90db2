# setcodes/codecs/multi.py
"""
K-substitution code with 2K+1 parts.

Strings are cut into 2K+1 parts. Each part of a codeword carries a set of M
distinct values, so any two strings differ in every part and sit at distance
at least 2K+1. The reserved column of part j, read in part-j order, holds the
column payload, its Reed-Solomon redundancy and, in the bottom block, the
Reed-Solomon redundancy of the part-j-sorted concatenation of all values.
K flips disturb at most K of the 2K+1 sorted views, so the other K+1 agree.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from setcodes.combinatorics import (
    SetPermRank,
    SubsetRank,
    rank_set_perm,
    rank_subset,
    set_perm_count,
    unrank_set_perm,
    unrank_subset,
)
from setcodes.codecs.base import (
    Codec,
    PartGeometry,
    SetCodec,
    column_bits,
    majority_rows,
    match_rows,
    part_order,
)
from setcodes.config.settings import Settings
from setcodes.core.bits import BitString, Word, canonical_rows
from setcodes.core.params import Params
from setcodes.ecc.reed_solomon import RsCode
from setcodes.errors import INADMISSIBLE_PARAMS, DecodeError


# ──────────────────────────────────────────────────────────────
# Layout
# ──────────────────────────────────────────────────────────────
@dataclass(frozen=True)
class MultiSubLayout:
    M: int
    L: int
    K: int
    payload_bits: int
    """Payload bits per reserved column; zero when the redundancy blocks fill it."""

    payload_block: int
    """2K⌈log M⌉, the room reserved for RS_K of the payload."""

    string_block: int
    """2K⌈log ML⌉, the room reserved for RS_K of the sorted values."""

    @classmethod
    def from_params(cls, params: Params) -> MultiSubLayout:
        M, L, K = params.M, params.L, params.K
        parts = 2 * K + 1
        if K < 1:
            raise INADMISSIBLE_PARAMS({"reason": "the multi-part code needs K >= 1", "K": K})
        if L % parts:
            raise INADMISSIBLE_PARAMS({"reason": f"L must be a multiple of 2K+1 = {parts}", "L": L})
        if M ** (2 * parts) > 1 << L:
            raise INADMISSIBLE_PARAMS({"reason": "M > 2^(L/(2(2K+1)))", "M": M, "L": L, "K": K})
        payload_block = 2 * K * params.log_m
        string_block = 2 * K * params.log_ml
        if payload_block + string_block > M:
            raise INADMISSIBLE_PARAMS({"reason": "2K(ceil(log ML) + ceil(log M)) > M", "M": M, "L": L, "K": K})
        layout = cls(M, L, K, M - payload_block - string_block, payload_block, string_block)
        if layout.string_code.redundancy_bits > string_block or (
            layout.payload_code is not None and layout.payload_code.redundancy_bits > payload_block
        ):
            raise INADMISSIBLE_PARAMS({"reason": "Reed-Solomon symbols outgrow the reserved blocks", "M": M, "L": L})
        return layout

    @property
    def parts(self) -> int:
        return 2 * self.K + 1

    @property
    def part_width(self) -> int:
        return self.L // self.parts

    @property
    def universe(self) -> int:
        return 1 << (self.part_width - 1)

    @property
    def string_code(self) -> RsCode:
        return RsCode.for_data(self.parts * self.M * (self.part_width - 1), self.K)

    @property
    def payload_code(self) -> RsCode | None:
        return RsCode.for_data(self.payload_bits, self.K) if self.payload_bits else None

    @property
    def slack(self) -> int:
        used = self.payload_bits + self.string_code.redundancy_bits
        if self.payload_code is not None:
            used += self.payload_code.redundancy_bits
        return self.M - used


@dataclass(frozen=True)
class MultiSubMessage:
    sets: tuple[SubsetRank | SetPermRank, ...]
    """d_1 as a subset rank, then one set-permutation rank per further part."""

    payloads: tuple[BitString, ...]
    """One payload per reserved column."""


# ──────────────────────────────────────────────────────────────
# Codec
# ──────────────────────────────────────────────────────────────
class MultiSubCodec(SetCodec[MultiSubMessage]):
    codec = Codec.MULTI

    def __init__(self, params: Params, settings: Settings | dict | None = None):
        super().__init__(params, settings)
        self.layout = MultiSubLayout.from_params(params)
        self.geometry = PartGeometry(params.L, self.layout.parts)
        self._string_code = self.layout.string_code
        self._payload_code = self.layout.payload_code

    # ───── Message space ─────
    def radices(self) -> list[int]:
        lay, M = self.layout, self.params.M
        sp = set_perm_count(lay.universe, M)
        return [comb(lay.universe, M)] + [sp] * (lay.parts - 1) + [1 << lay.payload_bits] * lay.parts

    def to_digits(self, msg: MultiSubMessage) -> list[int]:
        return [s.rank for s in msg.sets] + [p.value for p in msg.payloads]

    def from_digits(self, digits: Sequence[int]) -> MultiSubMessage:
        lay, M = self.layout, self.params.M
        n, P = lay.universe, lay.parts
        sets = (SubsetRank(n, M, digits[0]),) + tuple(SetPermRank(n, M, d) for d in digits[1:P])
        payloads = tuple(BitString(d, lay.payload_bits) for d in digits[P : 2 * P])
        return MultiSubMessage(sets, payloads)

    # ───── Encoding ─────
    def part_values(self, msg: MultiSubMessage) -> list[tuple[int, ...]]:
        """Row i (in first-part order) holds (a_i, b_pi2(i), ..., z_piP(i))."""
        first = unrank_subset(msg.sets[0])
        rest = [unrank_set_perm(r) for r in msg.sets[1:]]
        return [tuple([first[i]] + [vals[perm[i]] for vals, perm in rest]) for i in range(self.params.M)]

    def s_vectors(self, msg: MultiSubMessage) -> list[BitString]:
        values = self.part_values(msg)
        return [
            self.geometry.s_vector([values[i] for i in part_order(values, j)])
            for j in range(self.layout.parts)
        ]

    def _column(self, payload: BitString, s: BitString) -> BitString:
        pieces = [payload]
        if self._payload_code is not None:
            pieces.append(self._payload_code.redundancy(payload))
        pieces += [BitString.zeros(self.layout.slack), self._string_code.redundancy(s)]
        return BitString.concat(pieces)

    def encode(self, msg: MultiSubMessage) -> Word:
        self.pack(msg)
        M, P = self.params.M, self.layout.parts
        values = self.part_values(msg)
        cols = [[0] * P for _ in range(M)]
        for j in range(P):
            order = part_order(values, j)
            s = self.geometry.s_vector([values[i] for i in order])
            content = self._column(msg.payloads[j], s).bits()
            for pos, i in enumerate(order):
                cols[i][j] = content[pos]
        return Word.of(self.geometry.join(values[i], cols[i]) for i in range(M))

    # ───── Decoding ─────
    def _read(self, word: Word):
        rows = canonical_rows(word)
        split = [self.geometry.split(r) for r in rows]
        return rows, [v for v, _ in split], [c for _, c in split]

    def candidates(self, word: Word) -> list[BitString | None]:
        """RS-corrected s-vector per sorting part; ``None`` where correction failed."""
        return self._candidates(*self._read(word))

    def _candidates(self, rows, values, cols) -> list[BitString | None]:
        M = self.params.M
        red_bits = self._string_code.redundancy_bits
        out: list[BitString | None] = []
        for j in range(self.layout.parts):
            order = part_order(values, j, rows)
            s = self.geometry.s_vector([values[i] for i in order])
            red = column_bits(cols, j, order).slice(M - red_bits + 1, M)
            try:
                out.append(self._string_code.correct_bits(s, red))
            except DecodeError as e:
                self._logger.debug("s-vector of part %d not correctable: %s", j + 1, e)
                out.append(None)
        return out

    def _decode(self, word: Word) -> MultiSubMessage:
        lay, M, K = self.layout, self.params.M, self.params.K
        rows, values, cols = self._read(word)
        parsed = [
            self.geometry.parse_s_vector(s, M) if s is not None else None
            for s in self._candidates(rows, values, cols)
        ]
        truth = majority_rows(parsed, lay.parts, M, need=K + 1)
        owners = match_rows(values, truth, need=K + 1)
        carrier = {owner: r for r, owner in enumerate(owners)}

        payloads = []
        for j in range(lay.parts):
            if self._payload_code is None:
                payloads.append(BitString.zeros(0))
                continue
            order = sorted(range(M), key=lambda i: truth[i][j])
            col = BitString.from_bits(cols[carrier[i]][j] for i in order)
            data = col.slice(1, lay.payload_bits)
            red = col.slice(lay.payload_bits + 1, lay.payload_bits + self._payload_code.redundancy_bits)
            payloads.append(self._payload_code.correct_bits(data, red))

        n = lay.universe
        sets: list[SubsetRank | SetPermRank] = [rank_subset([t[0] for t in truth], n, M)]
        for j in range(1, lay.parts):
            ordered = sorted(t[j] for t in truth)
            pos = {v: i for i, v in enumerate(ordered)}
            sets.append(rank_set_perm(ordered, [pos[t[j]] for t in truth], n))
        return MultiSubMessage(tuple(sets), tuple(payloads))


def encodeK(msg: MultiSubMessage, params: Params) -> Word:
    return MultiSubCodec(params).encode(msg)


def decodeK(w: Word, params: Params) -> MultiSubMessage:
    return MultiSubCodec(params).decode(w)
