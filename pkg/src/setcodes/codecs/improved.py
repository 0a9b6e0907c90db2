# setcodes/codecs/improved.py
"""
Two-half single-substitution code with an XOR indicator bit.

Strings are cut into halves a | b. The parity b_e of the second halves of all
strings is stored in the second reserved column at the rows with the two
largest b-values, where the pair cancels in the parity, and in the first
reserved column at the row with the largest a-value (the two largest when
four copies are requested). One substitution corrupts at most one copy, so
the majority of the copies and the recomputed parity tell which half took
the flip, and the other half's sorted order can be trusted.
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
from setcodes.codecs.base import Codec, PartGeometry, SetCodec, column_bits, match_rows, part_order
from setcodes.config.settings import Settings
from setcodes.core.bits import BitString, Word, canonical_rows
from setcodes.core.params import Params
from setcodes.ecc.hamming import HammingCode, redundancy_bits
from setcodes.errors import INADMISSIBLE_PARAMS, NO_MAJORITY, OUT_OF_RANGE, RESIDUAL_INCONSISTENCY

DEFAULT_INDICATOR_COPIES = 3
# copies in the second column; an even count keeps e · x_⊕ unchanged
SECOND_COLUMN_COPIES = 2


@dataclass(frozen=True)
class ImprovedLayout:
    M: int
    L: int
    t: int
    """Hamming redundancy of one s-vector."""

    h: int
    """Hamming redundancy of the joint payload (d3, d4)."""

    d3_bits: int
    d4_bits: int
    copies: int = DEFAULT_INDICATOR_COPIES

    @classmethod
    def from_params(cls, params: Params, copies: int = DEFAULT_INDICATOR_COPIES) -> ImprovedLayout:
        M, L = params.M, params.L
        if copies not in (3, 4):
            raise OUT_OF_RANGE({"reason": "indicator copies must be 3 or 4", "copies": copies})
        if params.K != 1:
            raise INADMISSIBLE_PARAMS({"reason": "the two-half code corrects exactly one substitution", "K": params.K})
        if L % 2 or L < 4:
            raise INADMISSIBLE_PARAMS({"reason": "L must be even, at least 4", "L": L})
        if M**4 > 1 << L:
            raise INADMISSIBLE_PARAMS({"reason": "M > 2^(L/4)", "M": M, "L": L})
        t = redundancy_bits((L - 2) * M)
        d3 = M - t - (copies - SECOND_COLUMN_COPIES)
        room = M - t - SECOND_COLUMN_COPIES
        if d3 < 1 or room < 2:
            raise INADMISSIBLE_PARAMS({"reason": "reserved columns leave no payload", "M": M, "L": L})
        d4 = 0
        for d in range(1, room):
            if d + redundancy_bits(d3 + d) <= room:
                d4 = d
        if d4 == 0:
            raise INADMISSIBLE_PARAMS({"reason": "second column leaves no payload", "M": M, "L": L})
        return cls(M, L, t, redundancy_bits(d3 + d4), d3, d4, copies)

    @property
    def first_copies(self) -> int:
        return self.copies - SECOND_COLUMN_COPIES

    @property
    def half(self) -> int:
        return self.L // 2

    @property
    def universe(self) -> int:
        return 1 << (self.half - 1)

    @property
    def second_slack(self) -> int:
        return self.M - SECOND_COLUMN_COPIES - self.t - self.d4_bits - self.h

    @property
    def e_mask(self) -> int:
        """0^{L/2} 1^{L/2} as an integer."""
        return (1 << self.half) - 1


@dataclass(frozen=True)
class ImprovedMessage:
    d1: SubsetRank
    d2: SetPermRank
    d3: BitString
    d4: BitString


class ImprovedCodec(SetCodec[ImprovedMessage]):
    codec = Codec.SINGLE_IMPROVED

    def __init__(
        self,
        params: Params,
        settings: Settings | dict | None = None,
        indicator_copies: int = DEFAULT_INDICATOR_COPIES,
    ):
        super().__init__(params, settings)
        self.layout = ImprovedLayout.from_params(params, indicator_copies)
        self.geometry = PartGeometry(params.L, 2)
        self._string_code = HammingCode.for_length(2 * params.M * self.geometry.value_bits)
        self._payload_code = HammingCode.for_length(self.layout.d3_bits + self.layout.d4_bits)

    @property
    def budget(self) -> int:
        return 1

    # ───── Message space ─────
    def radices(self) -> list[int]:
        n, M = self.layout.universe, self.params.M
        return [comb(n, M), set_perm_count(n, M), 1 << self.layout.d3_bits, 1 << self.layout.d4_bits]

    def to_digits(self, msg: ImprovedMessage) -> list[int]:
        return [msg.d1.rank, msg.d2.rank, msg.d3.value, msg.d4.value]

    def from_digits(self, digits: Sequence[int]) -> ImprovedMessage:
        n, M = self.layout.universe, self.params.M
        return ImprovedMessage(
            d1=SubsetRank(n, M, digits[0]),
            d2=SetPermRank(n, M, digits[1]),
            d3=BitString(digits[2], self.layout.d3_bits),
            d4=BitString(digits[3], self.layout.d4_bits),
        )

    # ───── Encoding ─────
    def part_values(self, msg: ImprovedMessage) -> list[tuple[int, int]]:
        a = unrank_subset(msg.d1)
        b, pi = unrank_set_perm(msg.d2)
        return [(a[i], b[pi[i]]) for i in range(self.params.M)]

    def s_vectors(self, msg: ImprovedMessage) -> list[BitString]:
        values = self.part_values(msg)
        return [self.geometry.s_vector([values[i] for i in part_order(values, j)]) for j in range(2)]

    def parity(self, rows: Sequence[BitString]) -> int:
        """e · x_xor mod 2 over the given rows."""
        mask = self.layout.e_mask
        return sum((r.value & mask).bit_count() for r in rows) & 1

    def _copies_per_column(self) -> tuple[int, int]:
        return self.layout.first_copies, SECOND_COLUMN_COPIES

    def encode(self, msg: ImprovedMessage) -> Word:
        self.pack(msg)
        lay, M = self.layout, self.params.M
        values = self.part_values(msg)
        orders = [part_order(values, j) for j in range(2)]
        s1, s2 = (self.geometry.s_vector([values[i] for i in order]) for order in orders)
        payload_red = self._payload_code.redundancy(BitString.concat([msg.d3, msg.d4]))
        # indicator positions stay zero until the parity is known
        contents = [
            BitString.concat([msg.d3, self._string_code.redundancy(s1), BitString.zeros(lay.first_copies)]),
            BitString.concat([
                msg.d4,
                payload_red,
                BitString.zeros(lay.second_slack),
                self._string_code.redundancy(s2),
                BitString.zeros(SECOND_COLUMN_COPIES),
            ]),
        ]
        cols = [[0, 0] for _ in range(M)]
        for j in range(2):
            bits = contents[j].bits()
            for pos, i in enumerate(orders[j]):
                cols[i][j] = bits[pos]
        b_e = self.parity([self.geometry.join(values[i], cols[i]) for i in range(M)])
        for j, n in enumerate(self._copies_per_column()):
            for i in orders[j][-n:]:
                cols[i][j] = b_e
        return Word.of(self.geometry.join(values[i], cols[i]) for i in range(M))

    # ───── Decoding ─────
    def indicator_copies(self, rows, values, cols) -> list[int]:
        copies = []
        for j, n in enumerate(self._copies_per_column()):
            order = part_order(values, j, rows)
            copies.extend(cols[i][j] for i in order[-n:])
        return copies

    def trusted_part(self, word: Word) -> int:
        """0 when the first half is trusted, 1 for the second."""
        rows = canonical_rows(word)
        split = [self.geometry.split(r) for r in rows]
        return self._trusted_part(rows, [v for v, _ in split], [c for _, c in split])

    def _trusted_part(self, rows, values, cols) -> int:
        copies = self.indicator_copies(rows, values, cols)
        ones = sum(copies)
        if 2 * ones == len(copies):
            raise NO_MAJORITY({"indicator_copies": copies})
        b_e = int(ones * 2 > len(copies))
        flipped_second = self.parity(rows) != b_e
        self._logger.debug("indicator %d, substitution in %s half", b_e, "second" if flipped_second else "first")
        return 0 if flipped_second else 1

    def _decode(self, word: Word) -> ImprovedMessage:
        lay, M = self.layout, self.params.M
        rows = canonical_rows(word)
        split = [self.geometry.split(r) for r in rows]
        values, cols = [v for v, _ in split], [c for _, c in split]

        trusted = self._trusted_part(rows, values, cols)
        order = part_order(values, trusted, rows)
        s = self.geometry.s_vector([values[i] for i in order])
        column = column_bits(cols, trusted, order)
        if trusted == 0:
            red = column.slice(lay.d3_bits + 1, lay.d3_bits + lay.t)
        else:
            red = column.slice(M - SECOND_COLUMN_COPIES - lay.t + 1, M - SECOND_COLUMN_COPIES)
        fixed, _ = self._string_code.correct(s, red)
        truth = sorted(self.geometry.parse_s_vector(fixed, M))
        if any(len({t[p] for t in truth}) != M for p in range(2)):
            raise RESIDUAL_INCONSISTENCY({"reason": "corrected s-vector repeats a part value"})

        owners = match_rows(values, truth, need=1, parts=[trusted])
        carrier = {owner: r for r, owner in enumerate(owners)}
        first = BitString.from_bits(cols[carrier[i]][0] for i in range(M))
        b_order = sorted(range(M), key=lambda i: truth[i][1])
        second = BitString.from_bits(cols[carrier[i]][1] for i in b_order)
        data = BitString.concat([first.slice(1, lay.d3_bits), second.slice(1, lay.d4_bits)])
        red = second.slice(lay.d4_bits + 1, lay.d4_bits + lay.h)
        data, _ = self._payload_code.correct(data, red)

        n = lay.universe
        b = sorted(t[1] for t in truth)
        b_pos = {v: i for i, v in enumerate(b)}
        return ImprovedMessage(
            d1=rank_subset([t[0] for t in truth], n, M),
            d2=rank_set_perm(b, [b_pos[t[1]] for t in truth], n),
            d3=data.slice(1, lay.d3_bits),
            d4=data.slice(lay.d3_bits + 1, lay.d3_bits + lay.d4_bits),
        )


def encode1_improved(msg: ImprovedMessage, params: Params) -> Word:
    return ImprovedCodec(params).encode(msg)


def decode1_improved(w: Word, params: Params) -> ImprovedMessage:
    return ImprovedCodec(params).decode(w)
