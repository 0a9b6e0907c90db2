# setcodes/codecs/anchor.py
"""
Anchor code for K substitutions.

The first L' bits of every string are an anchor drawn from an ensemble member
(a distance-(2K+1) set containing the all-ones string). Rows are laid out in
descending anchor order. Row 1, whose anchor is all ones, also carries the
RS_{2K} redundancy of the member's characteristic vector, protected by its
own RS_K block. The tail of row M carries RS_K of the whole concatenation.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from setcodes.codecs.base import Codec, SetCodec
from setcodes.codecs.ensemble import AnchorEnsemble, CharacteristicVector, anchor_length, build_ensemble
from setcodes.config.settings import Settings
from setcodes.core.bits import BitString, Word, canonical_rows
from setcodes.core.params import Params, clog2
from setcodes.ecc.reed_solomon import RsCode
from setcodes.errors import ANCHOR_NOT_FOUND, INADMISSIBLE_PARAMS, RangeError


@dataclass(frozen=True)
class AnchorLayout:
    M: int
    L: int
    K: int
    anchor_len: int

    @classmethod
    def from_params(cls, params: Params) -> AnchorLayout:
        M, L, K = params.M, params.L, params.K
        if K < 1 or M < 2:
            raise INADMISSIBLE_PARAMS({"reason": "the anchor code needs K >= 1 and M >= 2", "M": M, "K": K})
        layout = cls(M, L, K, anchor_length(M, K))
        if layout.head > L:
            raise INADMISSIBLE_PARAMS({"reason": "L' + 4KL' + 2K ceil(log 4KL') > L", "L": L, "head": layout.head})
        if layout.anchor_len + layout.string_block > L:
            raise INADMISSIBLE_PARAMS({"reason": "last row cannot hold its redundancy block", "L": L})
        if layout.string_code.redundancy_bits > layout.string_block:
            raise INADMISSIBLE_PARAMS({"reason": "Reed-Solomon symbols outgrow the last block", "M": M, "L": L})
        return layout

    @property
    def char_code(self) -> RsCode:
        """RS_{2K} over the 2^{L'}-bit characteristic vector."""
        return RsCode.for_data(1 << self.anchor_len, 2 * self.K)

    @property
    def guard_code(self) -> RsCode:
        """RS_K over the characteristic-vector redundancy."""
        return RsCode.for_data(self.char_code.redundancy_bits, self.K)

    @property
    def head(self) -> int:
        """Anchor plus both redundancy blocks of row 1."""
        return self.anchor_len + self.char_code.redundancy_bits + self.guard_code.redundancy_bits

    @property
    def string_block(self) -> int:
        return 2 * self.K * clog2(self.M * self.L)

    @property
    def string_code(self) -> RsCode:
        return RsCode.for_data(self.M * self.L - self.string_block, self.K)

    @property
    def data_bits(self) -> int:
        body = self.L - self.anchor_len
        return (self.L - self.head) + (self.M - 2) * body + (body - self.string_block)

    def data_spans(self) -> list[tuple[int, int]]:
        """1-based inclusive spans of d_2 inside the row-major concatenation."""
        L, M = self.L, self.M
        spans = [(self.head + 1, L)]
        spans += [((i - 1) * L + self.anchor_len + 1, i * L) for i in range(2, M)]
        spans.append(((M - 1) * L + self.anchor_len + 1, M * L - self.string_block))
        return spans


@dataclass(frozen=True)
class AnchorMessage:
    d1: int
    """Rank of the anchor set in the ensemble."""

    d2: BitString


class AnchorCodec(SetCodec[AnchorMessage]):
    codec = Codec.ANCHOR

    def __init__(
        self,
        params: Params,
        settings: Settings | dict | None = None,
        ensemble: AnchorEnsemble | None = None,
    ):
        super().__init__(params, settings)
        self.layout = AnchorLayout.from_params(params)
        self.ensemble = ensemble if ensemble is not None else build_ensemble(params, self.settings)

    # ───── Message space ─────
    def radices(self) -> list[int]:
        return [self.ensemble.count, 1 << self.layout.data_bits]

    def to_digits(self, msg: AnchorMessage) -> list[int]:
        return [msg.d1, msg.d2.value]

    def from_digits(self, digits: Sequence[int]) -> AnchorMessage:
        return AnchorMessage(digits[0], BitString(digits[1], self.layout.data_bits))

    # ───── Encoding ─────
    def encode(self, msg: AnchorMessage) -> Word:
        self.pack(msg)
        lay = self.layout
        anchors = self.ensemble.unrank(msg.d1)
        char_red = lay.char_code.redundancy(CharacteristicVector.of(anchors, lay.anchor_len).bits)

        pieces: list[BitString] = [BitString(anchors[0], lay.anchor_len), char_red, lay.guard_code.redundancy(char_red)]
        cursor = 1
        for i, (start, stop) in enumerate(lay.data_spans()):
            if i:
                pieces.append(BitString(anchors[i], lay.anchor_len))
            width = stop - start + 1
            pieces.append(msg.d2.slice(cursor, cursor + width - 1))
            cursor += width
        s = BitString.concat(pieces)
        red = lay.string_code.redundancy(s)
        full = BitString.concat([s, BitString.zeros(lay.string_block - red.length), red])
        return Word.of(full.chunks(lay.L))

    # ───── Decoding ─────
    def anchor_row(self, rows: Sequence[BitString]) -> int:
        """Index of the only row whose prefix has at least L' - K ones."""
        lay = self.layout
        hits = [i for i, r in enumerate(rows) if r.slice(1, lay.anchor_len).weight() >= lay.anchor_len - lay.K]
        if len(hits) != 1:
            raise ANCHOR_NOT_FOUND({"reason": "rows passing the all-ones test", "count": len(hits)})
        return hits[0]

    def recover_anchors(self, rows: Sequence[BitString]) -> tuple[int, ...]:
        lay = self.layout
        first = rows[self.anchor_row(rows)]
        char_len = lay.char_code.redundancy_bits
        char_red = lay.guard_code.correct_bits(
            first.slice(lay.anchor_len + 1, lay.anchor_len + char_len),
            first.slice(lay.anchor_len + char_len + 1, lay.head),
        )
        received = CharacteristicVector.of([r.slice(1, lay.anchor_len).value for r in rows], lay.anchor_len)
        fixed = CharacteristicVector(lay.char_code.correct_bits(received.bits, char_red))
        try:
            self.ensemble.rank(fixed.members())
        except RangeError as e:
            raise ANCHOR_NOT_FOUND({"reason": "corrected vector is not an anchor set", "weight": fixed.weight}) from e
        return fixed.members()

    def _decode(self, word: Word) -> AnchorMessage:
        lay = self.layout
        rows = canonical_rows(word)
        anchors = self.recover_anchors(rows)
        self._logger.debug("anchor set %s", [format(a, "x") for a in anchors])

        ordered: list[BitString | None] = [None] * lay.M
        for r in rows:
            prefix = r.slice(1, lay.anchor_len).value
            near = [i for i, a in enumerate(anchors) if (a ^ prefix).bit_count() <= lay.K]
            if len(near) != 1 or ordered[near[0]] is not None:
                raise ANCHOR_NOT_FOUND({"reason": "row matches no unique anchor", "row": str(r)})
            ordered[near[0]] = r

        full = BitString.concat(ordered)
        n = lay.M * lay.L - lay.string_block
        red_len = lay.string_code.redundancy_bits
        s = lay.string_code.correct_bits(full.slice(1, n), full.slice(lay.M * lay.L - red_len + 1, lay.M * lay.L))
        d2 = BitString.concat(s.slice(start, stop) for start, stop in lay.data_spans())
        return AnchorMessage(self.ensemble.rank(anchors), d2)


def encodeA(msg: AnchorMessage, params: Params) -> Word:
    return AnchorCodec(params).encode(msg)


def decodeA(w: Word, params: Params) -> AnchorMessage:
    return AnchorCodec(params).decode(w)
