# setcodes/codecs/single.py
"""
Three-part single-substitution code.

Every string is cut into parts a | b | c. The a-values of a codeword form a
set carried by a subset rank; b and c carry a set plus the permutation that
pairs them with the a-values. The reserved column of each part, read in that
part's sorted row order, stores a payload, its Hamming redundancy and the
Hamming redundancy of the part-sorted concatenation of all part values.
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
from setcodes.ecc.hamming import HammingCode, redundancy_bits
from setcodes.errors import INADMISSIBLE_PARAMS, DecodeError


# ──────────────────────────────────────────────────────────────
# Layout
# ──────────────────────────────────────────────────────────────
@dataclass(frozen=True)
class SingleSubLayout:
    M: int
    L: int
    t: int
    """Hamming redundancy of one s-vector."""

    h: int
    """Hamming redundancy of one column payload."""

    data_bits: int
    """Payload bits per reserved column."""

    @classmethod
    def from_params(cls, params: Params) -> SingleSubLayout:
        M, L = params.M, params.L
        if params.K != 1:
            raise INADMISSIBLE_PARAMS({"reason": "the three-part code corrects exactly one substitution", "K": params.K})
        if L % 3 or L < 6:
            raise INADMISSIBLE_PARAMS({"reason": "L must be a multiple of 3, at least 6", "L": L})
        if M**6 > 1 << L:
            raise INADMISSIBLE_PARAMS({"reason": "M > 2^(L/6)", "M": M, "L": L})
        if params.log_ml + params.log_m + 2 > M:
            raise INADMISSIBLE_PARAMS({"reason": "ceil(log ML) + ceil(log M) + 2 > M", "M": M, "L": L})
        t = redundancy_bits((L - 3) * M)
        room = M - t
        data_bits = 0
        for d in range(1, room):
            if d + redundancy_bits(d) <= room:
                data_bits = d
        if data_bits == 0:
            raise INADMISSIBLE_PARAMS({"reason": "reserved columns leave no payload", "M": M, "L": L})
        return cls(M, L, t, redundancy_bits(data_bits), data_bits)

    @property
    def part_width(self) -> int:
        return self.L // 3

    @property
    def universe(self) -> int:
        """Number of distinct part values, 2^(L/3 - 1)."""
        return 1 << (self.part_width - 1)

    @property
    def slack(self) -> int:
        return self.M - self.data_bits - self.h - self.t


@dataclass(frozen=True)
class SingleSubMessage:
    d1: SubsetRank
    d2: BitString
    d3: SetPermRank
    d4: BitString
    d5: SetPermRank
    d6: BitString


# ──────────────────────────────────────────────────────────────
# Codec
# ──────────────────────────────────────────────────────────────
class SingleSubCodec(SetCodec[SingleSubMessage]):
    codec = Codec.SINGLE

    def __init__(self, params: Params, settings: Settings | dict | None = None):
        super().__init__(params, settings)
        self.layout = SingleSubLayout.from_params(params)
        self.geometry = PartGeometry(params.L, 3)
        self._string_code = HammingCode.for_length(3 * params.M * self.geometry.value_bits)
        self._column_code = HammingCode.for_length(self.layout.data_bits)

    @property
    def budget(self) -> int:
        return 1

    # ───── Message space ─────
    def radices(self) -> list[int]:
        n, M, bits = self.layout.universe, self.params.M, 1 << self.layout.data_bits
        sp = set_perm_count(n, M)
        return [comb(n, M), bits, sp, bits, sp, bits]

    def to_digits(self, msg: SingleSubMessage) -> list[int]:
        return [msg.d1.rank, msg.d2.value, msg.d3.rank, msg.d4.value, msg.d5.rank, msg.d6.value]

    def from_digits(self, digits: Sequence[int]) -> SingleSubMessage:
        n, M, d = self.layout.universe, self.params.M, self.layout.data_bits
        return SingleSubMessage(
            d1=SubsetRank(n, M, digits[0]),
            d2=BitString(digits[1], d),
            d3=SetPermRank(n, M, digits[2]),
            d4=BitString(digits[3], d),
            d5=SetPermRank(n, M, digits[4]),
            d6=BitString(digits[5], d),
        )

    # ───── Encoding ─────
    def part_values(self, msg: SingleSubMessage) -> list[tuple[int, int, int]]:
        """Row i (in a-order) holds (a_i, b_sigma(i), c_pi(i))."""
        a = unrank_subset(msg.d1)
        b, sigma = unrank_set_perm(msg.d3)
        c, pi = unrank_set_perm(msg.d5)
        return [(a[i], b[sigma[i]], c[pi[i]]) for i in range(self.params.M)]

    def s_vectors(self, msg: SingleSubMessage) -> list[BitString]:
        values = self.part_values(msg)
        return [self.geometry.s_vector([values[i] for i in part_order(values, j)]) for j in range(3)]

    def _column(self, payload: BitString, s: BitString) -> BitString:
        lay = self.layout
        return BitString.concat([
            payload,
            self._column_code.redundancy(payload),
            BitString.zeros(lay.slack),
            self._string_code.redundancy(s),
        ])

    def encode(self, msg: SingleSubMessage) -> Word:
        self._check(msg)
        values = self.part_values(msg)
        payloads = (msg.d2, msg.d4, msg.d6)
        M = self.params.M
        cols = [[0, 0, 0] for _ in range(M)]
        for j in range(3):
            order = part_order(values, j)
            s = self.geometry.s_vector([values[i] for i in order])
            content = self._column(payloads[j], s).bits()
            for pos, i in enumerate(order):
                cols[i][j] = content[pos]
        return Word.of(self.geometry.join(values[i], cols[i]) for i in range(M))

    def _check(self, msg: SingleSubMessage) -> None:
        # re-validates component ranges against this layout
        self.pack(msg)

    # ───── Decoding ─────
    def _read(self, word: Word):
        rows = canonical_rows(word)
        split = [self.geometry.split(r) for r in rows]
        return rows, [v for v, _ in split], [c for _, c in split]

    def candidates(self, word: Word) -> list[BitString | None]:
        """Hamming-corrected s-vector per sorting part; ``None`` where correction failed."""
        rows, values, cols = self._read(word)
        return self._candidates(rows, values, cols)

    def _candidates(self, rows, values, cols) -> list[BitString | None]:
        M, t = self.params.M, self.layout.t
        out: list[BitString | None] = []
        for j in range(3):
            order = part_order(values, j, rows)
            s = self.geometry.s_vector([values[i] for i in order])
            red = column_bits(cols, j, order).slice(M - t + 1, M)
            try:
                out.append(self._string_code.correct(s, red)[0])
            except DecodeError as e:
                self._logger.debug("s-vector of part %d not correctable: %s", j + 1, e)
                out.append(None)
        return out

    def _decode(self, word: Word) -> SingleSubMessage:
        M, lay = self.params.M, self.layout
        rows, values, cols = self._read(word)
        parsed = [
            self.geometry.parse_s_vector(s, M) if s is not None else None
            for s in self._candidates(rows, values, cols)
        ]
        truth = majority_rows(parsed, 3, M, need=2)
        owners = match_rows(values, truth, need=2)
        carrier = {owner: r for r, owner in enumerate(owners)}

        payloads = []
        for j in range(3):
            order = sorted(range(M), key=lambda i: truth[i][j])
            col = BitString.from_bits(cols[carrier[i]][j] for i in order)
            data = col.slice(1, lay.data_bits)
            red = col.slice(lay.data_bits + 1, lay.data_bits + lay.h)
            payloads.append(self._column_code.correct(data, red)[0])

        n = lay.universe
        a = [t[0] for t in truth]
        b = sorted(t[1] for t in truth)
        c = sorted(t[2] for t in truth)
        b_pos = {v: i for i, v in enumerate(b)}
        c_pos = {v: i for i, v in enumerate(c)}
        return SingleSubMessage(
            d1=rank_subset(a, n, M),
            d2=payloads[0],
            d3=rank_set_perm(b, [b_pos[t[1]] for t in truth], n),
            d4=payloads[1],
            d5=rank_set_perm(c, [c_pos[t[2]] for t in truth], n),
            d6=payloads[2],
        )


def encode1(msg: SingleSubMessage, params: Params) -> Word:
    return SingleSubCodec(params).encode(msg)


def decode1(w: Word, params: Params) -> SingleSubMessage:
    return SingleSubCodec(params).decode(w)
