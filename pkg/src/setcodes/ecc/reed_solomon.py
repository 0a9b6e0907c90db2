# setcodes/ecc/reed_solomon.py
"""
Systematic narrow-sense Reed-Solomon codes over GF(2^m), used on bit strings.

Codes are galois' primitive-length ``ReedSolomon(2^m - 1, 2^m - 1 - 2t)``
over the Conway-polynomial field, shortened by dropping leading zero symbols.
Symbols are m-bit groups, most significant bit first, and the first symbol is
the highest-degree coefficient.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import galois

from setcodes.core.bits import BitString
from setcodes.core.params import clog2
from setcodes.errors import OUT_OF_RANGE, RS_FAILURE

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def field(m: int) -> type[galois.FieldArray]:
    return galois.GF(2**m)


@lru_cache(maxsize=None)
def _mother_code(m: int, parity_symbols: int) -> galois.ReedSolomon:
    n = (1 << m) - 1
    logger.debug("Building RS(%d, %d) over GF(2^%d)", n, n - parity_symbols, m)
    return galois.ReedSolomon(n, n - parity_symbols, field=field(m))


@dataclass(frozen=True)
class RsCode:
    m: int
    """Field degree; one symbol carries m bits."""

    n_symbols: int
    """Shortened code length."""

    k_symbols: int
    """Data symbols per codeword."""

    def __post_init__(self) -> None:
        if self.m < 2 or not 0 < self.k_symbols < self.n_symbols <= (1 << self.m) - 1:
            raise OUT_OF_RANGE({"m": self.m, "n": self.n_symbols, "k": self.k_symbols})

    @classmethod
    def for_data(cls, n_bits: int, k_errors: int) -> RsCode:
        """
        Code protecting ``n_bits`` data bits against ``k_errors`` symbol errors.

        The symbol size is ⌈log₂ n_bits⌉, raised only when the shortened
        code would not fit in GF(2^m).
        """
        if k_errors <= 0:
            raise OUT_OF_RANGE({"reason": "k_errors must be positive", "k_errors": k_errors})
        if n_bits <= 0:
            raise OUT_OF_RANGE({"reason": "Reed-Solomon data must be non-empty"})
        m = max(clog2(n_bits), 2)
        while -(-n_bits // m) + 2 * k_errors > (1 << m) - 1:
            m += 1
        k = -(-n_bits // m)
        return cls(m, k + 2 * k_errors, k)

    @property
    def parity_symbols(self) -> int:
        return self.n_symbols - self.k_symbols

    @property
    def correction_budget(self) -> int:
        return self.parity_symbols // 2

    @property
    def redundancy_bits(self) -> int:
        return self.parity_symbols * self.m

    @property
    def code(self) -> galois.ReedSolomon:
        return _mother_code(self.m, self.parity_symbols)

    # ───── Symbol level ─────
    def parity(self, message: Sequence[int]) -> list[int]:
        if len(message) != self.k_symbols:
            raise OUT_OF_RANGE({"symbols": len(message), "expected": self.k_symbols})
        codeword = self.code.encode(field(self.m)(list(message)))
        return [int(x) for x in codeword[self.k_symbols :]]

    def correct(self, message: Sequence[int], parity: Sequence[int]) -> list[int]:
        """Corrected message symbols; raises ``DecodeError`` past the budget."""
        received = list(message) + list(parity)
        if len(received) != self.n_symbols:
            raise OUT_OF_RANGE({"symbols": len(received), "expected": self.n_symbols})
        word = field(self.m)(received)
        if not self.code.detect(word):
            return list(message)

        decoded, n_errors = self.code.decode(word, errors=True)
        if n_errors < 0:
            raise RS_FAILURE({"reason": "uncorrectable", "budget": self.correction_budget})
        fixed = [int(x) for x in decoded]
        # a correction in the dropped leading zeros is not a codeword of the shortened code
        distance = sum(a != b for a, b in zip(fixed + self.parity(fixed), received))
        if distance > self.correction_budget:
            raise RS_FAILURE({"reason": "correction outside the shortened code", "distance": distance})
        logger.debug("RS corrected %d symbol(s)", distance)
        return fixed

    # ───── Bit level ─────
    def _symbols(self, data: BitString) -> list[int]:
        return [chunk.value for chunk in data.chunks(self.m)]

    def redundancy(self, data: BitString) -> BitString:
        parity = self.parity(self._symbols(data))
        return BitString.concat(BitString(p, self.m) for p in parity)

    def correct_bits(self, data: BitString, red: BitString) -> BitString:
        if red.length != self.redundancy_bits:
            raise OUT_OF_RANGE({"redundancy_len": red.length, "expected": self.redundancy_bits})
        parity = [chunk.value for chunk in red.chunks(self.m)]
        fixed = self.correct(self._symbols(data), parity)
        joined = BitString.concat(BitString(v, self.m) for v in fixed)
        pad = joined.length - data.length
        if pad and joined.value & ((1 << pad) - 1):
            raise RS_FAILURE({"reason": "correction touched zero padding"})
        return joined.slice(1, data.length) if data.length else joined


def rs_redundancy(data: BitString, k_errors: int) -> BitString:
    return RsCode.for_data(data.length, k_errors).redundancy(data)


def rs_correct(data: BitString, red: BitString, k_errors: int) -> BitString:
    return RsCode.for_data(data.length, k_errors).correct_bits(data, red)
