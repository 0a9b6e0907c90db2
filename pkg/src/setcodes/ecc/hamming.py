# setcodes/ecc/hamming.py
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache

from setcodes.core.bits import BitString
from setcodes.errors import HAMMING_FAILURE, OUT_OF_RANGE

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def _data_positions(t: int) -> tuple[int, ...]:
    # parity-check column i is the binary expansion of i; parity sits at powers of two
    return tuple(i for i in range(1, 1 << t) if i & (i - 1))


def redundancy_bits(n: int) -> int:
    """Minimal t with 2^t - t - 1 >= n."""
    if n < 1:
        raise OUT_OF_RANGE({"reason": "Hamming data must be non-empty"})
    t = 2
    while (1 << t) - t - 1 < n:
        t += 1
    return t


@dataclass(frozen=True)
class HammingCode:
    """
    Systematic [2^t-1, 2^t-t-1] Hamming code over data of any length.

    Short data is preceded by ``padded_prefix`` virtual zeros that are never
    transmitted. The redundancy is the data syndrome written as t bits, most
    significant first.
    """

    t: int
    padded_prefix: int

    @classmethod
    def for_length(cls, n: int) -> HammingCode:
        t = redundancy_bits(n)
        return cls(t, (1 << t) - t - 1 - n)

    @property
    def data_len(self) -> int:
        return (1 << self.t) - self.t - 1

    @property
    def payload_len(self) -> int:
        return self.data_len - self.padded_prefix

    def _syndrome(self, data: BitString) -> int:
        positions = _data_positions(self.t)
        offset = self.padded_prefix + data.length - 1
        syndrome = 0
        v = data.value
        while v:
            low = v & -v
            syndrome ^= positions[offset - (low.bit_length() - 1)]
            v ^= low
        return syndrome

    def redundancy(self, data: BitString) -> BitString:
        self._check(data)
        return BitString(self._syndrome(data), self.t)

    def correct(self, data: BitString, red: BitString) -> tuple[BitString, bool]:
        """Corrected data and whether a bit of ``data`` was flipped back."""
        self._check(data)
        if red.length != self.t:
            raise OUT_OF_RANGE({"redundancy_len": red.length, "expected": self.t})
        syndrome = self._syndrome(data) ^ red.value
        if syndrome == 0 or not syndrome & (syndrome - 1):
            # clean, or the error sat in the redundancy
            return data, False
        # non-power positions before `syndrome`
        index = syndrome - syndrome.bit_length() - 1 - self.padded_prefix
        if index < 0:
            raise HAMMING_FAILURE({"syndrome": syndrome, "padded_prefix": self.padded_prefix})
        logger.debug("Hamming corrected data bit %d", index + 1)
        return data.flip(index + 1), True

    def _check(self, data: BitString) -> None:
        if data.length != self.payload_len:
            raise OUT_OF_RANGE({"data_len": data.length, "expected": self.payload_len})


def hamming_redundancy(data: BitString) -> BitString:
    return HammingCode.for_length(data.length).redundancy(data)


def hamming_correct(data: BitString, red: BitString) -> BitString:
    return HammingCode.for_length(data.length).correct(data, red)[0]
