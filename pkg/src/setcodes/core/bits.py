# setcodes/core/bits.py
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Iterator

from setcodes.errors import OUT_OF_RANGE, PATTERN_TOO_HEAVY


# ──────────────────────────────────────────────────────────────
# BitString
# ──────────────────────────────────────────────────────────────
@dataclass(frozen=True, order=True)
class BitString:
    """
    Fixed-length binary string backed by an unsigned integer.

    Position 1 is the leftmost, most significant bit, so ordering by ``value``
    is the lexicographic order for strings of equal length.
    """

    value: int
    length: int

    def __post_init__(self) -> None:
        if self.length < 0 or self.value < 0 or self.value >> self.length:
            raise OUT_OF_RANGE({"value": self.value, "length": self.length})

    # ───── Constructors ─────
    @classmethod
    def from_str(cls, bits: str) -> BitString:
        bits = bits.strip()
        if any(ch not in "01" for ch in bits):
            raise OUT_OF_RANGE({"reason": "symbols must be 0 or 1", "bits": bits})
        return cls(int(bits, 2) if bits else 0, len(bits))

    @classmethod
    def zeros(cls, length: int) -> BitString:
        return cls(0, length)

    @classmethod
    def ones(cls, length: int) -> BitString:
        return cls((1 << length) - 1, length)

    @classmethod
    def concat(cls, parts: Iterable[BitString]) -> BitString:
        value, length = 0, 0
        for part in parts:
            value = (value << part.length) | part.value
            length += part.length
        return cls(value, length)

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> BitString:
        value, length = 0, 0
        for b in bits:
            value = (value << 1) | (b & 1)
            length += 1
        return cls(value, length)

    # ───── Access ─────
    def __len__(self) -> int:
        return self.length

    def __str__(self) -> str:
        return format(self.value, f"0{self.length}b") if self.length else ""

    def bit(self, pos: int) -> int:
        if not 1 <= pos <= self.length:
            raise OUT_OF_RANGE({"position": pos, "length": self.length})
        return (self.value >> (self.length - pos)) & 1

    def bits(self) -> list[int]:
        return [(self.value >> (self.length - 1 - i)) & 1 for i in range(self.length)]

    def slice(self, start: int, stop: int) -> BitString:
        """Bits ``start..stop`` (1-based, inclusive)."""
        if stop < start:
            return BitString(0, 0)
        if start < 1 or stop > self.length:
            raise OUT_OF_RANGE({"start": start, "stop": stop, "length": self.length})
        width = stop - start + 1
        return BitString((self.value >> (self.length - stop)) & ((1 << width) - 1), width)

    def chunks(self, width: int) -> list[BitString]:
        """Split into consecutive ``width``-bit pieces; the last one is zero-padded on the right."""
        out = []
        for start in range(1, self.length + 1, width):
            piece = self.slice(start, min(start + width - 1, self.length))
            out.append(BitString(piece.value << (width - piece.length), width))
        return out

    # ───── Edits ─────
    def flip(self, pos: int) -> BitString:
        if not 1 <= pos <= self.length:
            raise OUT_OF_RANGE({"position": pos, "length": self.length})
        return BitString(self.value ^ (1 << (self.length - pos)), self.length)

    def with_bit(self, pos: int, bit: int) -> BitString:
        return self if self.bit(pos) == bit else self.flip(pos)

    def weight(self) -> int:
        return self.value.bit_count()

    def distance(self, other: BitString) -> int:
        return (self.value ^ other.value).bit_count()


# ──────────────────────────────────────────────────────────────
# Word
# ──────────────────────────────────────────────────────────────
@dataclass(frozen=True)
class Word:
    """Unordered set of distinct bit strings sharing one length."""

    strings: frozenset[BitString]

    def __post_init__(self) -> None:
        if not self.strings:
            raise OUT_OF_RANGE({"reason": "a word holds at least one string"})
        lengths = {s.length for s in self.strings}
        if len(lengths) != 1 or 0 in lengths:
            raise OUT_OF_RANGE({"reason": "strings must share one positive length", "lengths": sorted(lengths)})

    @classmethod
    def of(cls, strings: Iterable[BitString]) -> Word:
        return cls(frozenset(strings))

    @classmethod
    def from_strs(cls, strings: Iterable[str]) -> Word:
        return cls(frozenset(BitString.from_str(s) for s in strings))

    @property
    def length(self) -> int:
        return next(iter(self.strings)).length

    @property
    def size(self) -> int:
        return len(self.strings)

    def __len__(self) -> int:
        return len(self.strings)

    def __iter__(self) -> Iterator[BitString]:
        return iter(canonical_rows(self))

    def __contains__(self, item: object) -> bool:
        return item in self.strings

    def __str__(self) -> str:
        return "{" + ", ".join(str(s) for s in canonical_rows(self)) + "}"


def canonical_rows(w: Word) -> list[BitString]:
    """Strings of ``w`` in ascending lexicographic order."""
    return sorted(w.strings)


# ──────────────────────────────────────────────────────────────
# Substitutions
# ──────────────────────────────────────────────────────────────
@dataclass(frozen=True)
class SubstitutionPattern:
    """Distinct (row, column) flip positions, 1-based, rows in canonical order."""

    flips: frozenset[tuple[int, int]]

    @classmethod
    def of(cls, flips: Iterable[tuple[int, int]]) -> SubstitutionPattern:
        return cls(frozenset((int(r), int(c)) for r, c in flips))

    @classmethod
    def empty(cls) -> SubstitutionPattern:
        return cls(frozenset())

    @property
    def weight(self) -> int:
        return len(self.flips)


def apply_flips(rows: list[BitString], p: SubstitutionPattern) -> list[BitString]:
    """Flip bits of an ordered row matrix; rows keep their positions."""
    out = list(rows)
    for row, col in sorted(p.flips):
        if not 1 <= row <= len(out):
            raise OUT_OF_RANGE({"row": row, "rows": len(out)})
        out[row - 1] = out[row - 1].flip(col)
    return out


def apply_pattern(w: Word, p: SubstitutionPattern, k: int | None = None) -> Word:
    """
    Pass ``w`` through a substitution channel that flips the bits named by ``p``.

    Rows of ``p`` address ``canonical_rows(w)``. Strings that become equal
    collapse, so the result may hold fewer than ``w.size`` strings.
    """
    if k is not None and p.weight > k:
        raise PATTERN_TOO_HEAVY({"weight": p.weight, "budget": k})
    return Word.of(apply_flips(canonical_rows(w), p))


def min_pairwise_distance(w: Word) -> int | None:
    rows = canonical_rows(w)
    if len(rows) < 2:
        return None
    return min(
        rows[i].distance(rows[j]) for i in range(len(rows)) for j in range(i + 1, len(rows))
    )


def matched_distance(reference: Word, received: Word, limit: int | None = None) -> int | None:
    """
    Minimal total bit distance over bijections between the two words.

    Strings present in both words pair with themselves. When more than
    ``limit`` strings differ, the count of differing strings is returned,
    which already exceeds ``limit``. ``None`` means the sizes differ.
    """
    if reference.size != received.size:
        return None
    extra = sorted(received.strings - reference.strings)
    missing = sorted(reference.strings - received.strings)
    if limit is not None and len(extra) > limit:
        return len(extra)
    return min(
        (sum(x.distance(y) for x, y in zip(extra, perm)) for perm in permutations(missing)),
        default=0,
    )
