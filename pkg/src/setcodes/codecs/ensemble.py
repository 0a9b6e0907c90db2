# setcodes/codecs/ensemble.py
"""
Anchor ensembles: all M-sets of L'-bit strings that contain the all-ones
string and have pairwise distance at least 2K+1.

Members are produced by a depth-first scan that always tries the largest
remaining string first, so the ensemble is listed in descending
lexicographic order of its descending member tuples. A member's index in
that listing is its rank.
"""
from __future__ import annotations

import logging
import threading
from dataclasses import dataclass, field
from math import comb, factorial
from pathlib import Path
from typing import Iterator, Sequence

from setcodes.config.settings import Settings, resolve_settings
from setcodes.core.bits import BitString
from setcodes.core.params import Params, clog2
from setcodes.errors import GUARD_EXCEEDED, OUT_OF_RANGE

logger = logging.getLogger(__name__)

CACHE_VERSION = 1


def anchor_length(M: int, K: int) -> int:
    """L' = 3⌈log M⌉ + 4K² + 1."""
    return 3 * clog2(M) + 4 * K * K + 1


def ball_volume(length: int, radius: int) -> int:
    return sum(comb(length, i) for i in range(min(radius, length) + 1))


def ensemble_lower_bound(anchor_len: int, M: int, K: int) -> int:
    """⌈Π_{i=1}^{M-1} (2^{L'} - iQ) / (M-1)!⌉ with Q the radius-2K ball volume; zero once a factor vanishes."""
    q = ball_volume(anchor_len, 2 * K)
    prod = 1
    for i in range(1, M):
        factor = (1 << anchor_len) - i * q
        if factor <= 0:
            return 0
        prod *= factor
    return -(-prod // factorial(M - 1))


# ──────────────────────────────────────────────────────────────
# Characteristic vector
# ──────────────────────────────────────────────────────────────
@dataclass(frozen=True)
class CharacteristicVector:
    """Indicator over all 2^{L'} strings; bit position v + 1 marks string v."""

    bits: BitString

    @classmethod
    def of(cls, members: Sequence[int], anchor_len: int) -> CharacteristicVector:
        size = 1 << anchor_len
        value = 0
        for v in members:
            value |= 1 << (size - 1 - v)
        return cls(BitString(value, size))

    @property
    def weight(self) -> int:
        return self.bits.weight()

    def members(self) -> tuple[int, ...]:
        """Marked strings, largest first."""
        size = self.bits.length
        value = self.bits.value
        return tuple(size - 1 - i for i in range(size) if value >> i & 1)


# ──────────────────────────────────────────────────────────────
# Ensemble
# ──────────────────────────────────────────────────────────────
@dataclass(frozen=True)
class AnchorEnsemble:
    anchor_len: int
    M: int
    K: int
    members: tuple[tuple[int, ...], ...] = field(repr=False)
    _index: dict[tuple[int, ...], int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_index", {m: i for i, m in enumerate(self.members)})

    @property
    def count(self) -> int:
        return len(self.members)

    @property
    def ball(self) -> int:
        """Q, the number of strings within distance 2K of a fixed one."""
        return ball_volume(self.anchor_len, 2 * self.K)

    @property
    def all_ones(self) -> int:
        return (1 << self.anchor_len) - 1

    def lower_bound(self) -> int:
        return ensemble_lower_bound(self.anchor_len, self.M, self.K)

    def unrank(self, rank: int) -> tuple[int, ...]:
        if not 0 <= rank < self.count:
            raise OUT_OF_RANGE({"rank": rank, "count": self.count})
        return self.members[rank]

    def rank(self, member: Sequence[int]) -> int:
        key = tuple(sorted(member, reverse=True))
        try:
            return self._index[key]
        except KeyError:
            raise OUT_OF_RANGE({"reason": "not an ensemble member", "member": list(key)}) from None

    def characteristic(self, rank: int) -> CharacteristicVector:
        return CharacteristicVector.of(self.unrank(rank), self.anchor_len)


def iter_members(anchor_len: int, M: int, K: int) -> Iterator[tuple[int, ...]]:
    top = (1 << anchor_len) - 1
    dist = 2 * K + 1
    if M == 1:
        yield (top,)
        return
    pool = [v for v in range(top - 1, -1, -1) if (top ^ v).bit_count() >= dist]

    def extend(chosen: list[int], pool: list[int]) -> Iterator[tuple[int, ...]]:
        last = len(chosen) + 1 == M
        for idx, v in enumerate(pool):
            if last:
                yield tuple(chosen + [v])
                continue
            rest = [u for u in pool[idx + 1 :] if (u ^ v).bit_count() >= dist]
            yield from extend(chosen + [v], rest)

    yield from extend([top], pool)


def enumerate_ensemble(anchor_len: int, M: int, K: int, guard: int) -> AnchorEnsemble:
    if M * (1 << anchor_len) > guard:
        logger.warning("Ensemble L'=%d M=%d refused: M*2^L' exceeds guard %d", anchor_len, M, guard)
        raise GUARD_EXCEEDED({"what": "ensemble", "work": M * (1 << anchor_len), "guard": guard})
    members = []
    for member in iter_members(anchor_len, M, K):
        members.append(member)
        if len(members) > guard:
            raise GUARD_EXCEEDED({"what": "ensemble members", "guard": guard})
    logger.info("Enumerated %d anchor sets (L'=%d, M=%d, K=%d)", len(members), anchor_len, M, K)
    return AnchorEnsemble(anchor_len, M, K, tuple(members))


# ───── Cache ─────
def cache_path(cache_dir: Path, anchor_len: int, M: int, K: int) -> Path:
    return cache_dir / f"ensemble-v{CACHE_VERSION}-L{anchor_len}-M{M}-K{K}.txt"


def _write_cache(path: Path, ens: AnchorEnsemble) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    header = f"# setcodes-ensemble v{CACHE_VERSION} L'={ens.anchor_len} M={ens.M} K={ens.K} count={ens.count}\n"
    body = "".join(",".join(format(v, "x") for v in m) + "\n" for m in ens.members)
    path.write_text(header + body)


def _read_cache(path: Path, anchor_len: int, M: int, K: int) -> AnchorEnsemble | None:
    try:
        lines = path.read_text().splitlines()
        fields = dict(item.split("=", 1) for item in lines[0].split()[3:])
        members = tuple(tuple(int(h, 16) for h in ln.split(",")) for ln in lines[1:] if ln)
        if int(fields["count"]) != len(members) or any(len(m) != M for m in members):
            raise ValueError("member count mismatch")
    except (OSError, IndexError, KeyError, ValueError) as e:
        logger.warning("Ignoring ensemble cache %s: %s", path, e)
        return None
    return AnchorEnsemble(anchor_len, M, K, members)


_MEMO: dict[tuple[int, int, int], AnchorEnsemble] = {}
_MEMO_LOCK = threading.Lock()


def build_ensemble(params: Params, settings: Settings | dict | None = None) -> AnchorEnsemble:
    """Ensemble for (M, K), memoised in-process and cached on disk when a cache directory is set."""
    settings = resolve_settings(settings)
    anchor_len = anchor_length(params.M, params.K)
    key = (anchor_len, params.M, params.K)
    with _MEMO_LOCK:
        if key in _MEMO:
            return _MEMO[key]
        ens = None
        path = cache_path(settings.cache_dir, *key) if settings.cache_dir else None
        if path is not None and path.exists():
            ens = _read_cache(path, *key)
        if ens is None:
            ens = enumerate_ensemble(anchor_len, params.M, params.K, settings.guard)
            if path is not None:
                _write_cache(path, ens)
        _MEMO[key] = ens
        return ens
