# setcodes/analysis/boundary.py
"""Hypercube boundary, total influence and special subsets of a word's indicator."""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from math import comb

import numpy as np

from setcodes.analysis.balls import ball_bound, ball_ints, to_ints, word_strs
from setcodes.config.settings import Settings, resolve_settings
from setcodes.core.bits import Word
from setcodes.errors import GUARD_EXCEEDED
from setcodes.schemas import BoundaryReport

logger = logging.getLogger(__name__)

TOLERANCE = 1e-9


def epsilon(M: int, L: int) -> float:
    """Largest ε with M ≤ 2^{(1-ε)L}."""
    return 1.0 - math.log2(M) / L


def indicator(w: Word) -> np.ndarray:
    f = np.zeros(1 << w.length, dtype=bool)
    f[np.fromiter(to_ints(w), dtype=np.int64)] = True
    return f


def boundary_degrees(w: Word) -> dict[int, int]:
    """Per string of ``w``: the number of its neighbours outside ``w``."""
    strings = to_ints(w)
    return {x: sum((x ^ (1 << i)) not in strings for i in range(w.length)) for x in strings}


@dataclass(frozen=True)
class Boundary:
    center: Word
    boundary_size: int
    influence: float
    epsilon: float
    ball_size: int
    """|B_1(center)|."""

    swaps: int
    """Members of B_1(center) other than the center that still hold M strings."""

    @property
    def ball_covers_boundary(self) -> bool:
        return self.ball_size >= self.boundary_size

    @property
    def isoperimetric_holds(self) -> bool:
        """|∂f_W| ≥ εML."""
        M, L = self.center.size, self.center.length
        return self.boundary_size + TOLERANCE >= self.epsilon * M * L

    @property
    def influence_identity_holds(self) -> bool:
        return math.isclose(self.influence * 2 ** (self.center.length - 1), self.boundary_size, rel_tol=TOLERANCE)

    def report(self) -> BoundaryReport:
        return BoundaryReport(
            center=word_strs(self.center),
            epsilon=self.epsilon,
            boundary_size=self.boundary_size,
            influence=self.influence,
            ball_size=self.ball_size,
            ball_covers_boundary=self.ball_covers_boundary,
            isoperimetric_holds=self.isoperimetric_holds,
        )


def boundary_and_influence(w: Word, settings: Settings | dict | None = None) -> Boundary:
    settings = resolve_settings(settings)
    L = w.length
    work = L << max(L - 1, 0)
    if work > settings.guard:
        raise GUARD_EXCEEDED({"what": "hypercube edges", "work": work, "guard": settings.guard})

    f = indicator(w)
    idx = np.arange(1 << L)
    # every boundary edge is seen from both endpoints
    cut = sum(int(np.count_nonzero(f != f[idx ^ (1 << i)])) for i in range(L)) // 2
    # I(f) = Σ_i Pr_x[f(x) ≠ f(x ⊕ e_i)]
    influence = float(sum(np.mean(f != f[idx ^ (1 << i)]) for i in range(L)))

    ball = ball_ints(to_ints(w), L, 1)
    center = to_ints(w)
    swaps = sum(1 for v in ball if len(v) == w.size and v != center)
    return Boundary(w, cut, influence, epsilon(w.size, L), len(ball), swaps)


def elementary_symmetric(values: list[int], k: int) -> int:
    """e_k(values), exact."""
    e = [1] + [0] * k
    for v in values:
        for j in range(k, 0, -1):
            e[j] += e[j - 1] * v
    return e[k]


@dataclass(frozen=True)
class SpecialSubsets:
    center: Word
    K: int
    boundary_size: int
    count: int
    ball_size: int | None
    """|B_K(center)|, present when the ball fits the guard."""

    @property
    def ball_covers_special(self) -> bool | None:
        """|B_K(W)| ≥ special / K^K."""
        if self.ball_size is None:
            return None
        return self.ball_size * self.K**self.K >= self.count

    def special_lower_bound(self) -> tuple[float, float] | None:
        """(c, (1 - c²)·C(|∂f_W|, K)) with c = K/(ε√M), when c < 1."""
        M, L = self.center.size, self.center.length
        eps = epsilon(M, L)
        if eps <= 0:
            return None
        c = self.K / (eps * math.sqrt(M))
        if c >= 1:
            return None
        return c, (1 - c * c) * comb(self.boundary_size, self.K)


def count_special_subsets(w: Word, k: int, settings: Settings | dict | None = None) -> SpecialSubsets:
    """
    K-subsets of boundary edges with pairwise distinct in-set endpoints.

    Counted as e_k of the per-string boundary degrees, which equals the
    brute-force count over C(|∂f_W|, k) subsets.
    """
    settings = resolve_settings(settings)
    degrees = list(boundary_degrees(w).values())
    boundary = sum(degrees)
    ball_size = None
    if ball_bound(w.size, w.length, k) <= settings.guard:
        ball_size = len(ball_ints(to_ints(w), w.length, k))
    else:
        logger.warning("Ball for the special-subset check exceeds the guard; ball comparison skipped")
    return SpecialSubsets(w, k, boundary, elementary_symmetric(degrees, k), ball_size)
