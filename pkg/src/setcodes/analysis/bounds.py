# setcodes/analysis/bounds.py
"""
Redundancy bounds: existence, lower bounds, and the closed-form budgets of
every construction, plus the two numeric inequality grids behind them.
"""
from __future__ import annotations

import math
from fractions import Fraction

from setcodes.analysis.boundary import TOLERANCE, epsilon
from setcodes.codecs.ensemble import anchor_length
from setcodes.core.params import clog2
from setcodes.schemas import BoundReport

LOG2_E = math.log2(math.e)


# ──────────────────────────────────────────────────────────────
# Construction budgets
# ──────────────────────────────────────────────────────────────
def single_budget(M: int, L: int) -> float:
    """12 log e + 3⌈log ML⌉ + 3⌈log M⌉ + 6."""
    return 12 * LOG2_E + 3 * clog2(M * L) + 3 * clog2(M) + 6


def improved_budget(M: int, L: int) -> float:
    """2⌈log ML⌉ + ⌈log 2M⌉ + 3."""
    return 2 * clog2(M * L) + clog2(2 * M) + 3


def multi_budget(M: int, L: int, K: int) -> float:
    """(2K+1) log e + 2K(2K+1)(⌈log ML⌉ + ⌈log M⌉)."""
    return (2 * K + 1) * LOG2_E + 2 * K * (2 * K + 1) * (clog2(M * L) + clog2(M))


def anchor_terms(M: int, L: int, K: int) -> dict[str, float]:
    """Additive terms of the anchor code's redundancy budget."""
    a = anchor_length(M, K)
    return {
        "log_e": LOG2_E,
        "anchor": float(a),
        "characteristic_redundancy": float(4 * K * a),
        "guard_redundancy": 2 * K * math.log2(4 * K * a),
        "string_redundancy": 2 * K * math.log2(M * L),
        "ceilings": float(1 + 4 * K),
        "log_m": -math.log2(M),
    }


def anchor_budget(M: int, L: int, K: int) -> float:
    return sum(anchor_terms(M, L, K).values())


# ──────────────────────────────────────────────────────────────
# Bound report
# ──────────────────────────────────────────────────────────────
def evaluate_bounds(
    M: int, L: int, K: int, redundancy: float | None = None, codec: str | None = None
) -> BoundReport:
    eps = epsilon(M, L)
    log_ml = math.log2(M * L)
    ball = sum(math.comb(M * L, ell) for ell in range(min(K, M * L) + 1))
    constructions: dict[str, float] = {}
    if K == 1:
        constructions["single"] = single_budget(M, L)
        constructions["single-improved"] = improved_budget(M, L)
    if K >= 1:
        constructions["multi"] = multi_budget(M, L, K)
        constructions["anchor"] = anchor_budget(M, L, K)

    report = BoundReport(
        M=M,
        L=L,
        K=K,
        epsilon=eps,
        alpha=math.ldexp(min(M, (1 << L) - M), -L),
        existential_upper=2 * K * log_ml + 3,
        existential_chain=math.log2(ball) + K * (log_ml + 1),
        single_lower=log_ml + math.log2(eps) if K == 1 and eps > 0 else None,
        multi_lower_main=K * (log_ml - 2 * math.log2(K)) if K >= 1 else None,
        multi_lower_chain=K * (math.log2(eps / math.sqrt(2)) + log_ml) - 2 * K * math.log2(K) if K >= 1 and eps > 0 else None,
        constructions=constructions,
        anchor_terms=anchor_terms(M, L, K) if K >= 1 else {},
        codec=codec,
    )
    if redundancy is None:
        return report

    update: dict = {"redundancy": redundancy, "ratio_to_upper": redundancy / report.existential_upper}
    if report.multi_lower_main and report.multi_lower_main > 0:
        update["ratio_to_lower"] = redundancy / report.multi_lower_main
    if codec in constructions:
        update["construction_holds"] = redundancy <= constructions[codec] + TOLERANCE
    return report.model_copy(update=update)


# ──────────────────────────────────────────────────────────────
# Inequality grids
# ──────────────────────────────────────────────────────────────
def power_monotonicity_violations(limit: int = 64) -> list[tuple[int, int]]:
    """(T, P) with (1 + T/P)^P ≥ (1 + T/(P+1))^(P+1), compared exactly."""
    bad = []
    for T in range(1, limit + 1):
        prev = (1 + Fraction(T, 1)) ** 1
        for P in range(2, limit + 1):
            cur = (1 + Fraction(T, P)) ** P
            if cur <= prev:
                bad.append((T, P - 1))
            prev = cur
    return bad


def anchor_length_violations(max_M: int = 1024, max_K: int = 8) -> list[tuple[int, int]]:
    """(M, K) with 2K·log(3 log M + 4K² + 1) > log M + 4K² + 1."""
    bad = []
    for K in range(1, max_K + 1):
        for M in range(1, max_M + 1):
            y = math.log2(M)
            if 2 * K * math.log2(3 * y + 4 * K * K + 1) > y + 4 * K * K + 1 + TOLERANCE:
                bad.append((M, K))
    return bad
