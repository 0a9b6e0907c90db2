# setcodes/analysis/suite.py
"""
Registry of exhaustive checks over every word in a small scope.

Checks register themselves with ``@suite.register(...)`` and return the
number of instances examined together with the violating ones.
"""
from __future__ import annotations

import inspect
import logging
from dataclasses import dataclass
from typing import Any, Callable, Iterator

from setcodes.analysis.balls import (
    ReverseIndex,
    all_words,
    balls_disjoint,
    enumerate_ball,
    enumerate_confusable,
    greedy_packing,
    to_word,
    word_strs,
)
from setcodes.analysis.boundary import boundary_and_influence, count_special_subsets
from setcodes.analysis.bounds import anchor_length_violations, power_monotonicity_violations
from setcodes.codecs.ensemble import anchor_length, enumerate_ensemble, ensemble_lower_bound
from setcodes.config.settings import Settings, resolve_settings
from setcodes.core.bits import Word, min_pairwise_distance
from setcodes.errors import OUT_OF_RANGE, GuardExceeded
from setcodes.schemas import CheckResult, VerifyReport, WordReport

logger = logging.getLogger(__name__)

Outcome = tuple[int, list[dict[str, Any]]]


@dataclass(frozen=True)
class Scope:
    max_M: int = 3
    max_L: int = 5
    max_K: int = 2

    def to_dict(self) -> dict[str, int]:
        return {"max_M": self.max_M, "max_L": self.max_L, "max_K": self.max_K}


def words_in_scope(scope: Scope) -> Iterator[Word]:
    for L in range(1, scope.max_L + 1):
        for M in range(1, min(scope.max_M, 1 << L) + 1):
            for w in all_words(M, L):
                yield to_word(w, L)


# ──────────────────────────────────────────────────────────────
# _Check – a registered check with its metadata
# ──────────────────────────────────────────────────────────────
@dataclass
class _Check:
    fn: Callable[[Scope, Settings], Outcome]
    """Check body."""

    name: str
    """Registered name."""

    description: str | None = None
    """Human-readable statement of what is checked."""

    def __call__(self, scope: Scope, settings: Settings) -> Outcome:
        return self.fn(scope, settings)

    def to_json(self) -> dict:
        return {"name": self.name, "description": self.description}


# ──────────────────────────────────────────────────────────────
# CheckRegistry
# ──────────────────────────────────────────────────────────────
class CheckRegistry:
    def __init__(self, name: str | None = None, settings: Settings | dict | None = None):
        self.name = name or "checks"
        self._settings = resolve_settings(settings)
        self._checks: dict[str, _Check] = {}

    def register(self, name: str | None = None, description: str | None = None):
        def decorator(fn: Callable[[Scope, Settings], Outcome]) -> _Check:
            key = name or fn.__name__
            if key in self._checks:
                raise ValueError(f"check {key} already registered")
            check = _Check(fn, key, description or inspect.getdoc(fn))
            self._checks[key] = check
            return check

        return decorator

    def get(self, name: str) -> _Check:
        try:
            return self._checks[name]
        except KeyError:
            raise OUT_OF_RANGE({"reason": "unknown check", "check": name}) from None

    def names(self) -> list[str]:
        return list(self._checks)

    def list_checks(self) -> list[dict]:
        return [c.to_json() for c in self._checks.values()]

    def run(
        self,
        scope: Scope | None = None,
        only: list[str] | None = None,
        settings: Settings | dict | None = None,
    ) -> VerifyReport:
        scope = scope or Scope()
        settings = resolve_settings(settings) if settings is not None else self._settings
        results = []
        for key in only or self.names():
            check = self.get(key)
            instances, violations = check(scope, settings)
            passed = not violations
            log = logger.info if passed else logger.error
            log("check %s: %d instances, %d violations", key, instances, len(violations))
            results.append(
                CheckResult(
                    name=key,
                    description=check.description,
                    passed=passed,
                    instances=instances,
                    violations=violations[:20],
                )
            )
        return VerifyReport(scope=scope.to_dict(), passed=all(r.passed for r in results), checks=results)


suite = CheckRegistry("setcodes")


# ───── Balls ─────
@suite.register("ball-upper-bound")
def _ball_upper(scope: Scope, settings: Settings) -> Outcome:
    """|B_K(W)| ≤ Σ_{ℓ≤K} C(ML, ℓ), with equality when strings are 2K+1 apart."""
    n, bad = 0, []
    for w in words_in_scope(scope):
        d = min_pairwise_distance(w)
        for k in range(scope.max_K + 1):
            ball = enumerate_ball(w, k, settings)
            n += 1
            if ball.count > ball.upper_bound or (ball.tight_expected and ball.count != ball.upper_bound):
                bad.append({"word": word_strs(w), "K": k, "count": ball.count, "bound": ball.upper_bound, "min_distance": d})
    return n, bad


@suite.register("reverse-ball-bound")
def _reverse_bound(scope: Scope, settings: Settings) -> Outcome:
    """|R_K(W')| ≤ 2(2ML)^K for every channel output W'."""
    n, bad = 0, []
    for L in range(1, scope.max_L + 1):
        for M in range(1, min(scope.max_M, 1 << L) + 1):
            for k in range(1, scope.max_K + 1):
                index = ReverseIndex.build(M, L, k, settings)
                for out, rev in index.reverse.items():
                    n += 1
                    if len(rev) > index.reverse_bound:
                        bad.append({"output": word_strs(to_word(out, L)), "K": k, "size": len(rev), "bound": index.reverse_bound})
    return n, bad


@suite.register("confusable-contains-ball")
def _confusable_contains_ball(scope: Scope, settings: Settings) -> Outcome:
    """D_K(W) contains every M-string word of B_K(W)."""
    n, bad = 0, []
    for L in range(1, min(scope.max_L, 4) + 1):
        for M in range(1, min(scope.max_M, 1 << L) + 1):
            for k in range(1, scope.max_K + 1):
                index = ReverseIndex.build(M, L, k, settings)
                for w in index.balls:
                    n += 1
                    same_size = {u for u in index.balls[w] if len(u) == M}
                    missing = same_size - index.confusable(w)
                    if missing:
                        bad.append({"word": word_strs(to_word(w, L)), "K": k, "missing": len(missing)})
    return n, bad


# ───── Boundary ─────
@suite.register("ball-covers-boundary")
def _ball_covers_boundary(scope: Scope, settings: Settings) -> Outcome:
    """|B_1(W)| ≥ |∂f_W|; swaps equal |∂f_W| when strings are 2 apart."""
    n, bad = 0, []
    for w in words_in_scope(scope):
        b = boundary_and_influence(w, settings)
        n += 1
        d = min_pairwise_distance(w)
        if not b.ball_covers_boundary or ((d is None or d >= 2) and b.swaps != b.boundary_size):
            bad.append({"word": word_strs(w), "ball": b.ball_size, "boundary": b.boundary_size, "swaps": b.swaps})
    return n, bad


@suite.register("influence-identity")
def _influence(scope: Scope, settings: Settings) -> Outcome:
    """I(f_W) · 2^{L-1} = |∂f_W|."""
    n, bad = 0, []
    for w in words_in_scope(scope):
        b = boundary_and_influence(w, settings)
        n += 1
        if not b.influence_identity_holds:
            bad.append({"word": word_strs(w), "influence": b.influence, "boundary": b.boundary_size})
    return n, bad


@suite.register("isoperimetric")
def _isoperimetric(scope: Scope, settings: Settings) -> Outcome:
    """|∂f_W| ≥ εML with ε = 1 - log M / L."""
    n, bad = 0, []
    for w in words_in_scope(scope):
        b = boundary_and_influence(w, settings)
        n += 1
        if not b.isoperimetric_holds:
            bad.append({"word": word_strs(w), "boundary": b.boundary_size, "epsilon": b.epsilon})
    return n, bad


@suite.register("special-subsets")
def _special(scope: Scope, settings: Settings) -> Outcome:
    """|B_K(W)| · K^K ≥ number of special K-subsets of ∂f_W."""
    n, bad = 0, []
    for w in words_in_scope(scope):
        for k in range(1, scope.max_K + 1):
            s = count_special_subsets(w, k, settings)
            n += 1
            if s.ball_covers_special is False:
                bad.append({"word": word_strs(w), "K": k, "special": s.count, "ball": s.ball_size})
    return n, bad


# ───── Packing ─────
@suite.register("greedy-packing")
def _greedy(scope: Scope, settings: Settings) -> Outcome:
    """Greedy codes have disjoint K-balls and at least ⌊C(2^L, M)/D⌋ words."""
    n, bad = 0, []
    for L in range(1, min(scope.max_L, 4) + 1):
        for M in range(1, min(scope.max_M, 2, 1 << L) + 1):
            for k in range(1, min(scope.max_K, 1) + 1):
                packing = greedy_packing(M, L, k, settings)
                n += 1
                if not balls_disjoint(packing.code, k) or packing.size < packing.floor_bound:
                    bad.append({"M": M, "L": L, "K": k, "size": packing.size, "floor": packing.floor_bound})
    return n, bad


# ───── Anchor ensembles ─────
@suite.register("ensemble-count")
def _ensemble(scope: Scope, settings: Settings) -> Outcome:
    """Every enumerated ensemble meets its product lower bound and its distance constraint."""
    n, bad = 0, []
    cases = [(anchor_length(2, 1), 2, 1)] + [
        (a, M, 1) for a in range(3, min(scope.max_L, 6) + 1) for M in range(2, scope.max_M + 1)
    ]
    for a, M, k in cases:
        ens = enumerate_ensemble(a, M, k, settings.guard)
        n += 1
        spread = all(
            (x ^ y).bit_count() >= 2 * k + 1 for member in ens.members for i, x in enumerate(member) for y in member[i + 1 :]
        )
        ones = all(member[0] == ens.all_ones for member in ens.members)
        if ens.count < ensemble_lower_bound(a, M, k) or not spread or not ones:
            bad.append({"anchor_len": a, "M": M, "K": k, "count": ens.count, "bound": ensemble_lower_bound(a, M, k)})
    return n, bad


# ───── Numeric grids ─────
@suite.register("power-monotonicity")
def _power(scope: Scope, settings: Settings) -> Outcome:
    """(1 + T/P)^P increases with P for T, P ∈ [1, 64]."""
    bad = power_monotonicity_violations(64)
    return 64 * 63, [{"T": t, "P": p} for t, p in bad]


@suite.register("anchor-length-inequality")
def _anchor_len(scope: Scope, settings: Settings) -> Outcome:
    """(3 log M + 4K² + 1)^{2K} ≤ 2^{log M + 4K² + 1} for M ≤ 1024, K ≤ 8."""
    bad = anchor_length_violations(1024, 8)
    return 1024 * 8, [{"M": m, "K": k} for m, k in bad]


# ───── One word ─────
def analyse_word(w: Word, k: int, settings: Settings | dict | None = None) -> WordReport:
    """
    Ball, confusable set and boundary of one word, with the checks that apply to it.

    The confusable set and the boundary need work exponential in L; either is
    left out of the report when it would pass the guard.
    """
    settings = resolve_settings(settings)
    violations: list[str] = []

    ball = enumerate_ball(w, k, settings)
    if ball.count > ball.upper_bound or (ball.tight_expected and ball.count != ball.upper_bound):
        violations.append("ball-upper-bound")

    confusable = None
    if k > 0:
        try:
            confusable = enumerate_confusable(w, k, settings)
        except GuardExceeded as e:
            logger.warning("confusable set skipped: %s", e)
    if confusable is not None:
        same_size = {m for m in ball.members if m.size == w.size}
        if not same_size <= confusable.union:
            violations.append("confusable-contains-ball")
        if confusable.max_reverse > confusable.reverse_bound:
            violations.append("reverse-ball-bound")

    boundary = None
    try:
        boundary = boundary_and_influence(w, settings)
    except GuardExceeded as e:
        logger.warning("boundary skipped: %s", e)
    if boundary is not None:
        if not boundary.ball_covers_boundary:
            violations.append("ball-covers-boundary")
        if not boundary.influence_identity_holds:
            violations.append("influence-identity")
        if not boundary.isoperimetric_holds:
            violations.append("isoperimetric")

    if violations:
        logger.error("word analysis failed: %s", ", ".join(violations))
    return WordReport(
        center=word_strs(w),
        K=k,
        passed=not violations,
        ball=ball.report(),
        confusable=confusable.report() if confusable else None,
        boundary=boundary.report() if boundary else None,
        violations=violations,
    )


def run_suite(scope: Scope | None = None, only: list[str] | None = None, settings: Settings | dict | None = None) -> VerifyReport:
    return suite.run(scope, only, settings)
