# setcodes/cli/simulate.py
"""
Channel simulation: random messages through a substitution channel.

Trial ``i`` draws everything from ``trial_rng(seed, i)`` and trials are
aggregated by index, so a report depends only on the configuration.
"""
from __future__ import annotations

import logging
import time
from collections import Counter
from dataclasses import dataclass, field
from functools import partial
from typing import Iterable

import anyio
import anyio.to_thread

from setcodes.codecs.base import SetCodec
from setcodes.config.default import RNG_ALGORITHM
from setcodes.config.settings import Settings
from setcodes.core.bits import SubstitutionPattern, apply_pattern
from setcodes.core.patterns import random_pattern, single_flip_patterns, trial_rng
from setcodes.errors import GUARD_EXCEEDED, DecodeError
from setcodes.schemas import RunConfig, SimulationReport

logger = logging.getLogger(__name__)


@dataclass
class TrialOutcome:
    patterns: int = 0
    successes: int = 0
    miscorrections: int = 0
    failures: Counter = field(default_factory=Counter)


def trial_patterns(codec: SetCodec, config: RunConfig, rng) -> Iterable[SubstitutionPattern]:
    """Clean word and every single flip, or random patterns of exactly the configured weight."""
    M, L = codec.params.M, codec.params.L
    if config.exhaustive:
        yield SubstitutionPattern.empty()
        yield from single_flip_patterns(M, L)
        return
    weight = min(config.pattern_weight, M * L)
    for _ in range(config.patterns):
        yield random_pattern(M, L, weight, rng)


def run_trial(codec: SetCodec, config: RunConfig, trial: int) -> TrialOutcome:
    rng = trial_rng(config.seed, trial)
    msg = codec.random_message(rng)
    sent = codec.encode(msg)
    expected = codec.pack(msg)
    out = TrialOutcome()
    for pattern in trial_patterns(codec, config, rng):
        out.patterns += 1
        received = apply_pattern(sent, pattern)
        try:
            decoded = codec.pack(codec.decode(received))
        except DecodeError as e:
            out.failures[e.reason] += 1
            logger.debug("trial %d: %s under %s", trial, e.reason, sorted(pattern.flips))
            continue
        if decoded == expected:
            out.successes += 1
        else:
            out.miscorrections += 1
            logger.warning("trial %d: miscorrection under %s", trial, sorted(pattern.flips))
    return out


async def _run_trials(codec: SetCodec, config: RunConfig, workers: int) -> list[TrialOutcome]:
    results: list[TrialOutcome | None] = [None] * config.trials
    limiter = anyio.CapacityLimiter(workers)

    async def one(i: int) -> None:
        results[i] = await anyio.to_thread.run_sync(partial(run_trial, codec, config, i), limiter=limiter)

    async with anyio.create_task_group() as tg:
        for i in range(config.trials):
            tg.start_soon(one, i)
    return results  # type: ignore[return-value]


def simulate(codec: SetCodec, config: RunConfig, settings: Settings) -> SimulationReport:
    M, L = codec.params.M, codec.params.L
    per_trial = M * L + 1 if config.exhaustive else config.patterns
    work = config.trials * per_trial
    if work > settings.guard:
        raise GUARD_EXCEEDED({"what": "simulation patterns", "work": work, "guard": settings.guard})

    start = time.perf_counter()
    outcomes = anyio.run(_run_trials, codec, config, settings.workers)
    elapsed = time.perf_counter() - start

    total = TrialOutcome()
    for o in outcomes:
        total.patterns += o.patterns
        total.successes += o.successes
        total.miscorrections += o.miscorrections
        total.failures.update(o.failures)
    logger.info(
        "%s (M=%d, L=%d): %d/%d patterns decoded in %.2fs",
        codec.codec.value, M, L, total.successes, total.patterns, elapsed,
    )

    return SimulationReport(
        codec=codec.codec.value,
        M=M,
        L=L,
        K=codec.budget,
        seed=config.seed,
        trials=config.trials,
        weight=1 if config.exhaustive else min(config.pattern_weight, M * L),
        exhaustive=config.exhaustive,
        patterns=total.patterns,
        successes=total.successes,
        miscorrections=total.miscorrections,
        failures=dict(sorted(total.failures.items())),
        success_rate=total.successes / total.patterns if total.patterns else 1.0,
        rng=RNG_ALGORITHM,
        wall_time_s=round(elapsed, 6) if config.timing else None,
    )
