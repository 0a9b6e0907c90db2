import pytest

from setcodes.cli.simulate import run_trial, simulate, trial_patterns
from setcodes.codecs import build_codec
from setcodes.config.default import RNG_ALGORITHM
from setcodes.config.settings import Settings
from setcodes.core.patterns import trial_rng
from setcodes.errors import GuardExceeded
from setcodes.schemas import RunConfig


def _config(**kw) -> RunConfig:
    base = {"command": "simulate", "codec": "single", "M": 16, "L": 48, "seed": 7, "trials": 3}
    return RunConfig(**(base | kw))


@pytest.fixture(scope="module")
def codec():
    return build_codec("single", _config().params())


def test_exhaustive_single_flips(codec, settings):
    report = simulate(codec, _config(trials=2, exhaustive=True), settings)
    assert report.patterns == 2 * (16 * 48 + 1)
    assert report.successes == report.patterns
    assert report.success_rate == 1.0
    assert report.failures == {} and report.miscorrections == 0
    assert report.weight == 1 and report.rng == RNG_ALGORITHM


def test_weight_zero(codec, settings):
    report = simulate(codec, _config(weight=0, patterns=2), settings)
    assert report.patterns == 6 and report.success_rate == 1.0


def test_reports_are_reproducible(codec):
    cfg = _config(patterns=5)
    one = simulate(codec, cfg, Settings(workers=1))
    many = simulate(codec, cfg, Settings(workers=4))
    assert one.model_dump_json() == many.model_dump_json()
    assert one.wall_time_s is None


def test_timing_is_opt_in(codec, settings):
    assert simulate(codec, _config(trials=1, timing=True), settings).wall_time_s is not None


def test_failures_are_classified(codec, settings):
    # beyond the budget every outcome is a success, a miscorrection or a named failure
    report = simulate(codec, _config(trials=4, weight=4, patterns=5), settings)
    assert report.successes + report.miscorrections + sum(report.failures.values()) == report.patterns
    assert all(isinstance(reason, str) for reason in report.failures)


def test_trial_is_a_function_of_seed_and_index(codec):
    cfg = _config(patterns=3)
    assert run_trial(codec, cfg, 1) == run_trial(codec, cfg, 1)
    a = list(trial_patterns(codec, cfg, trial_rng(7, 0)))
    b = list(trial_patterns(codec, cfg, trial_rng(7, 0)))
    assert a == b and all(p.weight == 1 for p in a)



def test_random_patterns_have_exactly_the_requested_weight(codec):
    cfg = _config(weight=3, patterns=20)
    patterns = list(trial_patterns(codec, cfg, trial_rng(7, 1)))
    assert len(patterns) == 20
    assert {p.weight for p in patterns} == {3}
    assert simulate(codec, cfg, Settings(workers=1)).weight == 3


def test_guard(codec):
    with pytest.raises(GuardExceeded):
        simulate(codec, _config(trials=10, exhaustive=True), Settings(guard=100))
