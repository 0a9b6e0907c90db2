import pytest

from setcodes.analysis.suite import CheckRegistry, Scope, analyse_word, run_suite, suite, words_in_scope
from setcodes.config.settings import Settings
from setcodes.core.bits import Word
from setcodes.errors import RangeError

SMALL = Scope(max_M=2, max_L=3, max_K=1)


def test_every_check_passes_on_a_small_scope(settings):
    report = run_suite(SMALL, settings=settings)
    assert report.passed, [c.name for c in report.checks if not c.passed]
    assert [c.name for c in report.checks] == suite.names()
    assert all(c.instances > 0 for c in report.checks)
    assert report.scope == {"max_M": 2, "max_L": 3, "max_K": 1}


def test_selected_checks(settings):
    report = run_suite(SMALL, only=["influence-identity", "isoperimetric"], settings=settings)
    assert [c.name for c in report.checks] == ["influence-identity", "isoperimetric"]


def test_unknown_check(settings):
    with pytest.raises(RangeError):
        run_suite(SMALL, only=["no-such-check"], settings=settings)


def test_words_in_scope():
    # L=1: 2 + 1, L=2: 4 + 6, L=3: 8 + 28
    assert sum(1 for _ in words_in_scope(SMALL)) == 49


def test_registry():
    registry = CheckRegistry("local")

    @registry.register("always")
    def _always(scope, settings):
        """Nothing to see."""
        return 1, []

    @registry.register("never")
    def _never(scope, settings):
        return 2, [{"why": "broken"}]

    assert registry.list_checks()[0] == {"name": "always", "description": "Nothing to see."}
    report = registry.run(SMALL)
    assert not report.passed
    assert [c.passed for c in report.checks] == [True, False]
    with pytest.raises(ValueError):
        registry.register("always")(_always)


def test_confusable_contains_ball_check(settings):
    report = run_suite(Scope(max_M=2, max_L=4, max_K=2), only=["confusable-contains-ball"], settings=settings)
    (check,) = report.checks
    assert check.passed
    # L=1..4 with M=1..2 and K=1..2: 2 * (2+1 + 4+6 + 8+28 + 16+120)
    assert check.instances == 2 * 185


def test_analyse_word(settings):
    report = analyse_word(Word.from_strs(["0110", "0111"]), 2, settings)
    assert report.passed and report.violations == []
    assert report.center == ["0110", "0111"]
    assert report.ball.count < report.ball.upper_bound == 37
    same_size = sum(len(m) == 2 for m in report.ball.members)
    assert report.confusable is not None and report.confusable.confusable_count >= same_size
    assert report.boundary is not None and report.boundary.ball_covers_boundary


def test_analyse_word_without_radius(settings):
    report = analyse_word(Word.from_strs(["01", "10"]), 0, settings)
    assert report.ball.count == 1
    assert report.confusable is None
    assert report.passed


def test_analyse_word_skips_what_the_guard_forbids():
    report = analyse_word(Word.from_strs(["0110", "0111"]), 1, Settings(guard=100))
    assert report.confusable is None
    assert report.boundary is not None
    assert report.passed


@pytest.mark.acceptance
def test_default_scope(settings):
    assert run_suite(Scope(), settings=settings).passed
