import pytest

from setcodes.analysis.balls import (
    ReverseIndex,
    balls_disjoint,
    enumerate_ball,
    enumerate_confusable,
    greedy_packing,
    to_ints,
)
from setcodes.config.settings import Settings
from setcodes.core.bits import Word
from setcodes.errors import GuardExceeded, RangeError


def _sets(ball):
    return {frozenset(str(s) for s in w.strings) for w in ball.members}


def test_ball_of_two_close_strings(settings):
    ball = enumerate_ball(Word.from_strs(["001", "011"]), 1, settings)
    assert _sets(ball) == {
        frozenset({"001", "011"}),
        frozenset({"101", "011"}),
        frozenset({"011"}),
        frozenset({"000", "011"}),
        frozenset({"001", "111"}),
        frozenset({"001"}),
        frozenset({"001", "010"}),
    }
    assert ball.count == ball.upper_bound == 7
    assert not ball.tight_expected


def test_separated_strings_meet_the_bound(settings):
    ball = enumerate_ball(Word.from_strs(["000", "111"]), 1, settings)
    assert ball.tight_expected
    assert ball.count == ball.upper_bound == 7


def test_collapses_make_the_ball_smaller(settings):
    ball = enumerate_ball(Word.from_strs(["000", "001", "011"]), 2, settings)
    assert ball.count < ball.upper_bound


def test_radius_zero(settings):
    w = Word.from_strs(["01", "10"])
    assert _sets(enumerate_ball(w, 0, settings)) == {frozenset({"01", "10"})}
    with pytest.raises(RangeError):
        enumerate_ball(w, -1, settings)


def test_ball_guard():
    with pytest.raises(GuardExceeded):
        enumerate_ball(Word.from_strs(["0000", "1111"]), 3, Settings(guard=10))


def test_reverse_balls_are_bounded(settings):
    index = ReverseIndex.build(2, 3, 1, settings)
    assert index.reverse_bound == 2 * 12
    assert max(len(r) for r in index.reverse.values()) <= index.reverse_bound
    # every word reaches itself
    for u in index.balls:
        assert u in index.reverse_of(u)


def test_confusable_set(settings):
    w = Word.from_strs(["000"])
    conf = enumerate_confusable(w, 1, settings)
    # single strings confuse with everything within distance two
    assert {str(next(iter(u.strings))) for u in conf.union} == {"000", "001", "010", "100", "011", "101", "110"}
    assert conf.max_reverse <= conf.reverse_bound


def test_greedy_packing_single_strings(settings):
    packing = greedy_packing(1, 3, 1, settings)
    assert [str(next(iter(w.strings))) for w in packing.code] == ["000", "111"]
    assert balls_disjoint(packing.code, 1)
    assert packing.size >= packing.floor_bound


@pytest.mark.parametrize("M,L", [(1, 4), (2, 3), (2, 4)])
def test_greedy_packing_properties(settings, M, L):
    packing = greedy_packing(M, L, 1, settings)
    assert balls_disjoint(packing.code, 1)
    assert packing.size >= max(packing.floor_bound, 1)


def test_overlapping_balls_are_detected():
    code = [Word.from_strs(["000"]), Word.from_strs(["011"])]
    assert not balls_disjoint(code, 1)
    assert to_ints(code[1]) == frozenset({3})


def test_two_flip_patterns_can_land_on_the_same_word(settings):
    ball = enumerate_ball(Word.from_strs(["0110", "0111"]), 2, settings)
    assert ball.upper_bound == 1 + 8 + 28
    # flipping 0111 at bits 1 and 4, or 0110 at bit 1 and 0111 at bit 4, both give {0110, 1110}
    assert frozenset({"0110", "1110"}) in _sets(ball)
    assert ball.count < ball.upper_bound


@pytest.mark.parametrize("strs,k", [(["001", "011"], 1), (["000", "111"], 1), (["01", "10"], 2)])
def test_confusable_set_contains_the_same_size_ball(settings, strs, k):
    w = Word.from_strs(strs)
    ball = enumerate_ball(w, k, settings)
    conf = enumerate_confusable(w, k, settings)
    same_size = {m for m in ball.members if m.size == w.size}
    assert same_size
    assert same_size <= conf.union
    assert w in conf.union


def test_ball_report(settings):
    report = enumerate_ball(Word.from_strs(["000", "111"]), 1, settings).report()
    assert report.center == ["000", "111"]
    assert (report.K, report.count, report.upper_bound, report.tight_expected) == (1, 7, 7, True)
    assert ["000", "111"] in report.members
    assert report.members == sorted(report.members)


def test_confusable_report(settings):
    w = Word.from_strs(["000"])
    conf = enumerate_confusable(w, 1, settings)
    report = conf.report()
    assert report.center == ["000"]
    assert report.ball_count == 4
    assert report.confusable_count == 7
    assert report.reverse_bound == 2 * 2 * 1 * 3
    assert report.max_reverse == conf.max_reverse
