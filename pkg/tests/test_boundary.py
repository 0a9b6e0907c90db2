import pytest

from setcodes.analysis.boundary import (
    boundary_and_influence,
    boundary_degrees,
    count_special_subsets,
    elementary_symmetric,
    epsilon,
    indicator,
)
from setcodes.config.settings import Settings
from setcodes.core.bits import Word
from setcodes.errors import GuardExceeded

W = Word.from_strs(["001", "011"])


def test_indicator():
    f = indicator(W)
    assert f.tolist() == [False, True, False, True, False, False, False, False]


def test_boundary_and_influence(settings):
    b = boundary_and_influence(W, settings)
    assert b.boundary_size == 4
    assert b.influence == pytest.approx(1.0)
    assert b.influence_identity_holds
    assert b.epsilon == pytest.approx(2 / 3)
    assert b.isoperimetric_holds
    assert b.ball_size == 7 and b.ball_covers_boundary
    assert b.swaps == 4


def test_single_string_boundary(settings):
    b = boundary_and_influence(Word.from_strs(["0101"]), settings)
    assert b.boundary_size == 4
    assert b.epsilon == 1.0


def test_boundary_report(settings):
    report = boundary_and_influence(W, settings).report()
    assert report.center == ["001", "011"]
    assert (report.boundary_size, report.ball_size) == (4, 7)
    assert report.influence == pytest.approx(1.0)
    assert report.ball_covers_boundary and report.isoperimetric_holds


def test_boundary_degrees():
    assert boundary_degrees(W) == {1: 2, 3: 2}


def test_special_subsets(settings):
    s = count_special_subsets(W, 2, settings)
    assert s.boundary_size == 4
    assert s.count == 4
    assert s.ball_covers_special


def test_special_lower_bound_needs_a_small_constant(settings):
    assert count_special_subsets(W, 2, settings).special_lower_bound() is None
    w = Word.from_strs(["000000", "000111", "111000", "111111", "010101", "101010", "100100", "011011", "110011"])
    c, bound = count_special_subsets(w, 1, settings).special_lower_bound()
    assert 0 < c < 1
    assert bound > 0


@pytest.mark.parametrize("values,k,expected", [([1, 2, 3], 2, 11), ([2, 2], 2, 4), ([5], 0, 1), ([1, 1], 3, 0)])
def test_elementary_symmetric(values, k, expected):
    assert elementary_symmetric(values, k) == expected


def test_epsilon():
    assert epsilon(1, 5) == 1.0
    assert epsilon(8, 6) == pytest.approx(0.5)


def test_boundary_guard():
    with pytest.raises(GuardExceeded):
        boundary_and_influence(Word.from_strs(["0" * 12]), Settings(guard=100))
