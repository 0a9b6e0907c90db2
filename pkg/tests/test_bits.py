import pytest

from setcodes.core.bits import (
    BitString,
    SubstitutionPattern,
    Word,
    apply_pattern,
    canonical_rows,
    matched_distance,
    min_pairwise_distance,
)
from setcodes.errors import RangeError


def test_bitstring_text_round_trip():
    b = BitString.from_str("0110")
    assert b.value == 6 and b.length == 4
    assert str(b) == "0110"
    assert b.bits() == [0, 1, 1, 0]


def test_bitstring_positions_are_one_based_from_the_left():
    b = BitString.from_str("1000")
    assert b.bit(1) == 1
    assert b.flip(4) == BitString.from_str("1001")
    assert b.slice(1, 2) == BitString.from_str("10")
    assert b.slice(3, 2).length == 0


def test_bitstring_chunks_pad_the_last_piece():
    chunks = BitString.from_str("10111").chunks(2)
    assert [str(c) for c in chunks] == ["10", "11", "10"]


def test_bitstring_concat():
    assert BitString.concat([BitString.from_str("10"), BitString.zeros(2), BitString.ones(1)]) == BitString.from_str("10001")


@pytest.mark.parametrize("value,length", [(4, 2), (-1, 3)])
def test_bitstring_rejects_values_outside_the_length(value, length):
    with pytest.raises(RangeError):
        BitString(value, length)


def test_bitstring_rejects_non_binary_symbols():
    with pytest.raises(RangeError):
        BitString.from_str("0120")


def test_word_is_unordered():
    assert Word.from_strs(["011", "001"]) == Word.from_strs(["001", "011"])
    assert [str(s) for s in canonical_rows(Word.from_strs(["011", "001"]))] == ["001", "011"]


def test_word_rejects_mixed_lengths():
    with pytest.raises(RangeError):
        Word.from_strs(["01", "011"])


def test_pattern_addresses_canonical_rows():
    w = Word.from_strs(["110", "001"])
    out = apply_pattern(w, SubstitutionPattern.of([(1, 1)]))
    assert out == Word.from_strs(["101", "110"])


def test_collapse_shrinks_the_word():
    w = Word.from_strs(["000", "001"])
    out = apply_pattern(w, SubstitutionPattern.of([(1, 3)]))
    assert out.size == 1
    assert out == Word.from_strs(["001"])


def test_pattern_over_budget_is_refused():
    w = Word.from_strs(["000", "111"])
    with pytest.raises(RangeError):
        apply_pattern(w, SubstitutionPattern.of([(1, 1), (2, 2)]), k=1)


def test_matched_distance():
    a = Word.from_strs(["000", "111"])
    assert matched_distance(a, a) == 0
    assert matched_distance(a, Word.from_strs(["001", "111"])) == 1
    assert matched_distance(a, Word.from_strs(["001", "110"])) == 2
    assert matched_distance(a, Word.from_strs(["000"])) is None


def test_matched_distance_uses_the_best_pairing():
    a = Word.from_strs(["0000", "0011"])
    b = Word.from_strs(["0001", "0010"])
    # 0000->0001 and 0011->0010 costs 2; the crossed pairing costs 2 as well
    assert matched_distance(a, b) == 2
    c = Word.from_strs(["1100", "0011"])
    d = Word.from_strs(["1101", "0111"])
    assert matched_distance(c, d) == 2


def test_matched_distance_stops_past_the_limit():
    a = Word.from_strs(["000", "011", "101"])
    b = Word.from_strs(["001", "010", "100"])
    assert matched_distance(a, b, limit=1) == 3


def test_min_pairwise_distance():
    assert min_pairwise_distance(Word.from_strs(["000", "011", "111"])) == 1
    assert min_pairwise_distance(Word.from_strs(["010"])) is None
