import pytest

from setcodes.core.bits import Word
from setcodes.core.wordfile import format_word, parse_word, read_word, write_word
from setcodes.errors import WordFormatError


def test_format_is_one_sorted_string_per_line():
    w = Word.from_strs(["110", "001"])
    assert format_word(w) == "001\n110\n"
    assert parse_word("110\n\n 001 \n") == w


def test_files(tmp_path):
    w = Word.from_strs(["0101", "1111", "0000"])
    path = tmp_path / "w.txt"
    write_word(path, w)
    assert read_word(path) == w


@pytest.mark.parametrize("text", ["", "01\n012\n", "01\n011\n"])
def test_malformed_files(text):
    with pytest.raises(WordFormatError):
        parse_word(text)


def test_missing_file(tmp_path):
    with pytest.raises(WordFormatError):
        read_word(tmp_path / "absent.txt")


def test_repeated_strings_are_rejected():
    with pytest.raises(WordFormatError) as e:
        parse_word("0101\n1111\n0101\n")
    assert e.value.data == {"reason": "duplicate strings", "strings": ["0101"]}
