import pytest
from hypothesis import given
from hypothesis import strategies as st

from setcodes.codecs.message import compose, decompose, hex_to_int, int_to_hex
from setcodes.errors import RangeError


def test_first_digit_is_most_significant():
    assert compose([1, 0, 2], [2, 3, 5]) == 1 * 15 + 0 * 5 + 2
    assert decompose(17, [2, 3, 5]) == [1, 0, 2]


@given(st.lists(st.integers(min_value=1, max_value=1 << 70), min_size=1, max_size=6), st.data())
def test_mixed_radix_is_a_bijection(radices, data):
    digits = [data.draw(st.integers(min_value=0, max_value=r - 1)) for r in radices]
    assert decompose(compose(digits, radices), radices) == digits


def test_out_of_range_digits():
    with pytest.raises(RangeError):
        compose([3], [3])
    with pytest.raises(RangeError):
        decompose(30, [2, 3, 5])


def test_hex():
    assert int_to_hex(255) == "ff"
    assert hex_to_int("0xFF") == 255
    assert hex_to_int("") == 0
    with pytest.raises(RangeError):
        hex_to_int("zz")
