import pytest

from setcodes.core.bits import BitString
from setcodes.ecc.hamming import HammingCode, hamming_correct, hamming_redundancy, redundancy_bits
from setcodes.errors import DecodeError, RangeError


@pytest.mark.parametrize("n,t", [(1, 2), (4, 3), (5, 4), (11, 4), (12, 5), (720, 10)])
def test_redundancy_bits(n, t):
    assert redundancy_bits(n) == t


@pytest.mark.parametrize("k", [4, 11, 5])
def test_every_single_error_is_corrected(k):
    code = HammingCode.for_length(k)
    for value in range(1 << k):
        data = BitString(value, k)
        red = code.redundancy(data)
        assert code.correct(data, red) == (data, False)
        for pos in range(1, k + 1):
            assert code.correct(data.flip(pos), red) == (data, True)
        for pos in range(1, code.t + 1):
            assert code.correct(data, red.flip(pos)) == (data, False)


def test_seven_four_code_shape():
    code = HammingCode.for_length(4)
    assert (code.t, code.padded_prefix, code.data_len) == (3, 0, 4)


def test_syndrome_in_padding_is_detected():
    code = HammingCode.for_length(5)
    assert code.padded_prefix == 6
    data = BitString.from_str("00000")
    red = code.redundancy(data)
    # positions 11 and 12 xor to 7, a virtual position
    with pytest.raises(DecodeError) as exc:
        code.correct(data.flip(1).flip(2), red)
    assert exc.value.reason == "hamming-failure"


def test_length_checks():
    code = HammingCode.for_length(4)
    with pytest.raises(RangeError):
        code.redundancy(BitString.zeros(5))
    with pytest.raises(RangeError):
        code.correct(BitString.zeros(4), BitString.zeros(2))


def test_module_helpers():
    data = BitString.from_str("1011001")
    red = hamming_redundancy(data)
    assert hamming_correct(data.flip(3), red) == data
