import pytest
from pydantic import ValidationError

from setcodes.core.params import Params, clog2, log2_binom


@pytest.mark.parametrize("n,expected", [(1, 0), (2, 1), (3, 2), (4, 2), (6144, 13), (3072, 12)])
def test_clog2(n, expected):
    assert clog2(n) == expected


def test_params_are_validated():
    with pytest.raises(ValidationError):
        Params(M=9, L=3)
    with pytest.raises(ValidationError):
        Params(M=0, L=3)
    p = Params(M=32, L=192)
    assert p.K == 1
    assert (p.log_ml, p.log_m) == (13, 5)


def test_word_space_size():
    assert log2_binom(8, 2) == pytest.approx(4.807354922057604)
    assert Params(M=2, L=3).word_space_log2() == pytest.approx(log2_binom(8, 2))
