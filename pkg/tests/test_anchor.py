import pytest

from setcodes.codecs import ensemble as ens_mod
from setcodes.codecs.anchor import AnchorCodec, AnchorLayout, AnchorMessage, decodeA, encodeA
from setcodes.core.bits import BitString, SubstitutionPattern, apply_pattern
from setcodes.core.params import Params
from setcodes.core.patterns import random_below, random_pattern, single_flip_patterns, trial_rng
from setcodes.errors import GuardExceeded, ParamsError

PARAMS = Params(M=2, L=64, K=1)


@pytest.fixture(scope="module")
def codec():
    return AnchorCodec(PARAMS)


def test_layout():
    lay = AnchorLayout.from_params(PARAMS)
    assert lay.anchor_len == 8
    assert lay.char_code.redundancy_bits == 4 * PARAMS.K * lay.anchor_len
    assert lay.head == 50
    assert lay.string_block == 14
    assert lay.data_bits == 56
    assert sum(stop - start + 1 for start, stop in lay.data_spans()) == lay.data_bits


@pytest.mark.parametrize("params", [Params(M=2, L=40, K=1), Params(M=1, L=64, K=1), Params(M=2, L=64, K=0)])
def test_inadmissible_params(params):
    with pytest.raises(ParamsError):
        AnchorLayout.from_params(params)


def test_message_space(codec):
    assert codec.radices() == [219, 1 << 56]


def test_anchor_row_is_all_ones(codec):
    word = codec.encode(AnchorMessage(0, BitString.zeros(56)))
    rows = sorted(word.strings, reverse=True)
    assert rows[0].slice(1, 8) == BitString.ones(8)


@pytest.mark.parametrize("d1", [0, 1, 100, 218])
def test_every_single_flip_is_corrected(codec, d1):
    rng = trial_rng(31, d1)
    msg = AnchorMessage(d1, BitString(random_below(rng, 1 << 56), 56))
    word = codec.encode(msg)
    assert codec.decode(word) == msg
    for pattern in single_flip_patterns(PARAMS.M, PARAMS.L):
        assert codec.decode(apply_pattern(word, pattern)) == msg, sorted(pattern.flips)


def test_random_messages(codec):
    for trial in range(10):
        rng = trial_rng(32, trial)
        msg = codec.random_message(rng)
        word = codec.encode(msg)
        received = apply_pattern(word, random_pattern(PARAMS.M, PARAMS.L, 1, rng))
        assert codec.decode(received) == msg


def test_module_helpers(codec):
    msg = AnchorMessage(7, BitString(12345, 56))
    word = encodeA(msg, PARAMS)
    assert decodeA(apply_pattern(word, SubstitutionPattern.of([(1, 3)])), PARAMS) == msg


def test_large_ensembles_hit_the_guard():
    ens_mod._MEMO.clear()
    with pytest.raises(GuardExceeded):
        AnchorCodec(Params(M=2, L=256, K=2))


@pytest.mark.acceptance
def test_every_anchor_set_with_every_flip(codec):
    for d1 in range(codec.ensemble.count):
        rng = trial_rng(2028, d1)
        msg = AnchorMessage(d1, BitString(random_below(rng, 1 << 56), 56))
        word = codec.encode(msg)
        for pattern in single_flip_patterns(PARAMS.M, PARAMS.L):
            assert codec.decode(apply_pattern(word, pattern)) == msg
