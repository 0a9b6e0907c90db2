from setcodes.codecs.anchor import AnchorCodec, AnchorMessage, decodeA, encodeA
from setcodes.codecs.base import Codec, SetCodec
from setcodes.codecs.improved import ImprovedCodec, ImprovedMessage, decode1_improved, encode1_improved
from setcodes.codecs.multi import MultiSubCodec, MultiSubMessage, decodeK, encodeK
from setcodes.codecs.single import SingleSubCodec, SingleSubMessage, decode1, encode1
from setcodes.config.settings import Settings
from setcodes.core.params import Params


def build_codec(codec: Codec | str, params: Params, settings: Settings | dict | None = None) -> SetCodec:
    match Codec(codec):
        case Codec.SINGLE:
            return SingleSubCodec(params, settings)
        case Codec.SINGLE_IMPROVED:
            return ImprovedCodec(params, settings)
        case Codec.MULTI:
            return MultiSubCodec(params, settings)
        case Codec.ANCHOR:
            return AnchorCodec(params, settings)


__all__ = [
    "AnchorCodec",
    "AnchorMessage",
    "Codec",
    "ImprovedCodec",
    "ImprovedMessage",
    "MultiSubCodec",
    "MultiSubMessage",
    "SetCodec",
    "SingleSubCodec",
    "SingleSubMessage",
    "build_codec",
    "decode1",
    "decode1_improved",
    "decodeA",
    "decodeK",
    "encode1",
    "encode1_improved",
    "encodeA",
    "encodeK",
]
