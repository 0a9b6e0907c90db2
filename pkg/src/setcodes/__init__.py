"""Codes correcting bit substitutions in unordered sets of binary strings."""
from setcodes.cli.main import main
from setcodes.codecs import Codec, build_codec
from setcodes.core import BitString, Params, Word, apply_pattern

__all__ = ["BitString", "Codec", "Params", "Word", "apply_pattern", "build_codec", "main"]
