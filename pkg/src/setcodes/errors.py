# setcodes/errors.py
from typing import Any
from dataclasses import dataclass


@dataclass
class SetCodeError(Exception):
    code: int
    message: str
    data: Any = None

    def to_dict(self) -> dict:
        base = {"code": self.code, "message": self.message}
        if self.data is not None:
            base["data"] = self.data
        return base

    def __str__(self) -> str:
        if self.data is None:
            return self.message
        return f"{self.message}: {self.data}"


class ParamsError(SetCodeError):
    pass


class RangeError(SetCodeError):
    pass


class WordFormatError(SetCodeError):
    pass


class GuardExceeded(SetCodeError):
    pass


@dataclass
class DecodeError(SetCodeError):
    reason: str = "decode-failure"

    def to_dict(self) -> dict:
        base = super().to_dict()
        base["reason"] = self.reason
        return base


# Error catalogue (codes are stable; reasons double as simulation taxonomy keys)
INADMISSIBLE_PARAMS = lambda d=None: ParamsError(-32602, "Inadmissible parameters", d)
OUT_OF_RANGE = lambda d=None: RangeError(-32602, "Value out of range", d)
PATTERN_TOO_HEAVY = lambda d=None: RangeError(-32603, "Substitution pattern exceeds budget", d)
BAD_WORD_FILE = lambda d=None: WordFormatError(-32700, "Malformed word file", d)
GUARD_EXCEEDED = lambda d=None: GuardExceeded(-32010, "Work guard exceeded", d)

COLLAPSED_WORD = lambda d=None: DecodeError(-32020, "Received word has the wrong size", d, "collapsed-word")
NO_MAJORITY = lambda d=None: DecodeError(-32021, "No majority among candidate vectors", d, "no-majority")
HAMMING_FAILURE = lambda d=None: DecodeError(-32022, "Hamming syndrome points into padding", d, "hamming-failure")
RS_FAILURE = lambda d=None: DecodeError(-32023, "Reed-Solomon decoding failed", d, "rs-failure")
ANCHOR_NOT_FOUND = lambda d=None: DecodeError(-32024, "Anchor structure not recoverable", d, "anchor-failure")
RESIDUAL_INCONSISTENCY = lambda d=None: DecodeError(-32025, "Residual inconsistency after correction", d, "residual-inconsistency")
