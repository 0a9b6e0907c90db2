# setcodes/codecs/message.py
from __future__ import annotations

from typing import Sequence

from setcodes.errors import OUT_OF_RANGE


def compose(digits: Sequence[int], radices: Sequence[int]) -> int:
    """Mixed-radix composition; the first digit is the most significant."""
    if len(digits) != len(radices):
        raise OUT_OF_RANGE({"reason": "digit/radix count mismatch"})
    value = 0
    for i, (digit, radix) in enumerate(zip(digits, radices)):
        if not 0 <= digit < radix:
            raise OUT_OF_RANGE({"component": i + 1, "value": digit, "radix": radix})
        value = value * radix + digit
    return value


def decompose(value: int, radices: Sequence[int]) -> list[int]:
    total = 1
    for radix in radices:
        total *= radix
    if not 0 <= value < total:
        raise OUT_OF_RANGE({"reason": "packed message outside the message space"})
    digits = []
    for radix in reversed(radices):
        value, digit = divmod(value, radix)
        digits.append(digit)
    return digits[::-1]


def int_to_hex(value: int) -> str:
    return format(value, "x")


def hex_to_int(text: str) -> int:
    text = text.strip().lower().removeprefix("0x")
    try:
        return int(text or "0", 16)
    except ValueError as e:
        raise OUT_OF_RANGE({"reason": "message is not hexadecimal", "text": text[:32]}) from e
