# setcodes/core/wordfile.py
from __future__ import annotations

from collections import Counter
from pathlib import Path

from setcodes.core.bits import BitString, Word, canonical_rows
from setcodes.errors import BAD_WORD_FILE, SetCodeError


def parse_word(text: str) -> Word:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise BAD_WORD_FILE({"reason": "no strings"})
    if len(set(lines)) != len(lines):
        repeated = sorted(ln for ln, n in Counter(lines).items() if n > 1)
        raise BAD_WORD_FILE({"reason": "duplicate strings", "strings": repeated[:5]})
    try:
        strings = [BitString.from_str(ln) for ln in lines]
        return Word.of(strings)
    except SetCodeError as e:
        raise BAD_WORD_FILE(e.to_dict()) from e


def format_word(w: Word) -> str:
    return "".join(f"{s}\n" for s in canonical_rows(w))


def read_word(path: str | Path) -> Word:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise BAD_WORD_FILE({"reason": "unreadable", "path": str(path), "error": str(e)}) from e
    return parse_word(text)


def write_word(path: str | Path, w: Word) -> None:
    Path(path).write_text(format_word(w))
