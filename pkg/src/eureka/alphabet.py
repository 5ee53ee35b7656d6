"""The 27-letter stave alphabet.

Each interpreting stave carries the letters A Æ B C D E F G H I J K L M
N O Œ P Q R S T U V X Y Z in a vertical column.  There is no W, and Æ
and Œ are single letters with their own cells.  Positions are 1-based:
A is 1, Z is 27.
"""

from __future__ import annotations

STAVE_LETTERS = "AÆBCDEFGHIJKLMNOŒPQRSTUVXYZ"

# digraph spellings accepted on input for the ligature letters
DIGRAPHS = {"AE": "Æ", "OE": "Œ"}

_INDEX = {letter: i for i, letter in enumerate(STAVE_LETTERS, start=1)}

assert len(STAVE_LETTERS) == 27


class AlphabetError(ValueError):
    """A letter that is not on the staves."""


def letter_index(letter: str) -> int:
    """1-based stave position of ``letter`` (A=1 .. Z=27)."""
    try:
        return _INDEX[letter]
    except KeyError:
        raise AlphabetError(f"letter {letter!r} is not on the staves") from None


def letter_at(index: int) -> str:
    """Letter at 1-based stave position ``index`` (inverse of letter_index)."""
    if not 1 <= index <= 27:
        raise AlphabetError(f"stave position {index} is out of range 1..27")
    return STAVE_LETTERS[index - 1]


def canonical_word(raw: str) -> str:
    """Upper-case ``raw`` and fold the AE/OE digraphs to Æ/Œ.

    Raises :class:`AlphabetError` if any letter of the result is not on
    the staves.
    """
    word = raw.upper()
    for pair, single in DIGRAPHS.items():
        word = word.replace(pair, single)
    for ch in word:
        if ch not in _INDEX:
            raise AlphabetError(f"letter {ch!r} in {raw!r} is not on the staves")
    return word
