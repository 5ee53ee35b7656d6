"""The 1677 letter-table versifying game.

Each table hides nine words, one per digit 1..9.  Counting is 1-based
over the flattened, row-major cells, matching the printed instructions:
the word for digit d starts at cell ``first_position(d)`` and continues
every ninth cell until a black square.  The nine digits therefore own
the nine residue classes mod 9 between them.  Six tables and a six-digit
key yield a six-word verse line.

This module uses the plain 26-letter Latin alphabet, lower-cased; the
tables predate the machine's Æ/Œ staves.  The row width is display-only
(the walk is row-major regardless of wrapping).
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

BLACK = "#"        # in-memory and file marker for the black square
BLACK_GLYPH = "█"  # what render_table shows
LETTERS = "abcdefghijklmnopqrstuvwxyz"
DEFAULT_ROW_WIDTH = 9
KEY_LENGTH = 6


class TableError(ValueError):
    """A malformed table, key, or word list."""


@dataclass(frozen=True)
class PeterTable:
    cells: tuple[str, ...]
    row_width: int = DEFAULT_ROW_WIDTH


def first_position(digit: int) -> int:
    """1-based cell where the word for ``digit`` starts.

    Counting on from the digit up to nine lands ``9 - digit`` cells in;
    for digit 9 the count restarts at the first cell, landing on cell 9.
    """
    if not 1 <= digit <= 9:
        raise TableError(f"digit {digit} out of 1..9")
    return 9 if digit == 9 else 9 - digit


def key_digits(key: int | str | Sequence[int]) -> tuple[int, ...]:
    """Normalize a six-digit key; every digit must be 1..9 (no zeros)."""
    if isinstance(key, int):
        key = str(key)
    if isinstance(key, str):
        if not key.isdigit():
            raise TableError(f"key {key!r} is not a digit string")
        digits = tuple(int(ch) for ch in key)
    else:
        digits = tuple(int(d) for d in key)
    if len(digits) != KEY_LENGTH:
        raise TableError(f"a key needs exactly {KEY_LENGTH} digits, got {len(digits)}")
    for d in digits:
        if not 1 <= d <= 9:
            raise TableError(f"key digit {d} out of 1..9")
    return digits


def decode_word(table: PeterTable, digit: int) -> str:
    """Walk every ninth cell from the digit's start until a black square."""
    pos = first_position(digit)
    letters = []
    while pos <= len(table.cells):
        cell = table.cells[pos - 1]
        if cell == BLACK:
            return "".join(letters)
        letters.append(cell)
        pos += 9
    raise TableError(
        f"malformed table: the walk for digit {digit} ran off the end "
        "without reaching a black square"
    )


def decode_line(tables: Sequence[PeterTable], key: int | str | Sequence[int]) -> tuple[str, ...]:
    """Decode one word per table using the matching key digit."""
    digits = key_digits(key)
    if len(tables) != KEY_LENGTH:
        raise TableError(f"need exactly {KEY_LENGTH} tables, got {len(tables)}")
    return tuple(decode_word(table, digit) for table, digit in zip(tables, digits))


def encode_table(words: Sequence[str], row_width: int = DEFAULT_ROW_WIDTH) -> PeterTable:
    """Hide nine words in a fresh table (inverse of decode_word).

    The word for digit d occupies cells ``first_position(d) + 9k`` with a
    black square after its last letter.  Cells no word claims are filled
    with decoy letters drawn deterministically from the words themselves,
    so encoding is a pure function of its arguments.
    """
    if len(words) != 9:
        raise TableError(f"a table hides exactly 9 words, got {len(words)}")
    if row_width < 1:
        raise TableError(f"row width must be >= 1, got {row_width}")
    normalized = []
    for word in words:
        low = word.lower()
        if not low:
            raise TableError("words must be non-empty")
        for ch in low:
            if ch not in LETTERS:
                raise TableError(f"letter {ch!r} in {word!r} is not plain a-z")
        normalized.append(low)

    needed = max(
        first_position(digit) + 9 * len(word)
        for digit, word in enumerate(normalized, start=1)
    )
    size = -(-needed // row_width) * row_width  # round up to whole rows
    cells: list[str] = [""] * size
    for digit, word in enumerate(normalized, start=1):
        pos = first_position(digit)
        for ch in word:
            cells[pos - 1] = ch
            pos += 9
        cells[pos - 1] = BLACK
        pos += 9
        # decoys beyond the black square: seeded per residue class from its
        # own word, so changing one word never disturbs the other classes
        digest = hashlib.sha256(f"{digit}:{word}".encode("utf-8")).digest()
        rng = random.Random(int.from_bytes(digest[:8], "big"))
        while pos <= size:
            cells[pos - 1] = rng.choice(word)
            pos += 9
    return PeterTable(tuple(cells), row_width)


def count_keys() -> int:
    """How many six-digit keys the tables answer to: 9^6."""
    return 9**6


def render_table(table: PeterTable) -> str:
    """Printable grid: upper-case letters, black squares as █."""
    glyphs = [BLACK_GLYPH if cell == BLACK else cell.upper() for cell in table.cells]
    rows = [
        "".join(glyphs[i : i + table.row_width])
        for i in range(0, len(glyphs), table.row_width)
    ]
    return "\n".join(rows)


def _parse_cell(ch: str) -> str:
    if ch in (BLACK, BLACK_GLYPH):
        return BLACK
    low = ch.lower()
    if low in LETTERS:
        return low
    raise TableError(f"cell {ch!r} is neither a Latin letter nor a black square")


def parse_grid(text: str, row_width: int | None = None) -> PeterTable:
    """Parse a bare letter grid (the render_table format, # or █ for black)."""
    rows = [line for line in text.splitlines() if line.strip()]
    if not rows:
        raise TableError("empty table grid")
    width = row_width if row_width is not None else len(rows[0])
    cells = tuple(_parse_cell(ch) for row in rows for ch in row.strip())
    return PeterTable(cells, width)


def dump_tables(tables: Iterable[PeterTable]) -> str:
    """Serialize tables to the .pet file format: ``%`` headers, # for black."""
    sections = []
    for table in tables:
        lines = [f"% {table.row_width}"]
        lines.extend(
            "".join(table.cells[i : i + table.row_width])
            for i in range(0, len(table.cells), table.row_width)
        )
        sections.append("\n".join(lines))
    return "\n".join(sections) + "\n"


def load_tables(text: str) -> list[PeterTable]:
    """Parse a .pet document: each ``% <row_width>`` header starts a table."""
    tables = []
    width: int | None = None
    rows: list[str] = []

    def flush():
        if width is None:
            return
        if not rows:
            raise TableError("table header with no rows")
        cells = tuple(_parse_cell(ch) for row in rows for ch in row)
        tables.append(PeterTable(cells, width))

    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith(";"):
            continue
        if line.startswith("%"):
            flush()
            try:
                width = int(line[1:].strip())
            except ValueError:
                raise TableError(f"bad table header {line!r}") from None
            if width < 1:
                raise TableError(f"row width must be >= 1, got {width}")
            rows = []
        else:
            if width is None:
                raise TableError("table rows before any % header")
            rows.append(line)
    flush()
    if not tables:
        raise TableError("no tables in document")
    return tables
