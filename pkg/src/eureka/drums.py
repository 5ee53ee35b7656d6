"""The drum compiler: words to wire-length matrices and back.

One drum row encodes one word.  Column j carries a wire of length
``28 - i`` where ``i`` is the stave-alphabet position of letter j: the
longer the wire, the shorter a stave falls, so the earlier the letter.
Length 0 means no wire at all (padding past the word's end); a stave
over such a column falls through the whole alphabet to the blank cell
below Z.  A drum is as wide as its longest word.
"""

from __future__ import annotations

from dataclasses import dataclass

from .alphabet import letter_at, letter_index
from .lexicon import Lexicon, SlotCategory

MAX_WIRE = 27
NO_WIRE = 0


class DrumError(ValueError):
    """A word list or wire row that cannot be compiled or decoded."""


def wire_for(letter: str) -> int:
    """Wire length for ``letter``: 28 minus its stave position."""
    return 28 - letter_index(letter)


@dataclass(frozen=True)
class WireMatrix:
    """One drum's program: a grid of wire lengths, one row per word."""

    slot: SlotCategory
    width: int
    rows: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class MachineProgram:
    """Six wire matrices in drum order."""

    drums: tuple[WireMatrix, ...]

    def __post_init__(self):
        if len(self.drums) != 6:
            raise DrumError(f"a machine program needs 6 drums, got {len(self.drums)}")

    @property
    def stave_count(self) -> int:
        """Total interpreting staves: the sum of drum widths."""
        return sum(matrix.width for matrix in self.drums)


def compile_drum(words: list[str], slot: SlotCategory) -> WireMatrix:
    """Hard-wire ``words`` onto one drum, padding short words with 0."""
    if not words:
        raise DrumError(f"drum {slot.drum}: empty word list")
    for word in words:
        if not word:
            raise DrumError(f"drum {slot.drum}: empty word")
    width = max(len(word) for word in words)
    rows = tuple(
        tuple(wire_for(word[j]) if j < len(word) else NO_WIRE for j in range(width))
        for word in words
    )
    return WireMatrix(slot, width, rows)


def decode_row(matrix: WireMatrix, row_index: int) -> str:
    """Read the word back off row ``row_index`` (inverse of compile)."""
    if not 0 <= row_index < len(matrix.rows):
        raise DrumError(
            f"row {row_index} out of range for a {len(matrix.rows)}-row drum"
        )
    row = matrix.rows[row_index]
    letters = []
    for j, wire in enumerate(row):
        if wire == NO_WIRE:
            if any(rest != NO_WIRE for rest in row[j + 1 :]):
                raise DrumError(
                    f"malformed row {row_index}: padding must be a suffix, got {row}"
                )
            break
        if not 1 <= wire <= MAX_WIRE:
            raise DrumError(f"malformed row {row_index}: wire length {wire} out of 0..27")
        letters.append(letter_at(28 - wire))
    if not letters:
        raise DrumError(f"malformed row {row_index}: no wires at all")
    return "".join(letters)


def compile_program(lexicon: Lexicon) -> MachineProgram:
    """Compile all six drums of ``lexicon`` in drum order."""
    return MachineProgram(
        tuple(
            compile_drum(lexicon.words(drum), SlotCategory.for_drum(drum))
            for drum in range(1, 7)
        )
    )


def dump_program(program: MachineProgram) -> str:
    """Plain-text dump, one drum per section, rows as comma-separated wires."""
    sections = []
    for matrix in program.drums:
        lines = [f"drum {matrix.slot.drum} {matrix.slot.name} width={matrix.width}"]
        lines.extend(",".join(str(wire) for wire in row) for row in matrix.rows)
        sections.append("\n".join(lines))
    return "\n\n".join(sections) + "\n"
