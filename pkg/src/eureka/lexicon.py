"""Word lists for the six composing drums.

A lexicon file is line oriented: one entry per line, ``#`` starts a
comment, blank lines are ignored.  Each entry is

    <drum:1-6> <word> <quantities:[-u]+> <category:adj|noun|adv|verb>

for example ``1 MARTIA -uu adj``.  Words are case-insensitive on input
and canonicalized to upper case; the ligatures Æ/Œ may be typed as
AE/OE but are always serialized as single codepoints.  Quantities give
the metrical length of each syllable, ``-`` long and ``u`` short, and
are stored with the word rather than derived from Latin phonology: the
vocabulary is treated as pre-scanned.

The slot grammar is fixed: drum 1 adjective, 2 noun, 3 adverb, 4 verb,
5 noun, 6 adjective.  A drum may carry the same word twice (the word
then occupies two rows but counts once in distinct-line totals).
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterator, Literal

from .alphabet import AlphabetError, canonical_word

LONG = "-"
SHORT = "u"

_QUANTITY_RE = re.compile(r"^[-uU]+$")
_TOKEN_RE = re.compile(r"\S+")


class LexiconError(ValueError):
    """A malformed lexicon document or entry."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            message = f"{where}: {message}"
        super().__init__(message)


class UnknownWordError(LookupError):
    """A word that is not present on the drum it was looked up on."""


class SlotCategory(enum.Enum):
    """Grammatical slot of each drum, in drum order."""

    ADJ1 = (1, "adj")
    NOUN1 = (2, "noun")
    ADV = (3, "adv")
    VERB = (4, "verb")
    NOUN2 = (5, "noun")
    ADJ2 = (6, "adj")

    def __init__(self, drum: int, token: str):
        self.drum = drum
        self.token = token

    @classmethod
    def for_drum(cls, drum: int) -> "SlotCategory":
        for cat in cls:
            if cat.drum == drum:
                return cat
        raise ValueError(f"drum index {drum} out of 1..6")


CATEGORY_TOKENS = sorted({cat.token for cat in SlotCategory})


@dataclass(frozen=True)
class LexiconEntry:
    """One word on one drum: canonical spelling plus syllable quantities."""

    drum: int
    word: str
    quantities: str
    category: SlotCategory


@dataclass(frozen=True)
class Lexicon:
    """Entries grouped by drum; row order within a drum is file order."""

    drums: tuple[tuple[LexiconEntry, ...], ...]

    def __post_init__(self):
        if len(self.drums) != 6:
            raise LexiconError(f"a lexicon needs 6 drums, got {len(self.drums)}")
        for d, entries in enumerate(self.drums, start=1):
            if not entries:
                raise LexiconError(f"empty drum: drum {d} has no entries")
            for entry in entries:
                if entry.drum != d:
                    raise LexiconError(
                        f"entry {entry.word} carries drum {entry.drum} but sits on drum {d}"
                    )

    def entries(self) -> Iterator[LexiconEntry]:
        for drum in self.drums:
            yield from drum

    def drum_entries(self, drum: int) -> tuple[LexiconEntry, ...]:
        if not 1 <= drum <= 6:
            raise ValueError(f"drum index {drum} out of 1..6")
        return self.drums[drum - 1]

    def words(self, drum: int) -> list[str]:
        """All words on ``drum`` in row order, duplicates included."""
        return [e.word for e in self.drum_entries(drum)]

    def distinct_words(self, drum: int) -> list[str]:
        """Distinct words on ``drum``, in order of first appearance."""
        return list(dict.fromkeys(self.words(drum)))

    def find(self, drum: int, word: str) -> LexiconEntry:
        """First entry for ``word`` on ``drum``; the query is canonicalized."""
        try:
            target = canonical_word(word)
        except AlphabetError:
            raise UnknownWordError(f"word {word!r} is not on drum {drum}") from None
        for entry in self.drum_entries(drum):
            if entry.word == target:
                return entry
        raise UnknownWordError(f"word {word!r} is not on drum {drum}")


def parse_lexicon(text: str) -> Lexicon:
    """Parse a lexicon document, validating every entry.

    Raises :class:`LexiconError` with line/column positions for syntax
    errors, off-stave letters, bad drum indices, category/drum
    mismatches and empty drums.
    """
    per_drum: list[list[LexiconEntry]] = [[] for _ in range(6)]
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        body = raw_line.split("#", 1)[0]
        tokens = list(_TOKEN_RE.finditer(body))
        if not tokens:
            continue
        if len(tokens) != 4:
            bad = tokens[4] if len(tokens) > 4 else tokens[-1]
            raise LexiconError(
                f"expected 4 fields (drum word quantities category), got {len(tokens)}",
                lineno,
                bad.start() + 1,
            )
        drum_tok, word_tok, quant_tok, cat_tok = tokens

        if not drum_tok.group().isdigit():
            raise LexiconError(
                f"drum index must be an integer, got {drum_tok.group()!r}",
                lineno,
                drum_tok.start() + 1,
            )
        drum = int(drum_tok.group())
        if not 1 <= drum <= 6:
            raise LexiconError(f"drum index {drum} out of 1..6", lineno, drum_tok.start() + 1)

        try:
            word = canonical_word(word_tok.group())
        except AlphabetError as exc:
            raise LexiconError(str(exc), lineno, word_tok.start() + 1) from None

        if not _QUANTITY_RE.match(quant_tok.group()):
            raise LexiconError(
                f"quantities must be a non-empty string over '-' and 'u', got {quant_tok.group()!r}",
                lineno,
                quant_tok.start() + 1,
            )
        quantities = quant_tok.group().lower()
        if len(quantities) > len(word):
            raise LexiconError(
                f"word {word} has {len(word)} letters but {len(quantities)} quantities",
                lineno,
                quant_tok.start() + 1,
            )

        category_token = cat_tok.group().lower()
        if category_token not in CATEGORY_TOKENS:
            raise LexiconError(
                f"unknown category {cat_tok.group()!r} (use one of {', '.join(CATEGORY_TOKENS)})",
                lineno,
                cat_tok.start() + 1,
            )
        expected = SlotCategory.for_drum(drum)
        if category_token != expected.token:
            raise LexiconError(
                f"category {category_token!r} does not belong on drum {drum} "
                f"(expected {expected.token!r})",
                lineno,
                cat_tok.start() + 1,
            )

        per_drum[drum - 1].append(LexiconEntry(drum, word, quantities, expected))

    for d, entries in enumerate(per_drum, start=1):
        if not entries:
            raise LexiconError(f"empty drum: drum {d} has no entries")
    return Lexicon(tuple(tuple(entries) for entries in per_drum))


def render_lexicon(lexicon: Lexicon) -> str:
    """Serialize ``lexicon`` back to the file format (inverse of parse)."""
    lines = [
        f"{e.drum} {e.word} {e.quantities} {e.category.token}" for e in lexicon.entries()
    ]
    return "\n".join(lines) + "\n"


def count_distinct_lines(lexicon: Lexicon) -> int:
    """Number of distinct verse lines: the product of per-drum distinct words."""
    total = 1
    for drum in range(1, 7):
        total *= len(lexicon.distinct_words(drum))
    return total


@dataclass(frozen=True)
class Diagnostic:
    """One validation finding on one lexicon entry."""

    severity: Literal["error", "warning"]
    drum: int
    word: str
    message: str

    def __str__(self) -> str:
        return f"{self.severity}: drum {self.drum} {self.word}: {self.message}"


def validate_historical(
    lexicon: Lexicon,
    mode: Literal["strict", "historical"] = "historical",
    allow_spondaic_fifth: bool = False,
) -> list[Diagnostic]:
    """Check that every word can take part in at least one hexameter line.

    A word fails when no choice of companion words from the other drums
    yields a line the scanner accepts with this word at its slot.  In
    ``strict`` mode the findings are errors; in ``historical`` mode the
    same findings come back as warnings and the lexicon is considered
    acceptable (the original machine itself carried a few words with
    false quantities).
    """
    if mode not in ("strict", "historical"):
        raise ValueError(f"mode must be 'strict' or 'historical', got {mode!r}")
    from . import meter  # local import: meter pulls quantity symbols from here

    patterns = [[e.quantities for e in lexicon.drum_entries(d)] for d in range(1, 7)]
    feasible = meter.word_slot_feasibility(patterns, allow_spondaic_fifth)
    severity: Literal["error", "warning"] = "error" if mode == "strict" else "warning"
    diagnostics = []
    for d in range(1, 7):
        for entry, ok in zip(lexicon.drum_entries(d), feasible[d - 1]):
            if not ok:
                diagnostics.append(
                    Diagnostic(
                        severity,
                        d,
                        entry.word,
                        f"quantities {entry.quantities} cannot take part in any "
                        f"hexameter line at slot {d}",
                    )
                )
    return diagnostics
