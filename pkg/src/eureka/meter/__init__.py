"""Dactylic-hexameter scansion.

A line scans as six feet: feet 1-4 are dactyls (``- u u``) or spondees
(``- -``), foot 5 is a dactyl (optionally a spondee, for "spondaic"
lines), and foot 6 is a long plus one closing syllable of either length
(anceps).  Anceps lives at line level only: lexicon entries record each
word's own quantities and the scanner relaxes just the final syllable.

The parser assigns a quantity string to feet by left-to-right
backtracking, trying dactyl before spondee, which makes the returned
parse unique and stable.  Two interchangeable kernels implement the
search: a compiled extension (``eureka.meter._kernel``) and a
pure-Python twin (``eureka.meter._pure``).  The compiled one is picked
at import time when available; set ``EUREKA_METER_BACKEND=pure`` or
``=compiled`` to force a choice.  ``benchmarks/bench_meter.py``
compares the two.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

from ..lexicon import LONG, SHORT
from . import _pure

if TYPE_CHECKING:
    from ..lexicon import Lexicon

_choice = os.environ.get("EUREKA_METER_BACKEND", "auto")
if _choice == "pure":
    _backend = _pure
elif _choice in ("auto", "compiled", ""):
    try:
        from . import _kernel as _backend  # type: ignore[no-redef]
    except ImportError:
        if _choice == "compiled":
            raise
        _backend = _pure
else:
    raise RuntimeError(
        f"EUREKA_METER_BACKEND={_choice!r}: use 'auto', 'compiled' or 'pure'"
    )

BACKEND = "pure" if _backend is _pure else "compiled"


class ScanFailure(ValueError):
    """No assignment of the quantities to six feet exists."""

    def __init__(self, index: int):
        self.index = index
        super().__init__(f"no valid hexameter parse (stuck at syllable index {index})")


class Foot(enum.Enum):
    DACTYL = ("D", (LONG, SHORT, SHORT))
    SPONDEE = ("S", (LONG, LONG))
    FINAL = ("X", (LONG, None))  # second syllable anceps

    def __init__(self, letter: str, pattern: tuple):
        self.letter = letter
        self.pattern = pattern

    @property
    def span(self) -> int:
        return len(self.pattern)


@dataclass(frozen=True)
class FootParse:
    """Six feet plus the syllable index ranges they cover."""

    feet: tuple[Foot, ...]
    ranges: tuple[tuple[int, int], ...]

    def letters(self) -> str:
        return " ".join(foot.letter for foot in self.feet)


def _check_quantities(quantities: str) -> None:
    for ch in quantities:
        if ch != LONG and ch != SHORT:
            raise ValueError(f"quantities must use only {LONG!r} and {SHORT!r}, got {ch!r}")


def scan(quantities: str, allow_spondaic_fifth: bool = False) -> FootParse:
    """Parse a quantity string into six feet.

    Returns the first parse under left-to-right, dactyl-before-spondee
    backtracking; raises :class:`ScanFailure` carrying the furthest
    failure syllable index when no parse exists.
    """
    _check_quantities(quantities)
    result = _backend.scan_codes(quantities.encode("ascii"), allow_spondaic_fifth)
    if isinstance(result, int):
        raise ScanFailure(result)
    feet = tuple(Foot.DACTYL if c == "D" else Foot.SPONDEE for c in result) + (Foot.FINAL,)
    ranges = []
    pos = 0
    for foot in feet:
        ranges.append((pos, pos + foot.span))
        pos += foot.span
    return FootParse(feet, tuple(ranges))


def is_hexameter(quantities: str, allow_spondaic_fifth: bool = False) -> bool:
    """Cheap validity check used in bulk verse sweeps (no exception cost)."""
    _check_quantities(quantities)
    result = _backend.scan_codes(quantities.encode("ascii"), allow_spondaic_fifth)
    return not isinstance(result, int)


def scan_line(lexicon: "Lexicon", words: Sequence[str], allow_spondaic_fifth: bool = False) -> FootParse:
    """Scan a six-word verse, taking each word's quantities from its drum."""
    if len(words) != 6:
        raise ValueError(f"a verse line needs exactly 6 words, got {len(words)}")
    quantities = "".join(
        lexicon.find(drum, word).quantities for drum, word in enumerate(words, start=1)
    )
    return scan(quantities, allow_spondaic_fifth)


# ---------------------------------------------------------------------------
# Slot feasibility: which words can take part in at least one valid line.
#
# The foot grammar over quantities is a small DFA.  Walking per-drum word
# sets through it forwards and backwards tells, for every word, whether some
# choice of companions completes a valid hexameter -- without enumerating
# the verse space.
#
# States: for foot f in 0..4, 3f = foot start, 3f+1 = after its opening
# long, 3f+2 = after long-short (dactyl pending its second short);
# 15 = start of the closing foot, 16 = after its long, 17 = line accepted.

_FINAL_START = 15
_FINAL_MID = 16
_ACCEPT = 17
_ALL_STATES = range(18)


def _dfa_step(state: int, ch: str, allow_spondaic_fifth: bool) -> int | None:
    if state == _ACCEPT:
        return None
    if state == _FINAL_MID:
        return _ACCEPT  # anceps: either quantity closes the line
    if state == _FINAL_START:
        return _FINAL_MID if ch == LONG else None
    foot, offset = divmod(state, 3)
    next_start = 3 * (foot + 1) if foot < 4 else _FINAL_START
    if offset == 0:
        return state + 1 if ch == LONG else None
    if offset == 1:
        if ch == SHORT:
            return state + 1
        # a long completes a spondee
        if foot < 4 or allow_spondaic_fifth:
            return next_start
        return None
    # offset == 2: second short completes a dactyl
    return next_start if ch == SHORT else None


def _step_states(states: set[int], pattern: str, allow_spondaic_fifth: bool) -> set[int]:
    current = states
    for ch in pattern:
        nxt = set()
        for s in current:
            t = _dfa_step(s, ch, allow_spondaic_fifth)
            if t is not None:
                nxt.add(t)
        if not nxt:
            return nxt
        current = nxt
    return current


def word_slot_feasibility(
    patterns_by_slot: Sequence[Sequence[str]], allow_spondaic_fifth: bool = False
) -> list[list[bool]]:
    """For each slot's quantity patterns, whether each can join a valid line.

    ``patterns_by_slot`` holds six sequences of quantity strings, one per
    drum in slot order.  Entry ``[k][i]`` of the result is True when some
    choice of words from the other slots completes a hexameter with
    pattern ``i`` at slot ``k``.
    """
    if len(patterns_by_slot) != 6:
        raise ValueError(f"expected 6 slots, got {len(patterns_by_slot)}")
    forward: list[set[int]] = [set() for _ in range(7)]
    forward[0] = {0}
    for k in range(6):
        reached: set[int] = set()
        for pattern in patterns_by_slot[k]:
            reached |= _step_states(forward[k], pattern, allow_spondaic_fifth)
        forward[k + 1] = reached

    backward: list[set[int]] = [set() for _ in range(7)]
    backward[6] = {_ACCEPT}
    for k in reversed(range(6)):
        good: set[int] = set()
        for s in _ALL_STATES:
            for pattern in patterns_by_slot[k]:
                if _step_states({s}, pattern, allow_spondaic_fifth) & backward[k + 1]:
                    good.add(s)
                    break
        backward[k] = good

    return [
        [
            bool(_step_states(forward[k], pattern, allow_spondaic_fifth) & backward[k + 1])
            for pattern in patterns_by_slot[k]
        ]
        for k in range(6)
    ]
