"""Discrete-time simulation of the composing/interpreting cycle.

One pull of the lever runs a full cycle: every drum gets an independent
random rotational kick, the staves descend one letter position per tick
onto the composing wires (the front windows show the letters changing as
they fall), the bell rings when the last stave rests, the finished verse
dwells readable, and the staves reset in a single step.  A stave over a
wire of length L rests at depth ``28 - L``, i.e. at the wired letter's
alphabet position; over an empty column it falls to the blank cell at
depth 28.  One winding of the key is good for five cycles.

The machine's randomness is mechanical in origin; the simulator
substitutes a seeded deterministic generator drawing each drum's kick
uniformly from ``1..rows``, so a (program, seed, pull sequence) triple
fully determines every frame and verse.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from .alphabet import letter_at
from .drums import MachineProgram, decode_row

BLANK_DEPTH = 28
CYCLES_PER_WIND = 5
ENUMERATION_CAP = 10_000_000


class MachineError(RuntimeError):
    """An operation applied in the wrong machine phase."""


class NeedsWinding(MachineError):
    """The driving weight has fully dropped; turn the key."""


class CapExceeded(RuntimeError):
    """The verse space is larger than the enumeration cap."""


class Phase(Enum):
    READY = "ready"
    INTERPRETING = "interpreting"
    DWELL = "dwell"
    RESETTING = "resetting"


@dataclass(frozen=True)
class Frame:
    """One tick of the descent: stave depths and the visible window text."""

    tick: int
    drops: tuple[int, ...]
    display: str


@dataclass(frozen=True)
class CycleResult:
    """One composed verse with its full descent trace."""

    words: tuple[str, ...]
    display: str
    rows: tuple[int, ...]
    frames: tuple[Frame, ...]
    bell_tick: int
    cycle: int


@dataclass
class MachineState:
    """Mutable machine: program, drum positions, stave depths, energy, RNG.

    Owned by one logical thread at a time; all operations are
    synchronous and deterministic.
    """

    program: MachineProgram
    seed: int
    rng: random.Random
    drum_positions: list[int]
    stave_drops: list[int]
    targets: list[int]
    phase: Phase = Phase.READY
    energy: int = 0
    odometer: int = 0


def new_machine(program: MachineProgram, seed: int) -> MachineState:
    """Fresh machine: unwound, all drums on row 0, staves up."""
    staves = program.stave_count
    return MachineState(
        program=program,
        seed=seed,
        rng=random.Random(seed),
        drum_positions=[0] * 6,
        stave_drops=[0] * staves,
        targets=[0] * staves,
    )


def wind(state: MachineState) -> MachineState:
    """Turn the key: restore energy for five cycles (rewinding tops up)."""
    if state.phase is not Phase.READY:
        raise MachineError(f"cannot wind during {state.phase.value}")
    state.energy = CYCLES_PER_WIND
    return state


def kick_drums(state: MachineState) -> None:
    """Rotate each drum independently by a uniform kick of 1..rows."""
    for d, matrix in enumerate(state.program.drums):
        rows = len(matrix.rows)
        kick = state.rng.randint(1, rows)
        state.drum_positions[d] = (state.drum_positions[d] + kick) % rows


def begin_cycle(state: MachineState) -> None:
    """Kick the drums and release the staves (phase becomes INTERPRETING)."""
    if state.phase is not Phase.READY:
        raise MachineError(f"cannot start a cycle during {state.phase.value}")
    if state.energy < 1:
        raise NeedsWinding("the driving weight is down; wind the machine")
    kick_drums(state)
    i = 0
    for d, matrix in enumerate(state.program.drums):
        row = matrix.rows[state.drum_positions[d]]
        for wire in row:
            state.targets[i] = BLANK_DEPTH - wire
            i += 1
    state.phase = Phase.INTERPRETING


def descend_tick(state: MachineState) -> MachineState:
    """One tick of gravity: every unrested stave drops one letter position."""
    if state.phase is not Phase.INTERPRETING:
        raise MachineError(f"staves only descend while interpreting, not {state.phase.value}")
    for i, (drop, target) in enumerate(zip(state.stave_drops, state.targets)):
        if drop < target:
            state.stave_drops[i] = drop + 1
    return state


def all_rested(state: MachineState) -> bool:
    return all(drop == target for drop, target in zip(state.stave_drops, state.targets))


def read_display(state: MachineState) -> str:
    """Current window text: per-stave letters with one space between drums.

    A stave at depth 0 (top) or 28 (blank cell) shows nothing.
    """
    parts = []
    i = 0
    for matrix in state.program.drums:
        chars = []
        for _ in range(matrix.width):
            drop = state.stave_drops[i]
            if 0 < drop < BLANK_DEPTH:
                chars.append(letter_at(drop))
            i += 1
        parts.append("".join(chars))
    return " ".join(parts)


def pull_lever(state: MachineState) -> CycleResult:
    """Run one full cycle and return the verse with its descent trace."""
    begin_cycle(state)
    frames = []
    tick = 0
    while not all_rested(state):
        tick += 1
        descend_tick(state)
        frames.append(Frame(tick, tuple(state.stave_drops), read_display(state)))
    bell_tick = tick  # the bell rings as the last stave rests

    state.phase = Phase.DWELL
    rows = tuple(state.drum_positions)
    words = tuple(
        decode_row(matrix, position)
        for matrix, position in zip(state.program.drums, rows)
    )
    display = read_display(state)

    state.phase = Phase.RESETTING  # the reset board lifts all staves at once
    for i in range(len(state.stave_drops)):
        state.stave_drops[i] = 0
        state.targets[i] = 0
    state.energy -= 1
    state.odometer += 1
    state.phase = Phase.READY
    return CycleResult(words, display, rows, tuple(frames), bell_tick, state.odometer)


def run_session(state: MachineState, pulls: int, auto_wind: bool = True) -> list[CycleResult]:
    """Pull the lever ``pulls`` times, rewinding between cycles if allowed."""
    if pulls < 0:
        raise ValueError(f"pulls must be >= 0, got {pulls}")
    results = []
    for _ in range(pulls):
        if auto_wind and state.energy < 1:
            wind(state)
        results.append(pull_lever(state))
    return results


def enumerate_lines(
    program: MachineProgram, cap: int = ENUMERATION_CAP
) -> Iterator[tuple[str, ...]]:
    """All distinct verses, lexicographic by drum row, duplicates collapsed.

    Duplicate words on a drum collapse before the cartesian product, so
    the stream length equals the distinct-line count.  Raises
    :class:`CapExceeded` up front when that count exceeds ``cap``.
    """
    word_lists = []
    for matrix in program.drums:
        decoded = [decode_row(matrix, r) for r in range(len(matrix.rows))]
        word_lists.append(list(dict.fromkeys(decoded)))
    total = 1
    for words in word_lists:
        total *= len(words)
    if total > cap:
        raise CapExceeded(f"verse space has {total} lines, over the cap of {cap}")
    return itertools.product(*word_lists)


def frame_record(frame: Frame) -> dict:
    """Frame as a JSON Lines trace object."""
    return {"tick": frame.tick, "drops": list(frame.drops), "display": frame.display}


def cycle_record(result: CycleResult, seed: int) -> dict:
    """Cycle summary as a JSON Lines trace object."""
    return {
        "verse": result.display,
        "words": list(result.words),
        "cycle": result.cycle,
        "seed": seed,
    }
