"""Pure-Python twin of the compiled foot-assignment kernel.

Keep this in lockstep with ``_kernel.pyx``: same search order, same
return convention, same failure indexes.  The search places feet left
to right, trying dactyl before spondee, and backtracks on a dead end.
"""

from __future__ import annotations

LONG_CODE = ord("-")
SHORT_CODE = ord("u")


def scan_codes(quantities: bytes, allow_spondaic_fifth: bool = False) -> str | int:
    """Assign ``quantities`` to six hexameter feet.

    Returns a five-character string of ``D``/``S`` codes for feet 1-5
    (foot 6 is always the long-plus-anceps close), or, when no
    assignment exists, the int index of the furthest syllable the
    search got stuck on (``len(quantities)`` means it ran out of
    syllables).
    """
    n = len(quantities)
    feet = ["D"] * 5
    furthest = 0

    def fail_at(p: int) -> bool:
        nonlocal furthest
        if p > n:
            p = n
        if p > furthest:
            furthest = p
        return False

    def place(foot: int, pos: int) -> bool:
        if foot == 5:
            # closing foot: a long plus exactly one syllable of either length
            if pos >= n:
                return fail_at(n)
            if quantities[pos] != LONG_CODE:
                return fail_at(pos)
            if pos + 1 >= n:
                return fail_at(n)
            if pos + 2 < n:
                return fail_at(pos + 2)
            return True
        if pos >= n:
            return fail_at(n)
        if quantities[pos] != LONG_CODE:
            return fail_at(pos)
        # dactyl first
        if pos + 1 >= n:
            fail_at(n)
        elif quantities[pos + 1] != SHORT_CODE:
            fail_at(pos + 1)
        elif pos + 2 >= n:
            fail_at(n)
        elif quantities[pos + 2] != SHORT_CODE:
            fail_at(pos + 2)
        else:
            feet[foot] = "D"
            if place(foot + 1, pos + 3):
                return True
        # then spondee (feet 1-4 always; foot 5 only when allowed)
        if foot < 4 or allow_spondaic_fifth:
            if pos + 1 >= n:
                fail_at(n)
            elif quantities[pos + 1] != LONG_CODE:
                fail_at(pos + 1)
            else:
                feet[foot] = "S"
                if place(foot + 1, pos + 2):
                    return True
        return False

    if place(0, 0):
        return "".join(feet)
    return furthest
