"""Bundled lexicons.

``demo.lex`` is a two-words-per-drum lexicon built from the machine's
two exhibited verse lines; every cell of its 64-line verse space scans.
``historical_shape.lex`` is a placeholder vocabulary with the original
machine's drum cardinalities (16, 16, 15 distinct plus one repeat, 18,
19, 20), pending a transcription of the real word table.
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path


def _bundled(name: str) -> Path:
    return Path(str(resources.files(__package__).joinpath(name)))


def demo_path() -> Path:
    return _bundled("demo.lex")


def historical_shape_path() -> Path:
    return _bundled("historical_shape.lex")
