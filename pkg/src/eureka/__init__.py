"""Simulator of a wire-programmed Latin verse composing machine.

The package covers the whole pipeline: word lists (:mod:`eureka.lexicon`)
are compiled to wire-length drum programs (:mod:`eureka.drums`), a
discrete-time mechanism composes random lines from them
(:mod:`eureka.machine`), a scansion parser checks the hexameter
(:mod:`eureka.meter`), and :mod:`eureka.peter` implements the 1677
letter-table versifying game the machine descends from.  ``eureka.cli``
ties it all together as a command-line tool.
"""

__version__ = "0.1.0"
