"""Command-line front end.

Subcommands: ``compose`` (pull the lever and print verses), ``trace``
(same, with the per-tick descent shown), ``scan`` (scan a quantity
string or a six-word line), ``count`` / ``enumerate`` (size and stream
of the verse space), ``peter`` (the 1677 letter tables), and
``cascade`` (feed composed lines into a successor machine).

Exit codes: 0 success; 1 data or machine errors (bad lexicon, missing
file, unwound machine); 2 configuration errors (bad flags or
environment); 3 enumeration cap exceeded.  The RNG seed comes from
``--seed``, else the ``EUREKA_SEED`` environment variable, else 0.
Identical invocations produce byte-identical output.  Everything is
written as UTF-8 with Æ/Œ as single codepoints.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from . import __version__, data, drums, machine, meter, peter
from .lexicon import (
    Lexicon,
    LexiconError,
    UnknownWordError,
    count_distinct_lines,
    parse_lexicon,
    validate_historical,
)

EXIT_OK = 0
EXIT_DATA = 1
EXIT_CONFIG = 2
EXIT_CAP = 3

BUNDLED_LEXICONS = {
    "demo": data.demo_path,
    "historical-shape": data.historical_shape_path,
}


class ConfigError(ValueError):
    """A bad flag value or environment setting."""


class CorpusError(ValueError):
    """A malformed cascade corpus."""


@dataclass
class SessionConfig:
    """Everything one composing session needs."""

    seed: int
    lexicon_path: str
    pulls: int
    auto_wind: bool = True
    output_format: str = "text"
    allow_spondaic_fifth: bool = False
    expected_stave_count: int | None = None


def _utf8_stdio() -> None:
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")


def _resolve_seed(flag_value: int | None) -> int:
    if flag_value is not None:
        return flag_value
    env = os.environ.get("EUREKA_SEED")
    if env:
        try:
            return int(env)
        except ValueError:
            raise ConfigError(f"EUREKA_SEED={env!r} is not an integer") from None
    return 0


def _lexicon_file(value: str) -> Path:
    path = Path(value)
    if path.exists():
        return path
    if value in BUNDLED_LEXICONS:
        return BUNDLED_LEXICONS[value]()
    raise FileNotFoundError(f"lexicon file {value!r} not found")


def _load_lexicon(value: str) -> Lexicon:
    text = _lexicon_file(value).read_text(encoding="utf-8")
    return parse_lexicon(text)


def _session_config(args: argparse.Namespace) -> SessionConfig:
    pulls = args.pulls
    if pulls < 0:
        raise ConfigError(f"--pulls must be >= 0, got {pulls}")
    return SessionConfig(
        seed=_resolve_seed(args.seed),
        lexicon_path=args.lexicon,
        pulls=pulls,
        auto_wind=args.auto_wind,
        output_format=args.output_format,
        allow_spondaic_fifth=args.spondaic_fifth,
        expected_stave_count=args.expected_stave_count,
    )


def _compile_checked(lexicon: Lexicon, cfg: SessionConfig) -> drums.MachineProgram:
    program = drums.compile_program(lexicon)
    if cfg.expected_stave_count is not None and program.stave_count != cfg.expected_stave_count:
        raise LexiconError(
            f"program has {program.stave_count} staves, expected {cfg.expected_stave_count}"
        )
    return program


def _dump(record: dict) -> str:
    return json.dumps(record, ensure_ascii=False, separators=(",", ":"))


def _emit_results(
    results: Sequence[machine.CycleResult], cfg: SessionConfig, with_frames: bool
) -> None:
    if cfg.output_format == "jsonl":
        for result in results:
            if with_frames:
                for frame in result.frames:
                    print(_dump(machine.frame_record(frame)))
            print(_dump(machine.cycle_record(result, cfg.seed)))
    else:
        for result in results:
            if with_frames:
                for frame in result.frames:
                    print(f"{frame.tick:2d} {frame.display}")
                print(f"(bell at tick {result.bell_tick})")
            print(result.display)


def cmd_compose(args: argparse.Namespace) -> int:
    cfg = _session_config(args)
    lexicon = _load_lexicon(cfg.lexicon_path)
    mode = "strict" if args.strict else "historical"
    diagnostics = validate_historical(lexicon, mode, cfg.allow_spondaic_fifth)
    for diagnostic in diagnostics:
        print(f"eureka: {diagnostic}", file=sys.stderr)
    if any(d.severity == "error" for d in diagnostics):
        return EXIT_DATA
    program = _compile_checked(lexicon, cfg)
    state = machine.new_machine(program, cfg.seed)
    results = machine.run_session(state, cfg.pulls, auto_wind=cfg.auto_wind)
    _emit_results(results, cfg, with_frames=cfg.output_format == "jsonl")
    return EXIT_OK


def cmd_trace(args: argparse.Namespace) -> int:
    cfg = _session_config(args)
    lexicon = _load_lexicon(cfg.lexicon_path)
    program = _compile_checked(lexicon, cfg)
    state = machine.new_machine(program, cfg.seed)
    machine.wind(state)  # one turn of the key; --auto-wind to keep rewinding
    results = machine.run_session(state, cfg.pulls, auto_wind=cfg.auto_wind)
    _emit_results(results, cfg, with_frames=True)
    return EXIT_OK


def cmd_scan(args: argparse.Namespace) -> int:
    try:
        if args.lexicon is not None:
            if len(args.items) != 6:
                raise ConfigError(
                    f"scanning against a lexicon needs exactly 6 words, got {len(args.items)}"
                )
            parse = meter.scan_line(_load_lexicon(args.lexicon), args.items, args.spondaic_fifth)
        else:
            quantities = "".join(args.items)
            try:
                parse = meter.scan(quantities, args.spondaic_fifth)
            except meter.ScanFailure:
                raise
            except ValueError as exc:
                raise ConfigError(str(exc)) from None
    except meter.ScanFailure as exc:
        print(f"no valid parse (stuck at syllable index {exc.index})")
        return EXIT_DATA
    print(parse.letters())
    return EXIT_OK


def cmd_count(args: argparse.Namespace) -> int:
    print(count_distinct_lines(_load_lexicon(args.lexicon)))
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    if args.cap < 1:
        raise ConfigError(f"--cap must be >= 1, got {args.cap}")
    program = drums.compile_program(_load_lexicon(args.lexicon))
    for words in machine.enumerate_lines(program, cap=args.cap):
        print(" ".join(words))
    return EXIT_OK


def cmd_peter_count(args: argparse.Namespace) -> int:
    print(peter.count_keys())
    return EXIT_OK


def cmd_peter_decode(args: argparse.Namespace) -> int:
    tables = peter.load_tables(Path(args.tables).read_text(encoding="utf-8"))
    words = peter.decode_line(tables, args.key)
    print(" ".join(words))
    return EXIT_OK


def cmd_peter_encode(args: argparse.Namespace) -> int:
    text = Path(args.words).read_text(encoding="utf-8")
    tables = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        words = body.split()
        if len(words) != 9:
            raise peter.TableError(
                f"line {lineno}: a table needs exactly 9 words, got {len(words)}"
            )
        tables.append(peter.encode_table(words, row_width=args.row_width))
    if not tables:
        raise peter.TableError("no word lines in input")
    sys.stdout.write(peter.dump_tables(tables))
    return EXIT_OK


def cmd_peter_render(args: argparse.Namespace) -> int:
    tables = peter.load_tables(Path(args.tables).read_text(encoding="utf-8"))
    print("\n\n".join(peter.render_table(table) for table in tables))
    return EXIT_OK


def _read_corpus(path: str) -> list[list[str]]:
    lines = []
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append(body.split())
    return lines


def build_generation_lexicon(root: Lexicon, corpus: Sequence[Sequence[str]]) -> Lexicon:
    """Lexicon for the next machine: corpus words by slot, quantities from root.

    Composed lines only ever contain root-lexicon words, so each word's
    quantities and category are inherited rather than re-scanned.
    """
    if not corpus:
        raise CorpusError("empty corpus: need at least one six-word line")
    per_slot: list[dict[str, object]] = [{} for _ in range(6)]
    for lineno, words in enumerate(corpus, start=1):
        if len(words) != 6:
            raise CorpusError(f"corpus line {lineno}: expected 6 words, got {len(words)}")
        for drum, word in enumerate(words, start=1):
            try:
                entry = root.find(drum, word)
            except UnknownWordError:
                raise CorpusError(
                    f"corpus line {lineno}: word {word!r} is not on drum {drum} "
                    "of the root lexicon"
                ) from None
            per_slot[drum - 1].setdefault(entry.word, entry)
    return Lexicon(tuple(tuple(slot.values()) for slot in per_slot))


def cmd_cascade(args: argparse.Namespace) -> int:
    cfg = _session_config(args)
    if args.depth < 1:
        raise ConfigError(f"--depth must be >= 1, got {args.depth}")
    root = _load_lexicon(cfg.lexicon_path)
    lines: Sequence[Sequence[str]] = _read_corpus(args.corpus)
    results: list[machine.CycleResult] = []
    for generation in range(args.depth):
        lexicon = build_generation_lexicon(root, lines)
        program = drums.compile_program(lexicon)
        state = machine.new_machine(program, cfg.seed + generation)
        results = machine.run_session(state, cfg.pulls, auto_wind=True)
        lines = [result.words for result in results]
    _emit_results(results, cfg, with_frames=False)
    return EXIT_OK


def _add_session_options(sp: argparse.ArgumentParser, auto_wind_default: bool) -> None:
    sp.add_argument(
        "--lexicon",
        required=True,
        help="lexicon file, or one of the bundled names: " + ", ".join(BUNDLED_LEXICONS),
    )
    sp.add_argument("--pulls", type=int, default=1, help="lever pulls (default 1)")
    sp.add_argument("--seed", type=int, default=None, help="RNG seed (default $EUREKA_SEED or 0)")
    sp.add_argument(
        "--format",
        dest="output_format",
        choices=("text", "jsonl"),
        default="text",
        help="verse lines, or JSON Lines with per-tick frames",
    )
    sp.add_argument(
        "--spondaic-fifth",
        action="store_true",
        help="let the fifth foot be a spondee when scanning",
    )
    sp.add_argument(
        "--expected-stave-count",
        type=int,
        default=None,
        help="fail unless the compiled program has exactly this many staves",
    )
    sp.add_argument(
        "--auto-wind",
        action=argparse.BooleanOptionalAction,
        default=auto_wind_default,
        help="rewind automatically whenever the weight is down",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eureka",
        description="Compose, trace, scan and count machine-made Latin hexameters.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("compose", help="pull the lever and print verses")
    _add_session_options(sp, auto_wind_default=True)
    sp.add_argument(
        "--strict",
        action="store_true",
        help="reject the lexicon if any word cannot scan at its slot",
    )
    sp.set_defaults(func=cmd_compose)

    sp = sub.add_parser("trace", help="compose, showing the stave descent tick by tick")
    _add_session_options(sp, auto_wind_default=False)
    sp.set_defaults(func=cmd_trace)

    sp = sub.add_parser("scan", help="scan a quantity string, or six words with --lexicon")
    sp.add_argument("--lexicon", default=None, help="lexicon file for word lookups")
    sp.add_argument("--spondaic-fifth", action="store_true")
    sp.add_argument(
        "items",
        nargs="+",
        help="quantity string like '-uu-uu----' (put -- before it), or six words",
    )
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("count", help="print the distinct-line count of a lexicon")
    sp.add_argument("lexicon", help="lexicon file or bundled name")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("enumerate", help="stream every distinct line of a lexicon")
    sp.add_argument("lexicon", help="lexicon file or bundled name")
    sp.add_argument(
        "--cap",
        type=int,
        default=machine.ENUMERATION_CAP,
        help=f"refuse verse spaces larger than this (default {machine.ENUMERATION_CAP})",
    )
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("peter", help="the 1677 letter-table versifying game")
    petersub = sp.add_subparsers(dest="peter_command", required=True)

    pp = petersub.add_parser("count", help="how many six-digit keys there are")
    pp.set_defaults(func=cmd_peter_count)

    pp = petersub.add_parser("decode", help="decode a six-digit key against six tables")
    pp.add_argument("--key", required=True, help="six digits, each 1-9, e.g. 467182")
    pp.add_argument("tables", help=".pet table file")
    pp.set_defaults(func=cmd_peter_decode)

    pp = petersub.add_parser("encode", help="hide words in tables (9 words per input line)")
    pp.add_argument("words", help="word file: one table per line, nine words each")
    pp.add_argument("--row-width", type=int, default=peter.DEFAULT_ROW_WIDTH)
    pp.set_defaults(func=cmd_peter_encode)

    pp = petersub.add_parser("render", help="print tables as letter grids")
    pp.add_argument("tables", help=".pet table file")
    pp.set_defaults(func=cmd_peter_render)

    sp = sub.add_parser("cascade", help="feed composed lines into successor machines")
    _add_session_options(sp, auto_wind_default=True)
    sp.add_argument("--corpus", required=True, help="file of six-word lines to seed generation 1")
    sp.add_argument("--depth", type=int, default=1, help="number of machine generations")
    sp.set_defaults(func=cmd_cascade)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    _utf8_stdio()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_CONFIG
    try:
        return args.func(args)
    except BrokenPipeError:
        try:
            sys.stdout.close()
        except OSError:
            pass
        return EXIT_OK
    except ConfigError as exc:
        print(f"eureka: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except machine.CapExceeded as exc:
        print(f"eureka: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (
        LexiconError,
        UnknownWordError,
        CorpusError,
        drums.DrumError,
        machine.MachineError,
        peter.TableError,
        OSError,
    ) as exc:
        print(f"eureka: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
