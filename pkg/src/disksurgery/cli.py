"""Command-line interface.

Exit codes: 0 success, 2 usage error, 3 not primitive (``primitive``
subcommand), 4 scenario parse/validation failure, 5 oracle node cap hit.
"""

from __future__ import annotations

import argparse
import sys

from .primitivity import (
    OracleCapExceeded,
    is_primitive,
    oracle_primitives,
    replay_certificate,
)
from .report import render_json, render_text, run_report
from .scenarios import (
    BUILTIN_SCENARIOS,
    ScenarioFormatError,
    builtin_scenario,
    dumps_scenario,
    load_scenario,
    save_scenario,
)
from .surgery import (
    DisjointDisksError,
    InvalidSystemError,
    all_surgeries,
    validate_system,
)
from .words import (
    WordSyntaxError,
    format_word,
    parse_word,
    unoriented_cyclic_class,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NOT_PRIMITIVE = 3
EXIT_INVALID = 4
EXIT_CAP = 5


def _infer_rank(text: str) -> int:
    indices = []
    for token in text.split():
        digits = token[1:].split("^")[0] if token.startswith("x") else ""
        if digits.isdigit():
            indices.append(int(digits))
    return max([2] + indices)


def _cmd_reduce(args) -> int:
    rank = args.rank if args.rank is not None else _infer_rank(args.word)
    word = parse_word(args.word, rank)
    print(format_word(word.reduced()))
    return EXIT_OK


def _cmd_primitive(args) -> int:
    word = parse_word(args.word, args.rank)
    verdict = is_primitive(word, args.rank, use_oz=not args.no_oz)
    print(f"word: {format_word(word)}")
    print(f"rank: {args.rank}")
    print(f"verdict: {'primitive' if verdict.primitive else 'not primitive'}")
    print(f"oz fired: {'yes' if verdict.oz_fired else 'no'}")
    print(f"minimal cyclic word: {format_word(verdict.minimal)} "
          f"(length {len(verdict.minimal)})")
    if verdict.certificate:
        print("certificate:")
        trail = replay_certificate(word, verdict.certificate)
        for step, (auto, cyclic) in enumerate(zip(verdict.certificate, trail[1:]), start=1):
            print(f"  step {step}: {auto.describe()} -> {format_word(cyclic)}"
                  f" (length {len(cyclic)})")
    else:
        print("certificate: (empty)")
    return EXIT_OK if verdict.primitive else EXIT_NOT_PRIMITIVE


def _cmd_oracle(args) -> int:
    words = oracle_primitives(args.rank, args.max_len)
    for cyclic in sorted(words, key=lambda w: w.sort_key()):
        print(format_word(cyclic))
    return EXIT_OK


def _load_for(args) -> object:
    """Scenario argument: a built-in name or a file path."""
    if args.scenario in BUILTIN_SCENARIOS:
        return builtin_scenario(args.scenario, args.genus)
    if getattr(args, "genus_given", False):
        raise ValueError("--genus applies only to built-in scenarios")
    return load_scenario(args.scenario)


def _cmd_validate(args) -> int:
    system = load_scenario(args.scenario)
    violations = validate_system(system)
    if violations:
        for violation in violations:
            print(violation)
        return EXIT_INVALID
    print(f"valid: {system.chord_count} intersection arcs, rank {system.rank}")
    return EXIT_OK


def _require_valid_loaded(system) -> None:
    violations = validate_system(system)
    if violations:
        raise InvalidSystemError(violations)


def _cmd_surgeries(args) -> int:
    system = _load_for(args)
    _require_valid_loaded(system)
    for i, outcome in enumerate(all_surgeries(system), start=1):
        cyclic = unoriented_cyclic_class(outcome.boundary_word)
        print(f"[{i}] {outcome.choice.describe()} | piece {outcome.piece}"
              f" | arcs left {outcome.inherited_chords}")
        print(f"    word:  {format_word(outcome.boundary_word)}")
        print(f"    class: {format_word(cyclic)}")
    return EXIT_OK


def _cmd_closure(args) -> int:
    system = _load_for(args)
    _require_valid_loaded(system)
    if args.scenario in BUILTIN_SCENARIOS:
        label = f"{args.scenario} (genus {args.genus})"
    else:
        label = str(args.scenario)
    report = run_report(system, label=label)
    rendered = render_json(report) if args.machine else render_text(report)
    sys.stdout.write(rendered)
    return EXIT_OK


def _cmd_scenario(args) -> int:
    system = builtin_scenario(args.builtin, args.genus)
    if args.out is None:
        sys.stdout.write(dumps_scenario(system))
    else:
        save_scenario(system, args.out)
        print(f"wrote {args.out}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="disksurgery",
        description="Disk surgery on intersecting handlebody disks and "
                    "free-group primitivity testing.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="freely reduce a word")
    p.add_argument("word")
    p.add_argument("--rank", type=int, default=None,
                   help="ambient rank (default: inferred from the word)")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("primitive", help="test a word for primitivity")
    p.add_argument("word")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--no-oz", action="store_true",
                   help="disable the rank-2 sign fast path")
    p.set_defaults(func=_cmd_primitive)

    p = sub.add_parser("oracle", help="list all primitive cyclic words up to a length")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--max-len", type=int, required=True)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("validate", help="check a scenario file's invariants")
    p.add_argument("scenario")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("surgeries", help="list every surgery outcome of a pair")
    p.add_argument("scenario", help="scenario file or built-in name")
    p.add_argument("--genus", type=int, default=3,
                   help="genus for built-in scenarios (default 3)")
    p.set_defaults(func=_cmd_surgeries)

    p = sub.add_parser("closure", help="closure report for a disk pair")
    p.add_argument("scenario", help="scenario file or built-in name")
    p.add_argument("--genus", type=int, default=3,
                   help="genus for built-in scenarios (default 3)")
    p.add_argument("--machine", action="store_true", help="emit JSON")
    p.set_defaults(func=_cmd_closure)

    p = sub.add_parser("scenario", help="emit a built-in scenario file")
    p.add_argument("--builtin", required=True, choices=BUILTIN_SCENARIOS)
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.set_defaults(func=_cmd_scenario)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if hasattr(args, "genus"):
        given = argv if argv is not None else sys.argv[1:]
        args.genus_given = any(str(item).startswith("--genus") for item in given)
    try:
        return args.func(args)
    except (InvalidSystemError, ScenarioFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OracleCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (WordSyntaxError, DisjointDisksError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
