"""Command-line runner.

Subcommands:

* ``purecheck run`` — evaluate a suite at a confidence, print a report.
* ``purecheck list`` — show registered entry names (and tags).
* ``purecheck oracle`` — compare two words of edits both ways: by their
  normal-form automata and by brute force over small strings.

``PURECHECK_CONFIDENCE`` supplies the default budget; ``--confidence``
overrides it.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import List, Optional

from . import editor, runner
from .patches import Word, parse_literal, render_word

_SUITES = {
    "default": runner.default_suite,
    "negative": runner.negative_suite,
    "all": runner.full_suite,
}


def _default_confidence() -> int:
    raw = os.environ.get("PURECHECK_CONFIDENCE", "100")
    try:
        return int(raw)
    except ValueError:
        return 100


def _read_word(path: str) -> Word:
    with open(path, "r", encoding="utf-8") as fh:
        lines = [line.strip() for line in fh]
    return Word(tuple(parse_literal(line) for line in lines if line))


def main(argv: Optional[List[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="purecheck",
        description="Deterministic property checking with confidence budgets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="evaluate a suite and report verdicts")
    run_p.add_argument("--confidence", type=int, default=None, help="sample budget per check")
    run_p.add_argument("--filter", default=None, help="substring filter on entry names")
    run_p.add_argument("--format", choices=("text", "json"), default="text")
    run_p.add_argument("--suite", choices=tuple(_SUITES), default="default")

    list_p = sub.add_parser("list", help="list registered checks")
    list_p.add_argument("--tags", action="store_true", help="also show tags")
    list_p.add_argument("--suite", choices=tuple(_SUITES), default="default")

    oracle_p = sub.add_parser(
        "oracle",
        help="compare two edit-word files by automaton and by brute force",
    )
    oracle_p.add_argument("--max-len", type=int, default=6)
    oracle_p.add_argument("--alphabet", default="ab")
    oracle_p.add_argument("wordfiles", nargs=2, metavar="WORDFILE")

    args = parser.parse_args(argv)

    if args.command == "run":
        confidence = args.confidence if args.confidence is not None else _default_confidence()
        if confidence < 1:
            parser.error("--confidence must be at least 1")
        suite = _SUITES[args.suite]()
        report = runner.run_suite(suite, confidence, args.filter)
        if args.format == "json":
            print(runner.report_json(report))
        else:
            print(runner.report_text(report))
        return runner.exit_code(report)

    if args.command == "list":
        suite = _SUITES[args.suite]()
        for entry in suite.entries():
            if args.tags and entry.tags:
                print(f"{entry.name}  [{', '.join(entry.tags)}]")
            else:
                print(entry.name)
        return 0

    # oracle
    try:
        left = _read_word(args.wordfiles[0])
        right = _read_word(args.wordfiles[1])
    except OSError as exc:
        parser.error(str(exc))
    except ValueError as exc:
        parser.error(f"bad word file (one literal per line, e.g. '+2:a' or '~-0:b'): {exc}")
    by_model = editor.word_equiv(left, right)
    by_force = runner.brute_force_equiv(left, right, args.alphabet, args.max_len)
    print(f"left:  {render_word(left) or '(empty word)'}")
    print(f"       {editor.render_editor(editor.semantics(left))}")
    print(f"right: {render_word(right) or '(empty word)'}")
    print(f"       {editor.render_editor(editor.semantics(right))}")
    print(f"normal-form automata: {'equal' if by_model else 'different'}")
    print(
        f"brute force over {{{args.alphabet}}}^<={args.max_len}: "
        f"{'equal' if by_force else 'different'}"
    )
    if by_model != by_force:
        print("DISAGREEMENT between model and oracle — this is a bug")
        return 2
    return 0 if by_model else 1


if __name__ == "__main__":
    sys.exit(main())
