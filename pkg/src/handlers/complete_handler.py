"""
Handler for `complete`: recover a codeword from two positioned digits, or
list every codeword containing given digits when positions are unknown.
"""

import argparse

from src.handlers.common import EXIT_OK, UsageError, resolve_table, run_guarded
from src.models.codec import PartialWord
from src.services.codec_service import complete, words_containing


def _complete(args: argparse.Namespace) -> int:
    table, _ = resolve_table(args)

    if args.unordered:
        if not args.unordered.isdigit():
            raise UsageError(f"--unordered expects digits, got '{args.unordered}'")
        for word in words_containing(table, [int(ch) for ch in args.unordered]):
            print(word)
        return EXIT_OK

    partial = PartialWord.of(pos1=args.pos1, pos2=args.pos2, pos3=args.pos3)
    print(complete(table, partial))
    return EXIT_OK


def handle(args: argparse.Namespace) -> int:
    return run_guarded('complete', _complete, args)


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--pos1', type=int)
    parser.add_argument('--pos2', type=int)
    parser.add_argument('--pos3', type=int)
    parser.add_argument('--unordered', metavar='DIGITS',
                        help='2 or 3 digits with unknown positions, e.g. 019')
