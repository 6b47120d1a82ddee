"""
Handler for `encode`: print the codeword of information digits r and c.
"""

import argparse

from src.handlers.common import EXIT_OK, parse_digit_operands, resolve_table, run_guarded
from src.services.codec_service import encode


def _encode(args: argparse.Namespace) -> int:
    table, operands = resolve_table(args, operand_count=2)
    r, c = parse_digit_operands(operands)
    print(encode(table, r, c))
    return EXIT_OK


def handle(args: argparse.Namespace) -> int:
    return run_guarded('encode', _encode, args)
