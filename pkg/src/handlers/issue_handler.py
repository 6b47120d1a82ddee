"""
Handler for `issue`: hand out one codeword for an item category, recording
it in the registry log.
"""

import argparse

from src.handlers.common import EXIT_DETECTION_FAILURE, EXIT_OK, parse_digit_operands, resolve_table, run_guarded
from src.services.codec_service import CategoryRegistry, registry_issue
from src.utils.logger import get_logger


logger = get_logger(__name__)


def _issue(args: argparse.Namespace) -> int:
    table, operands = resolve_table(args, operand_count=2)
    r, c = parse_digit_operands(operands)

    registry = CategoryRegistry.load(table, args.registry)
    record = registry_issue(registry, args.category, r, c)

    print(f"{record.word} {record.status.value}")
    return EXIT_OK if record.accepted else EXIT_DETECTION_FAILURE


def handle(args: argparse.Namespace) -> int:
    return run_guarded('issue', _issue, args)


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--registry', required=True, metavar='LOG')
    parser.add_argument('--category', type=int, required=True, metavar='K')
