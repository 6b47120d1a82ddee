"""
Handler for `relabel`: apply an admissible digit relabeling p = p01 o p29.
"""

import argparse

from src.handlers.common import EXIT_OK, resolve_table, run_guarded
from src.models.roles import Relabeling
from src.services.conjugacy_service import relabel
from src.services.table_service import save_table, serialize_table
from src.utils.logger import get_logger


logger = get_logger(__name__)


def _relabel(args: argparse.Namespace) -> int:
    table, _ = resolve_table(args)
    relabeling = Relabeling.from_parts(table.base, args.p01, args.p29)
    logger.info(f"Relabeling '{table.name}' with {relabeling}")

    image = relabel(table, relabeling)
    if args.out:
        save_table(image, args.out)
    else:
        print(serialize_table(image), end='')
    return EXIT_OK


def handle(args: argparse.Namespace) -> int:
    return run_guarded('relabel', _relabel, args)


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--p01', default='identity', help="'identity', '01' or '10'")
    parser.add_argument('--p29', default='identity', help="'identity' or the image of 2..base-1")
    parser.add_argument('--out', metavar='FILE')
