"""
Handler for `conjugates`: emit the six conjugate tables and optionally
check that they share nothing but the constant words.
"""

import argparse
import sys

from src.config.settings import settings
from src.handlers.common import EXIT_DETECTION_FAILURE, EXIT_OK, resolve_table, run_guarded
from src.models.roles import ALL_ROLES
from src.services.conjugacy_service import conjugate_tables, disjointness_violations, six_conjugates
from src.services.table_service import save_table, serialize_table, to_triples
from src.utils.logger import get_logger


logger = get_logger(__name__)


def _conjugates(args: argparse.Namespace) -> int:
    logger.info("Conjugates handler invoked")

    table, _ = resolve_table(args)
    tables = conjugate_tables(table)

    if args.out_prefix:
        for k, conjugate in enumerate(tables):
            path = settings.conjugate_path(args.out_prefix, k)
            save_table(conjugate, path)
            print(path)
    elif not args.check_disjoint:
        for role, conjugate in zip(ALL_ROLES, tables):
            print(f"# {conjugate.name} {role.name}")
            print(serialize_table(conjugate), end='')

    if not args.check_disjoint:
        return EXIT_OK

    violations = disjointness_violations(six_conjugates(to_triples(table)))
    if not violations:
        print("conjugates pairwise disjoint except constant words")
        return EXIT_OK

    for (i, j), common in violations.items():
        words = ' '.join(str(t.to_word()) for t in common)
        print(f"t{i} & t{j}: {len(common)} shared words: {words}", file=sys.stderr)
    return EXIT_DETECTION_FAILURE


def handle(args: argparse.Namespace) -> int:
    return run_guarded('conjugates', _conjugates, args)


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--check-disjoint', action='store_true')
    parser.add_argument('--out-prefix', metavar='P',
                        help="write P_t0.tbl .. P_t5.tbl")
