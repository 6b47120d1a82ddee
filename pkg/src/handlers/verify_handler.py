"""
Handler for `verify`: exhaustive detection reports with a pass/fail exit code.
"""

import argparse

from src.handlers.common import EXIT_DETECTION_FAILURE, EXIT_OK, UsageError, resolve_table, run_guarded
from src.models.error_class import ErrorClass
from src.services.error_model_service import full_report, suite_passes
from src.utils.logger import get_logger
from src.utils.reports import render_json, render_text, report_document
from src.utils.validators import parse_class_list, validate_phonetic_range


logger = get_logger(__name__)


def _verify(args: argparse.Namespace) -> int:
    logger.info("Verify handler invoked")

    is_valid, classes, error = parse_class_list(args.classes)
    if not is_valid:
        raise UsageError(error)

    is_valid, error = validate_phonetic_range(args.phonetic_range)
    if not is_valid:
        raise UsageError(error)

    table, _ = resolve_table(args)
    reports = full_report(table, classes, args.phonetic_range)

    # triple errors never count towards the verdict unless asked to
    excluded = () if args.include_triple else (ErrorClass.TRIPLE,)
    passed = suite_passes(reports, excluded=excluded)

    if args.format == 'json':
        print(render_json(report_document(table.name, table.base, reports, args.phonetic_range, passed)), end='')
    else:
        print(render_text(table.name, reports, passed), end='')

    return EXIT_OK if passed else EXIT_DETECTION_FAILURE


def handle(args: argparse.Namespace) -> int:
    return run_guarded('verify', _verify, args)


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--classes', default=None,
                        help="comma-separated error classes, or 'all' (default)")
    parser.add_argument('--format', choices=['text', 'json'], default='text')
    parser.add_argument('--phonetic-range', choices=['full', 'literal'], default='full')
    parser.add_argument('--include-triple', action='store_true',
                        help='count triple errors towards the exit status')
