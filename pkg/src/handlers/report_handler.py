"""
Handler for `report`: every error class plus the structural profile, the
triple-system statistics and the role-permuted phonetic checks of one table.
Always exits 0 once the table loads.
"""

import argparse

from src.handlers.common import EXIT_OK, UsageError, resolve_table, run_guarded
from src.services.error_model_service import conjugate_phonetic_report, full_report, suite_passes
from src.services.oracle_service import census_histogram, multiset_census
from src.services.table_service import combination_index, structural_profile, to_triples
from src.utils.logger import get_logger
from src.utils.reports import render_json, render_text, report_document
from src.utils.validators import validate_phonetic_range


logger = get_logger(__name__)


def _report(args: argparse.Namespace) -> int:
    is_valid, error = validate_phonetic_range(args.phonetic_range)
    if not is_valid:
        raise UsageError(error)

    table, _ = resolve_table(args)
    reports = full_report(table, None, args.phonetic_range)
    passed = suite_passes(reports)

    profile = structural_profile(table)
    system = to_triples(table)
    index = combination_index(system)
    phonetic = conjugate_phonetic_report(table, args.phonetic_range)

    if args.format == 'json':
        document = report_document(table.name, table.base, reports, args.phonetic_range, passed)
        document['structure'] = profile.pass_flags()
        document['triple_system'] = {
            'triples': len(system),
            'diagonal': len(system.diagonal),
            'non_diagonal': len(system.non_diagonal),
            'degenerate': len(system.degenerate),
            'subsets_occupied': index.occupied_count,
            'subsets_total': len(index),
        }
        document['multiset_histogram'] = {str(k): v for k, v in census_histogram(multiset_census(table)).items()}
        document['conjugate_phonetic'] = {
            role: [[str(a), str(b)] for a, b in pairs] for role, pairs in phonetic.items()
        }
        print(render_json(document), end='')
    else:
        print(render_text(table.name, reports, passed), end='')
        for flag, value in profile.pass_flags().items():
            print(f"{flag}: {value}")
        print(f"triples: {len(system)} (non-diagonal {len(system.non_diagonal)}, "
              f"subsets occupied {index.occupied_count}/{len(index)})")
        for role, pairs in phonetic.items():
            print(f"phonetic pattern {role}: {len(pairs)} pairs")

    return EXIT_OK


def handle(args: argparse.Namespace) -> int:
    return run_guarded('report', _report, args)


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--format', choices=['text', 'json'], default='text')
    parser.add_argument('--phonetic-range', choices=['full', 'literal'], default='full')
