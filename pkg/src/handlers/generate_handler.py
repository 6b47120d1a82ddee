"""
Handler for `generate`: search for a permutation-free, phonetic-free table,
optionally exporting the constraint model.

Exit codes: 0 table written, 1 output failed verification, 2 input error,
3 search ended without a table.
"""

import argparse
import sys
from pathlib import Path

from src.config.settings import settings
from src.handlers.common import (
    EXIT_DETECTION_FAILURE,
    EXIT_OK,
    EXIT_SEARCH_EXHAUSTED,
    UsageError,
    run_guarded,
)
from src.models.constraint_model import SearchConfig
from src.services.error_model_service import full_report, suite_passes
from src.services.generator_service import build_model, check_assignment, export_model, solve, solve_parallel
from src.services.table_service import save_table, serialize_table
from src.utils.logger import get_logger
from src.utils.reports import render_json


logger = get_logger(__name__)


def _search(model, config: SearchConfig, workers: int):
    if workers > 1:
        seeds = [config.seed + k for k in range(workers)]
        return solve_parallel(model, config, seeds, workers)
    return solve(model, config)


def _generate(args: argparse.Namespace) -> int:
    logger.info("Generate handler invoked")

    config = SearchConfig.from_settings(
        seed=args.seed,
        max_steps=args.max_steps,
        restart_interval=args.restart_interval,
        time_budget=args.time_budget,
        phonetic_range=args.phonetic_range,
    )
    is_valid, error = config.validate()
    if not is_valid:
        raise UsageError(error)
    if args.workers < 1:
        raise UsageError("--workers must be >= 1")

    model = build_model(args.base, config)

    if args.export_model:
        Path(args.export_model).write_text(export_model(model), encoding='utf-8')
        print(f"model written to {args.export_model}", file=sys.stderr)
        if args.export_only:
            return EXIT_OK

    outcome = _search(model, config, args.workers)

    if not outcome.found and args.allow_literal_fallback and config.phonetic_range == 'full':
        message = (f"full phonetic range: no table ({outcome.reason}); "
                   f"retrying with the literal range 2..{args.base - 1} for the free digit")
        logger.warning(message)
        print(f"warning: {message}", file=sys.stderr)
        config = SearchConfig.from_settings(
            seed=config.seed,
            max_steps=config.max_steps,
            restart_interval=config.restart_interval,
            time_budget=config.time_budget,
            phonetic_range='literal',
        )
        model = build_model(args.base, config)
        outcome = _search(model, config, args.workers)
        if outcome.found:
            print("warning: table satisfies the literal phonetic range only", file=sys.stderr)

    outcome.statistics['phonetic_range'] = config.phonetic_range

    if not outcome.found:
        print(render_json(outcome.to_dict()), end='', file=sys.stderr)
        return EXIT_SEARCH_EXHAUSTED

    table = outcome.table
    satisfied, violations = check_assignment(model, table)
    reports = full_report(table, None, config.phonetic_range)
    if not satisfied or not suite_passes(reports):
        for violation in violations:
            logger.error(f"Generated table violates {violation}")
        print("error: generated table failed verification; nothing written", file=sys.stderr)
        return EXIT_DETECTION_FAILURE

    if args.out:
        save_table(table, args.out)
        print(render_json(outcome.to_dict()), end='', file=sys.stderr)
    else:
        print(serialize_table(table), end='')

    return EXIT_OK


def handle(args: argparse.Namespace) -> int:
    return run_guarded('generate', _generate, args)


def add_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--base', type=int, default=settings.DEFAULT_BASE)
    parser.add_argument('--seed', type=int, default=None)
    parser.add_argument('--time-budget', type=float, default=None)
    parser.add_argument('--max-steps', type=int, default=None)
    parser.add_argument('--restart-interval', type=int, default=None)
    parser.add_argument('--phonetic-range', default=None, choices=settings.PHONETIC_RANGES)
    parser.add_argument('--workers', type=int, default=1)
    parser.add_argument('--export-model', metavar='FILE')
    parser.add_argument('--export-only', action='store_true',
                        help='write the model and stop before searching')
    parser.add_argument('--allow-literal-fallback', action='store_true')
    parser.add_argument('--out', metavar='FILE')
