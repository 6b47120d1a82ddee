"""
Command-line entry point: `python -m src.cli <command> ...`.

Exit codes: 0 pass, 1 detection failure, 2 input error, 3 search exhausted.
"""

import argparse
import sys
from typing import List, Optional

from src.config.settings import settings
from src.handlers import (
    complete_handler,
    conjugates_handler,
    encode_handler,
    generate_handler,
    issue_handler,
    relabel_handler,
    report_handler,
    verify_handler,
)
from src.models.builtin_tables import BUILTIN_TABLE_TEXT
from src.utils.logger import setup_logging


COMMANDS = {
    'verify': (verify_handler, 'exhaustive error-detection reports', True),
    'report': (report_handler, 'full report with structural profile', True),
    'generate': (generate_handler, 'search for a permutation-free table', False),
    'conjugates': (conjugates_handler, 'emit the six conjugate tables', True),
    'relabel': (relabel_handler, 'apply a digit relabeling p01 o p29', True),
    'encode': (encode_handler, 'codeword of information digits R C', True),
    'complete': (complete_handler, 'codeword from two positioned digits', True),
    'issue': (issue_handler, 'issue a codeword for a category', True),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog=settings.APP_NAME, description='Length-3 check-digit code toolkit')
    parser.add_argument('--log-level', default=None, help='DEBUG, INFO, WARNING (default) or ERROR')
    subparsers = parser.add_subparsers(dest='command', required=True)

    for name, (module, help_text, takes_table) in COMMANDS.items():
        sub = subparsers.add_parser(name, help=help_text)
        if takes_table:
            sub.add_argument('--builtin', choices=sorted(BUILTIN_TABLE_TEXT), metavar='NAME',
                             help=f"built-in table: {', '.join(sorted(BUILTIN_TABLE_TEXT))}")
            sub.add_argument('operands', nargs='*', help='table file (unless --builtin), then command operands')
        add_arguments = getattr(module, 'add_arguments', None)
        if add_arguments:
            add_arguments(sub)
        sub.set_defaults(handler=module.handle)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level or settings.LOG_LEVEL)
    return args.handler(args)


if __name__ == '__main__':
    sys.exit(main())
