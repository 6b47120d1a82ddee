"""
Shared plumbing for command handlers: exit codes, table resolution and
error reporting.
"""

import argparse
import sys
from typing import Any, Dict, List, Optional, Tuple

from src.models.check_table import CheckTable
from src.services.table_service import builtin_table, load_table
from src.utils.exceptions import CheckCodeError
from src.utils.logger import get_logger
from src.utils.reports import error_document, render_json


logger = get_logger(__name__)

EXIT_OK = 0
EXIT_DETECTION_FAILURE = 1
EXIT_INPUT_ERROR = 2
EXIT_SEARCH_EXHAUSTED = 3


class UsageError(CheckCodeError):
    """Command-line operands are missing or malformed."""


def resolve_table(args: argparse.Namespace, operand_count: int = 0) -> Tuple[CheckTable, List[str]]:
    """
    Load the table named by --builtin or by the first positional operand.

    Args:
        args: Parsed arguments with `builtin` and `operands`
        operand_count: Positional operands expected after the table

    Returns:
        Tuple of (table, remaining operands)

    Raises:
        UsageError: on a wrong operand count
    """
    operands = list(getattr(args, 'operands', None) or [])

    if args.builtin:
        if len(operands) != operand_count:
            raise UsageError(f"expected {operand_count} operands with --builtin, got {len(operands)}")
        return builtin_table(args.builtin), operands

    if len(operands) != operand_count + 1:
        raise UsageError(f"expected a table file and {operand_count} operands, got {len(operands)} operands")
    return load_table(operands[0]), operands[1:]


def parse_digit_operands(values: List[str]) -> List[int]:
    try:
        return [int(v) for v in values]
    except ValueError:
        raise UsageError(f"operands must be integers, got {values}")


def fail(message: str, code: int = EXIT_INPUT_ERROR, as_json: bool = False,
         error_code: Optional[str] = None, details: Optional[Dict[str, Any]] = None) -> int:
    """Print the error to stderr (one line, or a JSON document) and return the exit code."""
    if as_json:
        print(render_json(error_document(message, error_code, details)), end='', file=sys.stderr)
    else:
        print(f"error: {message}", file=sys.stderr)
    return code


def run_guarded(command: str, body, args: argparse.Namespace) -> int:
    """
    Run a handler body, mapping toolkit and file errors to exit code 2.
    """
    as_json = getattr(args, 'format', None) == 'json'
    try:
        return body(args)
    except (CheckCodeError, ValueError) as e:
        logger.error(f"{command}: {e}")
        line_number = getattr(e, 'line_number', None)
        details = {'line': line_number} if line_number is not None else None
        return fail(str(e), as_json=as_json, error_code=type(e).__name__, details=details)
    except OSError as e:
        logger.error(f"{command}: {e}")
        message = f"{e.filename or ''}: {e.strerror or e}".lstrip(': ')
        return fail(message, as_json=as_json, error_code=type(e).__name__)
    except Exception as e:
        logger.error(f"Unexpected error in {command} handler: {str(e)}", exc_info=True)
        return fail(str(e), as_json=as_json, error_code='InternalError')
