"""
Report document builders.
Provides a consistent, deterministic document structure across all commands.
"""

import json
from typing import Any, Dict, Iterable, List, Optional

from src.models.error_class import DetectionReport, ErrorClass


def report_document(
    table_name: Optional[str],
    base: int,
    reports: Dict[ErrorClass, DetectionReport],
    phonetic_range: str = 'full',
    passed: Optional[bool] = None
) -> Dict[str, Any]:
    """
    Create a verification report document.

    Args:
        table_name: Label of the table under test
        base: Alphabet size
        reports: Per-class detection reports, in output order
        phonetic_range: Third-digit range used for phonetic classes
        passed: Overall verdict (computed by the caller's exit criterion)

    Returns:
        Document with fixed key order
    """
    return {
        'table_name': table_name,
        'base': base,
        'phonetic_range': phonetic_range,
        'passed': passed,
        'classes': [report.to_dict() for report in reports.values()],
    }


def error_document(
    message: str,
    error_code: Optional[str] = None,
    details: Optional[Dict[str, Any]] = None
) -> Dict[str, Any]:
    """
    Create the machine-readable error written to stderr under --format json.

    Args:
        message: One-line description, as in the text form
        error_code: Exception class name (e.g. 'TableFormatError')
        details: Extra context such as the offending line

    Returns:
        Document with keys error, message and, when given, details
    """
    body: Dict[str, Any] = {
        'error': error_code or 'CheckCodeError',
        'message': message,
    }
    if details:
        body['details'] = details
    return body


def render_json(document: Any) -> str:
    """Serialize a document: insertion key order, indent 2, trailing newline."""
    return json.dumps(document, indent=2, ensure_ascii=False) + '\n'


def _format_pair(pair: Iterable[Any]) -> str:
    a, b = pair
    return f"({a}) <-> ({b})"


def render_text(
    table_name: Optional[str],
    reports: Dict[ErrorClass, DetectionReport],
    passed: Optional[bool] = None
) -> str:
    """
    Human-readable report: one line per class, then its undetected pairs.
    """
    lines: List[str] = [f"table: {table_name or '-'}"]
    for error_class, report in reports.items():
        structural = ''
        if report.structural_equivalent_passed is not None:
            structural = f" [structural: {'pass' if report.structural_equivalent_passed else 'fail'}]"
        mark = 'ok' if report.is_clean else 'UNDETECTED'
        lines.append(f"{error_class.value}: {report.pair_count} undetected pairs, {mark}{structural}")
        lines.extend(f"  {_format_pair(pair)}" for pair in report.undetected)
    if passed is not None:
        lines.append(f"result: {'PASS' if passed else 'FAIL'}")
    return '\n'.join(lines) + '\n'
