"""
Input validation utilities for the check-code toolkit.
Validators return (is_valid, error_message) tuples; callers decide whether
to raise, report or exit.
"""

import re
from typing import Any, List, Optional, Tuple


def validate_base(base: Any) -> Tuple[bool, Optional[str]]:
    """
    Validate an alphabet size.

    Args:
        base: Number of symbols

    Returns:
        Tuple of (is_valid, error_message)
    """
    from src.config.settings import settings

    if isinstance(base, bool) or not isinstance(base, int):
        return False, "Base must be an integer"

    if not settings.validate_base(base):
        return False, f"Base {base} is not supported (must be between {settings.MIN_BASE} and {settings.MAX_BASE})"

    return True, None


def validate_digit(digit: Any, base: int) -> Tuple[bool, Optional[str]]:
    """
    Validate a single symbol against an alphabet size.

    Args:
        digit: Symbol value
        base: Alphabet size

    Returns:
        Tuple of (is_valid, error_message)
    """
    if isinstance(digit, bool) or not isinstance(digit, int):
        return False, f"Digit {digit!r} must be an integer"

    if digit < 0 or digit >= base:
        return False, f"Digit {digit} out of range 0..{base - 1}"

    return True, None


def validate_position(position: Any) -> Tuple[bool, Optional[str]]:
    """
    Validate a codeword position (1, 2 or 3).

    Args:
        position: Transmitted position

    Returns:
        Tuple of (is_valid, error_message)
    """
    if position not in (1, 2, 3):
        return False, f"Position {position!r} must be 1, 2 or 3"

    return True, None


def validate_table_name(name: str) -> Tuple[bool, Optional[str]]:
    """
    Validate a built-in table identifier.

    Args:
        name: Table identifier

    Returns:
        Tuple of (is_valid, error_message)
    """
    from src.models.builtin_tables import BUILTIN_TABLE_TEXT

    if not name:
        return False, "Table name is required"

    if name not in BUILTIN_TABLE_TEXT:
        return False, f"Unknown table '{name}'. Known tables: {', '.join(sorted(BUILTIN_TABLE_TEXT))}"

    return True, None


def validate_category(category: Any, count: int = 6) -> Tuple[bool, Optional[str]]:
    """
    Validate a registry category label.

    Args:
        category: Category label
        count: Number of categories

    Returns:
        Tuple of (is_valid, error_message)
    """
    if isinstance(category, bool) or not isinstance(category, int):
        return False, "Category must be an integer"

    if category < 0 or category >= count:
        return False, f"Category {category} out of range 0..{count - 1}"

    return True, None


def validate_p01(text: str) -> Tuple[bool, Optional[str]]:
    """
    Validate the {0,1} block of a relabeling: 'identity', '01' or '10'.

    Args:
        text: Image of (0, 1)

    Returns:
        Tuple of (is_valid, error_message)
    """
    if text in ('identity', '01', '10'):
        return True, None

    return False, f"p01 '{text}' must be 'identity', '01' or '10'"


def validate_p29(text: str, base: int = 10) -> Tuple[bool, Optional[str]]:
    """
    Validate the {2..base-1} block of a relabeling: 'identity' or the image
    string of 2..base-1, e.g. '32456789'.

    Args:
        text: Image digits
        base: Alphabet size

    Returns:
        Tuple of (is_valid, error_message)
    """
    if text == 'identity':
        return True, None

    expected = ''.join(str(d) for d in range(2, base))
    if not re.match(r'^[0-9]+$', text or ''):
        return False, f"p29 '{text}' must be 'identity' or a digit string"

    if sorted(text) != sorted(expected):
        return False, f"p29 '{text}' must be a rearrangement of '{expected}'"

    return True, None


def validate_phonetic_range(value: str) -> Tuple[bool, Optional[str]]:
    """
    Validate a phonetic range mode.

    Args:
        value: 'full' or 'literal'

    Returns:
        Tuple of (is_valid, error_message)
    """
    from src.config.settings import settings

    if value not in settings.PHONETIC_RANGES:
        return False, f"Phonetic range '{value}' must be one of: {', '.join(settings.PHONETIC_RANGES)}"

    return True, None


def parse_class_list(text: Optional[str]) -> Tuple[bool, List[Any], Optional[str]]:
    """
    Parse a comma-separated list of error class names.

    Args:
        text: e.g. 'single,phonetic-right'; None or 'all' selects every class

    Returns:
        Tuple of (is_valid, classes, error_message)
    """
    from src.models.error_class import ErrorClass

    if text is None or text.strip() == 'all':
        return True, list(ErrorClass), None

    classes = []
    for item in (part.strip() for part in text.split(',')):
        if not item:
            continue
        try:
            error_class = ErrorClass(item)
        except ValueError:
            known = ', '.join(c.value for c in ErrorClass)
            return False, [], f"Unknown error class '{item}'. Known classes: {known}"
        if error_class not in classes:
            classes.append(error_class)

    if not classes:
        return False, [], "At least one error class is required"

    return True, classes, None
