"""
Exception hierarchy for the check-code toolkit.
"""

from typing import Any, List, Optional


class CheckCodeError(Exception):
    """Base class for all toolkit errors."""

    def __init__(self, message: str) -> None:
        super().__init__(message)
        self.message = message


class TableFormatError(CheckCodeError):
    """Malformed table text; carries the offending line number."""

    def __init__(self, message: str, line_number: Optional[int] = None) -> None:
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class UnknownTableError(CheckCodeError):
    """Requested built-in table does not exist."""


class NotLatinError(CheckCodeError):
    """Operation needs a latin square (or a complete triple system)."""

    def __init__(self, message: str, witnesses: Optional[List[Any]] = None) -> None:
        super().__init__(message)
        self.witnesses = witnesses or []


class BaseMismatchError(CheckCodeError):
    """Two structures over different alphabets were combined."""


class InadmissibleRelabelingError(CheckCodeError):
    """Relabeling does not keep {0,1} and {2..base-1} setwise."""


class UnsupportedClassError(CheckCodeError):
    """No structural shortcut exists for the requested error class."""


class RegistryError(CheckCodeError):
    """Registry log could not be read or written."""


class UnsupportedBaseError(CheckCodeError):
    """Alphabet size outside the supported range."""
