"""
Codec data models: partial words and registry issue records.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional, Tuple

from src.models.check_table import Word


@dataclass(frozen=True)
class PartialWord:
    """
    Up to two (position, digit) assignments; positions are 1, 2 or 3.
    """

    assignments: Tuple[Tuple[int, int], ...]

    def __post_init__(self) -> None:
        from src.utils.validators import validate_position

        if len(self.assignments) > 2:
            raise ValueError("A partial word holds at most two assignments")
        positions = [p for p, _ in self.assignments]
        for position in positions:
            is_valid, error = validate_position(position)
            if not is_valid:
                raise ValueError(error)
        if len(set(positions)) != len(positions):
            raise ValueError(f"Positions must be distinct, got {positions}")

    @classmethod
    def of(cls, **positions: Optional[int]) -> 'PartialWord':
        """Build from keyword arguments pos1/pos2/pos3, skipping None."""
        items = []
        for key in ('pos1', 'pos2', 'pos3'):
            value = positions.get(key)
            if value is not None:
                items.append((int(key[-1]), value))
        return cls(tuple(items))

    def as_dict(self) -> Dict[int, int]:
        return dict(self.assignments)

    def validate_for(self, base: int) -> Tuple[bool, Optional[str]]:
        from src.utils.validators import validate_digit

        for _, digit in self.assignments:
            is_valid, error = validate_digit(digit, base)
            if not is_valid:
                return False, error
        return True, None

    def matches(self, word: Word) -> bool:
        return all(word.digit_at(p) == d for p, d in self.assignments)


class IssueStatus(str, Enum):
    ISSUED = 'issued'
    DUPLICATE = 'duplicate'
    REJECTED_DIAGONAL = 'rejected-diagonal'
    REJECTED_TAKEN = 'rejected-taken'


@dataclass(frozen=True)
class IssueRecord:
    """Outcome of one registry issue request."""

    category: int
    word: Word
    status: IssueStatus

    @property
    def accepted(self) -> bool:
        return self.status in (IssueStatus.ISSUED, IssueStatus.DUPLICATE)

    def log_line(self) -> str:
        """Registry log line: '<category> <d1><d2><d3>\\n'."""
        return f"{self.category} {self.word}\n"
