"""
Error classes and detection reports.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from src.models.check_table import Word


class ErrorClass(str, Enum):
    """Human error families over length-3 words."""

    SINGLE = 'single'
    ADJACENT_TRANSPOSITION = 'adjacent-transposition'
    TWIN = 'twin'
    JUMP_TWIN = 'jump-twin'
    JUMP_TRANSPOSITION = 'jump-transposition'
    PHONETIC_RIGHT = 'phonetic-right'
    PHONETIC_LEFT = 'phonetic-left'
    CYCLIC = 'cyclic'
    PERMUTATION = 'permutation'
    TRIPLE = 'triple'

    @property
    def has_structural_shortcut(self) -> bool:
        return self in STRUCTURAL_CLASSES

    @property
    def is_phonetic(self) -> bool:
        return self in (ErrorClass.PHONETIC_RIGHT, ErrorClass.PHONETIC_LEFT)


STRUCTURAL_CLASSES = frozenset({
    ErrorClass.SINGLE,
    ErrorClass.ADJACENT_TRANSPOSITION,
    ErrorClass.TWIN,
    ErrorClass.JUMP_TWIN,
    ErrorClass.JUMP_TRANSPOSITION,
    ErrorClass.PERMUTATION,
})

# Classes a good code is expected to detect completely; triple errors are
# reported but never required to be empty.
EXPECTED_CLASSES = tuple(c for c in ErrorClass if c is not ErrorClass.TRIPLE)

WordPair = Tuple[Word, Word]


@dataclass
class DetectionReport:
    """
    Exhaustive detection result of one error class on one table.

    Attributes:
        error_class: Error family examined
        base: Alphabet size
        undetected: Sorted unordered codeword pairs (smaller word first)
        words_examined: Number of codewords corrupted
        structural_equivalent_passed: Structural verdict, when a shortcut exists
        phonetic_range: Third-digit range used for phonetic classes
    """

    error_class: ErrorClass
    base: int
    undetected: List[WordPair] = field(default_factory=list)
    words_examined: int = 0
    structural_equivalent_passed: Optional[bool] = None
    phonetic_range: str = 'full'

    @property
    def pair_count(self) -> int:
        return len(self.undetected)

    @property
    def is_clean(self) -> bool:
        return not self.undetected

    def to_dict(self) -> Dict[str, Any]:
        """
        Convert to the machine-readable report entry (fixed key order).

        Returns:
            Dictionary representation
        """
        return {
            'class': self.error_class.value,
            'pair_count': self.pair_count,
            'undetected': [[list(a.as_tuple()), list(b.as_tuple())] for a, b in self.undetected],
            'structural_equivalent_passed': self.structural_equivalent_passed,
        }

    def __repr__(self) -> str:
        return f"DetectionReport(class='{self.error_class.value}', pair_count={self.pair_count})"
