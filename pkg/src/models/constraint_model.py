"""
Generator data models: the constraint model of a permutation-free,
phonetic-free table, search configuration and search outcome.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from src.models.check_table import CheckTable, Triple
from src.models.roles import RolePermutation


class ConstraintFamily(str, Enum):
    ROW_ALL_DIFFERENT = 'RowAllDifferent'
    COLUMN_ALL_DIFFERENT = 'ColumnAllDifferent'
    DIAGONAL_IDENTITY = 'DiagonalIdentity'
    OFF_DIAGONAL_THREE_DISTINCT = 'OffDiagonalThreeDistinct'
    THREE_SUBSET_UNIQUE = 'ThreeSubsetUnique'
    PHONETIC_FAMILY = 'PhoneticFamily'


@dataclass
class PhoneticFamily:
    """
    Right-phonetic ground pairs with a role permutation applied to both
    words. Each pair (a, b) forbids a and b from both being codewords.
    """

    role: RolePermutation
    pairs: List[Tuple[Triple, Triple]]

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass
class ConstraintModel:
    """
    One symbol-valued variable per cell (r, c) plus the ground constraint
    families. Placements are Triples: Triple(r, s, c) means cell(r, c) = s.
    """

    base: int
    phonetic_range: str
    variables: List[Tuple[int, int]]
    row_all_different: List[int]
    column_all_different: List[int]
    diagonal_identity: List[int]
    off_diagonal_three_distinct: List[Tuple[int, int]]
    three_subset_unique: List[Tuple[int, int, int]]
    phonetic_families: List[PhoneticFamily]

    def family_counts(self) -> Dict[str, int]:
        """Ground constraint count per family (phonetic: number of families)."""
        return {
            ConstraintFamily.ROW_ALL_DIFFERENT.value: len(self.row_all_different),
            ConstraintFamily.COLUMN_ALL_DIFFERENT.value: len(self.column_all_different),
            ConstraintFamily.DIAGONAL_IDENTITY.value: len(self.diagonal_identity),
            ConstraintFamily.OFF_DIAGONAL_THREE_DISTINCT.value: len(self.off_diagonal_three_distinct),
            ConstraintFamily.THREE_SUBSET_UNIQUE.value: len(self.three_subset_unique),
            ConstraintFamily.PHONETIC_FAMILY.value: len(self.phonetic_families),
        }

    @property
    def phonetic_pair_count(self) -> int:
        return sum(len(family) for family in self.phonetic_families)


@dataclass(frozen=True)
class ConstraintViolation:
    """A violated ground constraint with a human-readable witness."""

    family: ConstraintFamily
    constraint: str
    witness: Tuple[Any, ...] = ()

    def __str__(self) -> str:
        return f"{self.family.value}: {self.constraint}"


@dataclass
class SearchConfig:
    """
    Search parameters.

    Attributes:
        seed: Seed of the value-order shuffles
        max_steps: Maximum number of placements tried
        restart_interval: Failures between restarts
        time_budget: Wall-clock limit in seconds
        phonetic_range: 'full' or 'literal' third-digit range
    """

    seed: int = 0
    max_steps: int = 5_000_000
    restart_interval: int = 2_000
    time_budget: float = 600.0
    phonetic_range: str = 'full'

    @classmethod
    def from_settings(cls, **overrides: Any) -> 'SearchConfig':
        from src.config.settings import settings

        values = settings.get_search_config()
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def validate(self) -> Tuple[bool, Optional[str]]:
        """
        Validate the configuration.

        Returns:
            Tuple of (is_valid, error_message)
        """
        from src.utils.validators import validate_phonetic_range

        if self.max_steps < 0:
            return False, "max_steps must be >= 0"
        if self.restart_interval <= 0:
            return False, "restart_interval must be > 0"
        if self.time_budget <= 0:
            return False, "time_budget must be > 0"
        return validate_phonetic_range(self.phonetic_range)


@dataclass
class SearchOutcome:
    """
    Result of one search.

    Attributes:
        found: True when a table was produced
        table: The table, or None (NotFound)
        steps: Placements tried
        deepest: Deepest number of simultaneously assigned cells reached
        restarts: Restarts performed
        elapsed: Wall-clock seconds
        reason: 'solved', 'max-steps', 'time-budget', 'subset-capacity' or 'exhausted'
        seed: Seed the search ran with
    """

    found: bool
    table: Optional[CheckTable] = None
    steps: int = 0
    deepest: int = 0
    restarts: int = 0
    elapsed: float = 0.0
    reason: str = 'solved'
    seed: int = 0
    statistics: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'found': self.found,
            'reason': self.reason,
            'seed': self.seed,
            'steps': self.steps,
            'deepest': self.deepest,
            'restarts': self.restarts,
            'statistics': dict(self.statistics),
        }
