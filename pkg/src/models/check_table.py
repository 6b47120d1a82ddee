"""
Core data models: words, middle-digit tables and their triple systems.

A table of size base x base holds the middle digit s of every codeword
(r, s, c); the codeword set is {(r, cell(r, c), c)}.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from src.utils.exceptions import TableFormatError


@dataclass(frozen=True, order=True)
class Word:
    """
    Transmitted codeword candidate.

    Attributes:
        d1: Digit at position 1
        d2: Digit at position 2
        d3: Digit at position 3
    """

    d1: int
    d2: int
    d3: int

    @classmethod
    def from_string(cls, text: str) -> 'Word':
        """Parse a three-character digit string such as '302'."""
        if len(text) != 3 or not text.isdigit():
            raise ValueError(f"Word '{text}' must be exactly three digits")
        return cls(int(text[0]), int(text[1]), int(text[2]))

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.d1, self.d2, self.d3)

    def digit_at(self, position: int) -> int:
        """Digit at transmitted position 1, 2 or 3."""
        return self.as_tuple()[position - 1]

    def to_triple(self) -> 'Triple':
        return Triple(self.d1, self.d2, self.d3)

    def is_valid_for(self, base: int) -> bool:
        return all(0 <= d < base for d in self.as_tuple())

    def __iter__(self) -> Iterator[int]:
        return iter(self.as_tuple())

    def __str__(self) -> str:
        return f"{self.d1}{self.d2}{self.d3}"


@dataclass(frozen=True, order=True)
class Triple:
    """Orthogonal-array entry (row, middle symbol, column)."""

    r: int
    s: int
    c: int

    def as_tuple(self) -> Tuple[int, int, int]:
        return (self.r, self.s, self.c)

    def to_word(self) -> Word:
        return Word(self.r, self.s, self.c)

    @property
    def symbol_set(self) -> FrozenSet[int]:
        return frozenset(self.as_tuple())

    @property
    def is_diagonal(self) -> bool:
        return self.r == self.s == self.c

    @property
    def is_three_distinct(self) -> bool:
        return len(self.symbol_set) == 3

    def __str__(self) -> str:
        return f"({self.r}{self.s}{self.c})"


@dataclass(frozen=True)
class CheckTable:
    """
    Middle-digit table.

    Attributes:
        base: Alphabet size (4..10)
        cells: base x base grid; cells[r][c] is the middle digit of (r, ., c)
        name: Optional label (not part of equality)

    Latin-square-ness is deliberately not enforced here; it is a checked
    property (see table_service.structural_profile).
    """

    base: int
    cells: Tuple[Tuple[int, ...], ...]
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        from src.utils.validators import validate_base, validate_digit

        is_valid, error = validate_base(self.base)
        if not is_valid:
            raise TableFormatError(error)

        if len(self.cells) != self.base:
            raise TableFormatError(f"wrong row count: expected {self.base}, got {len(self.cells)}")

        for r, row in enumerate(self.cells):
            if len(row) != self.base:
                raise TableFormatError(f"row {r} has {len(row)} cells, expected {self.base}")
            for value in row:
                is_valid, error = validate_digit(value, self.base)
                if not is_valid:
                    raise TableFormatError(f"row {r}: {error}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]], name: Optional[str] = None,
                  base: Optional[int] = None) -> 'CheckTable':
        """
        Build a table from any nested sequence (lists, numpy arrays).

        Args:
            rows: Row-major grid
            name: Optional label
            base: Alphabet size (defaults to the number of rows)

        Returns:
            New CheckTable instance
        """
        cells = tuple(tuple(int(v) for v in row) for row in rows)
        return cls(base=base if base is not None else len(cells), cells=cells, name=name)

    def cell(self, r: int, c: int) -> int:
        return self.cells[r][c]

    def row(self, r: int) -> Tuple[int, ...]:
        return self.cells[r]

    def column(self, c: int) -> Tuple[int, ...]:
        return tuple(row[c] for row in self.cells)

    @cached_property
    def grid(self) -> np.ndarray:
        """Read-only numpy view of the cells."""
        grid = np.array(self.cells, dtype=np.int64)
        grid.setflags(write=False)
        return grid

    def codewords(self) -> List[Word]:
        """All base^2 codewords in row-major order."""
        return [Word(r, self.cells[r][c], c) for r in range(self.base) for c in range(self.base)]

    def __repr__(self) -> str:
        return f"CheckTable(name={self.name!r}, base={self.base})"


@dataclass(frozen=True)
class TripleSystem:
    """
    Orthogonal-array view L = N u D of a code.

    Triples with exactly two equal coordinates belong to L but to neither
    N nor D.
    """

    base: int
    triples: FrozenSet[Triple]

    @property
    def diagonal(self) -> FrozenSet[Triple]:
        """D: all coordinates equal."""
        return frozenset(t for t in self.triples if t.is_diagonal)

    @property
    def non_diagonal(self) -> FrozenSet[Triple]:
        """N: three distinct coordinate values."""
        return frozenset(t for t in self.triples if t.is_three_distinct)

    @property
    def degenerate(self) -> FrozenSet[Triple]:
        return frozenset(t for t in self.triples if not t.is_diagonal and not t.is_three_distinct)

    def sorted_triples(self) -> List[Triple]:
        return sorted(self.triples)

    def __len__(self) -> int:
        return len(self.triples)

    def __contains__(self, item: object) -> bool:
        return item in self.triples


@dataclass
class CombinationIndex:
    """
    Maps every 3-subset of the alphabet (as a sorted tuple) to the members
    of N whose coordinate set equals it.
    """

    base: int
    entries: Dict[Tuple[int, int, int], List[Triple]]

    @property
    def occupied_count(self) -> int:
        return sum(1 for members in self.entries.values() if members)

    @property
    def is_unique(self) -> bool:
        return all(len(members) <= 1 for members in self.entries.values())

    def collisions(self) -> Dict[Tuple[int, int, int], List[Triple]]:
        """Subsets realized by more than one triple."""
        return {subset: members for subset, members in self.entries.items() if len(members) > 1}

    def __len__(self) -> int:
        return len(self.entries)


@dataclass
class StructuralProfile:
    """
    Table-only structural criteria.

    Conventions: the row map of row r is c -> cell(r, c); the column map of
    column c is r -> cell(r, c). A row fixed point is cell(r, c) == c, a
    column fixed point is cell(r, c) == r. Two-cycles are unordered pairs.
    """

    rows_are_permutations: bool
    columns_are_permutations: bool
    row_fixed_point_counts: List[int]
    column_fixed_point_counts: List[int]
    row_two_cycles: List[Tuple[int, int, int]]
    column_two_cycles: List[Tuple[int, int, int]]
    diagonal_is_permutation: bool
    asymmetric_off_diagonal: bool
    n_triples_all_distinct_symbols: bool
    three_subset_unique: bool

    @property
    def is_latin(self) -> bool:
        return self.rows_are_permutations and self.columns_are_permutations

    @property
    def fixed_points_at_most_one(self) -> bool:
        return all(n <= 1 for n in self.row_fixed_point_counts + self.column_fixed_point_counts)

    @property
    def has_no_two_cycles(self) -> bool:
        return not self.row_two_cycles and not self.column_two_cycles

    def pass_flags(self) -> Dict[str, bool]:
        return {
            'rows_are_permutations': self.rows_are_permutations,
            'columns_are_permutations': self.columns_are_permutations,
            'fixed_points_at_most_one': self.fixed_points_at_most_one,
            'no_two_cycles': self.has_no_two_cycles,
            'diagonal_is_permutation': self.diagonal_is_permutation,
            'asymmetric_off_diagonal': self.asymmetric_off_diagonal,
            'n_triples_all_distinct_symbols': self.n_triples_all_distinct_symbols,
            'three_subset_unique': self.three_subset_unique,
        }
