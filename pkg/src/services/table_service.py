"""
Table service: parsing, serialization, built-in tables, the triple-system
view and the structural profile of a middle-digit table.
"""

import itertools
import re
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Tuple, Union

import numpy as np

from src.config.settings import settings
from src.models.builtin_tables import BUILTIN_TABLE_TEXT
from src.models.check_table import (
    CheckTable,
    CombinationIndex,
    StructuralProfile,
    Triple,
    TripleSystem,
)
from src.utils.exceptions import NotLatinError, TableFormatError, UnknownTableError
from src.utils.logger import get_logger
from src.utils.validators import validate_base, validate_digit, validate_table_name


logger = get_logger(__name__)

DECIMAL = re.compile(r"[0-9]+")


def parse_table(text: Union[str, Iterable[str]], name: Optional[str] = None) -> CheckTable:
    """
    Parse the table file format.

    Format: optional '#' comment lines, an optional 'base <n>' directive,
    then exactly n rows of n whitespace-separated decimal digits. Blank
    lines are ignored. The base defaults to 10.

    Args:
        text: Whole file contents or an iterable of lines
        name: Optional table label

    Returns:
        Parsed CheckTable

    Raises:
        TableFormatError: with the offending line number
    """
    lines = text.splitlines() if isinstance(text, str) else [line.rstrip('\n') for line in text]

    base = settings.DEFAULT_BASE
    base_seen = False
    rows: List[Tuple[int, ...]] = []
    last_line = 0

    for line_number, raw in enumerate(lines, start=1):
        last_line = line_number
        line = raw.strip()
        if not line or line.startswith('#'):
            continue

        tokens = line.split()
        if tokens[0].isalpha():
            if tokens[0] != 'base':
                raise TableFormatError(f"unknown directive '{tokens[0]}'", line_number)
            if base_seen or rows:
                raise TableFormatError("'base' directive must appear once, before the rows", line_number)
            if len(tokens) != 2 or not DECIMAL.fullmatch(tokens[1]):
                raise TableFormatError("'base' directive takes exactly one integer", line_number)
            base = int(tokens[1])
            is_valid, error = validate_base(base)
            if not is_valid:
                raise TableFormatError(error, line_number)
            base_seen = True
            continue

        if len(rows) == base:
            raise TableFormatError(f"wrong row count: more than {base} rows", line_number)

        if len(tokens) != base:
            raise TableFormatError(f"malformed row length: expected {base} cells, got {len(tokens)}", line_number)

        values = []
        for token in tokens:
            if not DECIMAL.fullmatch(token):
                raise TableFormatError(f"'{token}' is not a decimal digit", line_number)
            value = int(token)
            is_valid, error = validate_digit(value, base)
            if not is_valid:
                raise TableFormatError(error, line_number)
            values.append(value)
        rows.append(tuple(values))

    if len(rows) != base:
        raise TableFormatError(f"wrong row count: expected {base}, got {len(rows)}", last_line or None)

    return CheckTable(base=base, cells=tuple(rows), name=name)


def serialize_table(table: CheckTable) -> str:
    """
    Canonical form: 'base <n>' line, rows in index order, cells separated
    by single spaces, newline-terminated, no comments.
    """
    lines = [f"base {table.base}"]
    lines.extend(' '.join(str(v) for v in row) for row in table.cells)
    return '\n'.join(lines) + '\n'


def load_table(path: Union[str, Path]) -> CheckTable:
    """Read and parse a table file; the file stem becomes the table name."""
    path = Path(path)
    text = path.read_text(encoding='utf-8')
    table = parse_table(text, name=path.stem)
    logger.info(f"Loaded table '{table.name}' (base {table.base}) from {path}")
    return table


def save_table(table: CheckTable, path: Union[str, Path]) -> None:
    """Write a table in canonical form."""
    Path(path).write_text(serialize_table(table), encoding='utf-8')
    logger.info(f"Wrote table '{table.name}' to {path}")


def builtin_table(name: str) -> CheckTable:
    """
    Return one of the published reference tables.

    Args:
        name: 'verhoeff-regular', 'verhoeff-irregular' or 'dunning-t3'

    Raises:
        UnknownTableError: for any other name
    """
    is_valid, error = validate_table_name(name)
    if not is_valid:
        raise UnknownTableError(error)
    return parse_table(BUILTIN_TABLE_TEXT[name], name=name)


def to_triples(table: CheckTable) -> TripleSystem:
    """L = {(r, cell(r, c), c)}; |L| = base^2."""
    triples = frozenset(
        Triple(r, table.cells[r][c], c)
        for r in range(table.base)
        for c in range(table.base)
    )
    return TripleSystem(base=table.base, triples=triples)


def to_table(system: TripleSystem, name: Optional[str] = None) -> CheckTable:
    """
    Rebuild a table from a triple system whose (first, third) coordinates
    cover every cell exactly once.

    Raises:
        NotLatinError: listing cells that are missing or doubly covered
    """
    cells: Dict[Tuple[int, int], List[int]] = {}
    for triple in system.triples:
        cells.setdefault((triple.r, triple.c), []).append(triple.s)

    n = system.base
    witnesses = []
    for r in range(n):
        for c in range(n):
            values = cells.get((r, c), [])
            if len(values) != 1:
                witnesses.append((r, c, tuple(sorted(values))))

    if witnesses:
        raise NotLatinError(
            f"triple system does not define a table: {len(witnesses)} cells missing or ambiguous",
            witnesses
        )

    rows = [[cells[(r, c)][0] for c in range(n)] for r in range(n)]
    return CheckTable.from_rows(rows, name=name, base=n)


def combination_index(system: TripleSystem) -> CombinationIndex:
    """Map every 3-subset of the alphabet to the N-members realizing it."""
    entries: Dict[Tuple[int, int, int], List[Triple]] = {
        subset: [] for subset in itertools.combinations(range(system.base), 3)
    }
    for triple in sorted(system.non_diagonal):
        key = tuple(sorted(triple.as_tuple()))
        entries[key].append(triple)
    return CombinationIndex(base=system.base, entries=entries)


def structural_profile(table: CheckTable) -> StructuralProfile:
    """
    Compute every table-only structural criterion.

    Args:
        table: Any table (latin or not)

    Returns:
        StructuralProfile
    """
    grid = table.grid
    n = table.base
    symbols = np.arange(n)

    rows_are_permutations = bool(np.all(np.sort(grid, axis=1) == symbols[None, :]))
    columns_are_permutations = bool(np.all(np.sort(grid, axis=0) == symbols[:, None]))

    row_fixed = (grid == symbols[None, :]).sum(axis=1)
    column_fixed = (grid == symbols[:, None]).sum(axis=0)

    row_two_cycles = []
    column_two_cycles = []
    for k in range(n):
        for a, b in itertools.combinations(range(n), 2):
            if grid[k, a] == b and grid[k, b] == a:
                row_two_cycles.append((k, a, b))
            if grid[a, k] == b and grid[b, k] == a:
                column_two_cycles.append((k, a, b))

    diagonal_is_permutation = bool(np.array_equal(np.sort(np.diag(grid)), symbols))
    off_diagonal = ~np.eye(n, dtype=bool)
    asymmetric_off_diagonal = not bool(np.any((grid == grid.T) & off_diagonal))

    system = to_triples(table)
    n_triples_all_distinct = not system.degenerate
    three_subset_unique = combination_index(system).is_unique

    return StructuralProfile(
        rows_are_permutations=rows_are_permutations,
        columns_are_permutations=columns_are_permutations,
        row_fixed_point_counts=[int(v) for v in row_fixed],
        column_fixed_point_counts=[int(v) for v in column_fixed],
        row_two_cycles=row_two_cycles,
        column_two_cycles=column_two_cycles,
        diagonal_is_permutation=diagonal_is_permutation,
        asymmetric_off_diagonal=asymmetric_off_diagonal,
        n_triples_all_distinct_symbols=n_triples_all_distinct,
        three_subset_unique=three_subset_unique,
    )


def require_latin(table: CheckTable) -> None:
    """
    Raise NotLatinError unless every row and column is a permutation.
    Witnesses are ('row', r) / ('column', c) entries.
    """
    witnesses = []
    for r in range(table.base):
        if len(set(table.row(r))) != table.base:
            witnesses.append(('row', r))
    for c in range(table.base):
        if len(set(table.column(c))) != table.base:
            witnesses.append(('column', c))
    if witnesses:
        raise NotLatinError(f"table '{table.name}' is not a latin square", witnesses)
