"""
Shared fixtures: built-in tables and seeded latin squares.
"""

import random
from typing import List, Optional, Set

import numpy as np
import pytest

from src.models.check_table import CheckTable
from src.services.table_service import builtin_table


def random_latin_square(seed: int, base: int = 10) -> CheckTable:
    """Isotope of the cyclic group table: sigma(pi(r) + tau(c) mod n)."""
    rng = np.random.default_rng(seed)
    pi, tau, sigma = rng.permutation(base), rng.permutation(base), rng.permutation(base)
    grid = sigma[(pi[:, None] + tau[None, :]) % base]
    return CheckTable.from_rows(grid, name=f"random-{seed}", base=base)


def _random_row(rng: random.Random, base: int, column_used: List[Set[int]]) -> List[int]:
    """A random perfect matching of columns to symbols unused in each column."""
    row: List[Optional[int]] = [None] * base

    def place(free: Set[int]) -> bool:
        open_columns = [c for c in range(base) if row[c] is None]
        if not open_columns:
            return True
        c = min(open_columns, key=lambda k: len(free - column_used[k]))
        candidates = sorted(free - column_used[c])
        rng.shuffle(candidates)
        for s in candidates:
            row[c] = s
            if place(free - {s}):
                return True
        row[c] = None
        return False

    # a latin rectangle always extends by one row
    assert place(set(range(base)))
    return row


def backtracking_latin_square(seed: int, base: int = 10) -> CheckTable:
    """Row-by-row backtracking fill; not restricted to one isotopy class."""
    rng = random.Random(seed)
    column_used: List[Set[int]] = [set() for _ in range(base)]
    rows = []
    for _ in range(base):
        row = _random_row(rng, base, column_used)
        for c, s in enumerate(row):
            column_used[c].add(s)
        rows.append(row)
    return CheckTable.from_rows(rows, name=f"backtracked-{seed}", base=base)


@pytest.fixture(scope='session')
def dunning_t3() -> CheckTable:
    """Permutation-free decimal table."""
    return builtin_table('dunning-t3')


@pytest.fixture(scope='session')
def verhoeff_regular() -> CheckTable:
    return builtin_table('verhoeff-regular')


@pytest.fixture(scope='session')
def verhoeff_irregular() -> CheckTable:
    return builtin_table('verhoeff-irregular')


@pytest.fixture(scope='session')
def builtin_tables(dunning_t3, verhoeff_regular, verhoeff_irregular) -> List[CheckTable]:
    return [verhoeff_regular, verhoeff_irregular, dunning_t3]


@pytest.fixture(scope='session')
def random_latin_squares() -> List[CheckTable]:
    """Twenty seeded latin squares of base 10: ten isotopes of the cyclic group, ten backtracked."""
    return ([random_latin_square(seed) for seed in range(10)]
            + [backtracking_latin_square(seed) for seed in range(10)])


@pytest.fixture
def cyclic_table_base4() -> CheckTable:
    """cell(r, c) = r + c mod 4."""
    return CheckTable.from_rows([[(r + c) % 4 for c in range(4)] for r in range(4)], name='z4')
