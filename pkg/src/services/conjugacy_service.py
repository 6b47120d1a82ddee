"""
Conjugacy service: the role action on triple systems, the six conjugate
codes, their pairwise intersections and admissible digit relabelings.
"""

import itertools
import random
from typing import Dict, List, Optional, Set, Tuple

from src.models.check_table import CheckTable, Triple, TripleSystem
from src.models.error_class import ErrorClass
from src.models.roles import ALL_ROLES, Relabeling, RolePermutation
from src.services.error_model_service import full_report, suite_passes
from src.services.table_service import require_latin, to_table, to_triples
from src.utils.exceptions import BaseMismatchError, InadmissibleRelabelingError
from src.utils.logger import get_logger


logger = get_logger(__name__)


def apply_role(role: RolePermutation, system: TripleSystem) -> TripleSystem:
    """Permute the coordinates of every triple; N/D are re-derived."""
    triples = frozenset(Triple(*role.apply(t.as_tuple())) for t in system.triples)
    return TripleSystem(base=system.base, triples=triples)


def six_conjugates(system: TripleSystem) -> List[TripleSystem]:
    """
    One system per role permutation, in ALL_ROLES order (identity first).

    Raises:
        NotLatinError: when the source does not come from a latin square
    """
    require_latin(to_table(system))
    return [apply_role(role, system) for role in ALL_ROLES]


def conjugate_tables(table: CheckTable) -> List[CheckTable]:
    """The six conjugates of a latin table as tables named '<name>_t<k>'."""
    base_name = table.name or 'table'
    return [
        to_table(system, name=f"{base_name}_t{k}")
        for k, system in enumerate(six_conjugates(to_triples(table)))
    ]


def pairwise_common(system_a: TripleSystem, system_b: TripleSystem) -> Set[Triple]:
    """
    Exact intersection of two triple systems.

    Raises:
        BaseMismatchError: when the alphabets differ
    """
    if system_a.base != system_b.base:
        raise BaseMismatchError(f"base {system_a.base} != base {system_b.base}")
    return set(system_a.triples & system_b.triples)


def disjointness_violations(systems: List[TripleSystem]) -> Dict[Tuple[int, int], List[Triple]]:
    """
    For every unordered pair of systems, the common triples that are not
    constant (i, i, i). An empty result means the systems are pairwise
    disjoint save for the diagonal.
    """
    violations = {}
    for i, j in itertools.combinations(range(len(systems)), 2):
        extra = sorted(t for t in pairwise_common(systems[i], systems[j]) if not t.is_diagonal)
        if extra:
            violations[(i, j)] = extra
    return violations


def relabel(table: CheckTable, relabeling: Relabeling) -> CheckTable:
    """
    Apply p to every coordinate: cell'(p(r), p(c)) = p(cell(r, c)).

    Raises:
        InadmissibleRelabelingError: unless p keeps {0,1} and {2..base-1}
    """
    if relabeling.base != table.base:
        raise BaseMismatchError(f"relabeling base {relabeling.base} != table base {table.base}")
    if not relabeling.is_admissible:
        raise InadmissibleRelabelingError(
            f"relabeling {relabeling} does not keep {{0,1}} and {{2..{table.base - 1}}} setwise")

    n = table.base
    rows = [[0] * n for _ in range(n)]
    for r in range(n):
        for c in range(n):
            rows[relabeling(r)][relabeling(c)] = relabeling(table.cells[r][c])
    return CheckTable.from_rows(rows, name=table.name, base=n)


def random_relabeling(base: int, rng: random.Random) -> Relabeling:
    """Draw an admissible relabeling uniformly."""
    low = [0, 1]
    rng.shuffle(low)
    high = list(range(2, base))
    rng.shuffle(high)
    return Relabeling(base, tuple(low + high))


def relabeling_suite(table: CheckTable, samples: int, seed: int = 0,
                     phonetic_range: str = 'full') -> List[Relabeling]:
    """
    Run the full error suite (triple errors excluded) on `samples` seeded
    random relabelings of the table.

    Returns:
        The relabelings whose image fails the suite (empty when the
        invariance claim holds)
    """
    rng = random.Random(seed)
    classes = [c for c in ErrorClass if c is not ErrorClass.TRIPLE]
    failures = []
    for _ in range(samples):
        p = random_relabeling(table.base, rng)
        reports = full_report(relabel(table, p), classes, phonetic_range)
        if not suite_passes(reports):
            logger.warning(f"Relabeling {p} of '{table.name}' breaks the error suite")
            failures.append(p)
    logger.info(f"Checked {samples} relabelings of '{table.name}': {len(failures)} failures")
    return failures
