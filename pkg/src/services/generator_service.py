"""
Generator service: constraint model of a permutation-free, phonetic-free
table, ground-truth checking, native backtracking search and LP export.

Every non-latin constraint (3-subset caps, phonetic pairs) is a conflict
between two placements cell(r, c) = s, so the search handles them with the
same forward checking as the row and column all-different constraints.
"""

import functools
import itertools
import math
import multiprocessing
import random
import tempfile
import time
from dataclasses import replace
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import pulp

from src.models.check_table import CheckTable, Triple
from src.models.constraint_model import (
    ConstraintFamily,
    ConstraintModel,
    ConstraintViolation,
    PhoneticFamily,
    SearchConfig,
    SearchOutcome,
)
from src.models.roles import ALL_ROLES
from src.services.error_model_service import phonetic_pattern_pairs
from src.utils.exceptions import BaseMismatchError, UnsupportedBaseError
from src.utils.logger import get_logger
from src.utils.validators import validate_base, validate_phonetic_range


logger = get_logger(__name__)


def build_model(base: int, config: Optional[SearchConfig] = None) -> ConstraintModel:
    """
    Instantiate every constraint family for an alphabet size.

    Args:
        base: Alphabet size (4..10)
        config: Supplies the phonetic range (defaults to 'full')

    Returns:
        ConstraintModel

    Raises:
        UnsupportedBaseError: outside 4..10
    """
    is_valid, error = validate_base(base)
    if not is_valid:
        raise UnsupportedBaseError(error)

    phonetic_range = config.phonetic_range if config else 'full'
    is_valid, error = validate_phonetic_range(phonetic_range)
    if not is_valid:
        raise ValueError(error)

    model = ConstraintModel(
        base=base,
        phonetic_range=phonetic_range,
        variables=[(r, c) for r in range(base) for c in range(base)],
        row_all_different=list(range(base)),
        column_all_different=list(range(base)),
        diagonal_identity=list(range(base)),
        off_diagonal_three_distinct=[(r, c) for r in range(base) for c in range(base) if r != c],
        three_subset_unique=list(itertools.combinations(range(base), 3)),
        phonetic_families=[
            PhoneticFamily(role=role, pairs=phonetic_pattern_pairs(base, role, phonetic_range))
            for role in ALL_ROLES
        ],
    )
    logger.info(f"Built model for base {base}: {model.family_counts()}")
    return model


def _placed(table: CheckTable, t: Triple) -> bool:
    return table.cell(t.r, t.c) == t.s


def check_assignment(model: ConstraintModel, table: CheckTable) -> Tuple[bool, List[ConstraintViolation]]:
    """
    Evaluate every ground constraint of the model on a table.

    Returns:
        Tuple of (satisfied, violations)

    Raises:
        BaseMismatchError: when the table and model bases differ
    """
    if model.base != table.base:
        raise BaseMismatchError(f"model base {model.base} != table base {table.base}")

    n = model.base
    violations: List[ConstraintViolation] = []

    for r in model.row_all_different:
        if len(set(table.row(r))) != n:
            violations.append(ConstraintViolation(ConstraintFamily.ROW_ALL_DIFFERENT, f"row {r}", (r,)))

    for c in model.column_all_different:
        if len(set(table.column(c))) != n:
            violations.append(ConstraintViolation(ConstraintFamily.COLUMN_ALL_DIFFERENT, f"column {c}", (c,)))

    for i in model.diagonal_identity:
        if table.cell(i, i) != i:
            violations.append(ConstraintViolation(
                ConstraintFamily.DIAGONAL_IDENTITY, f"cell({i},{i}) = {table.cell(i, i)}", (i,)))

    for r, c in model.off_diagonal_three_distinct:
        if table.cell(r, c) in (r, c):
            violations.append(ConstraintViolation(
                ConstraintFamily.OFF_DIAGONAL_THREE_DISTINCT, f"cell({r},{c}) = {table.cell(r, c)}", (r, c)))

    for subset in model.three_subset_unique:
        realized = [Triple(*p) for p in itertools.permutations(subset) if _placed(table, Triple(*p))]
        if len(realized) > 1:
            words = ' '.join(str(t.to_word()) for t in realized)
            violations.append(ConstraintViolation(
                ConstraintFamily.THREE_SUBSET_UNIQUE, f"subset {set(subset)} realized by {words}", subset))

    for family in model.phonetic_families:
        for a, b in family.pairs:
            if _placed(table, a) and _placed(table, b):
                violations.append(ConstraintViolation(
                    ConstraintFamily.PHONETIC_FAMILY,
                    f"{family.role.name}: {a.to_word()} and {b.to_word()}",
                    (family.role.name, a.to_word(), b.to_word())))

    return not violations, violations


class _Restart(Exception):
    pass


class _BudgetExhausted(Exception):

    def __init__(self, reason: str) -> None:
        super().__init__(reason)
        self.reason = reason


class BacktrackingSearch:
    """
    Systematic backtracking over cells with forward checking.

    Domains are bitmasks per cell (index r * base + c). Cell choice is
    most-constrained first, ties broken by lowest index; value order is a
    seeded shuffle redrawn at every restart.
    """

    def __init__(self, model: ConstraintModel, config: SearchConfig) -> None:
        self.model = model
        self.config = config
        self.n = model.base
        self.full_mask = (1 << self.n) - 1
        self.rng = random.Random(config.seed)
        self.conflicts = self._build_conflicts()
        self.row_cells = [[r * self.n + c for c in range(self.n)] for r in range(self.n)]
        self.column_cells = [[r * self.n + c for r in range(self.n)] for c in range(self.n)]
        self.popcount = [bin(m).count('1') for m in range(1 << self.n)]

        self.steps = 0
        self.deepest = 0
        self.restarts = 0
        self.failures = 0
        self.deadline = 0.0

    def _build_conflicts(self) -> Dict[Tuple[int, int], List[Tuple[int, int]]]:
        """Placement (cell, value) -> placements it excludes."""
        n = self.n
        conflicts: Dict[Tuple[int, int], set] = {}

        for r in range(n):
            for c in range(n):
                k = r * n + c
                for s in range(n):
                    excluded = set()
                    for other in range(n):
                        if other != c:
                            excluded.add((r * n + other, s))
                        if other != r:
                            excluded.add((other * n + c, s))
                    if len({r, s, c}) == 3:
                        for p1, p2, p3 in itertools.permutations((r, s, c)):
                            if (p1, p2, p3) != (r, s, c):
                                excluded.add((p1 * n + p3, p2))
                    conflicts[(k, s)] = excluded

        for family in self.model.phonetic_families:
            for a, b in family.pairs:
                ka, kb = a.r * n + a.c, b.r * n + b.c
                if ka == kb:
                    continue
                conflicts[(ka, a.s)].add((kb, b.s))
                conflicts[(kb, b.s)].add((ka, a.s))

        return {key: sorted(value) for key, value in conflicts.items()}

    def _initial_state(self) -> Tuple[List[int], List[Optional[int]]]:
        n = self.n
        domains = []
        for r in range(n):
            for c in range(n):
                if r == c:
                    domains.append(1 << r)
                else:
                    domains.append(self.full_mask & ~(1 << r) & ~(1 << c))
        return domains, [None] * (n * n)

    def _assign(self, domains: List[int], assigned: List[Optional[int]], k: int, s: int,
                trail: List[Tuple[int, int]]) -> bool:
        """Place s in cell k and forward-check; False on a wipe-out."""
        trail.append((k, domains[k]))
        domains[k] = 1 << s
        assigned[k] = s
        for k2, s2 in self.conflicts[(k, s)]:
            bit = 1 << s2
            if domains[k2] & bit:
                if assigned[k2] is not None:
                    return False
                trail.append((k2, domains[k2]))
                domains[k2] &= ~bit
                if not domains[k2]:
                    return False
        return self._supported(domains)

    def _supported(self, domains: List[int]) -> bool:
        """Every symbol still has a candidate cell in every row and column."""
        for cells in self.row_cells:
            mask = 0
            for k in cells:
                mask |= domains[k]
            if mask != self.full_mask:
                return False
        for cells in self.column_cells:
            mask = 0
            for k in cells:
                mask |= domains[k]
            if mask != self.full_mask:
                return False
        return True

    def _select_cell(self, domains: List[int], assigned: List[Optional[int]]) -> Optional[int]:
        best, best_size = None, self.n + 1
        for k, value in enumerate(assigned):
            if value is None:
                size = self.popcount[domains[k]]
                if size < best_size:
                    best, best_size = k, size
                    if size <= 1:
                        break
        return best

    def _tick(self) -> None:
        if self.steps >= self.config.max_steps:
            raise _BudgetExhausted('max-steps')
        if self.steps % 256 == 0 and time.monotonic() > self.deadline:
            raise _BudgetExhausted('time-budget')
        self.steps += 1

    def _descend(self, domains: List[int], assigned: List[Optional[int]],
                 order: List[List[int]], depth: int) -> bool:
        k = self._select_cell(domains, assigned)
        if k is None:
            return True

        self.deepest = max(self.deepest, depth)
        for s in order[k]:
            if not domains[k] & (1 << s):
                continue
            self._tick()
            trail: List[Tuple[int, int]] = []
            if self._assign(domains, assigned, k, s, trail):
                if self._descend(domains, assigned, order, depth + 1):
                    return True
            for cell, previous in reversed(trail):
                domains[cell] = previous
            assigned[k] = None

        self.failures += 1
        if self.failures >= self.config.restart_interval:
            raise _Restart()
        return False

    def run(self) -> SearchOutcome:
        started = time.monotonic()
        self.deadline = started + self.config.time_budget
        n = self.n

        while True:
            domains, assigned = self._initial_state()
            for i in range(n):
                assigned[i * n + i] = i
            order = [self.rng.sample(range(n), n) for _ in range(n * n)]
            self.failures = 0
            try:
                if not self._supported(domains):
                    found = False
                else:
                    found = self._descend(domains, assigned, order, n)
            except _Restart:
                self.restarts += 1
                logger.debug(f"Restart {self.restarts} after {self.steps} steps (deepest {self.deepest})")
                continue
            except _BudgetExhausted as exhausted:
                return self._outcome(False, None, exhausted.reason, started)

            if not found:
                return self._outcome(False, None, 'exhausted', started)

            rows = [[assigned[r * n + c] for c in range(n)] for r in range(n)]
            table = CheckTable.from_rows(rows, name=f"generated-b{n}-s{self.config.seed}", base=n)
            return self._outcome(True, table, 'solved', started)

    def _outcome(self, found: bool, table: Optional[CheckTable], reason: str, started: float) -> SearchOutcome:
        return SearchOutcome(
            found=found,
            table=table,
            steps=self.steps,
            deepest=self.deepest,
            restarts=self.restarts,
            elapsed=time.monotonic() - started,
            reason=reason,
            seed=self.config.seed,
        )


def subset_capacity_ok(base: int) -> bool:
    """Off-diagonal cells need pairwise distinct 3-subsets: n(n-1) <= C(n,3)."""
    return base * (base - 1) <= math.comb(base, 3)


def solve(model: ConstraintModel, config: SearchConfig) -> SearchOutcome:
    """
    Search for a table satisfying the model.

    NotFound (found=False) is returned only when the step or time budget
    runs out, when the tree is exhausted, or when the subset capacity
    bound proves infeasibility.
    """
    is_valid, error = config.validate()
    if not is_valid:
        raise ValueError(error)

    if not subset_capacity_ok(model.base):
        logger.warning(f"Base {model.base} is infeasible: more off-diagonal cells than 3-subsets")
        return SearchOutcome(found=False, reason='subset-capacity', seed=config.seed)

    outcome = BacktrackingSearch(model, config).run()
    if outcome.found:
        logger.info(f"Seed {config.seed}: solved in {outcome.steps} steps, {outcome.restarts} restarts")
    else:
        logger.warning(f"Seed {config.seed}: not found ({outcome.reason}) after {outcome.steps} steps, "
                       f"deepest {outcome.deepest}")
    return outcome


def _solve_seed(model: ConstraintModel, config: SearchConfig, seed: int) -> SearchOutcome:
    return solve(model, replace(config, seed=seed))


def solve_parallel(model: ConstraintModel, config: SearchConfig, seeds: Sequence[int],
                   workers: Optional[int] = None) -> SearchOutcome:
    """
    Run independent seeded searches in a process pool; return the first
    success (reproducible per seed only) or the last NotFound.

    The pool is terminated as soon as a table is found, so losing searches
    never outlive the call.
    """
    if not seeds:
        raise ValueError("at least one seed is required")

    last: Optional[SearchOutcome] = None
    with multiprocessing.Pool(processes=workers) as pool:
        searches = pool.imap_unordered(functools.partial(_solve_seed, model, config), seeds, chunksize=1)
        for outcome in searches:
            if outcome.found:
                pool.terminate()
                return outcome
            last = outcome
    return last


def build_lp_problem(model: ConstraintModel) -> Tuple[pulp.LpProblem, Dict[Tuple[int, int, int], pulp.LpVariable]]:
    """
    Linearize the model with 0/1 indicators x[r][c][s] (cell(r, c) = s).

    Returns:
        Tuple of (problem, variables keyed by (r, c, s))
    """
    n = model.base
    problem = pulp.LpProblem(f"checkcode_base{n}", pulp.LpMinimize)
    x = {
        (r, c, s): pulp.LpVariable(f"x_{r}_{c}_{s}", cat=pulp.LpBinary)
        for r in range(n) for c in range(n) for s in range(n)
    }

    for r, c in model.variables:
        problem += pulp.lpSum(x[r, c, s] for s in range(n)) == 1, f"cell_{r}_{c}"

    for r in model.row_all_different:
        for s in range(n):
            problem += pulp.lpSum(x[r, c, s] for c in range(n)) == 1, f"row_{r}_sym_{s}"

    for c in model.column_all_different:
        for s in range(n):
            problem += pulp.lpSum(x[r, c, s] for r in range(n)) == 1, f"col_{c}_sym_{s}"

    for i in model.diagonal_identity:
        problem += x[i, i, i] == 1, f"diag_{i}"

    for r, c in model.off_diagonal_three_distinct:
        problem += x[r, c, r] + x[r, c, c] == 0, f"offdiag_{r}_{c}"

    for subset in model.three_subset_unique:
        placements = [x[p1, p3, p2] for p1, p2, p3 in itertools.permutations(subset)]
        problem += pulp.lpSum(placements) <= 1, "subset_" + '_'.join(str(d) for d in subset)

    for k, family in enumerate(model.phonetic_families):
        for j, (a, b) in enumerate(family.pairs):
            problem += x[a.r, a.c, a.s] + x[b.r, b.c, b.s] <= 1, f"phon_{k}_{j}"

    return problem, x


def export_model(model: ConstraintModel) -> str:
    """
    Render the model in CPLEX LP format for external MILP solvers. Header
    comments list the family counts; there is no objective (feasibility).
    """
    problem, variables = build_lp_problem(model)

    header = [
        f"\\ checkcode constraint model, base {model.base}, phonetic range {model.phonetic_range}",
        f"\\ indicator variables: {len(variables)}",
    ]
    header += [f"\\ {family}: {count}" for family, count in model.family_counts().items()]
    header.append(f"\\ phonetic ground pairs: {model.phonetic_pair_count}")

    with tempfile.TemporaryDirectory() as tmp:
        path = Path(tmp) / 'model.lp'
        problem.writeLP(str(path))
        body = path.read_text(encoding='utf-8')

    logger.info(f"Exported LP model for base {model.base} ({len(problem.constraints)} constraints)")
    return '\n'.join(header) + '\n' + body
