"""
Error model service: corruption families, exhaustive detection and the
table criteria that predict detection without enumeration.
"""

import itertools
from collections import defaultdict
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from src.models.check_table import CheckTable, Triple, Word
from src.models.error_class import DetectionReport, ErrorClass, WordPair
from src.models.roles import ALL_ROLES, RolePermutation
from src.services.table_service import structural_profile
from src.utils.exceptions import UnsupportedClassError
from src.utils.logger import get_logger


logger = get_logger(__name__)


def free_digit_range(base: int, phonetic_range: str = 'full') -> range:
    """Range of the digit not involved in a phonetic confusion."""
    return range(2, base) if phonetic_range == 'literal' else range(base)


def corruptions(error_class: ErrorClass, word: Word, base: int,
                phonetic_range: str = 'full') -> Set[Word]:
    """
    Words reachable from `word` by one error of the class, excluding the
    word itself.

    Args:
        error_class: Error family
        word: Source word (valid for base)
        base: Alphabet size
        phonetic_range: 'full' or 'literal' range for the uninvolved digit

    Returns:
        Set of corrupted words
    """
    d1, d2, d3 = word.as_tuple()
    digits = range(base)
    out: Set[Word] = set()

    if error_class is ErrorClass.SINGLE:
        for v in digits:
            if v != d1:
                out.add(Word(v, d2, d3))
            if v != d2:
                out.add(Word(d1, v, d3))
            if v != d3:
                out.add(Word(d1, d2, v))

    elif error_class is ErrorClass.ADJACENT_TRANSPOSITION:
        if d1 != d2:
            out.add(Word(d2, d1, d3))
        if d2 != d3:
            out.add(Word(d1, d3, d2))

    elif error_class is ErrorClass.TWIN:
        for b in digits:
            if d1 == d2 and b != d1:
                out.add(Word(b, b, d3))
            if d2 == d3 and b != d2:
                out.add(Word(d1, b, b))

    elif error_class is ErrorClass.JUMP_TWIN:
        if d1 == d3:
            out.update(Word(c, d2, c) for c in digits if c != d1)

    elif error_class is ErrorClass.JUMP_TRANSPOSITION:
        if d1 != d3:
            out.add(Word(d3, d2, d1))

    elif error_class is ErrorClass.PHONETIC_RIGHT:
        free = free_digit_range(base, phonetic_range)
        # (X,0,c) <-> (1,X,c)
        if d2 == 0 and d1 >= 2 and d3 in free:
            out.add(Word(1, d1, d3))
        if d1 == 1 and d2 >= 2 and d3 in free:
            out.add(Word(d2, 0, d3))

    elif error_class is ErrorClass.PHONETIC_LEFT:
        free = free_digit_range(base, phonetic_range)
        # (r,X,0) <-> (r,1,X)
        if d3 == 0 and d2 >= 2 and d1 in free:
            out.add(Word(d1, 1, d2))
        if d2 == 1 and d3 >= 2 and d1 in free:
            out.add(Word(d1, d3, 0))

    elif error_class is ErrorClass.CYCLIC:
        out.add(Word(d2, d3, d1))

    elif error_class is ErrorClass.PERMUTATION:
        out.update(Word(*p) for p in itertools.permutations((d1, d2, d3)))

    elif error_class is ErrorClass.TRIPLE:
        out.update(
            Word(a, b, c)
            for a in digits if a != d1
            for b in digits if b != d2
            for c in digits if c != d3
        )

    out.discard(word)
    return out


def detect(table: CheckTable, error_class: ErrorClass,
           phonetic_range: str = 'full') -> DetectionReport:
    """
    Exhaustively list the codeword pairs an error class cannot tell apart.

    Args:
        table: Code under test
        error_class: Error family
        phonetic_range: Range of the uninvolved digit for phonetic classes

    Returns:
        DetectionReport with sorted unordered pairs
    """
    codewords = table.codewords()
    code = set(codewords)
    pairs: Set[WordPair] = set()

    for word in codewords:
        for other in corruptions(error_class, word, table.base, phonetic_range):
            if other in code:
                pairs.add((word, other) if word < other else (other, word))

    report = DetectionReport(
        error_class=error_class,
        base=table.base,
        undetected=sorted(pairs),
        words_examined=len(codewords),
        phonetic_range=phonetic_range,
    )
    logger.debug(f"{table.name}: {error_class.value} -> {report.pair_count} undetected pairs")
    return report


def structural_check(table: CheckTable, error_class: ErrorClass) -> Tuple[bool, List[tuple]]:
    """
    Evaluate the table criterion equivalent to complete detection.

    Single: rows and columns are permutations. AdjacentTransposition: no
    2-cycles in row or column maps. Twin: at most one fixed point per row
    and column map. JumpTwin: diagonal is a permutation. JumpTransposition:
    cell(a, c) != cell(c, a) for a != c. Permutation: codeword digit
    multisets are pairwise distinct.

    Returns:
        Tuple of (passed, witnesses)

    Raises:
        UnsupportedClassError: for classes without a shortcut
    """
    if not error_class.has_structural_shortcut:
        raise UnsupportedClassError(f"no structural shortcut for '{error_class.value}'")

    n = table.base

    if error_class is ErrorClass.PERMUTATION:
        groups: Dict[Tuple[int, ...], List[Word]] = defaultdict(list)
        for word in table.codewords():
            groups[tuple(sorted(word.as_tuple()))].append(word)
        witnesses = [(key, tuple(words)) for key, words in sorted(groups.items()) if len(words) > 1]
        return not witnesses, witnesses

    if error_class is ErrorClass.JUMP_TWIN:
        witnesses = [
            (i, j) for i, j in itertools.combinations(range(n), 2)
            if table.cell(i, i) == table.cell(j, j)
        ]
        return not witnesses, witnesses

    if error_class is ErrorClass.JUMP_TRANSPOSITION:
        witnesses = [
            (a, c) for a, c in itertools.combinations(range(n), 2)
            if table.cell(a, c) == table.cell(c, a)
        ]
        return not witnesses, witnesses

    profile = structural_profile(table)

    if error_class is ErrorClass.SINGLE:
        witnesses = [('row', r) for r in range(n) if len(set(table.row(r))) != n]
        witnesses += [('column', c) for c in range(n) if len(set(table.column(c))) != n]
        return profile.is_latin, witnesses

    if error_class is ErrorClass.ADJACENT_TRANSPOSITION:
        witnesses = [('row',) + cycle for cycle in profile.row_two_cycles]
        witnesses += [('column',) + cycle for cycle in profile.column_two_cycles]
        return profile.has_no_two_cycles, witnesses

    # TWIN
    witnesses = [('row', r, k) for r, k in enumerate(profile.row_fixed_point_counts) if k > 1]
    witnesses += [('column', c, k) for c, k in enumerate(profile.column_fixed_point_counts) if k > 1]
    return profile.fixed_points_at_most_one, witnesses


def full_report(table: CheckTable, classes: Optional[Sequence[ErrorClass]] = None,
                phonetic_range: str = 'full') -> Dict[ErrorClass, DetectionReport]:
    """
    Run detect for every requested class (all classes by default), in
    ErrorClass order, attaching the structural verdict where one exists.
    """
    selected = [c for c in ErrorClass if classes is None or c in classes]
    reports: Dict[ErrorClass, DetectionReport] = {}
    for error_class in selected:
        report = detect(table, error_class, phonetic_range)
        if error_class.has_structural_shortcut:
            passed, _ = structural_check(table, error_class)
            report.structural_equivalent_passed = passed
        reports[error_class] = report

    dirty = [c.value for c, r in reports.items() if not r.is_clean]
    logger.info(f"Full report for '{table.name}': undetected pairs in {dirty or 'no class'}")
    return reports


def suite_passes(reports: Dict[ErrorClass, DetectionReport],
                 excluded: Iterable[ErrorClass] = (ErrorClass.TRIPLE,)) -> bool:
    """True when every report outside `excluded` is empty."""
    skip = set(excluded)
    return all(report.is_clean for c, report in reports.items() if c not in skip)


def phonetic_pattern_pairs(base: int, role: RolePermutation,
                           phonetic_range: str = 'full') -> List[Tuple[Triple, Triple]]:
    """
    Ground pairs of the right-phonetic pattern (X,0,y) / (1,X,y),
    X in 2..base-1, with `role` applied to both words.
    """
    pairs = []
    for x in range(2, base):
        for y in free_digit_range(base, phonetic_range):
            a = Triple(*role.apply((x, 0, y)))
            b = Triple(*role.apply((1, x, y)))
            pairs.append((a, b))
    return pairs


def conjugate_phonetic_report(table: CheckTable,
                              phonetic_range: str = 'full') -> Dict[str, List[WordPair]]:
    """
    Check all six role-permuted phonetic patterns on one table. Empty lists
    everywhere means every conjugate is free of right and left phonetic
    errors.
    """
    code = set(table.codewords())
    result: Dict[str, List[WordPair]] = {}
    for role in ALL_ROLES:
        hits = []
        for a, b in phonetic_pattern_pairs(table.base, role, phonetic_range):
            wa, wb = a.to_word(), b.to_word()
            if wa in code and wb in code:
                hits.append((wa, wb) if wa < wb else (wb, wa))
        result[role.name] = sorted(hits)
    return result
