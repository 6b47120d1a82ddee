"""
Brute-force oracle.

Naive, independent re-statement of every error definition as a relation
between two words. Shares no corruption code with error_model_service so
that agreement between the two is evidence rather than tautology.
"""

from collections import Counter
from typing import Dict, List, Tuple

from src.models.check_table import CheckTable, Word
from src.models.error_class import ErrorClass


Digits = Tuple[int, int, int]


def enumerate_codewords(table: CheckTable) -> List[Word]:
    """All base^2 codewords (r, cell(r, c), c), sorted."""
    words = []
    for r, row in enumerate(table.cells):
        for c, s in enumerate(row):
            words.append(Word(r, s, c))
    return sorted(words)


def _hamming(a: Digits, b: Digits) -> int:
    return sum(1 for x, y in zip(a, b) if x != y)


def _one_way(error_class: ErrorClass, a: Digits, b: Digits, base: int, phonetic_range: str) -> bool:
    """True if b results from a by one error of the class."""
    if a == b:
        return False

    if error_class is ErrorClass.SINGLE:
        return _hamming(a, b) == 1

    if error_class is ErrorClass.ADJACENT_TRANSPOSITION:
        for i, j, k in ((0, 1, 2), (1, 2, 0)):
            if a[i] != a[j] and b[i] == a[j] and b[j] == a[i] and b[k] == a[k]:
                return True
        return False

    if error_class is ErrorClass.TWIN:
        for i, j, k in ((0, 1, 2), (1, 2, 0)):
            if a[i] == a[j] and b[i] == b[j] and b[i] != a[i] and b[k] == a[k]:
                return True
        return False

    if error_class is ErrorClass.JUMP_TWIN:
        return a[0] == a[2] and b[0] == b[2] and b[0] != a[0] and b[1] == a[1]

    if error_class is ErrorClass.JUMP_TRANSPOSITION:
        return a[0] != a[2] and b == (a[2], a[1], a[0])

    if error_class in (ErrorClass.PHONETIC_RIGHT, ErrorClass.PHONETIC_LEFT):
        lowest_free = 2 if phonetic_range == 'literal' else 0
        if error_class is ErrorClass.PHONETIC_RIGHT:
            pair_a, pair_b, free_a, free_b = a[:2], b[:2], a[2], b[2]
        else:
            pair_a, pair_b, free_a, free_b = a[1:], b[1:], a[0], b[0]
        if free_a != free_b or free_a < lowest_free:
            return False
        for x in range(2, base):
            spoken_tens, spoken_teen = (x, 0), (1, x)
            if {pair_a, pair_b} == {spoken_tens, spoken_teen}:
                return True
        return False

    if error_class is ErrorClass.CYCLIC:
        return b == (a[1], a[2], a[0])

    if error_class is ErrorClass.PERMUTATION:
        return sorted(a) == sorted(b)

    if error_class is ErrorClass.TRIPLE:
        return _hamming(a, b) == 3

    raise ValueError(f"unknown error class {error_class!r}")


def brute_undetected(table: CheckTable, error_class: ErrorClass,
                     phonetic_range: str = 'full') -> List[Tuple[Word, Word]]:
    """
    Every unordered pair of codewords related by one error of the class,
    found by comparing all codeword pairs. Sorted, smaller word first.
    """
    words = enumerate_codewords(table)
    pairs = []
    for i, w in enumerate(words):
        a = w.as_tuple()
        for v in words[i + 1:]:
            b = v.as_tuple()
            if (_one_way(error_class, a, b, table.base, phonetic_range)
                    or _one_way(error_class, b, a, table.base, phonetic_range)):
                pairs.append((w, v))
    return sorted(pairs)


def multiset_census(table: CheckTable) -> Dict[Tuple[int, int, int], int]:
    """Number of codewords per sorted digit multiset."""
    census = Counter(tuple(sorted(w.as_tuple())) for w in enumerate_codewords(table))
    return dict(sorted(census.items()))


def census_histogram(census: Dict[Tuple[int, int, int], int]) -> Dict[int, int]:
    """Multiplicity -> number of multisets with that multiplicity."""
    return dict(sorted(Counter(census.values()).items()))
