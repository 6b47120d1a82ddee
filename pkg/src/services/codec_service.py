"""
Codec service: encoding, membership, completion from partial words and the
per-category registry built on the six conjugate codes.
"""

from collections import Counter
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Union

from src.models.check_table import CheckTable, Word
from src.models.codec import IssueRecord, IssueStatus, PartialWord
from src.services.conjugacy_service import conjugate_tables
from src.services.table_service import require_latin
from src.utils.exceptions import NotLatinError, RegistryError
from src.utils.logger import get_logger
from src.utils.validators import validate_category, validate_digit


logger = get_logger(__name__)


def _check_digits(base: int, *digits: int) -> None:
    for digit in digits:
        is_valid, error = validate_digit(digit, base)
        if not is_valid:
            raise ValueError(error)


def encode(table: CheckTable, r: int, c: int) -> Word:
    """Codeword for information digits (r, c): (r, cell(r, c), c)."""
    _check_digits(table.base, r, c)
    return Word(r, table.cell(r, c), c)


def is_codeword(table: CheckTable, word: Word) -> bool:
    """True iff cell(d1, d3) == d2."""
    if not word.is_valid_for(table.base):
        return False
    return table.cell(word.d1, word.d3) == word.d2


def complete(table: CheckTable, partial: PartialWord) -> Word:
    """
    Recover the codeword from two digits with known positions.

    Args:
        table: Latin table
        partial: Exactly two (position, digit) assignments

    Returns:
        The unique codeword agreeing with both assignments

    Raises:
        ValueError: unless exactly two in-range assignments are given
        NotLatinError: when the table is not latin
    """
    if len(partial.assignments) != 2:
        raise ValueError(f"complete needs exactly two assignments, got {len(partial.assignments)}")
    is_valid, error = partial.validate_for(table.base)
    if not is_valid:
        raise ValueError(error)

    require_latin(table)

    candidates = [w for w in table.codewords() if partial.matches(w)]
    if len(candidates) != 1:
        raise NotLatinError(
            f"partial word {partial.as_dict()} matches {len(candidates)} codewords", candidates)
    return candidates[0]


def words_containing(table: CheckTable, digits: Sequence[int]) -> List[Word]:
    """
    Codewords whose digit multiset contains the given 2 or 3 digits,
    positions unknown. Sorted.
    """
    if len(digits) not in (2, 3):
        raise ValueError(f"expected 2 or 3 digits, got {len(digits)}")
    _check_digits(table.base, *digits)

    wanted = Counter(digits)
    found = []
    for word in table.codewords():
        have = Counter(word.as_tuple())
        if all(have[d] >= k for d, k in wanted.items()):
            found.append(word)
    return sorted(found)


class CategoryRegistry:
    """
    Issues codewords for six item categories, category k using conjugate
    #k of one base table. Constant words (i, i, i) belong to every
    conjugate and are never issued. Issued words are appended to an
    optional log, one '<category> <d1><d2><d3>' line each.
    """

    CATEGORY_COUNT = 6

    def __init__(self, table: CheckTable, log_path: Optional[Union[str, Path]] = None) -> None:
        self.table = table
        self.conjugates = conjugate_tables(table)
        self.log_path = Path(log_path) if log_path else None
        self.issued: Dict[Word, int] = {}
        self.replayed_duplicates = 0

    @classmethod
    def load(cls, table: CheckTable, log_path: Union[str, Path]) -> 'CategoryRegistry':
        """
        Replay an existing log (a missing file is an empty log). Repeated
        lines are counted in replayed_duplicates.

        Raises:
            RegistryError: on a malformed line or a word that category k
                could not have issued
        """
        registry = cls(table, log_path)
        path = Path(log_path)
        if not path.exists():
            return registry

        for line_number, line in enumerate(path.read_text(encoding='utf-8').splitlines(), start=1):
            if not line.strip():
                continue
            parts = line.split()
            if len(parts) != 2 or not parts[0].isdigit():
                raise RegistryError(f"{path}:{line_number}: malformed line '{line}'")
            category = int(parts[0])
            is_valid, error = validate_category(category, cls.CATEGORY_COUNT)
            if not is_valid:
                raise RegistryError(f"{path}:{line_number}: {error}")
            try:
                word = Word.from_string(parts[1])
            except ValueError as e:
                raise RegistryError(f"{path}:{line_number}: {e}")
            if not word.is_valid_for(table.base):
                raise RegistryError(f"{path}:{line_number}: {word} has digits outside base {table.base}")

            expected = registry._encode(category, word.d1, word.d3)
            if expected != word or word.to_triple().is_diagonal:
                raise RegistryError(f"{path}:{line_number}: {word} was not issued by category {category}")

            owner = registry.issued.get(word)
            if owner is None:
                registry.issued[word] = category
            elif owner == category:
                registry.replayed_duplicates += 1
            else:
                raise RegistryError(f"{path}:{line_number}: {word} already issued to category {owner}")

        logger.info(f"Replayed {len(registry.issued)} issued words from {path} "
                    f"({registry.replayed_duplicates} duplicates)")
        return registry

    def _encode(self, category: int, r: int, c: int) -> Word:
        return encode(self.conjugates[category], r, c)

    def issue(self, category: int, r: int, c: int) -> IssueRecord:
        """
        Encode (r, c) under conjugate #category and record the word.

        Returns:
            IssueRecord; DUPLICATE when this category already holds the
            word, REJECTED_* without logging otherwise

        Raises:
            RegistryError: for an unknown category
        """
        is_valid, error = validate_category(category, self.CATEGORY_COUNT)
        if not is_valid:
            raise RegistryError(error)

        word = self._encode(category, r, c)
        if word.to_triple().is_diagonal:
            return IssueRecord(category, word, IssueStatus.REJECTED_DIAGONAL)

        owner = self.issued.get(word)
        if owner == category:
            return IssueRecord(category, word, IssueStatus.DUPLICATE)
        if owner is not None:
            logger.warning(f"{word} requested for category {category} but held by category {owner}")
            return IssueRecord(category, word, IssueStatus.REJECTED_TAKEN)

        record = IssueRecord(category, word, IssueStatus.ISSUED)
        if self.log_path:
            with self.log_path.open('a', encoding='utf-8') as log:
                log.write(record.log_line())
        self.issued[word] = category
        logger.info(f"Issued {word} to category {category}")
        return record

    def words_for(self, category: int) -> List[Word]:
        return sorted(w for w, k in self.issued.items() if k == category)


def registry_issue(registry: CategoryRegistry, category: int, r: int, c: int) -> IssueRecord:
    """Issue one word from a registry."""
    return registry.issue(category, r, c)
