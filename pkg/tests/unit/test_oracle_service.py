"""
Unit tests for the brute-force oracle and its agreement with the fast paths.
"""

import pytest

from src.models.check_table import CheckTable, Word
from src.models.error_class import ErrorClass
from src.services.error_model_service import detect, structural_check
from src.services.oracle_service import (
    brute_undetected,
    census_histogram,
    enumerate_codewords,
    multiset_census,
)


class TestEnumerateCodewords:
    """Tests for enumerate_codewords."""

    def test_counts(self, dunning_t3, cyclic_table_base4):
        assert len(enumerate_codewords(dunning_t3)) == 100
        assert len(enumerate_codewords(cyclic_table_base4)) == 16

    def test_sorted_and_contains_corner(self, verhoeff_irregular):
        words = enumerate_codewords(verhoeff_irregular)
        assert words == sorted(words)
        assert Word(9, 9, 9) in words


class TestBruteUndetected:
    """Tests for brute_undetected on the published claims."""

    def test_dunning_t3_cyclic(self, dunning_t3):
        assert brute_undetected(dunning_t3, ErrorClass.CYCLIC) == []

    def test_verhoeff_irregular_cyclic(self, verhoeff_irregular):
        assert len(brute_undetected(verhoeff_irregular, ErrorClass.CYCLIC)) == 16

    def test_verhoeff_regular_single(self, verhoeff_regular):
        assert brute_undetected(verhoeff_regular, ErrorClass.SINGLE) == []

    def test_verhoeff_regular_phonetic_right(self, verhoeff_regular):
        pairs = brute_undetected(verhoeff_regular, ErrorClass.PHONETIC_RIGHT)
        assert (Word(1, 3, 2), Word(3, 0, 2)) in pairs
        assert len(pairs) == 4


class TestOracleEquivalence:
    """detect and structural_check must agree with the oracle everywhere."""

    @pytest.mark.parametrize('error_class', list(ErrorClass))
    def test_builtins(self, builtin_tables, error_class):
        for table in builtin_tables:
            for phonetic_range in ('full', 'literal'):
                expected = brute_undetected(table, error_class, phonetic_range)
                assert detect(table, error_class, phonetic_range).undetected == expected, table.name

    @pytest.mark.parametrize('error_class', [c for c in ErrorClass if c is not ErrorClass.TRIPLE])
    def test_random_latin_squares(self, random_latin_squares, error_class):
        for table in random_latin_squares:
            expected = brute_undetected(table, error_class)
            assert detect(table, error_class).undetected == expected, table.name

    @pytest.mark.parametrize('error_class', [c for c in ErrorClass if c.has_structural_shortcut])
    def test_structural_verdicts(self, builtin_tables, random_latin_squares, error_class):
        for table in builtin_tables + random_latin_squares:
            passed, _ = structural_check(table, error_class)
            assert passed == (brute_undetected(table, error_class) == []), table.name

    def test_structural_verdicts_on_non_latin_table(self):
        table = CheckTable.from_rows([[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 2, 0]], name='broken')
        for error_class in (c for c in ErrorClass if c.has_structural_shortcut):
            passed, _ = structural_check(table, error_class)
            assert passed == (brute_undetected(table, error_class) == []), error_class


class TestMultisetCensus:
    """Tests for multiset_census and census_histogram."""

    def test_dunning_t3_all_multiplicities_one(self, dunning_t3):
        census = multiset_census(dunning_t3)

        assert len(census) == 100
        assert census_histogram(census) == {1: 100}

    def test_reversed_word_doubles_a_multiset(self):
        # contains (0,1,2) and (2,1,0)
        table = CheckTable.from_rows([[0, 3, 1, 2], [3, 1, 2, 0], [1, 2, 0, 3], [2, 0, 3, 1]])
        census = multiset_census(table)

        assert census[(0, 1, 2)] == 2

    def test_diagonal_multiplicity_at_most_one(self, random_latin_squares):
        for table in random_latin_squares:
            census = multiset_census(table)
            assert all(census.get((i, i, i), 0) <= 1 for i in range(10))
