"""
Unit tests for table parsing, serialization, triple systems and structural profiles.
"""

import pytest

from src.models.builtin_tables import BUILTIN_TABLE_TEXT
from src.models.check_table import CheckTable, Triple, TripleSystem, Word
from src.services.table_service import (
    builtin_table,
    combination_index,
    load_table,
    parse_table,
    require_latin,
    save_table,
    serialize_table,
    structural_profile,
    to_table,
    to_triples,
)
from src.utils.exceptions import NotLatinError, TableFormatError, UnknownTableError


BASE4_TEXT = "base 4\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n"


class TestParseTable:
    """Tests for parse_table."""

    def test_parses_base_directive_and_rows(self):
        table = parse_table(BASE4_TEXT, name='z4')

        assert table.base == 4
        assert table.cell(1, 3) == 0
        assert table.name == 'z4'

    def test_comments_and_blank_lines_ignored(self):
        text = "# cyclic group\n\nbase 4\n# rows follow\n" + BASE4_TEXT.split('\n', 1)[1]
        assert parse_table(text).cells == parse_table(BASE4_TEXT).cells

    def test_default_base_is_ten(self, dunning_t3):
        body = BUILTIN_TABLE_TEXT['dunning-t3'].split('\n', 1)[1]
        assert parse_table(body).cells == dunning_t3.cells

    def test_short_row_reports_line_number(self):
        text = "base 4\n0 1 2 3\n1 2 3\n2 3 0 1\n3 0 1 2\n"
        with pytest.raises(TableFormatError) as exc_info:
            parse_table(text)
        assert exc_info.value.line_number == 3
        assert 'row length' in str(exc_info.value)

    def test_digit_out_of_range(self):
        text = "base 4\n0 1 2 3\n1 2 3 0\n2 3 0 7\n3 0 1 2\n"
        with pytest.raises(TableFormatError) as exc_info:
            parse_table(text)
        assert exc_info.value.line_number == 4

    def test_non_digit_token(self):
        text = "base 4\n0 1 2 3\n1 2 x 0\n2 3 0 1\n3 0 1 2\n"
        with pytest.raises(TableFormatError):
            parse_table(text)

    @pytest.mark.parametrize('token', ['²', '٠', '３'])
    def test_non_ascii_digit_rejected_with_line_number(self, token):
        text = f"base 4\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 2 1 {token}\n"
        with pytest.raises(TableFormatError) as exc_info:
            parse_table(text)
        assert exc_info.value.line_number == 5

    def test_non_ascii_base_rejected(self):
        with pytest.raises(TableFormatError) as exc_info:
            parse_table("base ٤\n")
        assert exc_info.value.line_number == 1

    def test_unknown_directive(self):
        with pytest.raises(TableFormatError) as exc_info:
            parse_table("size 4\n")
        assert 'unknown directive' in str(exc_info.value)

    def test_wrong_row_count(self):
        with pytest.raises(TableFormatError) as exc_info:
            parse_table("base 4\n0 1 2 3\n1 2 3 0\n")
        assert 'row count' in str(exc_info.value)

    def test_unsupported_base(self):
        with pytest.raises(TableFormatError):
            parse_table("base 3\n0 1 2\n1 2 0\n2 0 1\n")

    def test_non_latin_table_is_accepted(self):
        table = parse_table("base 4\n0 0 0 0\n0 0 0 0\n0 0 0 0\n0 0 0 0\n")
        assert structural_profile(table).is_latin is False


class TestSerialization:
    """Tests for serialize_table, load_table and save_table."""

    @pytest.mark.parametrize('name', sorted(BUILTIN_TABLE_TEXT))
    def test_builtin_text_is_canonical(self, name):
        # the embedded constants are exactly the canonical serialization
        assert serialize_table(builtin_table(name)) == BUILTIN_TABLE_TEXT[name]

    @pytest.mark.parametrize('name', sorted(BUILTIN_TABLE_TEXT))
    def test_builtin_rows_and_columns_sum_to_45(self, name):
        table = builtin_table(name)
        assert all(sum(table.row(r)) == 45 for r in range(10))
        assert all(sum(table.column(c)) == 45 for c in range(10))

    def test_published_cells(self, dunning_t3, verhoeff_regular, verhoeff_irregular):
        assert dunning_t3.row(7) == (4, 2, 9, 5, 8, 1, 0, 7, 3, 6)
        assert dunning_t3.row(9) == (7, 6, 4, 2, 1, 8, 5, 3, 0, 9)
        assert verhoeff_regular.cell(3, 2) == 0
        assert verhoeff_irregular.cell(9, 9) == 9

    def test_save_and_load(self, tmp_path, dunning_t3):
        path = tmp_path / 'code.tbl'
        save_table(dunning_t3, path)

        loaded = load_table(path)

        assert loaded == dunning_t3
        assert loaded.name == 'code'
        assert path.read_text() == BUILTIN_TABLE_TEXT['dunning-t3']

    def test_load_missing_file(self, tmp_path):
        with pytest.raises(OSError):
            load_table(tmp_path / 'missing.tbl')


class TestBuiltinTable:
    """Tests for builtin_table."""

    def test_unknown_name(self):
        with pytest.raises(UnknownTableError):
            builtin_table('damm')

    def test_builtins_are_latin(self, builtin_tables):
        for table in builtin_tables:
            require_latin(table)


class TestTripleSystem:
    """Tests for to_triples, to_table and combination_index."""

    def test_dunning_t3_triple_counts(self, dunning_t3):
        system = to_triples(dunning_t3)

        assert len(system) == 100
        assert len(system.diagonal) == 10
        assert len(system.non_diagonal) == 90
        assert not system.degenerate
        assert all(t.is_three_distinct for t in system.non_diagonal)

    def test_dunning_t3_realizes_90_distinct_subsets(self, dunning_t3):
        index = combination_index(to_triples(dunning_t3))

        assert len(index) == 120
        assert index.occupied_count == 90
        assert index.is_unique

    def test_verhoeff_irregular_subset_collision(self, verhoeff_irregular):
        index = combination_index(to_triples(verhoeff_irregular))

        assert not index.is_unique
        assert (0, 1, 3) in index.collisions()

    def test_to_table_inverts_to_triples(self, builtin_tables):
        for table in builtin_tables:
            assert to_table(to_triples(table)).cells == table.cells

    def test_to_table_rejects_double_cover(self, dunning_t3):
        triples = set(to_triples(dunning_t3).triples)
        triples.discard(Triple(0, 9, 1))
        triples.add(Triple(0, 5, 2))
        with pytest.raises(NotLatinError) as exc_info:
            to_table(TripleSystem(base=10, triples=frozenset(triples)))
        witnesses = exc_info.value.witnesses
        assert (0, 1, ()) in witnesses
        assert (0, 2, (5, 7)) in witnesses

    def test_codewords_match_triples(self, dunning_t3):
        words = set(dunning_t3.codewords())
        assert Word(0, 9, 1) in words
        assert {t.to_word() for t in to_triples(dunning_t3).triples} == words


class TestStructuralProfile:
    """Tests for structural_profile and require_latin."""

    def test_dunning_t3_passes_every_criterion(self, dunning_t3):
        flags = structural_profile(dunning_t3).pass_flags()
        assert all(flags.values()), flags

    def test_cyclic_base4_profile(self, cyclic_table_base4):
        profile = structural_profile(cyclic_table_base4)

        assert profile.is_latin
        # cell(r, c) = r + c is symmetric
        assert profile.asymmetric_off_diagonal is False
        # cell(0, c) = c: row 0 is all fixed points
        assert profile.row_fixed_point_counts[0] == 4
        assert profile.diagonal_is_permutation is False

    def test_require_latin_witnesses(self):
        table = CheckTable.from_rows([[0, 1, 2, 3], [1, 2, 3, 0], [2, 3, 0, 1], [3, 0, 1, 1]])
        with pytest.raises(NotLatinError) as exc_info:
            require_latin(table)
        assert ('row', 3) in exc_info.value.witnesses
        assert ('column', 3) in exc_info.value.witnesses


def _row_pair_cycle_lengths(table: CheckTable, a: int, b: int) -> set:
    """Cycle lengths of the symbol map row a -> row b (column-wise)."""
    step = {table.cell(a, c): table.cell(b, c) for c in range(table.base)}
    lengths, seen = set(), set()
    for start in step:
        if start in seen:
            continue
        length, x = 0, start
        while x not in seen:
            seen.add(x)
            x = step[x]
            length += 1
        lengths.add(length)
    return lengths


class TestLatinSquareFixtures:
    """The seeded squares used by the oracle comparisons."""

    def test_all_latin(self, random_latin_squares):
        assert all(structural_profile(t).is_latin for t in random_latin_squares)

    def test_isotopes_have_uniform_row_cycles(self, random_latin_squares):
        for table in random_latin_squares[:10]:
            assert all(len(_row_pair_cycle_lengths(table, 0, b)) == 1 for b in range(1, 10)), table.name

    def test_backtracked_squares_leave_the_cyclic_class(self, random_latin_squares):
        # group isotopes map any row onto any other with equal-length cycles
        backtracked = random_latin_squares[10:]
        assert any(
            len(_row_pair_cycle_lengths(table, a, b)) > 1
            for table in backtracked
            for a in range(10)
            for b in range(a + 1, 10)
        )
