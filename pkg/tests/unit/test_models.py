"""
Unit tests for data models and settings.
"""

import numpy as np
import pytest

from src.config.settings import Settings, settings
from src.models.check_table import CheckTable, Triple, Word
from src.models.codec import IssueRecord, IssueStatus, PartialWord
from src.models.constraint_model import SearchConfig, SearchOutcome
from src.models.error_class import DetectionReport, ErrorClass
from src.utils.exceptions import TableFormatError


class TestWordAndTriple:
    """Tests for Word and Triple."""

    def test_ordering_is_lexicographic(self):
        assert sorted([Word(3, 0, 2), Word(1, 3, 2)]) == [Word(1, 3, 2), Word(3, 0, 2)]

    def test_from_string_rejects_bad_text(self):
        with pytest.raises(ValueError):
            Word.from_string('12a')

    def test_triple_predicates(self):
        assert Triple(4, 4, 4).is_diagonal
        assert Triple(0, 9, 1).is_three_distinct
        assert not Triple(0, 0, 1).is_three_distinct
        assert str(Triple(0, 9, 1)) == '(091)'


class TestCheckTable:
    """Tests for CheckTable."""

    def test_grid_is_read_only(self, dunning_t3):
        assert dunning_t3.grid.shape == (10, 10)
        with pytest.raises(ValueError):
            dunning_t3.grid[0, 0] = 5

    def test_from_numpy_rows(self):
        table = CheckTable.from_rows(np.arange(16).reshape(4, 4) % 4)
        assert table.base == 4
        assert table.row(1) == (0, 1, 2, 3)

    def test_rejects_wrong_shape(self):
        with pytest.raises(TableFormatError):
            CheckTable(base=4, cells=((0, 1, 2, 3),))

    def test_rejects_out_of_range_cell(self):
        with pytest.raises(TableFormatError):
            CheckTable.from_rows([[0, 1, 2, 4]] * 4)

    def test_name_does_not_affect_equality(self, dunning_t3):
        assert CheckTable(base=10, cells=dunning_t3.cells, name='other') == dunning_t3


class TestReportsAndOutcomes:
    """Tests for DetectionReport, SearchOutcome and IssueRecord."""

    def test_detection_report(self):
        report = DetectionReport(ErrorClass.CYCLIC, 10, [(Word(0, 3, 1), Word(3, 1, 0))], 100)

        assert report.pair_count == 1
        assert report.is_clean is False
        assert report.to_dict()['undetected'] == [[[0, 3, 1], [3, 1, 0]]]

    def test_error_class_flags(self):
        assert ErrorClass.PERMUTATION.has_structural_shortcut
        assert not ErrorClass.CYCLIC.has_structural_shortcut
        assert ErrorClass.PHONETIC_LEFT.is_phonetic

    def test_search_outcome_dict_has_no_timing(self):
        outcome = SearchOutcome(found=False, reason='max-steps', elapsed=1.5)
        assert 'elapsed' not in outcome.to_dict()

    def test_issue_record_log_line(self):
        record = IssueRecord(3, Word(5, 2, 7), IssueStatus.ISSUED)
        assert record.log_line() == '3 527\n'
        assert record.accepted

    def test_partial_word_matches(self):
        partial = PartialWord.of(pos1=7, pos3=2)
        assert partial.as_dict() == {1: 7, 3: 2}
        assert partial.matches(Word(7, 9, 2))
        assert not partial.matches(Word(7, 9, 3))


class TestSettings:
    """Tests for Settings and SearchConfig defaults."""

    def test_search_config_from_settings(self):
        config = SearchConfig.from_settings(seed=5, max_steps=None)

        assert config.seed == 5
        assert config.max_steps == settings.DEFAULT_MAX_STEPS
        assert config.phonetic_range == 'full'
        assert config.validate() == (True, None)

    def test_search_config_validation(self):
        assert SearchConfig(time_budget=0).validate()[0] is False
        assert SearchConfig(phonetic_range='wide').validate()[0] is False

    def test_conjugate_path(self):
        assert Settings.conjugate_path('out/P', 4) == 'out/P_t4.tbl'

    def test_base_limits(self):
        assert Settings.validate_base(10)
        assert not Settings.validate_base(11)
