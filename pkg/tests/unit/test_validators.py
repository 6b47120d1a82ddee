"""
Unit tests for validators module.
"""

import pytest

from src.models.error_class import ErrorClass
from src.utils.validators import (
    parse_class_list,
    validate_base,
    validate_category,
    validate_digit,
    validate_p01,
    validate_p29,
    validate_phonetic_range,
    validate_position,
    validate_table_name,
)


class TestValidateBase:
    """Tests for validate_base function."""

    @pytest.mark.parametrize('base', [4, 8, 10])
    def test_valid(self, base):
        is_valid, error = validate_base(base)
        assert is_valid is True
        assert error is None

    @pytest.mark.parametrize('base', [3, 11, 0, -1])
    def test_out_of_range(self, base):
        is_valid, error = validate_base(base)
        assert is_valid is False
        assert 'not supported' in error

    def test_not_an_integer(self):
        is_valid, error = validate_base('10')
        assert is_valid is False
        assert 'integer' in error.lower()

    def test_bool_rejected(self):
        is_valid, _ = validate_base(True)
        assert is_valid is False


class TestValidateDigit:
    """Tests for validate_digit function."""

    def test_valid(self):
        assert validate_digit(9, 10) == (True, None)

    def test_out_of_range(self):
        is_valid, error = validate_digit(4, 4)
        assert is_valid is False
        assert 'out of range' in error

    def test_negative(self):
        is_valid, _ = validate_digit(-1, 10)
        assert is_valid is False


class TestValidatePosition:
    """Tests for validate_position function."""

    @pytest.mark.parametrize('position', [1, 2, 3])
    def test_valid(self, position):
        assert validate_position(position) == (True, None)

    @pytest.mark.parametrize('position', [0, 4, '1'])
    def test_invalid(self, position):
        is_valid, _ = validate_position(position)
        assert is_valid is False


class TestValidateTableName:
    """Tests for validate_table_name function."""

    def test_known(self):
        assert validate_table_name('dunning-t3') == (True, None)

    def test_unknown_lists_known_tables(self):
        is_valid, error = validate_table_name('luhn')
        assert is_valid is False
        assert 'verhoeff-regular' in error

    def test_empty(self):
        is_valid, error = validate_table_name('')
        assert is_valid is False
        assert 'required' in error.lower()


class TestValidateCategory:
    """Tests for validate_category function."""

    def test_valid(self):
        assert validate_category(5) == (True, None)

    @pytest.mark.parametrize('category', [6, -1, 'a', None])
    def test_invalid(self, category):
        is_valid, _ = validate_category(category)
        assert is_valid is False


class TestRelabelingParts:
    """Tests for validate_p01 and validate_p29."""

    @pytest.mark.parametrize('text', ['identity', '01', '10'])
    def test_p01_valid(self, text):
        assert validate_p01(text) == (True, None)

    def test_p01_invalid(self):
        is_valid, _ = validate_p01('02')
        assert is_valid is False

    def test_p29_valid(self):
        assert validate_p29('98765432') == (True, None)
        assert validate_p29('identity') == (True, None)
        assert validate_p29('324567', base=8) == (True, None)

    def test_p29_wrong_digits(self):
        is_valid, error = validate_p29('12345678')
        assert is_valid is False
        assert 'rearrangement' in error

    def test_p29_not_digits(self):
        is_valid, _ = validate_p29('abcdefgh')
        assert is_valid is False


class TestPhoneticRangeAndClasses:
    """Tests for validate_phonetic_range and parse_class_list."""

    def test_phonetic_range(self):
        assert validate_phonetic_range('full') == (True, None)
        assert validate_phonetic_range('literal') == (True, None)
        assert validate_phonetic_range('wide')[0] is False

    def test_all_classes_by_default(self):
        is_valid, classes, error = parse_class_list(None)
        assert is_valid is True
        assert classes == list(ErrorClass)
        assert error is None

    def test_comma_separated(self):
        is_valid, classes, _ = parse_class_list('phonetic-right, single,single')
        assert is_valid is True
        assert classes == [ErrorClass.PHONETIC_RIGHT, ErrorClass.SINGLE]

    def test_unknown_class(self):
        is_valid, classes, error = parse_class_list('single,quadruple')
        assert is_valid is False
        assert classes == []
        assert 'quadruple' in error
