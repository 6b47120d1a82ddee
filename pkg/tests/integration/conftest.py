"""
Fixtures and utilities for command-line integration tests.
"""

from typing import NamedTuple

import pytest

from src.cli import main


class CliResult(NamedTuple):
    exit_code: int
    stdout: str
    stderr: str


@pytest.fixture
def run_cli(capsys):
    """Run the CLI in-process and capture its streams."""

    def _run(*argv: str) -> CliResult:
        capsys.readouterr()
        exit_code = main(list(argv))
        captured = capsys.readouterr()
        return CliResult(exit_code, captured.out, captured.err)

    return _run


@pytest.fixture
def table_file(tmp_path):
    """Write table text to a file and return its path."""

    def _write(text: str, name: str = 'table.tbl') -> str:
        path = tmp_path / name
        path.write_text(text)
        return str(path)

    return _write