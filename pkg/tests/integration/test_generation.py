"""
Full base-10 generation. Slow: run with `pytest -m slow`.
"""

import pytest

from src.models.constraint_model import SearchConfig
from src.services.error_model_service import full_report, suite_passes
from src.services.generator_service import build_model, check_assignment, solve, solve_parallel
from src.services.table_service import serialize_table


SEEDS = list(range(1, 9))


@pytest.mark.slow
class TestGeneration:
    """Search for a permutation-free, phonetic-free decimal table."""

    def test_some_seed_finds_a_valid_table(self):
        model = build_model(10)
        outcome = solve_parallel(model, SearchConfig(time_budget=600.0, max_steps=50_000_000), SEEDS)

        assert outcome.found, outcome.to_dict()
        satisfied, violations = check_assignment(model, outcome.table)
        assert satisfied, violations
        assert suite_passes(full_report(outcome.table))

    def test_single_seed_is_deterministic(self):
        model = build_model(10)
        config = SearchConfig(seed=1, time_budget=600.0, max_steps=2_000_000)

        first = solve(model, config)
        second = solve(model, config)

        assert first.to_dict() == second.to_dict()
        if first.found:
            assert serialize_table(first.table) == serialize_table(second.table)
