"""Resource-guard behavior."""
from __future__ import annotations

import pytest

from apolarium.guards import (
    DEFAULT_MAX_DEGREE,
    Limits,
    LimitExceeded,
    check_degree,
    check_entries,
    check_terms,
)


def test_checks_pass_below_limits():
    check_entries(10, 10)
    check_terms(0, 5)
    check_degree(DEFAULT_MAX_DEGREE)


def test_checks_raise_above_limits():
    with pytest.raises(LimitExceeded):
        check_entries(11, 10)
    with pytest.raises(LimitExceeded):
        check_terms(6, 5)
    with pytest.raises(LimitExceeded):
        check_degree(DEFAULT_MAX_DEGREE + 1)


def test_entry_limit_from_environment(monkeypatch):
    monkeypatch.setenv("APOLARIUM_MAX_ENTRIES", "42")
    assert Limits.from_env().max_entries == 42
    with pytest.raises(LimitExceeded):
        check_entries(43)
    monkeypatch.delenv("APOLARIUM_MAX_ENTRIES")
    check_entries(43)
