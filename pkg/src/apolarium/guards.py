"""Resource guards shared by the library and the CLI.

Limits keep the exact-arithmetic computations at desk scale.  The entry
guard can be overridden with the APOLARIUM_MAX_ENTRIES environment variable
or per call; the CLI exposes all three as flags.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

DEFAULT_MAX_TERMS = 10 ** 6
DEFAULT_MAX_ENTRIES = 10 ** 7
DEFAULT_MAX_DEGREE = 24


class LimitExceeded(RuntimeError):
    """A computation would exceed a configured resource limit."""


@dataclass
class Limits:
    max_terms: int = DEFAULT_MAX_TERMS
    max_entries: int = DEFAULT_MAX_ENTRIES
    max_degree: int = DEFAULT_MAX_DEGREE

    @classmethod
    def from_env(cls) -> "Limits":
        lim = cls()
        env = os.environ.get("APOLARIUM_MAX_ENTRIES")
        if env is not None:
            lim.max_entries = int(env)
        return lim


def check_entries(count: int, limit: int | None = None) -> None:
    cap = limit if limit is not None else Limits.from_env().max_entries
    if count > cap:
        raise LimitExceeded(f"entry count {count} exceeds limit {cap}")


def check_terms(count: int, limit: int | None = None) -> None:
    cap = limit if limit is not None else DEFAULT_MAX_TERMS
    if count > cap:
        raise LimitExceeded(f"term count {count} exceeds limit {cap}")


def check_degree(d: int, limit: int | None = None) -> None:
    cap = limit if limit is not None else DEFAULT_MAX_DEGREE
    if d > cap:
        raise LimitExceeded(f"degree {d} exceeds limit {cap}")
