"""Tunable limits. Logic reads these instead of hard-coding sizes."""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Limits:
    # largest n answered from the smallest-prime-factor table
    sieve_limit: int = 10**7
    # bytes the spf table may occupy (int32 entries)
    sieve_memory_budget: int = 64 * 2**20
    # trial division beyond the sieve stays cheap below this
    factor_limit: int = 10**12
    oracle_limit: int = 2000
    solver_limit: int = 10**7


LIMITS = Limits()


def set_limits(**changes: int) -> Limits:
    """Replace the process-wide limits; returns the previous value."""
    global LIMITS
    previous = LIMITS
    LIMITS = replace(LIMITS, **changes)
    return previous


def get_limits() -> Limits:
    return LIMITS
