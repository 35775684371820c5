"""Closed-form bounds on f(n), the primorial threshold, and range verification.

With p the largest prime factor of n and P its radical::

    max(ceil((p-1)/2), n/P) <= f(n) <= max(p-1, n/P)

and every n >= k * primorial(2k) has f(n) >= k.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .arith import Factorization, factorize, primorial_up_to
from .config import get_limits
from .errors import ConsistencyError, DomainError, ResourceError
from .rrs import ApWitness, exact_f

__all__ = [
    "BoundsReport",
    "ThresholdRecord",
    "VerificationSummary",
    "lower_bound",
    "upper_bound",
    "bounds_report",
    "guaranteed_threshold",
    "minimal_threshold",
    "verify_range",
]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class BoundsReport:
    n: int
    largest_prime: int
    radical: int
    lower: int
    upper: int
    exact: int | None = None
    witness: ApWitness | None = None

    @property
    def tight_lower(self) -> bool:
        return self.exact is not None and self.exact == self.lower

    @property
    def tight_upper(self) -> bool:
        return self.exact is not None and self.exact == self.upper


@dataclass(frozen=True)
class ThresholdRecord:
    """``guaranteed = k * primorial`` always; ``minimal`` only after a scan.

    ``minimal`` and ``last_failing`` are this package's empirical extension,
    not part of the guarantee.
    """

    k: int
    primorial: int
    guaranteed: int
    minimal: int | None = None
    last_failing: int | None = None


@dataclass
class VerificationSummary:
    start: int
    stop: int
    checked: int = 0
    tight_lower: list[int] = field(default_factory=list)
    tight_upper: list[int] = field(default_factory=list)
    violations: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: VerificationSummary) -> VerificationSummary:
        """Concatenate a summary for the range right after this one."""
        if other.start != self.stop + 1:
            raise ValueError(f"ranges [{self.start}, {self.stop}] and [{other.start}, {other.stop}] are not adjacent")
        return VerificationSummary(
            self.start,
            other.stop,
            self.checked + other.checked,
            self.tight_lower + other.tight_lower,
            self.tight_upper + other.tight_upper,
            self.violations + other.violations,
        )


def _parts(n: int | Factorization) -> tuple[int, int, int]:
    f = n if isinstance(n, Factorization) else factorize(n)
    P = f.radical
    cofactor, rem = divmod(f.n, P)
    assert rem == 0, f"radical {P} does not divide {f.n}"
    return f.largest_prime, P, cofactor


def lower_bound(n: int | Factorization) -> int:
    p, _, cofactor = _parts(n)
    # ceil((p - 1) / 2) == p // 2 for every integer p >= 1
    return max(p // 2, cofactor)


def upper_bound(n: int | Factorization) -> int:
    p, _, cofactor = _parts(n)
    return max(p - 1, cofactor)


def _sandwich(n: int, with_exact: bool) -> BoundsReport:
    f = factorize(n)
    lower, upper = lower_bound(f), upper_bound(f)
    witness = exact_f(n) if with_exact else None
    return BoundsReport(n, f.largest_prime, f.radical, lower, upper, witness.length if witness else None, witness)


def bounds_report(n: int, with_exact: bool = False) -> BoundsReport:
    """Lower/upper bounds for n, plus f(n) and its witness when asked.

    Raises ConsistencyError if the bounds fail to bracket each other or f(n).
    """
    if n < 2:
        raise DomainError(f"bounds need n >= 2, got {n}")
    report = _sandwich(n, with_exact)
    if report.lower > report.upper or (
        report.exact is not None and not report.lower <= report.exact <= report.upper
    ):
        raise ConsistencyError(f"bounds sandwich violated: {report}")
    return report


def guaranteed_threshold(k: int) -> ThresholdRecord:
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    primorial = primorial_up_to(2 * k).value
    return ThresholdRecord(k, primorial, k * primorial)


def minimal_threshold(k: int) -> ThresholdRecord:
    """Scan n = 2..k*primorial(2k) for the last n with f(n) < k.

    Past the guaranteed threshold nothing can fail, so the scan is exhaustive.
    """
    record = guaranteed_threshold(k)
    limit = get_limits().solver_limit
    if record.guaranteed > limit:
        raise ResourceError(
            f"threshold scan for k={k} needs n up to {record.guaranteed}, solver limit is {limit}"
        )
    last_failing = None
    for n in range(2, record.guaranteed + 1):
        if exact_f(n).length < k:
            last_failing = n
    minimal = 2 if last_failing is None else last_failing + 1
    return ThresholdRecord(k, record.primorial, record.guaranteed, minimal, last_failing)


def _verify_chunk(bounds: tuple[int, int]) -> VerificationSummary:
    start, stop = bounds
    summary = VerificationSummary(start, stop)
    for n in range(start, stop + 1):
        report = _sandwich(n, with_exact=True)
        summary.checked += 1
        if not report.lower <= report.exact <= report.upper:
            summary.violations.append(n)
        if report.tight_lower:
            summary.tight_lower.append(n)
        if report.tight_upper:
            summary.tight_upper.append(n)
    return summary


def verify_range(start: int, stop: int, workers: int = 1, chunk: int = 5000) -> VerificationSummary:
    """Check the sandwich with exact f(n) for every n in ``[start, stop]``.

    Violations are collected rather than raised. With ``workers > 1`` chunks
    run in separate processes and are merged in ascending order.
    """
    if not 2 <= start <= stop:
        raise DomainError(f"need 2 <= start <= stop, got [{start}, {stop}]")
    limit = get_limits().solver_limit
    if stop > limit:
        raise ResourceError(f"range end {stop} exceeds the solver limit {limit}")
    pieces = [(lo, min(lo + chunk - 1, stop)) for lo in range(start, stop + 1, chunk)]
    if workers > 1 and len(pieces) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_verify_chunk, pieces))
    else:
        parts = [_verify_chunk(piece) for piece in pieces]
    summary = parts[0]
    for part in parts[1:]:
        summary = summary.merge(part)
    if summary.violations:
        log.warning("sandwich violations at n=%s", summary.violations[:20])
    return summary
