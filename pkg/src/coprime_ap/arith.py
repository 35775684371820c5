"""Integer arithmetic substrate: sieving, factorization, radicals, primorials.

Factorizations below ``Limits.sieve_limit`` come from a smallest-prime-factor
table that is built once and grown on demand; larger inputs fall back to trial
division. Everything here is pure once the table exists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

import numpy as np

from .config import get_limits
from .errors import ConsistencyError, DomainError, ResourceError

__all__ = [
    "Factorization",
    "Primorial",
    "SpfSieve",
    "smallest_prime_factor_sieve",
    "factorize",
    "factorize_trial",
    "largest_prime_factor",
    "radical",
    "totient",
    "is_prime",
    "primes_up_to",
    "primorial_up_to",
]


@dataclass(frozen=True)
class Factorization:
    """Prime-power decomposition ``n = prod(p**e)`` with primes ascending."""

    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    @property
    def largest_prime(self) -> int:
        return self.factors[-1][0]

    @cached_property
    def radical(self) -> int:
        return math.prod(self.primes)

    @property
    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.factors)

    @property
    def is_prime_power(self) -> bool:
        return len(self.factors) == 1

    @property
    def totient(self) -> int:
        phi = 1
        for p, e in self.factors:
            phi *= (p - 1) * p ** (e - 1)
        return phi

    def check(self) -> None:
        """Raise ConsistencyError unless every structural invariant holds."""
        if not self.factors:
            raise ConsistencyError(f"empty factorization for {self.n}")
        prev = 1
        for p, e in self.factors:
            if p <= prev or e < 1 or not is_prime(p):
                raise ConsistencyError(f"bad factor ({p}, {e}) in {self}")
            prev = p
        if math.prod(p**e for p, e in self.factors) != self.n:
            raise ConsistencyError(f"factors do not multiply to {self.n}")


@dataclass(frozen=True)
class Primorial:
    """Product of all primes not exceeding ``bound``."""

    bound: int
    value: int


class SpfSieve:
    """Immutable table of smallest prime factors for ``2 <= m <= limit``."""

    def __init__(self, limit: int):
        if limit < 2:
            raise DomainError(f"sieve limit must be >= 2, got {limit}")
        budget = get_limits().sieve_memory_budget
        if 4 * (limit + 1) > budget:
            raise ResourceError(
                f"sieve up to {limit} needs {4 * (limit + 1)} bytes, budget is {budget}"
            )
        spf = np.zeros(limit + 1, dtype=np.int32)
        spf[2::2] = 2
        for p in range(3, math.isqrt(limit) + 1, 2):
            if spf[p] == 0:
                block = spf[p * p :: 2 * p]
                block[block == 0] = p
        odd = spf[3::2]
        odd[odd == 0] = np.arange(3, limit + 1, 2, dtype=np.int32)[odd == 0]
        spf.flags.writeable = False
        self.limit = limit
        self.table = spf

    def __getitem__(self, m: int) -> int:
        if not 2 <= m <= self.limit:
            raise DomainError(f"{m} outside sieve range [2, {self.limit}]")
        return int(self.table[m])

    def factorize(self, n: int) -> list[tuple[int, int]]:
        table = self.table
        factors = []
        while n > 1:
            p = int(table[n])
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
        return factors


def smallest_prime_factor_sieve(limit: int) -> SpfSieve:
    return SpfSieve(limit)


_shared_sieve: SpfSieve | None = None


def _sieve_for(n: int) -> SpfSieve | None:
    """Shared sieve covering n, grown geometrically; None if n is past the limit."""
    global _shared_sieve
    cap = get_limits().sieve_limit
    if n > cap:
        return None
    if _shared_sieve is None or _shared_sieve.limit < n:
        size = max(1 << 16, 1 << (n - 1).bit_length())
        _shared_sieve = SpfSieve(min(size, cap))
    return _shared_sieve


def factorize_trial(n: int) -> Factorization:
    """Trial-division factorization; used above the sieve and as a cross-check."""
    if n < 2:
        raise DomainError(f"cannot factorize {n}")
    original = n
    factors = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
    p, step = 5, 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            factors.append((p, e))
        p += step
        step = 6 - step
    if n > 1:
        factors.append((n, 1))
    return Factorization(original, tuple(factors))


def factorize(n: int) -> Factorization:
    """Factorize ``n`` via the shared sieve, or trial division above it."""
    if n < 2:
        raise DomainError(f"factorize needs n >= 2, got {n}")
    if n > get_limits().factor_limit:
        raise DomainError(f"{n} exceeds the factorization limit {get_limits().factor_limit}")
    sieve = _sieve_for(n)
    if sieve is None:
        return factorize_trial(n)
    return Factorization(n, tuple(sieve.factorize(n)))


def largest_prime_factor(f: Factorization) -> int:
    return f.largest_prime


def radical(f: Factorization) -> int:
    return f.radical


def totient(n: int) -> int:
    return factorize(n).totient


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    sieve = _sieve_for(n)
    if sieve is not None:
        return sieve[n] == n
    return factorize_trial(n).factors[0] == (n, 1)


def primes_up_to(x: int) -> list[int]:
    """All primes ``<= x`` by a plain Eratosthenes bitmap."""
    if x < 2:
        return []
    flags = np.ones(x + 1, dtype=bool)
    flags[:2] = False
    flags[4::2] = False
    for p in range(3, math.isqrt(x) + 1, 2):
        if flags[p]:
            flags[p * p :: 2 * p] = False
    return np.flatnonzero(flags).tolist()


def iter_prime_powers(limit: int, min_exponent: int = 1) -> Iterator[tuple[int, int, int]]:
    """Yield ``(p, r, p**r)`` for every prime power up to limit, r >= min_exponent."""
    for p in primes_up_to(limit):
        r, q = 1, p
        while q <= limit:
            if r >= min_exponent:
                yield p, r, q
            r += 1
            q *= p


def primorial_up_to(x: int) -> Primorial:
    if x < 2:
        raise DomainError(f"primorial needs x >= 2, got {x}")
    return Primorial(x, math.prod(primes_up_to(x)))
