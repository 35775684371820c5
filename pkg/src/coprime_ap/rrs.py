"""Reduced residue systems and the arithmetic progressions they contain.

``f(n)`` is the largest ``s`` such that ``a, a+q, ..., a+(s-1)q`` all lie in
``A(n) = {1 <= a < n : gcd(a, n) = 1}``. Progressions are increasing and never
wrap around modulo ``n``; a single element counts as a progression of length 1.

Two independent routes compute it:

* :func:`exact_f`, a pruned search over common differences built on the
  coprimality mask, and
* :func:`brute_force_f`, a direct enumeration over ``math.gcd`` that shares no
  code with the first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .arith import Factorization, factorize, is_prime
from .config import get_limits
from .errors import ConsistencyError, DomainError, ResourceError

__all__ = [
    "ApWitness",
    "ResidueSystem",
    "residue_system",
    "validate_witness",
    "longest_run_with_difference",
    "difference_cap",
    "brute_force_f",
    "exact_f",
    "witness_prime_power",
    "witness_squarefree",
    "witness_general",
    "complete_residue_check",
]


@dataclass(frozen=True)
class ApWitness:
    """The progression ``first + m*difference`` for ``0 <= m < length`` inside A(n)."""

    n: int
    first: int
    difference: int
    length: int

    def __post_init__(self) -> None:
        if self.length == 1 and self.difference != 1:
            object.__setattr__(self, "difference", 1)

    @property
    def last(self) -> int:
        return self.first + (self.length - 1) * self.difference

    def terms(self) -> list[int]:
        return [self.first + m * self.difference for m in range(self.length)]

    def as_triple(self) -> tuple[int, int, int]:
        return self.first, self.difference, self.length

    def lifted(self, n: int) -> ApWitness:
        """Same progression read inside A(n); valid when n shares this modulus' primes."""
        return ApWitness(n, self.first, self.difference, self.length)


def validate_witness(w: ApWitness) -> None:
    """Check a witness from scratch with ``math.gcd``; raises ConsistencyError."""
    if w.n < 2:
        raise ConsistencyError(f"modulus {w.n} < 2 in {w}")
    if w.length < 1 or w.first < 1 or w.difference < 1:
        raise ConsistencyError(f"non-positive field in {w}")
    if w.length == 1 and w.difference != 1:
        raise ConsistencyError(f"length-1 witness must have difference 1: {w}")
    if w.last >= w.n:
        raise ConsistencyError(f"last term {w.last} not below {w.n} in {w}")
    for a in range(w.first, w.last + 1, w.difference):
        if math.gcd(a, w.n) != 1:
            raise ConsistencyError(f"term {a} shares a factor with {w.n} in {w}")


@dataclass(frozen=True, eq=False)
class ResidueSystem:
    """A(n) as a boolean mask over ``0..n-1`` (index 0 always False)."""

    n: int
    mask: np.ndarray
    factorization: Factorization

    @cached_property
    def elements(self) -> list[int]:
        return np.flatnonzero(self.mask).tolist()

    def __contains__(self, a: int) -> bool:
        return 0 < a < self.n and bool(self.mask[a])

    def __len__(self) -> int:
        return int(np.count_nonzero(self.mask))


def residue_system(n: int, factorization: Factorization | None = None) -> ResidueSystem:
    if n < 2:
        raise DomainError(f"A(n) needs n >= 2, got {n}")
    f = factorization if factorization is not None else factorize(n)
    mask = np.ones(n, dtype=bool)
    mask[0] = False
    for p in f.primes:
        mask[::p] = False
    mask.flags.writeable = False
    return ResidueSystem(n, mask, f)


def longest_run_with_difference(rs: ResidueSystem, q: int) -> ApWitness:
    """Longest progression in A(n) with common difference exactly ``q``.

    Ties go to the smallest first term. Each residue class mod q becomes one
    row of a (q, rows+1) matrix whose padding column is False, so flattening it
    lays every class end to end with a separator and one gap search finds every
    maximal run at once.
    """
    n = rs.n
    if not 1 <= q <= max(n - 1, 1):
        raise DomainError(f"difference {q} outside [1, {n - 1}]")
    rows = -(-n // q)
    padded = np.zeros((rows + 1) * q, dtype=bool)
    padded[:n] = rs.mask
    seq = padded.reshape(rows + 1, q).T.ravel()
    breaks = np.flatnonzero(~seq)
    gaps = np.diff(breaks) - 1
    length = int(gaps.max())
    starts = breaks[np.flatnonzero(gaps == length)] + 1
    residue, row = np.divmod(starts, rows + 1)
    first = int((row * q + residue).min())
    return ApWitness(n, first, q, length)


def difference_cap(n: int, primes: tuple[int, ...], q: int) -> int:
    """Upper bound on any run with difference q in A(n).

    Geometry caps it at ``(n-2)//q + 1``. Any prime p of n not dividing q sees
    p consecutive terms cover every residue mod p, so one of them is a multiple
    of p and runs stop at ``p - 1``.
    """
    cap = (n - 2) // q + 1
    for p in primes:
        if q % p and p - 1 < cap:
            cap = p - 1
    return cap


def exact_f(n: int) -> ApWitness:
    """A witness of maximal length, so ``exact_f(n).length == f(n)``.

    Starts from :func:`witness_general` and only replaces the incumbent on a
    strictly longer run. A difference q can win only if ``difference_cap``
    exceeds the incumbent; in particular every prime p of n with
    ``p - 1 <= best`` must divide q, so candidates step through multiples of
    the product of those primes.
    """
    limit = get_limits().solver_limit
    if n < 2:
        raise DomainError(f"f(n) needs n >= 2, got {n}")
    if n > limit:
        raise ResourceError(f"n={n} exceeds the solver limit {limit}")
    f = factorize(n)
    best = witness_general(n, f)
    primes = f.primes
    rs = None
    q = 1
    while q <= (n - 2) // best.length:
        step = math.prod(p for p in primes if p - 1 <= best.length)
        q = -(-q // step) * step
        if q > (n - 2) // best.length:
            break
        if difference_cap(n, primes, q) > best.length:
            if rs is None:
                rs = residue_system(n, f)
            run = longest_run_with_difference(rs, q)
            if run.length > best.length:
                best = run
        q += 1
    return best


def brute_force_f(n: int) -> ApWitness:
    """Definitional oracle: try every (first, difference) pair in A(n).

    Pairs whose predecessor ``first - q`` is also coprime are skipped since
    they only reproduce the tail of a run already counted.
    """
    limit = get_limits().oracle_limit
    if n < 2:
        raise DomainError(f"f(n) needs n >= 2, got {n}")
    if n > limit:
        raise DomainError(f"n={n} exceeds the oracle limit {limit}")
    coprime = [False] + [math.gcd(a, n) == 1 for a in range(1, n)]
    best = (1, 1, 1)
    for a in range(1, n):
        if not coprime[a]:
            continue
        for q in range(1, n - a):
            if a - q >= 1 and coprime[a - q]:
                continue
            s = 1
            while a + s * q < n and coprime[a + s * q]:
                s += 1
            if s > best[2]:
                best = (a, q, s)
    return ApWitness(n, *best)


def witness_prime_power(p: int, r: int) -> ApWitness:
    if r < 1:
        raise DomainError(f"exponent must be >= 1, got {r}")
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    n = p**r
    if n > get_limits().solver_limit:
        raise ResourceError(f"{p}^{r} exceeds the solver limit")
    if r == 1:
        return ApWitness(n, 1, 1, p - 1)
    return ApWitness(n, 1, p, p ** (r - 1))


def witness_squarefree(f: Factorization | int) -> ApWitness:
    """Split ``1, 1+q, ..., 1+(p-1)q`` with ``q = n/p`` around its one multiple of p.

    p is the largest prime of n. The p terms hit every residue mod p once, so
    exactly one of them is excluded and the longer side (left on ties) has at
    least ``ceil((p-1)/2)`` terms.
    """
    if isinstance(f, int):
        f = factorize(f)
    if not f.is_squarefree or len(f.factors) < 2:
        raise DomainError(f"{f.n} is not squarefree with at least two prime factors")
    p = f.largest_prime
    q = f.n // p
    hit = (-pow(q, -1, p)) % p
    left, right = hit, p - 1 - hit
    if left >= right:
        return ApWitness(f.n, 1, q, left)
    return ApWitness(f.n, 1 + (hit + 1) * q, q, right)


def witness_general(n: int, f: Factorization | None = None) -> ApWitness:
    """Best of the two explicit constructions for any n.

    Prime powers use :func:`witness_prime_power`. Otherwise compare
    ``1, 1+P, ...`` with P the radical (length n/P) against the squarefree
    witness of P, which stays inside A(n) because coprimality to n only
    depends on the primes of n. Ties keep the radical-step progression.
    """
    if f is None:
        f = factorize(n)
    if f.is_prime_power:
        p, r = f.factors[0]
        return witness_prime_power(p, r)
    P = f.radical
    stepped = ApWitness(n, 1, P, n // P)
    kernel = witness_squarefree(Factorization(P, tuple((p, 1) for p in f.primes)))
    if kernel.length > stepped.length:
        return kernel.lifted(n)
    return stepped


def complete_residue_check(q: int, p: int) -> bool:
    """Do ``1 + m*q`` for ``0 <= m < p`` meet every residue class mod p?"""
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if math.gcd(q, p) != 1:
        raise DomainError(f"gcd({q}, {p}) != 1")
    return len({(1 + m * q) % p for m in range(p)}) == p
