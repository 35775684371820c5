import math

import pytest
from hypothesis import given, strategies as st

from coprime_ap.arith import (
    Factorization,
    factorize,
    factorize_trial,
    is_prime,
    iter_prime_powers,
    largest_prime_factor,
    primes_up_to,
    primorial_up_to,
    radical,
    smallest_prime_factor_sieve,
)
from coprime_ap.config import set_limits
from coprime_ap.errors import DomainError, ResourceError


@pytest.mark.parametrize(
    "n, factors",
    [(12, ((2, 2), (3, 1))), (13, ((13, 1),)), (360, ((2, 3), (3, 2), (5, 1)))],
)
def test_factorize_examples(n, factors):
    assert factorize(n).factors == factors


@pytest.mark.parametrize("n, p", [(12, 3), (97, 97), (16, 2)])
def test_largest_prime_factor(n, p):
    assert largest_prime_factor(factorize(n)) == p


@pytest.mark.parametrize("n, P", [(12, 6), (16, 2), (30, 30)])
def test_radical(n, P):
    assert radical(factorize(n)) == P


@pytest.mark.parametrize("x, value", [(2, 2), (6, 30), (10, 210)])
def test_primorial_examples(x, value):
    pr = primorial_up_to(x)
    assert (pr.bound, pr.value) == (x, value)


def test_spf_examples():
    assert smallest_prime_factor_sieve(10)[9] == 3
    assert smallest_prime_factor_sieve(10)[7] == 7
    assert smallest_prime_factor_sieve(100)[91] == 7


def test_spf_matches_definition():
    sieve = smallest_prime_factor_sieve(5000)
    for m in range(2, 5001):
        assert sieve[m] == next(d for d in range(2, m + 1) if m % d == 0)


@pytest.mark.parametrize("bad", [0, 1, -7])
def test_factorize_rejects_small(bad):
    with pytest.raises(DomainError):
        factorize(bad)


def test_factorize_rejects_above_limit():
    old = set_limits(factor_limit=1000)
    try:
        with pytest.raises(DomainError):
            factorize(1001)
    finally:
        set_limits(**old.__dict__)


def test_primorial_rejects_small():
    with pytest.raises(DomainError):
        primorial_up_to(1)


def test_sieve_memory_budget():
    old = set_limits(sieve_memory_budget=1024)
    try:
        with pytest.raises(ResourceError):
            smallest_prime_factor_sieve(10_000)
    finally:
        set_limits(**old.__dict__)


def test_reconstruction_and_invariants_to_1e4():
    for n in range(2, 10_001):
        f = factorize(n)
        f.check()
        assert math.prod(p**e for p, e in f.factors) == n


def test_sieve_agrees_with_trial_division_to_1e5():
    for n in range(2, 100_001):
        assert factorize(n) == factorize_trial(n)


def test_trial_fallback_above_sieve():
    old = set_limits(sieve_limit=1000)
    try:
        f = factorize(1_000_003 * 999_983)
        assert f.factors == ((999_983, 1), (1_000_003, 1))
    finally:
        set_limits(**old.__dict__)


@given(st.integers(min_value=2, max_value=10**6))
def test_radical_divides_and_detects_squarefree(n):
    f = factorize(n)
    assert n % radical(f) == 0
    assert (radical(f) == n) == f.is_squarefree


@given(st.integers(min_value=2, max_value=300))
def test_primorial_prime_content(x):
    value = primorial_up_to(x).value
    for p in primes_up_to(400):
        assert (value % p == 0) == (p <= x)
    assert factorize_trial(value).is_squarefree if value < 10**12 else True


def test_primorial_is_big_integer():
    # first primorial past 64 bits is P_53
    assert primorial_up_to(52).value < 2**64 < primorial_up_to(53).value
    assert primorial_up_to(50).value == math.prod(p for p in range(2, 51) if is_prime(p))


def test_prime_powers_enumeration():
    got = {q for _, _, q in iter_prime_powers(100, min_exponent=2)}
    assert got == {4, 8, 16, 32, 64, 9, 27, 81, 25, 49}


def test_factorization_check_catches_bad_data():
    with pytest.raises(AssertionError):
        Factorization(12, ((2, 1), (3, 1))).check()
    with pytest.raises(AssertionError):
        Factorization(12, ((3, 1), (2, 2))).check()
