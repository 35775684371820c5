"""Exit criteria. Each test logs one PASS/FAIL line shown in the terminal summary."""

import io
import math
import time

import pytest

from coprime_ap.arith import factorize, iter_prime_powers, primes_up_to
from coprime_ap.bounds import guaranteed_threshold, lower_bound, upper_bound
from coprime_ap.cli import main
from coprime_ap.errors import ConsistencyError
from coprime_ap.rrs import (
    brute_force_f,
    complete_residue_check,
    exact_f,
    longest_run_with_difference,
    residue_system,
    validate_witness,
    witness_general,
    witness_prime_power,
    witness_squarefree,
)


def report(log, number, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({detail})"
    log.append(line)
    print(line)
    assert ok, line


def test_1_golden_tables(acceptance_log):
    expected = {
        (2, 6): ([1, 2, 2, 4, 2], ["{1}", "{1, 2}", "{1, 3}", "{1, 2, 3, 4}", "{1, 5}"]),
        (12, 16): (
            [2, 12, 4, 3, 8],
            ["{1, 5, 7, 11}", "{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}", "{1, 3, 5, 9, 11, 13}",
             "{1, 2, 4, 7, 8, 11, 13, 14}", "{1, 3, 5, 7, 9, 11, 13, 15}"],
        ),
    }
    t0 = time.perf_counter()
    mismatches = []
    for (lo, hi), (fs, listings) in expected.items():
        out = io.StringIO()
        assert main(["table", str(lo), str(hi)], out=out) == 0
        for line, n, f, listing in zip(out.getvalue().splitlines()[1:], range(lo, hi + 1), fs, listings):
            got_n, rest = line.split(None, 1)
            got_listing, got_f = rest.rsplit(None, 1)
            if (int(got_n), got_listing.strip(), int(got_f)) != (n, listing, f):
                mismatches.append(n)
    elapsed = time.perf_counter() - t0
    report(acceptance_log, 1, "golden tables n=2..6, 12..16", not mismatches and elapsed < 1.0,
           f"mismatches={mismatches}, {elapsed:.3f}s < 1s")


def test_2_bound_sandwich_to_1e5(acceptance_log):
    t0 = time.perf_counter()
    violations = []
    for n in range(2, 100_001):
        f = exact_f(n).length
        if not lower_bound(n) <= f <= upper_bound(n):
            violations.append(n)
    elapsed = time.perf_counter() - t0
    report(acceptance_log, 2, "lower <= f(n) <= upper for n in [2, 1e5]",
           not violations and elapsed < 300, f"violations={violations[:10]}, {elapsed:.1f}s < 300s")


def test_3_oracle_equivalence_to_500(acceptance_log):
    t0 = time.perf_counter()
    mismatches = [n for n in range(2, 501) if exact_f(n).length != brute_force_f(n).length]
    elapsed = time.perf_counter() - t0
    report(acceptance_log, 3, "exact_f == brute_force_f for n in [2, 500]",
           not mismatches and elapsed < 60, f"mismatches={mismatches}, {elapsed:.1f}s < 60s")


def test_4_prime_exactness(acceptance_log):
    primes = primes_up_to(10_000)
    bad = [p for p in primes if exact_f(p).length != p - 1]
    report(acceptance_log, 4, "f(p) = p - 1 for primes p <= 1e4", not bad,
           f"{len(primes)} primes, exceptions={bad}")


def test_5_prime_power_exactness(acceptance_log):
    powers = list(iter_prime_powers(10_000, min_exponent=2))
    bad = [q for p, r, q in powers if exact_f(q).length != p ** (r - 1)]
    report(acceptance_log, 5, "f(p^r) = p^(r-1) for prime powers <= 1e4, r >= 2", not bad,
           f"{len(powers)} prime powers, exceptions={bad}")


def test_6_threshold_at_desk_scale(acceptance_log):
    bad = []
    scanned = 0
    for k in (1, 2, 3, 4):
        start = guaranteed_threshold(k).guaranteed
        for n in range(start, 5001):
            scanned += 1
            if exact_f(n).length < k:
                bad.append((k, n))
    report(acceptance_log, 6, "f(n) >= k for n in [k*P_2k, 5000], k = 1..4", not bad,
           f"{scanned} (k, n) pairs, exceptions={bad[:10]}")


def test_7_witness_validity(acceptance_log):
    failures = []
    produced = 0

    def check(w, origin):
        nonlocal produced
        produced += 1
        try:
            validate_witness(w)
            terms = w.terms()
            assert all(b - a == w.difference for a, b in zip(terms, terms[1:]))
        except (ConsistencyError, AssertionError) as exc:
            failures.append((origin, w, str(exc)))

    for n in range(2, 10_001):
        f = factorize(n)
        check(exact_f(n), "exact_f")
        check(witness_general(n), "witness_general")
        if f.is_prime_power:
            check(witness_prime_power(*f.factors[0]), "witness_prime_power")
        elif f.is_squarefree:
            check(witness_squarefree(f), "witness_squarefree")
        rs = residue_system(n, f)
        for q in sorted({1, 2, f.radical, n - 1}):
            if 1 <= q <= n - 1:
                check(longest_run_with_difference(rs, q), "longest_run_with_difference")
        if n <= 500:
            check(brute_force_f(n), "brute_force_f")
    report(acceptance_log, 7, "every witness over n in [2, 1e4] validates", not failures,
           f"{produced} witnesses, failures={failures[:3]}")


def test_8_complete_residue_property(acceptance_log):
    bad = []
    checked = 0
    for p in primes_up_to(100):
        for q in range(1, 201):
            if math.gcd(q, p) == 1:
                checked += 1
                if not complete_residue_check(q, p):
                    bad.append((q, p))
    report(acceptance_log, 8, "1 + m*q covers all residues mod p (p <= 100, q <= 200)", not bad,
           f"{checked} pairs, exceptions={bad}")
