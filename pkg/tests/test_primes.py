import math
import random

import numpy as np
import pytest
import sympy

from slpinterp.primes import (ModuliSet, coprime_moduli, crt, crt_symmetric, first_primes,
                              moduli_threshold, random_prime_in, sieve)


def test_sieve_examples():
    assert list(sieve(10)) == [2, 3, 5, 7]
    assert list(sieve(42))[-5:] == [23, 29, 31, 37, 41]
    assert list(sieve(1)) == [] and list(sieve(2)) == [2]


@pytest.mark.parametrize("n", [2, 3, 4, 100, 2 * 1726, 10007, 65536])
def test_sieve_against_primality_scan(n):
    table = sieve(n)
    assert list(table) == [k for k in range(n + 1) if sympy.isprime(k)]


def test_prime_table_range_queries():
    t = sieve(100)
    assert list(t.between(21, 42)) == [23, 29, 31, 37, 41]
    assert 97 in t and 91 not in t
    with pytest.raises(ValueError):
        t.between(50, 101)


def test_first_primes():
    assert first_primes(0) == []
    assert first_primes(6) == [2, 3, 5, 7, 11, 13]
    assert first_primes(1000) == list(sympy.primerange(2, sympy.prime(1000) + 1))


def test_random_prime_examples():
    rng = np.random.default_rng(0)
    assert {random_prime_in(21, rng) for _ in range(200)} == {23, 29, 31, 37, 41}
    assert {random_prime_in(2, rng) for _ in range(50)} <= {2, 3}
    with pytest.raises(ValueError):
        random_prime_in(1, rng)


def test_random_prime_is_uniform():
    rng = np.random.default_rng(1)
    table = sieve(42)
    draws = [random_prime_in(21, rng, table) for _ in range(10_000)]
    for p in (23, 29, 31, 37, 41):
        assert abs(draws.count(p) / len(draws) - 0.2) <= 0.02


def test_coprime_moduli_examples():
    Q = coprime_moduli(170)
    assert Q.x == 17 and Q.moduli == (16, 9, 5, 7, 11, 13, 17) and Q.product == 12_252_240
    assert coprime_moduli(16) == Q
    assert coprime_moduli(10**6).moduli == (16, 27, 25, 7, 11, 13, 17, 19, 23)
    assert moduli_threshold(10**6) == 28


def test_coprime_moduli_invariants_over_log_sweep():
    for D in sorted({int(v) for v in np.logspace(0, 64, 400, base=2)} | {2**64}):
        Q = coprime_moduli(D)
        assert Q.product > D
        for i, a in enumerate(Q.moduli):
            assert a <= Q.x and a * a >= Q.x
            assert all(math.gcd(a, b) == 1 for b in Q.moduli[i + 1:])


def test_moduli_set_from_explicit_list():
    assert ModuliSet.from_moduli([2, 3, 5, 7]).product == 210
    with pytest.raises(ValueError):
        ModuliSet.from_moduli([4, 6])


def test_crt_against_brute_force():
    rnd = random.Random(2)
    for _ in range(300):
        moduli = rnd.sample([2, 3, 5, 7, 11, 13, 16, 9, 25], rnd.randrange(1, 5))
        if any(math.gcd(a, b) != 1 for i, a in enumerate(moduli) for b in moduli[i + 1:]):
            continue
        M = math.prod(moduli)
        e = rnd.randrange(M)
        res = [e % q for q in moduli]
        assert crt(res, moduli) == next(x for x in range(M) if all(x % q == r for q, r in zip(moduli, res)))
    assert crt([1, 2, 3, 1], [2, 3, 5, 7]) == 113
    assert crt_symmetric([1, 2], [3, 5]) == 7 and crt_symmetric([2, 3], [3, 5]) == -7
