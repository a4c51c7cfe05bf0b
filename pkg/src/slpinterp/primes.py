"""Prime tables, random primes in [lam, 2*lam], coprime moduli and CRT."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np


@dataclass(frozen=True, eq=False)
class PrimeTable:
    """All primes <= bound, ascending."""

    bound: int
    primes: np.ndarray

    def __len__(self):
        return len(self.primes)

    def __iter__(self) -> Iterator[int]:
        return (int(p) for p in self.primes)

    def __contains__(self, n: int) -> bool:
        i = int(np.searchsorted(self.primes, n))
        return i < len(self.primes) and int(self.primes[i]) == n

    def between(self, lo: int, hi: int) -> np.ndarray:
        """Primes p with lo <= p <= hi (hi must not exceed ``bound``)."""
        if hi > self.bound:
            raise ValueError(f"table only covers primes up to {self.bound}, asked for {hi}")
        i = np.searchsorted(self.primes, lo, side="left")
        j = np.searchsorted(self.primes, hi, side="right")
        return self.primes[i:j]


def sieve(n: int) -> PrimeTable:
    """Sieve of Eratosthenes over odd numbers."""
    if n < 2:
        return PrimeTable(n, np.zeros(0, dtype=np.int64))
    # index i stands for 2*i + 1
    odd = np.ones((n + 1) // 2, dtype=bool)
    odd[0] = False
    for i in range(1, (math.isqrt(n) - 1) // 2 + 1):
        if odd[i]:
            p = 2 * i + 1
            odd[p * p // 2::p] = False
    primes = np.concatenate(([2], 2 * np.nonzero(odd)[0] + 1)).astype(np.int64)
    return PrimeTable(n, primes)


def first_primes(count: int) -> list[int]:
    """The first ``count`` primes."""
    if count <= 0:
        return []
    # p_n < n (ln n + ln ln n) for n >= 6
    bound = 15 if count < 6 else int(count * (math.log(count) + math.log(math.log(count)))) + 1
    return [int(p) for p in sieve(bound).primes[:count]]


def random_prime_in(lam: int, rng: np.random.Generator, table: PrimeTable | None = None) -> int:
    """A prime drawn uniformly from [lam, 2*lam]."""
    if lam < 2:
        raise ValueError(f"lambda must be >= 2, got {lam}")
    if table is None or table.bound < 2 * lam:
        table = sieve(2 * lam)
    candidates = table.between(lam, 2 * lam)
    assert len(candidates) > 0, "Bertrand's postulate guarantees a prime in [lam, 2*lam]"
    return int(candidates[rng.integers(len(candidates))])


@dataclass(frozen=True)
class ModuliSet:
    """Pairwise coprime moduli: the largest power of each prime p <= x not exceeding x."""

    x: int
    moduli: tuple[int, ...]

    def __iter__(self) -> Iterator[int]:
        return iter(self.moduli)

    def __len__(self):
        return len(self.moduli)

    @property
    def product(self) -> int:
        return math.prod(self.moduli)

    @classmethod
    def from_moduli(cls, moduli: Sequence[int]) -> ModuliSet:
        """Wrap an explicit list, checking pairwise coprimality."""
        moduli = tuple(int(q) for q in moduli)
        for i, a in enumerate(moduli):
            if a < 1:
                raise ValueError(f"modulus {a} must be positive")
            for b in moduli[i + 1:]:
                if math.gcd(a, b) != 1:
                    raise ValueError(f"moduli {a} and {b} are not coprime")
        return cls(max(moduli, default=0), moduli)


def moduli_threshold(D: int) -> int:
    """x = max(ceil(2 ln D), 17)."""
    return max(math.ceil(2 * math.log(max(D, 1))), 17)


def coprime_moduli(D: int) -> ModuliSet:
    """Moduli whose product exceeds D."""
    if D < 1:
        raise ValueError(f"D must be >= 1, got {D}")
    x = moduli_threshold(D)
    moduli = []
    for p in sieve(x):
        q = p
        while q * p <= x:
            q *= p
        moduli.append(q)
    Q = ModuliSet(x, tuple(moduli))
    assert Q.product > D
    return Q


def crt(residues: Sequence[int], moduli: Sequence[int]) -> int:
    """Least nonnegative e with e = r_i (mod m_i), for pairwise coprime m_i."""
    e, m = 0, 1
    for r, q in zip(residues, moduli):
        # solve e + m*k = r (mod q)
        inv = pow(m, -1, q) if q > 1 else 0
        k = (r - e) * inv % q
        e += m * k
        m *= q
    return e


def crt_symmetric(residues: Sequence[int], moduli: Sequence[int]) -> int:
    """CRT solution in the symmetric range (-M/2, M/2]."""
    M = math.prod(moduli)
    e = crt(residues, moduli)
    return e - M if 2 * e > M else e
