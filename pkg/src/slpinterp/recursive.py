"""Recursive Monte Carlo interpolation with "ok" primes.

Each round interpolates g = f - f* where f* is the running approximation:

1. ``find_ok_prime`` probes g at a few random primes p' in [lam, 2*lam] and
   keeps the one whose image has the most terms. With probability
   >= 1 - eps fewer than 2*gamma terms of g collide mod p, gamma = 3*T_g/16.
2. ``construct_approximation`` probes g mod z^p - 1 and mod z^(p*q) - 1 for
   every q in a fixed coprime moduli set, and rebuilds each uncollided term
   by CRT on its exponent residues.
3. f* += f**, T_g is halved, repeat until T_g = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .ledger import ProbeLedger
from .primes import ModuliSet, PrimeTable, coprime_moduli, crt, random_prime_in, sieve
from .ring import RingSpec
from .slp import Slp, probe_diff
from .sparsepoly import SparsePoly


@dataclass(frozen=True)
class InterpConfig:
    """Sparsity bound T, degree bound D, failure tolerance mu, RNG seed.

    ``ring`` defaults to the program's own ring; if given it must match it.
    """

    T: int
    D: int
    mu: float = 0.05
    seed: int = 0
    ring: RingSpec | None = None

    def __post_init__(self):
        if self.T < 0:
            raise ValueError(f"sparsity bound T must be >= 0, got {self.T}")
        if self.D < 0:
            raise ValueError(f"degree bound D must be >= 0, got {self.D}")
        if not 0 < self.mu < 1:
            raise ValueError(f"mu must lie in (0, 1), got {self.mu}")


def ok_prime_lambda(T_g: int, D: int) -> int:
    """lam = max(21, ceil(160/9 * (T_g - 1) * ln D))."""
    return max(21, math.ceil(160 * (T_g - 1) * math.log(max(D, 1)) / 9))


def round_epsilon(T: int, mu: float) -> float:
    """Per-round failure budget mu / (ceil(log2 T) + 1)."""
    return mu / (math.ceil(math.log2(max(T, 2))) + 1)


def num_samples(eps: float) -> int:
    """ceil(log2(1/eps)) prime samples push the miss probability below eps."""
    return max(1, math.ceil(math.log2(1 / eps)))


def expected_probe_count(T: int, D: int, mu: float) -> int:
    """Exact number of probes ``interpolate`` issues for bounds T, D."""
    if T == 0:
        return 0
    per_round = num_samples(round_epsilon(T, mu)) + len(coprime_moduli(max(D, 1))) + 1
    return T.bit_length() * per_round


def probe_degree_cap(T: int, D: int) -> int:
    """Upper bound 2 * lam_initial * max(Q) on every probe degree."""
    return 2 * ok_prime_lambda(T, D) * max(coprime_moduli(max(D, 1)))


def find_ok_prime(slp: Slp, fstar: SparsePoly, T_g: int, D: int, eps: float,
                  rng: np.random.Generator, ledger: ProbeLedger | None = None, *,
                  table: PrimeTable | None = None,
                  candidates: Iterable[int] | None = None,
                  input_exponents: Sequence[int] | None = None) -> int:
    """Sample primes and return the one maximising the sparsity of (f - f*) mod (z^p - 1).

    Ties go to the later sample. ``candidates`` replaces the random draws
    with a fixed list of primes (used by tests).
    """
    if T_g < 1:
        raise ValueError(f"T_g must be >= 1, got {T_g}")
    if not 0 < eps < 1:
        raise ValueError(f"eps must lie in (0, 1), got {eps}")
    if candidates is None:
        lam = ok_prime_lambda(T_g, D)
        if table is None or table.bound < 2 * lam:
            table = sieve(2 * lam)
        candidates = (random_prime_in(lam, rng, table) for _ in range(num_samples(eps)))
    best, chosen = 0, 0
    for p in candidates:
        s = probe_diff(slp, fstar, p, input_exponents, ledger).sparsity()
        if s >= best:
            best, chosen = s, p
    return chosen


def construct_approximation(slp: Slp, fstar: SparsePoly, D: int, p: int,
                            Q: ModuliSet | Sequence[int],
                            ledger: ProbeLedger | None = None, *,
                            input_exponents: Sequence[int] | None = None) -> SparsePoly:
    """Build f** from the images of g = f - f* mod z^p - 1 and z^(p*q) - 1, q in Q.

    A residue class e_p of the degree-p image survives only if every
    degree-p*q image holds exactly one term in that class, with the same
    coefficient. Its exponent is the CRT solution of those terms' degrees
    mod each q, and it is dropped if that exceeds D.
    """
    moduli = tuple(Q)
    base = probe_diff(slp, fstar, p, input_exponents, ledger)
    classes = dict(base.terms)
    alive = set(classes)
    residues: dict[int, list[int]] = {ep: [] for ep in classes}

    for q in moduli:
        h = probe_diff(slp, fstar, p * q, input_exponents, ledger)
        found: dict[int, tuple[int, int]] = {}
        for e, c in h.terms.items():
            ep = e % p
            if ep not in classes:
                continue
            if ep in found:
                alive.discard(ep)
            else:
                found[ep] = (e % q, c)
        for ep in list(alive):
            hit = found.get(ep)
            if hit is None or hit[1] != classes[ep]:
                alive.discard(ep)
            else:
                residues[ep].append(hit[0])

    terms = []
    for ep in sorted(alive):
        e = crt(residues[ep], moduli)
        if e <= D:
            terms.append((e, classes[ep]))
    return SparsePoly.from_terms(slp.ring, terms)


def interpolate(slp: Slp, cfg: InterpConfig, *,
                input_exponents: Sequence[int] | None = None,
                ledger: ProbeLedger | None = None) -> tuple[SparsePoly, ProbeLedger]:
    """Recover the polynomial computed by ``slp``; correct with probability >= 1 - mu.

    Returns the result and a ledger of this run's probes. If ``ledger`` is
    given the probes are also appended to it.
    """
    if cfg.ring is not None and cfg.ring != slp.ring:
        raise ValueError(f"config ring {cfg.ring} does not match program ring {slp.ring}")
    run = ProbeLedger()
    fstar = SparsePoly.zero(slp.ring)
    if cfg.T > 0:
        D = max(cfg.D, 1)
        Q = coprime_moduli(D)
        eps = round_epsilon(cfg.T, cfg.mu)
        rng = np.random.default_rng(cfg.seed)
        table = sieve(2 * ok_prime_lambda(cfg.T, D))
        T_g = cfg.T
        while T_g > 0:
            p = find_ok_prime(slp, fstar, T_g, D, eps, rng, run, table=table,
                              input_exponents=input_exponents)
            fstar = fstar + construct_approximation(slp, fstar, D, p, Q, run,
                                                    input_exponents=input_exponents)
            T_g //= 2
        assert run.max_degree <= probe_degree_cap(cfg.T, D)
    if ledger is not None:
        ledger.extend(run)
    return fstar, run
