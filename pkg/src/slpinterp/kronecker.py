"""Kronecker substitution z_j -> z^((D+1)^j) for multivariate programs."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .ledger import ProbeLedger
from .recursive import InterpConfig, interpolate
from .slp import Slp


@dataclass(frozen=True)
class KroneckerMap:
    """Bijection between exponent vectors with entries <= D and integers < (D+1)^N."""

    N: int
    D: int

    def __post_init__(self):
        if self.N < 1 or self.D < 0:
            raise ValueError(f"need N >= 1 and D >= 0, got N={self.N}, D={self.D}")

    @property
    def base(self) -> int:
        return self.D + 1

    @property
    def input_exponents(self) -> list[int]:
        return [self.base ** j for j in range(self.N)]

    @property
    def degree_bound(self) -> int:
        return self.base ** self.N - 1

    def forward(self, vector: Sequence[int]) -> int:
        if len(vector) != self.N:
            raise ValueError(f"expected {self.N} exponents, got {len(vector)}")
        e = 0
        for a in reversed(vector):
            if not 0 <= a <= self.D:
                raise ValueError(f"partial exponent {a} outside [0, {self.D}]")
            e = e * self.base + a
        return e

    def inverse(self, e: int) -> tuple[int, ...]:
        if not 0 <= e <= self.degree_bound:
            raise ValueError(f"exponent {e} outside [0, {self.degree_bound}]")
        digits = []
        for _ in range(self.N):
            e, a = divmod(e, self.base)
            digits.append(a)
        return tuple(digits)


def kronecker_forward(vectors: Iterable[Sequence[int]], N: int, D: int) -> list[int]:
    m = KroneckerMap(N, D)
    return [m.forward(v) for v in vectors]


def kronecker_inverse(e: int, N: int, D: int) -> tuple[int, ...]:
    return KroneckerMap(N, D).inverse(e)


def interpolate_multivariate(slp: Slp, cfg: InterpConfig,
                             ledger: ProbeLedger | None = None
                             ) -> tuple[list[tuple[tuple[int, ...], int]], ProbeLedger]:
    """Interpolate an N-variate program of partial degree <= cfg.D.

    Returns ((exponent vector, coeff) pairs sorted by Kronecker image, ledger).
    """
    kmap = KroneckerMap(slp.num_inputs, cfg.D)
    ucfg = InterpConfig(cfg.T, kmap.degree_bound, cfg.mu, cfg.seed, cfg.ring)
    f, run = interpolate(slp, ucfg, input_exponents=kmap.input_exponents, ledger=ledger)
    return [(kmap.inverse(e), c) for e, c in f.terms], run
