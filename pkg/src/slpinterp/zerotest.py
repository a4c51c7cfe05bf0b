"""Deterministic identity test for a program against an explicit candidate."""

from __future__ import annotations

import math
from typing import Sequence

from .ledger import ProbeLedger
from .primes import first_primes
from .slp import Slp, probe_diff
from .sparsepoly import SparsePoly


def zero_test_prime_count(T: int, D: int) -> int:
    """ceil(T * log2 D), and at least one."""
    return max(1, math.ceil(T * math.log2(max(D, 2))))


def zero_test(slp: Slp, fstar: SparsePoly, T: int, D: int,
              ledger: ProbeLedger | None = None, *,
              input_exponents: Sequence[int] | None = None) -> bool:
    """True iff f == fstar, where f is computed by ``slp``.

    T must bound the sparsity of f - fstar, and D its degree (the degree of
    ``fstar`` is folded in automatically). Over an integral domain a nonzero
    difference survives modulo z^p - 1 for at least one of the first
    ceil(T * log2 D) primes, so the answer is exact either way. Stops at the
    first prime that exposes a difference.
    """
    D = max(D, fstar.degree())
    for p in first_primes(zero_test_prime_count(T, D)):
        if not probe_diff(slp, fstar, p, input_exponents, ledger).is_zero():
            return False
    return True
