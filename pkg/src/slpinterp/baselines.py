"""Baseline interpolation algorithms: Monte Carlo Garg-Schost and dense."""

from __future__ import annotations

import math
from itertools import chain
from typing import Iterator, Sequence

import numpy as np

from .errors import InterpolationFailure, UnsupportedConfiguration
from .ledger import ProbeLedger
from .primes import crt_symmetric, sieve
from .recursive import num_samples
from .ring import CyclicPoly
from .slp import Slp, _vector_dtype, eval_points, probe
from .sparsepoly import SparsePoly


def gs_lambda(T: int, D: int) -> int:
    """lam = max(21, ceil(5/3 * T * (T - 1) * ln D))."""
    return max(21, math.ceil(5 * T * (T - 1) * math.log(max(D, 1)) / 3))


def exponent_polynomial(residues: Sequence[int], p: int) -> list[int]:
    """Coefficients (ascending) of prod(y - r) mod p."""
    poly = [1]
    for r in residues:
        nxt = [0] * (len(poly) + 1)
        for i, a in enumerate(poly):
            nxt[i + 1] = (nxt[i + 1] + a) % p
            nxt[i] = (nxt[i] - r * a) % p
        poly = nxt
    return poly


def combine_exponent_polynomials(images: dict[int, CyclicPoly]) -> list[int]:
    """CRT prod(y - (e_i mod p)) over good primes p into an integer polynomial.

    Coefficients come back in the symmetric range; they equal those of
    prod(y - e_i) once the product of the primes exceeds twice their size.
    """
    primes = sorted(images)
    local = [exponent_polynomial([e for e, _ in images[p].items()], p) for p in primes]
    degree = len(local[0]) - 1
    return [crt_symmetric([poly[k] for poly in local], primes) for k in range(degree + 1)]


def _horner(poly: Sequence[int], x: int, m: int | None = None) -> int:
    acc = 0
    for c in reversed(poly):
        acc = acc * x + c
        if m is not None:
            acc %= m
    return acc


def integer_roots(chi: Sequence[int], p: int, residues: Sequence[int], D: int) -> list[int]:
    """Roots in [0, D] of chi in Z[y], Newton-lifted from simple roots mod p."""
    deriv = [k * chi[k] for k in range(1, len(chi))]
    roots = []
    for r in residues:
        x, m = r % p, p
        if math.gcd(_horner(deriv, x, p), p) != 1:
            continue
        while m <= D:
            m = m * m
            inv = pow(_horner(deriv, x, m), -1, m)
            x = (x - _horner(chi, x, m) * inv) % m
        if x <= D and _horner(chi, x) == 0:
            roots.append(x)
    return sorted(roots)


def _primes_above(n: int) -> Iterator[int]:
    lo, hi = n + 1, 2 * max(n, 8)
    while True:
        yield from (int(p) for p in sieve(hi).between(lo, hi))
        lo, hi = hi + 1, 2 * hi


def garg_schost(slp: Slp, T: int, D: int, eps: float, rng: np.random.Generator,
                ledger: ProbeLedger | None = None, *,
                input_exponents: Sequence[int] | None = None) -> SparsePoly:
    """Monte Carlo Garg-Schost interpolation.

    The most-populated image among ceil(log2 1/eps) random primes in
    [lam, 2*lam] fixes the sparsity t. Further primes whose image also has t
    terms are collected until their product exceeds 2^T * D^T; the exponent
    polynomial prod(y - e_i) is rebuilt by CRT and its integer roots are the
    exponents.

    Raises :class:`InterpolationFailure` when the recovered polynomial does
    not have t roots in [0, D].
    """
    ring = slp.ring
    if ring.kind == "zmod" and ring.modulus <= D:
        raise UnsupportedConfiguration(
            f"Garg-Schost needs characteristic 0 or > D; ring is {ring}, D = {D}")
    if T < 1:
        return SparsePoly.zero(ring)
    D = max(D, 1)
    lam = gs_lambda(T, D)
    pool = [int(p) for p in sieve(2 * lam).between(lam, 2 * lam)]

    images: dict[int, CyclicPoly] = {}

    def look(p):
        if p not in images:
            images[p] = probe(slp, p, input_exponents, ledger)
        return images[p]

    for _ in range(num_samples(eps)):
        look(pool[rng.integers(len(pool))])
    t = max(img.sparsity() for img in images.values())
    if t == 0:
        return SparsePoly.zero(ring)

    fresh = chain((int(p) for p in rng.permutation(pool) if int(p) not in images),
                  _primes_above(2 * lam))
    while True:
        good = [p for p, img in images.items() if img.sparsity() == t]
        k = max(T, t)
        if math.prod(good) > 2 ** k * D ** k:
            break
        t = max(t, look(next(fresh)).sparsity())

    good_images = {p: images[p] for p in good}
    chi = combine_exponent_polynomials(good_images)
    p0 = min(good)
    image0 = good_images[p0]
    roots = integer_roots(chi, p0, [e for e, _ in image0.items()], D)
    if len(roots) != t:
        raise InterpolationFailure(f"exponent polynomial has {len(roots)} roots in [0, {D}], expected {t}")
    return SparsePoly.from_terms(ring, [(e, image0[e % p0]) for e in roots])


def dense_interpolate(slp: Slp, D: int, ledger: ProbeLedger | None = None) -> SparsePoly:
    """Evaluate at 0, 1, ..., D and solve by Newton divided differences."""
    ring = slp.ring
    if ring.kind != "zmod" or ring.modulus <= D:
        raise UnsupportedConfiguration(
            f"dense interpolation needs a prime field with modulus > D; ring is {ring}, D = {D}")
    q = ring.modulus
    dtype = _vector_dtype(ring)
    n = D + 1
    c = np.array(eval_points(slp, range(n), ledger), dtype=dtype)
    # divided differences on nodes 0..D: denominators at level k are all k
    for k in range(1, n):
        c[k:] = (c[k:] - c[k - 1:-1]) * pow(k, -1, q) % q
    # expand sum c_k * prod_{j<k} (z - j) by Horner from the top
    poly = np.array([c[-1]], dtype=dtype)
    for k in range(n - 2, -1, -1):
        nxt = np.zeros(len(poly) + 1, dtype=dtype)
        nxt[1:] = poly
        nxt[:-1] -= k * poly
        nxt[0] += c[k]
        poly = nxt % q
    return SparsePoly.from_terms(ring, ((e, int(v)) for e, v in enumerate(poly)))
