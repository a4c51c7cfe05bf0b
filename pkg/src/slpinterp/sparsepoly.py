"""Explicit sparse univariate polynomials with arbitrary-precision exponents."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .ring import DEFAULT_RING, CyclicPoly, RingSpec


@dataclass(frozen=True)
class SparsePoly:
    """Sum of c * z^e, stored as (e, c) pairs with strictly increasing e.

    Coefficients are canonical and nonzero; the empty tuple is the zero
    polynomial. Use :meth:`from_terms` to build one from unsorted pairs.
    """

    ring: RingSpec
    terms: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_terms(cls, ring: RingSpec, pairs: Iterable[tuple[int, int]]) -> SparsePoly:
        acc: dict[int, int] = {}
        for e, c in pairs:
            e = int(e)
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            acc[e] = acc.get(e, 0) + int(c)
        terms = []
        for e in sorted(acc):
            c = ring.reduce(acc[e])
            if c:
                terms.append((e, c))
        return cls(ring, tuple(terms))

    @classmethod
    def zero(cls, ring: RingSpec = DEFAULT_RING) -> SparsePoly:
        return cls(ring, ())

    @classmethod
    def monomial(cls, ring: RingSpec, e: int, c: int = 1) -> SparsePoly:
        return cls.from_terms(ring, [(e, c)])

    def degree(self) -> int:
        """Largest exponent; -1 for the zero polynomial."""
        return self.terms[-1][0] if self.terms else -1

    def sparsity(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def exponents(self) -> list[int]:
        return [e for e, _ in self.terms]

    def coeff(self, e: int) -> int:
        for ee, c in self.terms:
            if ee == e:
                return c
        return 0

    def evaluate(self, x: int) -> int:
        q = self.ring.modulus
        if q is None:
            return sum(c * x ** e for e, c in self.terms)
        return sum(c * pow(x, e, q) for e, c in self.terms) % q

    def _combine(self, other: SparsePoly, sign: int) -> SparsePoly:
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring} != {other.ring}")
        return SparsePoly.from_terms(
            self.ring, list(self.terms) + [(e, sign * c) for e, c in other.terms])

    def __add__(self, other: SparsePoly) -> SparsePoly:
        return self._combine(other, 1)

    def __sub__(self, other: SparsePoly) -> SparsePoly:
        return self._combine(other, -1)

    def __neg__(self) -> SparsePoly:
        return SparsePoly.from_terms(self.ring, [(e, -c) for e, c in self.terms])

    def reduce_mod_cyclic(self, order: int) -> CyclicPoly:
        return reduce_mod_cyclic(self, order)

    def collision_count(self, p: int) -> int:
        return collision_count(self, p)

    def to_text(self, header: bool = True) -> str:
        return format_sparse(self, header=header)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*z^{e}" if e else f"{c}" for e, c in self.terms)


def add(a: SparsePoly, b: SparsePoly) -> SparsePoly:
    return a + b


def sub(a: SparsePoly, b: SparsePoly) -> SparsePoly:
    return a - b


def reduce_mod_cyclic(f: SparsePoly, order: int) -> CyclicPoly:
    """Image of f in R[z]/(z^order - 1): exponents folded mod ``order``."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    return CyclicPoly.from_terms(f.ring, order, f.terms)


def collision_count(g: SparsePoly, p: int) -> int:
    """Number of terms of g whose exponent residue mod p is shared with another term."""
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    residues = sorted(e % p for e, _ in g.terms)
    count = 0
    n = len(residues)
    i = 0
    while i < n:
        j = i + 1
        while j < n and residues[j] == residues[i]:
            j += 1
        if j - i > 1:
            count += j - i
        i = j
    return count


def format_sparse(f: SparsePoly, header: bool = True) -> str:
    lines = [f"# ring {f.ring}"] if header else []
    lines += [f"{c} {e}" for e, c in f.terms]
    return "\n".join(lines) + "\n"


def parse_sparse(text: str, ring: RingSpec = DEFAULT_RING) -> SparsePoly:
    """Parse the ``.sparse`` format: ``<coeff> <exponent>`` per line, ``#`` comments.

    A ``# ring zmod <q>`` / ``# ring int`` comment, when present, overrides
    ``ring``.
    """
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith("#"):
            body = line[1:].split()
            if body[:1] == ["ring"] and len(body) > 1:
                ring = RingSpec.parse(" ".join(body[1:]))
            continue
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected '<coeff> <exponent>', got {raw!r}")
        try:
            c, e = int(fields[0]), int(fields[1])
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer field in {raw!r}") from None
        if e < 0:
            raise ValueError(f"line {lineno}: negative exponent")
        pairs.append((e, c))
    return SparsePoly.from_terms(ring, pairs)
