"""Base rings and the cyclic quotient ring R[z]/(z^l - 1).

Two base rings are supported: Z/qZ for a word-size prime q, and the
integers. Ring elements are plain Python ints; a :class:`RingSpec` knows how
to put them in canonical form.

A :class:`CyclicPoly` is an element of R[z]/(z^l - 1). Its dense coefficient
vector has length exactly ``order``, but only the nonzero positions are stored,
so a monomial of order 10**6 costs one dict entry rather than a million zeros.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

# Moduli must fit in a signed 64-bit machine word.
WORD_BITS = 63
MERSENNE_61 = (1 << 61) - 1

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for n < 3.3 * 10**24."""
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class RingSpec:
    """A coefficient ring: ``zmod`` (prime field Z/qZ) or ``int`` (Z)."""

    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind == "zmod":
            q = self.modulus
            if not isinstance(q, int) or q < 2 or not is_prime(q):
                raise ValueError(f"zmod modulus must be a prime >= 2, got {q!r}")
            if q.bit_length() > WORD_BITS:
                raise ValueError(f"zmod modulus must fit in {WORD_BITS} bits")
        elif self.kind == "int":
            if self.modulus is not None:
                raise ValueError("the integer ring takes no modulus")
        else:
            raise ValueError(f"unknown ring kind {self.kind!r}")

    @classmethod
    def zmod(cls, q: int = MERSENNE_61) -> RingSpec:
        return cls("zmod", q)

    @classmethod
    def integers(cls) -> RingSpec:
        return cls("int")

    @classmethod
    def parse(cls, text: str) -> RingSpec:
        """Parse ``zmod:<q>`` / ``zmod <q>`` or ``int``."""
        t = text.strip().replace(":", " ").split()
        if t == ["int"]:
            return cls.integers()
        if len(t) == 2 and t[0] == "zmod":
            try:
                q = int(t[1])
            except ValueError:
                raise ValueError(f"bad modulus in ring {text!r}") from None
            return cls.zmod(q)
        raise ValueError(f"cannot parse ring {text!r}")

    @property
    def is_field(self) -> bool:
        return self.kind == "zmod"

    @property
    def characteristic(self) -> int:
        return self.modulus if self.kind == "zmod" else 0

    def reduce(self, x: int) -> int:
        return x % self.modulus if self.modulus is not None else x

    def __str__(self):
        return f"zmod:{self.modulus}" if self.kind == "zmod" else "int"


DEFAULT_RING = RingSpec.zmod(MERSENNE_61)


@dataclass(frozen=True, eq=False)
class CyclicPoly:
    """An element of R[z]/(z^order - 1).

    ``terms`` maps position -> nonzero canonical coefficient. Build instances
    with the classmethods; the raw constructor trusts its input.
    """

    order: int
    ring: RingSpec
    terms: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        if not isinstance(self.order, int) or self.order < 1:
            raise ValueError(f"cyclic order must be a positive integer, got {self.order!r}")

    @classmethod
    def _canonical(cls, order: int, ring: RingSpec, raw: Mapping[int, int]) -> CyclicPoly:
        if ring.modulus is None:
            terms = {k: v for k, v in raw.items() if v}
        else:
            q = ring.modulus
            terms = {}
            for k, v in raw.items():
                v %= q
                if v:
                    terms[k] = v
        return cls(order, ring, terms)

    @classmethod
    def zero(cls, ring: RingSpec, order: int) -> CyclicPoly:
        return cls(order, ring, {})

    @classmethod
    def constant(cls, ring: RingSpec, order: int, c: int) -> CyclicPoly:
        return cls._canonical(order, ring, {0: c})

    @classmethod
    def monomial(cls, ring: RingSpec, order: int, exponent: int, c: int = 1) -> CyclicPoly:
        """c * z^exponent reduced mod z^order - 1."""
        return cls._canonical(order, ring, {exponent % order: c})

    @classmethod
    def from_dense(cls, ring: RingSpec, coeffs: Iterable[int]) -> CyclicPoly:
        coeffs = list(coeffs)
        return cls._canonical(len(coeffs), ring, dict(enumerate(coeffs)))

    @classmethod
    def from_terms(cls, ring: RingSpec, order: int, pairs: Iterable[tuple[int, int]]) -> CyclicPoly:
        """Sum of c * z^e over (e, c) pairs; exponents fold modulo ``order``."""
        raw: dict[int, int] = {}
        for e, c in pairs:
            k = e % order
            raw[k] = raw.get(k, 0) + c
        return cls._canonical(order, ring, raw)

    @property
    def coeffs(self) -> list[int]:
        """Dense coefficient vector of length ``order``."""
        out = [0] * self.order
        for k, v in self.terms.items():
            out[k] = v
        return out

    def sparsity(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> list[tuple[int, int]]:
        """Nonzero (position, coefficient) pairs in ascending position."""
        return sorted(self.terms.items())

    def __getitem__(self, k: int) -> int:
        if not 0 <= k < self.order:
            raise IndexError(k)
        return self.terms.get(k, 0)

    def __len__(self):
        return self.order

    def __eq__(self, other):
        if not isinstance(other, CyclicPoly):
            return NotImplemented
        return (self.order == other.order and self.ring == other.ring
                and dict(self.terms) == dict(other.terms))

    def __hash__(self):
        return hash((self.order, self.ring, frozenset(self.terms.items())))

    def __repr__(self):
        return f"CyclicPoly(order={self.order}, ring={self.ring}, terms={self.items()})"

    def __add__(self, other):
        return cyclic_add(self, other)

    def __sub__(self, other):
        return cyclic_sub(self, other)

    def __mul__(self, other):
        return cyclic_mul(self, other)

    def __neg__(self):
        return CyclicPoly._canonical(self.order, self.ring, {k: -v for k, v in self.terms.items()})


def _check_compatible(a: CyclicPoly, b: CyclicPoly) -> None:
    if a.order != b.order:
        raise ValueError(f"cyclic order mismatch: {a.order} != {b.order}")
    if a.ring != b.ring:
        raise ValueError(f"ring mismatch: {a.ring} != {b.ring}")


def cyclic_add(a: CyclicPoly, b: CyclicPoly) -> CyclicPoly:
    _check_compatible(a, b)
    if len(a.terms) < len(b.terms):
        a, b = b, a
    raw = dict(a.terms)
    for k, v in b.terms.items():
        raw[k] = raw.get(k, 0) + v
    return CyclicPoly._canonical(a.order, a.ring, raw)


def cyclic_sub(a: CyclicPoly, b: CyclicPoly) -> CyclicPoly:
    _check_compatible(a, b)
    raw = dict(a.terms)
    for k, v in b.terms.items():
        raw[k] = raw.get(k, 0) - v
    return CyclicPoly._canonical(a.order, a.ring, raw)


def cyclic_mul(a: CyclicPoly, b: CyclicPoly) -> CyclicPoly:
    """Cyclic convolution: schoolbook over the nonzero terms, folding k >= order."""
    _check_compatible(a, b)
    if len(a.terms) > len(b.terms):
        a, b = b, a
    n = a.order
    raw: dict[int, int] = {}
    get = raw.get
    for i, x in a.terms.items():
        for j, y in b.terms.items():
            k = i + j
            if k >= n:
                k -= n
            raw[k] = get(k, 0) + x * y
    return CyclicPoly._canonical(n, a.ring, raw)


def sparsity(a: CyclicPoly) -> int:
    """Number of nonzero coefficients."""
    return len(a.terms)
