import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from slpinterp.ring import (CyclicPoly, RingSpec, cyclic_add, cyclic_mul, cyclic_sub,
                            is_prime, sparsity)

Z5 = RingSpec.zmod(5)
Z101 = RingSpec.zmod(101)
ZZ = RingSpec.integers()


def schoolbook_fold(a, b, q):
    """Full product of the dense vectors, then fold coefficient k + l onto k."""
    n = len(a)
    full = [0] * (2 * n - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            full[i + j] += x * y
    out = full[:n]
    for k in range(n, 2 * n - 1):
        out[k - n] += full[k]
    return [v % q for v in out]


def mono(ring, n, e, c=1):
    return CyclicPoly.monomial(ring, n, e, c)


def test_mul_wraps_exponents():
    assert cyclic_mul(mono(Z101, 2, 1), mono(Z101, 2, 1)) == CyclicPoly.constant(Z101, 2, 1)
    assert cyclic_mul(mono(Z101, 5, 3), mono(Z101, 5, 4)) == mono(Z101, 5, 2)


def test_mul_matches_schoolbook_fold_order_8():
    rnd = random.Random(8)
    a = [rnd.randrange(101) for _ in range(8)]
    b = [rnd.randrange(101) for _ in range(8)]
    got = cyclic_mul(CyclicPoly.from_dense(Z101, a), CyclicPoly.from_dense(Z101, b))
    assert got.coeffs == schoolbook_fold(a, b, 101)


def test_add_sub_examples():
    a = CyclicPoly.from_dense(Z5, [1, 2, 0])
    b = CyclicPoly.from_dense(Z5, [4, 0, 4])
    assert cyclic_add(a, b).coeffs == [0, 2, 4]
    assert cyclic_add(a, CyclicPoly.zero(Z5, 3)) == a
    assert cyclic_sub(a, a).coeffs == [0, 0, 0]


def test_sparsity_of_images():
    assert sparsity(CyclicPoly.zero(Z101, 9)) == 0
    f = [(33, 1), (3, 1)]
    assert sparsity(CyclicPoly.from_terms(Z101, 7, f)) == 2
    assert CyclicPoly.from_terms(Z101, 5, f).coeffs == [0, 0, 0, 2, 0]


def test_order_mismatch_is_an_error():
    with pytest.raises(ValueError, match="order mismatch"):
        cyclic_mul(mono(Z101, 3, 1), mono(Z101, 4, 1))
    with pytest.raises(ValueError):
        cyclic_add(mono(Z101, 3, 1), mono(Z101, 4, 1))
    with pytest.raises(ValueError, match="ring mismatch"):
        cyclic_sub(mono(Z101, 3, 1), mono(Z5, 3, 1))


def test_order_zero_rejected_order_one_allowed():
    with pytest.raises(ValueError):
        CyclicPoly.zero(Z101, 0)
    one = CyclicPoly.from_terms(Z101, 1, [(0, 3), (7, 4), (12, 5)])
    assert one.coeffs == [12]


def test_dense_view_length_is_order():
    p = CyclicPoly.monomial(Z101, 1000, 2500, 7)
    assert len(p.coeffs) == 1000 and p[500] == 7 and p.sparsity() == 1


def test_ring_validation():
    with pytest.raises(ValueError):
        RingSpec.zmod(100)
    with pytest.raises(ValueError):
        RingSpec.zmod((1 << 89) - 1)  # prime, but wider than a word
    with pytest.raises(ValueError):
        RingSpec("gf", 7)
    assert RingSpec.parse("zmod:101") == Z101
    assert RingSpec.parse("int") == ZZ
    assert ZZ.characteristic == 0 and Z101.characteristic == 101


def test_is_prime_matches_sympy():
    rnd = random.Random(1)
    samples = list(range(2000)) + [rnd.randrange(1 << 62) for _ in range(300)]
    samples += [(1 << 61) - 1, 2**31 - 1, 3215031751, 341550071728321]
    for n in samples:
        assert is_prime(n) == sympy.isprime(n), n


def dense_vectors(n, q):
    return st.lists(st.integers(0, q - 1), min_size=n, max_size=n)


@st.composite
def triples(draw, q=101):
    n = draw(st.integers(1, 24))
    return [CyclicPoly.from_dense(RingSpec.zmod(q), draw(dense_vectors(n, q))) for _ in range(3)]


@settings(max_examples=200, deadline=None)
@given(triples())
def test_ring_axioms(abc):
    a, b, c = abc
    assert cyclic_mul(a, cyclic_mul(b, c)) == cyclic_mul(cyclic_mul(a, b), c)
    assert cyclic_mul(a, b) == cyclic_mul(b, a)
    assert cyclic_mul(a, cyclic_add(b, c)) == cyclic_add(cyclic_mul(a, b), cyclic_mul(a, c))


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 64).flatmap(lambda n: st.tuples(dense_vectors(n, 101), dense_vectors(n, 101))))
def test_mul_equals_schoolbook_oracle(ab):
    a, b = ab
    got = cyclic_mul(CyclicPoly.from_dense(Z101, a), CyclicPoly.from_dense(Z101, b))
    assert got.coeffs == schoolbook_fold(a, b, 101)


@settings(max_examples=100, deadline=None)
@given(triples(q=5))
def test_results_are_canonical(abc):
    a, b, c = abc
    for r in (cyclic_add(a, b), cyclic_sub(b, c), cyclic_mul(a, c), -a):
        assert all(0 < v < 5 for v in r.terms.values())
        assert all(0 <= k < r.order for k in r.terms)


def test_integer_ring_is_exact():
    a = CyclicPoly.from_dense(ZZ, [10**30, -3])
    b = CyclicPoly.from_dense(ZZ, [2, 5])
    assert cyclic_mul(a, b).coeffs == [2 * 10**30 - 15, 5 * 10**30 - 6]
