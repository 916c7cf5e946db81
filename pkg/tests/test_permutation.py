import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from charprod.errors import DegreeMismatch
from charprod.perm.permutation import Permutation

perms = st.integers(1, 9).flatmap(lambda n: st.permutations(list(range(n))))


def same_degree(k):
    return st.integers(1, 9).flatmap(lambda n: st.tuples(*[st.permutations(list(range(n)))] * k))


def test_product_applies_left_factor_first():
    p = Permutation([1, 2, 0])
    q = Permutation([0, 2, 1])
    pq = p * q
    assert [pq(i) for i in range(3)] == [q(p(i)) for i in range(3)]


def test_from_cycles_and_order():
    p = Permutation.from_cycles(6, [(0, 1, 2), (3, 4)])
    assert p.order() == 6
    assert sorted(p.cycle_lengths()) == [1, 2, 3]


def test_rejects_non_bijection():
    with pytest.raises((ValueError, DegreeMismatch)):
        Permutation([0, 0, 1])


@given(same_degree(3))
def test_associative(ps):
    a, b, c = (Permutation(x) for x in ps)
    assert (a * b) * c == a * (b * c)


@given(perms)
def test_inverse_and_identity(images):
    p = Permutation(images)
    e = Permutation.identity(p.degree)
    assert p * p.inverse() == e
    assert p.inverse() * p == e
    assert p * e == p


@given(perms, st.integers(-5, 12))
def test_power_matches_repeated_product(images, k):
    p = Permutation(images)
    expected = Permutation.identity(p.degree)
    base = p if k >= 0 else p.inverse()
    for _ in range(abs(k)):
        expected = expected * base
    assert p**k == expected


@given(perms)
def test_order_is_lcm_of_cycles(images):
    p = Permutation(images)
    assert p.order() == int(np.lcm.reduce(p.cycle_lengths()))
    assert (p ** p.order()).is_identity()
