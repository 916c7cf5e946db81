import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from charprod.builders.fields import standard_symplectic_form
from charprod.builders.matrices import MatrixGroup
from charprod.builders.named import named_group, special_linear2, symmetric, symplectic
from charprod.errors import DegreeMismatch, EnumerationRequired, GroupTooLarge
from charprod.perm.group import PermGroup, group_from_generators, trivial_group
from charprod.perm.permutation import Permutation


def count_symplectic_bases(q: int) -> int:
    """Ordered bases e1, f1, e2, f2 of GF(q)^4 with the standard pairing, by direct count."""
    form = standard_symplectic_form(2)
    vecs = np.array(list(itertools.product(range(q), repeat=4)))
    pair = (vecs @ form @ vecs.T) % q
    total = 0
    for e1 in range(1, len(vecs)):
        for f1 in np.flatnonzero(pair[e1] == 1):
            perp = np.flatnonzero((pair[e1] == 0) & (pair[f1] == 0))
            total += int((pair[np.ix_(perp, perp)] == 1).sum())
    return total


def test_trivial_group():
    assert group_from_generators([Permutation.identity(4)]).order == 1
    assert trivial_group(3).order == 1


def test_sl23_on_nine_vectors():
    G = MatrixGroup(3, [m.array for m in special_linear2(3).matrices], "vectors")
    assert G.degree == 9
    assert G.order == 24


def test_sp43_order_matches_basis_count():
    G = symplectic(2, 3)
    assert G.degree == 81
    assert G.order == count_symplectic_bases(3) == 51840


def test_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        PermGroup([[1, 0], [1, 2, 0]])


def test_safety_bound():
    gens = [Permutation.from_cycles(12, [tuple(range(12))]), Permutation.from_cycles(12, [(0, 1)])]
    with pytest.raises(GroupTooLarge):
        PermGroup(gens)


def test_enumeration_bound():
    G = PermGroup(symmetric(8).generators, enumeration_bound=1000)
    assert G.order == 40320
    with pytest.raises(EnumerationRequired):
        G.elements


@pytest.mark.parametrize("name", ["Q8", "SL(2,3)", "S4", "~GL(2,3)", "D16"])
def test_order_equals_enumeration(name):
    G = named_group(name)
    assert len({tuple(x) for x in G.elements.tolist()}) == G.order
    for g in G.generators:
        assert G.contains(g)


def test_subgroup_elements_are_members():
    G = named_group("SL(2,3)")
    H = G.subgroup([G.element(5)])
    assert all(G.contains(x) for x in H.elements)
    assert H.is_subgroup_of(G)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**9))
def test_membership_rejects_non_members(seed):
    G = named_group("SL(2,3)")
    rng = np.random.default_rng(seed)
    p = rng.permutation(G.degree)
    members = {tuple(x) for x in G.elements.tolist()}
    assert G.contains(p) == (tuple(p.tolist()) in members)


@given(st.integers(0, 23), st.integers(0, 23))
def test_index_arithmetic(a, b):
    G = named_group("SL(2,3)")
    ab = int(G.mul(a, b))
    expected = Permutation(G.elements[a]) * Permutation(G.elements[b])
    assert G.index(expected) == ab
    g = Permutation(G.elements[b])
    conj = g.inverse() * Permutation(G.elements[a]) * g
    assert int(G.conj(a, b)) == G.index(conj)
