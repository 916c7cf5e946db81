import itertools
from collections import Counter

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from charprod.builders.case_v import build_case_v_subgroup, extraspecial32_in_sp43
from charprod.builders.extraspecial import extraspecial, winter_lift
from charprod.builders.fields import FFMatrix
from charprod.builders.matrices import MatrixGroup
from charprod.builders.named import (
    Q8_IN_SL23,
    SL23_IN_SL25,
    TILDE_X,
    TILDE_Y,
    TILDE_Z,
    named_group,
    special_linear2,
    symplectic,
    tilde_gl23,
    tilde_gl23_relations,
)
from charprod.builders.products import semidirect_extraspecial, wreath_affine
from charprod.errors import NotSymplectic, UnknownGroup
from charprod.perm.catalog import is_isomorphic_to
from charprod.perm.permutation import Permutation
from charprod.perm.subgroups import center, derived_subgroup_mask, fitting_chain, is_normal


def test_named_orders():
    assert named_group("C1").order == 1
    assert named_group("SL(2,5)").order == 120
    with pytest.raises(UnknownGroup):
        named_group("Monster")


def test_tilde_gl23():
    T = named_group("~GL(2,3)")
    assert T.order == 48
    D = derived_subgroup_mask(T)
    assert D.sum() == 24 and is_isomorphic_to(T.subgroup_from_mask(D), "SL(2,3)")
    assert all(tilde_gl23_relations().values())


def test_tilde_gl23_element_orders_differ_from_full_gl23():
    # GL(2,3) from every invertible 2x2 matrix over GF(3)
    mats = [np.array(m).reshape(2, 2) for m in itertools.product(range(3), repeat=4)]
    invertible = [m for m in mats if round(np.linalg.det(m)) % 3]
    assert len(invertible) == 48
    full = MatrixGroup(3, invertible, "nonzero-vectors")
    assert full.order == 48
    hist = lambda G: Counter(G.element_orders.tolist())
    assert hist(full) != hist(tilde_gl23())
    assert hist(tilde_gl23())[8] == 12


@pytest.mark.parametrize("mats,q", [((TILDE_X, TILDE_Y, TILDE_Z), 7), (Q8_IN_SL23, 3), (SL23_IN_SL25, 5)])
def test_special_linear_generators_have_determinant_one(mats, q):
    for m in mats:
        assert FFMatrix.of(q, m).det() == 1


@pytest.mark.parametrize("n,q", [(1, 3), (1, 5), (2, 3)])
def test_symplectic_generators_preserve_form(n, q):
    G = symplectic(n, q)
    from charprod.builders.fields import standard_symplectic_form

    J = standard_symplectic_form(n) % q
    for m in G.matrices:
        assert np.array_equal(m.array @ J @ m.array.T % q, J)
        assert m.det() == 1


@pytest.mark.parametrize("p,n,order", [(3, 1, 27), (5, 1, 125), (3, 2, 243)])
def test_extraspecial_shape(p, n, order):
    E = extraspecial(p, n)
    G = E.carrier
    assert G.order == E.order == order
    assert center(G).order == p
    assert set(G.element_orders.tolist()) == {1, p}
    D = derived_subgroup_mask(G)
    assert D.sum() == p


@pytest.mark.parametrize("p,n", [(3, 1), (5, 1), (3, 2)])
def test_commutator_is_symplectic_pairing(p, n):
    E = extraspecial(p, n)
    vecs = np.array(list(itertools.product(range(p), repeat=2 * n)))
    for u in vecs:
        for v in vecs:
            x = Permutation(E.element_perm(u, 0))
            y = Permutation(E.element_perm(v, 1))
            c = x.inverse() * y.inverse() * x * y
            w, z = E.decode(E.code_of(c.array))
            assert not w.any()
            assert int(z) == int(E.pairing(u, v)) % p


def test_winter_lift_identity_and_minus_identity():
    E = extraspecial(3, 1)
    codes = np.arange(E.order)
    assert np.array_equal(winter_lift(np.eye(2, dtype=int), E), codes)
    lift = winter_lift(2 * np.eye(2, dtype=int), E)
    v, z = E.decode(codes)
    v2, z2 = E.decode(lift)
    assert np.array_equal(v2, (-v) % 3)
    assert np.array_equal(z2, z)


def test_winter_lift_rejects_non_symplectic():
    E = extraspecial(3, 1)
    with pytest.raises(NotSymplectic) as info:
        winter_lift([[1, 0], [0, 2]], E)
    assert info.value.pair is not None


SL23 = special_linear2(3)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 23), st.integers(0, 23))
def test_winter_lift_is_multiplicative_automorphism(i, j):
    E = extraspecial(3, 1)
    m1, m2 = SL23.element_matrix(i), SL23.element_matrix(j)
    l1, l2, l12 = winter_lift(m1, E), winter_lift(m2, E), winter_lift(m1 * m2, E)
    assert np.array_equal(l2[l1], l12)
    a, b = np.meshgrid(np.arange(E.order), np.arange(E.order))
    assert np.array_equal(l1[E.multiply_codes(a, b)], E.multiply_codes(l1[a], l1[b]))
    assert np.array_equal(l1[E.encode(np.zeros((3, 2), dtype=int), np.arange(3))], E.encode(np.zeros((3, 2), dtype=int), np.arange(3)))


def test_winter_lift_injective_on_generators():
    E = extraspecial(3, 2)
    lifts = {tuple(winter_lift(m, E)) for m in symplectic(2, 3).matrices}
    assert len(lifts) == len(symplectic(2, 3).matrices)


def test_semidirect_orders():
    E3 = extraspecial(3, 1)
    G = semidirect_extraspecial(E3, MatrixGroup(3, Q8_IN_SL23))
    assert G.order == 216 and G.order // center(G).order == 72
    G = semidirect_extraspecial(extraspecial(5, 1), MatrixGroup(5, SL23_IN_SL25))
    assert G.order == 3000
    c4 = FFMatrix.of(3, Q8_IN_SL23[0])
    assert c4.order() == 4
    G = semidirect_extraspecial(E3, MatrixGroup(3, [c4]))
    assert G.order == 108
    assert is_normal(G, G.extraspecial_subgroup)


def test_semidirect_rejects_non_symplectic_complement():
    with pytest.raises(NotSymplectic):
        semidirect_extraspecial(extraspecial(3, 1), MatrixGroup(3, [[[2, 0], [0, 1]]]))


@pytest.mark.parametrize("p,m,order", [(2, 1, 8), (3, 1, 162), (2, 2, 192)])
def test_wreath_orders(p, m, order):
    W = wreath_affine(p, m)
    assert W.order == order
    q = p**m
    assert W.K.order == p**q and W.F.order == q and W.Fstar.order == q - 1
    assert is_normal(W, W.K)


def test_wreath_2_1_is_dihedral_of_order_8():
    assert is_isomorphic_to(wreath_affine(2, 1), "D8")


@pytest.mark.parametrize("p,m", [(2, 1), (3, 1), (2, 2), (5, 1)])
def test_wreath_point_stabilizer_is_scalars(p, m):
    W = wreath_affine(p, m)
    M = W.M
    fixing = M.elements[M.elements[:, 0] == 0]
    assert len(fixing) == W.Fstar.order
    assert {tuple(x) for x in fixing.tolist()} == {tuple(x) for x in W.Fstar.elements.tolist()}


def test_case_v_subgroup():
    result = build_case_v_subgroup()
    H = result.H
    assert H.order in (160, 320)
    assert sorted(len(o) for o in H.orbits_on_nonzero_vectors()) == [80]
    F, F2 = fitting_chain(H)
    assert F.order == 32 and center(F).order == 2 and not F.is_abelian()
    assert F2.order // F.order == 5
    assert len(extraspecial32_in_sp43()) > 0
