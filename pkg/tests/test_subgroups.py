import numpy as np
import pytest

from charprod.builders.named import named_group
from charprod.builders.spec import shipped_specs
from charprod.errors import NotNormal
from charprod.perm.catalog import is_isomorphic_to
from charprod.perm.subgroups import (
    center,
    derived_length,
    fitting_chain,
    fitting_subgroup,
    is_nilpotent,
    is_normal,
    minimal_normal_above,
    minimal_normal_subgroups_above_mask,
    normal_closure,
    normal_subgroups_masks,
    p_core_mask,
    quotient_group,
    sylow_mask,
)

SMALL = ["Q8", "SL(2,3)", "S4", "GL(2,3)", "~GL(2,3)", "D16", "A4", "Q8oD8"]


def spec_group(spec_id):
    return shipped_specs()[spec_id].build()


def test_centers():
    assert center(named_group("Q8")).order == 2
    C6 = named_group("C6")
    assert center(C6).order == 6
    E = spec_group("e27_c4").extraspecial_subgroup
    assert center(E).order == 3


def test_normal_closure():
    G = named_group("S4")
    three_cycle = int(np.flatnonzero(G.element_orders == 3)[0])
    N = normal_closure(G, [three_cycle])
    assert N.order == 12 and is_isomorphic_to(N, "A4")
    assert normal_closure(G, [G.identity_index]).order == 1
    Q = named_group("Q8")
    x = int(np.flatnonzero(Q.element_orders == 4)[0])
    assert normal_closure(Q, [x]).order == 4


def test_derived_lengths():
    assert derived_length(named_group("C4")) == 1
    assert derived_length(named_group("SL(2,3)")) == 3
    assert derived_length(spec_group("wreath_2_1")) <= 6


def test_fitting():
    assert fitting_subgroup(named_group("Q8")).order == 8
    assert is_isomorphic_to(fitting_subgroup(named_group("~GL(2,3)")), "Q8")
    F = fitting_subgroup(named_group("S4"))
    assert F.order == 4 and is_isomorphic_to(F, "V4")


def test_quotients():
    G = named_group("SL(2,3)")
    assert quotient_group(G, np.ones(G.order, dtype=bool)).group.order == 1
    E27Q8 = spec_group("e27_q8")
    Q = quotient_group(E27Q8, E27Q8.extraspecial_subgroup).group
    assert Q.order == 8 and is_isomorphic_to(Q, "Q8")
    T = named_group("~GL(2,3)")
    assert quotient_group(T, fitting_subgroup(T)).group.order == 6


def test_quotient_rejects_non_normal():
    G = named_group("S4")
    transposition = int(np.flatnonzero(G.element_orders == 2)[0])
    with pytest.raises(NotNormal):
        quotient_group(G, G.closure([transposition]))


@pytest.mark.parametrize("name", SMALL)
def test_quotient_projection_is_homomorphism(name):
    G = named_group(name)
    for n in normal_subgroups_masks(G):
        q = quotient_group(G, n)
        assert q.group.order * int(n.sum()) == G.order
        gens = G.generators_for_mask(np.ones(G.order, dtype=bool))
        for a in gens:
            for b in gens:
                assert q.project(int(G.mul(a, b))) == int(q.group.mul(q.project(a), q.project(b)))
        assert derived_length(q.group) <= derived_length(G)


def test_minimal_normal_above():
    Q = named_group("Q8")
    assert minimal_normal_above(Q, center(Q)).order == 4
    G = spec_group("e27_q8")
    E = minimal_normal_above(G, center(G))
    assert E.order == 27
    V = named_group("V4")
    assert minimal_normal_above(V, [V.identity_index]).order == 2


@pytest.mark.parametrize("name", SMALL + ["e27_c4", "wreath_3_1"])
def test_minimal_normal_is_minimal(name):
    G = spec_group(name) if "_" in name else named_group(name)
    masks = normal_subgroups_masks(G)
    for z in masks:
        if z.all():
            with pytest.raises(ValueError):
                minimal_normal_subgroups_above_mask(G, z)
            continue
        for e in minimal_normal_subgroups_above_mask(G, z):
            assert is_normal(G, e) and (z <= e).all() and e.sum() > z.sum()
            between = [m for m in masks if (z <= m).all() and (m <= e).all()]
            assert len(between) == 2


@pytest.mark.parametrize("name", SMALL + ["wreath_3_1", "e27_q8"])
def test_fitting_contains_normal_p_subgroups(name):
    G = spec_group(name) if "_" in name else named_group(name)
    F = fitting_subgroup(G)
    assert is_nilpotent(F)
    fmask = F.mask_in(G)
    for n in normal_subgroups_masks(G):
        order = int(n.sum())
        primes = {p for p in range(2, order + 1) if order % p == 0 and all(p % d for d in range(2, p))}
        if len(primes) == 1:
            assert (n <= fmask).all()
    F1, F2 = fitting_chain(G)
    assert F1.order == F.order and F2.order % F1.order == 0


@pytest.mark.parametrize("name", ["S4", "SL(2,3)", "GL(2,3)"])
def test_sylow_and_core(name):
    G = named_group(name)
    for p in (2, 3):
        P = sylow_mask(G, p)
        size = int(P.sum())
        assert size & (size - 1) == 0 if p == 2 else size == 3
        core = p_core_mask(G, p)
        assert is_normal(G, core) and (core <= P).all()
