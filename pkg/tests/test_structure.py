import numpy as np
import pytest

from charprod.analyze.structure import (
    character_stabilizer,
    eta,
    fitting_data,
    fully_ramified_check,
    is_dihedral,
    is_extraspecial,
    orbit_count_on_section,
    structure_report,
)
from charprod.builders.named import named_group
from charprod.characters.classfunc import is_faithful
from charprod.characters.table import character_table, subgroup_table
from charprod.errors import NotNormal
from charprod.perm.subgroups import center_mask, join_mask

from conftest import named_table, spec_table


def faithful_of_degree(t, d):
    return [i for i in range(t.k) if t.degrees[i] == d and is_faithful(t.row(i))]


def test_eta_examples():
    t = spec_table("e125_sl23")
    for i in faithful_of_degree(t, 10):
        r = eta(t.group, i, t)
        assert r.eta == 2 and r.multiplicity_multiset == [1, 4] and r.constituent_degrees == [3, 24]
    t = spec_table("e343_tilde_gl23")
    profiles = [eta(t.group, i, t) for i in faithful_of_degree(t, 14)]
    assert any(r.eta == 2 and r.constituent_degrees == [3, 48] and r.multiplicity_multiset == [1, 4] for r in profiles)
    t = named_table("S4")
    assert all(eta(t.group, i, t).eta == 0 for i in range(t.k) if t.degrees[i] == 1)


def test_fully_ramified_sl23():
    t = named_table("SL(2,3)")
    G = t.group
    Q8 = np.isin(G.element_orders, (1, 2, 4))
    chk = fully_ramified_check(t, faithful_of_degree(t, 2)[0], Q8, center_mask(G))
    assert chk.holds and chk.e == 2 and chk.index == 4


def test_fully_ramified_linear_is_false():
    t = named_table("C6")
    G = t.group
    full = np.ones(G.order, dtype=bool)
    assert not fully_ramified_check(t, 1, full, full)


def test_fully_ramified_e27_c4():
    t = spec_table("e27_c4")
    G = t.group
    E = G.extraspecial_subgroup
    chk = fully_ramified_check(t, faithful_of_degree(t, 3)[0], E, center_mask(G))
    assert chk.holds and chk.e == 3
    assert all([chk.restriction_irreducible, chk.scalar_on_z, chk.square_index, chk.vanishes_off_z])


def test_fully_ramified_rejects_non_normal():
    t = named_table("S4")
    G = t.group
    with pytest.raises(NotNormal):
        fully_ramified_check(t, 0, G.closure([int(np.flatnonzero(G.element_orders == 2)[0])]), [G.identity_index])


def test_orbit_counts():
    G = spec_table("e27_c4").group
    assert orbit_count_on_section(G, G.extraspecial_subgroup, center_mask(G)) == (2, [4, 4])
    G = spec_table("e27_q8").group
    assert orbit_count_on_section(G, G.extraspecial_subgroup, center_mask(G)) == (1, [8])
    V = named_group("V4")
    trivial = np.zeros(V.order, dtype=bool)
    trivial[V.identity_index] = True
    assert orbit_count_on_section(V, np.ones(V.order, dtype=bool), trivial, acting=trivial) == (3, [1, 1, 1])


def test_orbit_count_needs_elementary_abelian_section():
    G = named_group("C4")
    trivial = np.zeros(4, dtype=bool)
    trivial[G.identity_index] = True
    with pytest.raises(ValueError):
        orbit_count_on_section(G, np.ones(4, dtype=bool), trivial)


def test_character_stabilizer_trivial_character():
    t = spec_table("wreath_3_1")
    W = t.group
    Kt = subgroup_table(t, W.K)
    assert character_stabilizer(W, W.K, 0, Kt) is W


def test_character_stabilizer_wreath_2_1():
    t = spec_table("wreath_2_1")
    W = t.group
    Kt = subgroup_table(t, W.K)
    orders = sorted(character_stabilizer(W, W.K, i, Kt).order for i in range(1, Kt.k))
    # two characters of C2^2 are swapped by the translation, one is fixed
    assert orders == [4, 4, 8]


def test_character_stabilizer_wreath_3_1():
    t = spec_table("wreath_3_1")
    W = t.group
    Kt = subgroup_table(t, W.K)
    target = join_mask(W, W.K, W.Fstar)
    assert target.sum() == 54
    hits = [i for i in range(Kt.k) if np.array_equal(character_stabilizer(W, W.K, i, Kt).mask_in(W), target)]
    assert hits
    for i in hits:
        assert W.order // character_stabilizer(W, W.K, i, Kt).order == 3


def test_type_helpers():
    assert is_extraspecial(named_group("Q8")) and is_extraspecial(named_group("Q8oD8"))
    assert not is_extraspecial(named_group("C8"))
    assert all(is_dihedral(named_group(f"D{n}")) for n in (8, 16, 32, 64))
    assert not is_dihedral(named_group("Q16")) and not is_dihedral(named_group("SD16"))
    fd = fitting_data(named_group("~GL(2,3)"))
    assert fd.fitting_order == 8 and fd.fitting_type == "Q8" and fd.second_index == 3 and fd.top_index == 2


def test_structure_report_sl23():
    t = named_table("SL(2,3)")
    s = structure_report(t, faithful_of_degree(t, 2)[0])
    assert s.z_order == 2 and s.dl == 3 and s.center_quotient_type == "A4"
    primary = s.primary
    assert primary.fully_ramified and primary.e == 2 and primary.quotient_type == "C3"
    assert s.to_dict()["sections"][0]["E_order"] == 8
