import numpy as np
import pytest

from charprod.builders.named import named_group
from charprod.builders.products import wreath_affine
from charprod.characters.classfunc import degree_set
from charprod.characters.table import character_table, subgroup_table
from charprod.oracle import brute_force_table, square_multiplicities
from charprod.suite import compare_with_oracle

NAMES = ["C2", "C6", "V4", "S3", "Q8", "D8", "D16", "SD16", "Q16", "A4", "S4", "SL(2,3)", "GL(2,3)", "~GL(2,3)", "Q8oD8"]


def test_c2():
    t = character_table(named_group("C2"))
    assert t.degrees.tolist() == [1, 1]
    assert np.allclose(t.complex_values, [[1, 1], [1, -1]])


def test_frozen_degrees():
    # degree multisets from the brute-force oracle
    assert character_table(named_group("SL(2,3)")).degrees.tolist() == [1, 1, 1, 2, 2, 2, 3]
    assert character_table(named_group("Q8")).degrees.tolist() == [1, 1, 1, 1, 2]
    assert character_table(named_group("~GL(2,3)")).degrees.tolist() == [1, 1, 2, 2, 2, 3, 3, 4]
    assert degree_set(character_table(named_group("SL(2,3)"))) == {1, 2, 3}
    assert degree_set(character_table(named_group("C12"))) == {1}


@pytest.mark.parametrize("name", NAMES)
def test_table_invariants(name):
    G = named_group(name)
    t = character_table(G)
    assert t.check_orthogonality()
    assert (t.values[0] == 1).all()
    assert int((t.degrees.astype(np.int64) ** 2).sum()) == G.order
    assert all(G.order % int(d) == 0 for d in t.degrees)
    assert np.array_equal(t.values[:, 0], t.degrees % t.modulus)
    # row order: by degree, then by value vector
    keys = [(int(d), tuple(v)) for d, v in zip(t.degrees, t.values.tolist())]
    assert keys == sorted(keys)


@pytest.mark.parametrize("name", NAMES)
def test_second_orthogonality_complex(name):
    G = named_group(name)
    t = character_table(G)
    cv = t.complex_values
    gram = cv.conj().T @ cv
    centralizers = G.order / t.classes.sizes
    assert np.allclose(gram, np.diag(centralizers), atol=1e-8)


@pytest.mark.parametrize("name", NAMES)
def test_agrees_with_oracle(name):
    G = named_group(name)
    ok, detail = compare_with_oracle(G, character_table(G))
    assert ok, detail


def test_wreath_oracle():
    G = wreath_affine(2, 1)
    ok, detail = compare_with_oracle(G, character_table(G))
    assert ok, detail


@pytest.mark.parametrize("seed", [0, 1, 7, 1729])
def test_seed_does_not_change_table(seed):
    G = named_group("GL(2,3)")
    a = character_table(G, seed=seed)
    b = character_table(G)
    assert np.array_equal(a.values, b.values)


def test_subgroup_table_shares_modulus():
    G = named_group("SL(2,3)")
    t = character_table(G)
    Q = G.subgroup_from_mask(np.isin(G.element_orders, (1, 2, 4)))
    assert Q.order == 8
    s = subgroup_table(t, Q)
    assert s.modulus == t.modulus
    assert s.degrees.tolist() == [1, 1, 1, 1, 2]


def test_oracle_multiplicities_frozen():
    # SL(2,3): faithful degree-2 characters square to 1 + (degree 3)
    b = brute_force_table(named_group("SL(2,3)").generator_arrays)
    m = square_multiplicities(b.values, b.sizes, 24)
    principal = int(np.flatnonzero(np.all(np.isclose(b.values, 1), axis=1))[0])
    for i in np.flatnonzero(b.degrees == 2):
        row = m[i]
        assert row[principal] == 1
        assert sorted(int(b.degrees[j]) for j in np.flatnonzero(row) if j != principal) == [3]
