import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from charprod.builders.named import named_group
from charprod.builders.spec import shipped_specs
from charprod.perm.group import trivial_group

GROUPS = ["Q8", "SL(2,3)", "S4", "GL(2,3)", "~GL(2,3)", "D32", "SD16"]


def test_trivial_group_has_one_class():
    assert trivial_group(2).classes.k == 1


def test_q8_classes():
    assert sorted(named_group("Q8").classes.sizes.tolist()) == [1, 1, 2, 2, 2]


def test_sl23_classes():
    cls = named_group("SL(2,3)").classes
    assert cls.k == 7
    assert sorted(cls.sizes.tolist()) == [1, 1, 4, 4, 4, 4, 6]


@pytest.mark.parametrize("name", GROUPS)
def test_class_invariants(name):
    G = named_group(name)
    cls = G.classes
    assert cls.sizes.sum() == G.order
    assert cls.class_of[G.identity_index] == 0 and cls.sizes[0] == 1
    assert np.array_equal(cls.class_of[cls.representatives], np.arange(cls.k))
    assert np.array_equal(cls.class_of[G.inverse_indices], cls.inverse_class[cls.class_of])


@pytest.mark.parametrize("spec_id", ["e27_c4", "wreath_3_1", "e125_sl23"])
@settings(max_examples=20, deadline=None)
@given(seed=st.integers(0, 10**6))
def test_power_maps_on_sample(spec_id, seed):
    G = shipped_specs()[spec_id].build()
    cls = G.classes
    rng = np.random.default_rng(seed)
    xs = rng.integers(0, G.order, size=8)
    for k in range(1, cls.exponent + 1):
        if cls.exponent % k:
            continue
        assert np.array_equal(cls.class_of[G.power(xs, k)], cls.power_map(k)[cls.class_of[xs]])


@pytest.mark.parametrize("name", GROUPS)
def test_classes_are_conjugation_orbits(name):
    G = named_group(name)
    cls = G.classes
    all_g = np.arange(G.order)
    for c in range(cls.k):
        rep = cls.representatives[c]
        orbit = np.unique(G.conj(rep, all_g))
        assert np.array_equal(orbit, np.sort(cls.members(c)))
