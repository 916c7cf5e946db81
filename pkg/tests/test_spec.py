import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from charprod.builders.spec import GroupSpec, build, shipped_spec, shipped_specs, validate
from charprod.errors import GroupTooLarge, SpecError

ORDERS = {
    "c2": 2, "c3": 3, "d16": 16, "d32": 32, "d64": 64, "q8": 8, "sl23": 24, "gl23": 48, "tilde_gl23": 48,
    "q8_d8_central": 32, "e27_c4": 108, "e27_q8": 216, "e27_sl23": 648, "e125_sl23": 3000,
    "e343_tilde_gl23": 16464, "wreath_2_1": 8, "wreath_3_1": 162, "wreath_2_2": 192,
}


@pytest.mark.parametrize("spec_id,order", sorted(ORDERS.items()))
def test_shipped_spec_orders(spec_id, order):
    assert shipped_spec(spec_id).build().order == order


def test_stretch_spec_is_marked():
    spec = shipped_specs()["e243_sp43_transitive"]
    assert spec.meta.get("stretch") is True
    assert set(shipped_specs()) - {"e243_sp43_transitive"} == set(ORDERS)


@pytest.mark.parametrize("spec_id", sorted(ORDERS) + ["e243_sp43_transitive"])
def test_round_trip(spec_id):
    spec = shipped_spec(spec_id)
    again = GroupSpec.loads(spec.dumps())
    assert again == spec
    assert again.dumps() == spec.dumps()


@pytest.mark.parametrize(
    "doc",
    [
        {},
        {"type": "nonsense"},
        {"type": "named"},
        {"type": "matrix-group", "q": 3},
        {"type": "matrix-group", "q": 3, "generators": [[1, 0], [0, 1]]},
        {"type": "semidirect", "normal": {"type": "named", "name": "C3"}, "complement": {"type": "named", "name": "C2"}},
        {"type": "named", "name": "NoSuchGroup"},
    ],
)
def test_invalid_specs(doc):
    with pytest.raises(SpecError):
        GroupSpec.from_dict(doc).build()


def test_invalid_json():
    with pytest.raises(SpecError):
        GroupSpec.loads("{not json")


def test_bound():
    with pytest.raises(GroupTooLarge):
        shipped_spec("e125_sl23").build(bound=1000)


def test_subgroup_words():
    node = {"type": "subgroup", "of": {"type": "named", "name": "S4"}, "words": [[[0, 1]]]}
    validate(node)
    assert build(node).order in (2, 3, 4)


@given(st.sampled_from(["C2", "C5", "D8", "Q8", "S3", "A4", "V4", "SD16"]), st.text(max_size=12))
def test_named_specs_round_trip(name, description):
    spec = GroupSpec.from_dict({"id": "x", "description": description, "type": "named", "name": name})
    assert GroupSpec.from_dict(json.loads(spec.dumps())) == spec
