import pytest

from charprod.builders.named import general_linear23, named_group, tilde_gl23
from charprod.errors import OutOfCatalog
from charprod.perm.catalog import catalog_isomorphism_type, fingerprint, is_isomorphic_to
from charprod.perm.group import trivial_group
from charprod.perm.subgroups import sylow_mask


def test_trivial():
    assert catalog_isomorphism_type(trivial_group(3)) == "C1"


def test_tilde_gl23_matrices():
    T = tilde_gl23()
    assert catalog_isomorphism_type(T) == "~GL(2,3)"
    assert not is_isomorphic_to(T, "GL(2,3)")
    P = T.subgroup_from_mask(sylow_mask(T, 2))
    assert catalog_isomorphism_type(P) == "Q16"


def test_gl23_and_tilde_differ_in_element_orders():
    assert fingerprint(general_linear23()) != fingerprint(tilde_gl23())


@pytest.mark.parametrize("name", ["C8", "D16", "Q16", "SD16", "S4", "SL(2,3)", "A4", "V4", "S3", "Q8oD8"])
def test_named_groups_identify_themselves(name):
    assert catalog_isomorphism_type(named_group(name)) == name


def test_sixteen_element_groups_are_distinguished():
    names = ["C16", "D16", "Q16", "SD16"]
    for a in names:
        for b in names:
            assert is_isomorphic_to(named_group(a), b) == (a == b)


def test_out_of_catalog():
    with pytest.raises(OutOfCatalog):
        catalog_isomorphism_type(named_group("SL(2,5)"))
