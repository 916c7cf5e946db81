import numpy as np
import pytest

from charprod.builders.named import named_group, symmetric
from charprod.oracle import ORACLE_LIMIT, brute_force_table, enumerate_elements, inner_products


def test_s3_table():
    b = brute_force_table(named_group("S3").generator_arrays)
    assert sorted(b.degrees.tolist()) == [1, 1, 2]
    assert sorted(b.sizes.tolist()) == [1, 2, 3]


@pytest.mark.parametrize("name", ["C5", "Q8", "A4", "SL(2,3)", "D16"])
def test_orthonormal_rows(name):
    G = named_group(name)
    b = brute_force_table(G.generator_arrays)
    assert np.allclose(inner_products(b.values, b.sizes, G.order), np.eye(len(b.degrees)), atol=1e-9)
    assert int((b.degrees**2).sum()) == G.order


def test_seed_independent():
    gens = named_group("S4").generator_arrays
    assert np.allclose(brute_force_table(gens, seed=0).values, brute_force_table(gens, seed=5).values)


def test_limit():
    assert ORACLE_LIMIT < 720
    with pytest.raises(ValueError):
        enumerate_elements(symmetric(6).generator_arrays)
