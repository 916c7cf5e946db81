import numpy as np
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from charprod.characters.modular import (
    charpoly,
    choose_modulus,
    eigenspaces,
    hessenberg,
    nullspace,
    root_of_unity,
    roots,
    rref,
    to_symmetric,
)

P = 101


def square(n_max=6):
    return st.integers(1, n_max).flatmap(lambda n: arrays(np.int64, (n, n), elements=st.integers(0, P - 1)))


def test_choose_modulus():
    l = choose_modulus(12, 24)
    assert sympy.isprime(l) and l % 12 == 1 and l > 48
    assert all(not sympy.isprime(c) for c in range(49, l) if c % 12 == 1)


def test_root_of_unity_order():
    l = choose_modulus(24, 48)
    w = root_of_unity(24, l)
    assert pow(w, 24, l) == 1
    assert all(pow(w, 24 // q, l) != 1 for q in sympy.primefactors(24))


def test_to_symmetric():
    assert to_symmetric(np.array([0, 1, 50, 51, 100]), 101).tolist() == [0, 1, 50, -50, -1]


@settings(max_examples=60, deadline=None)
@given(arrays(np.int64, st.tuples(st.integers(1, 5), st.integers(1, 6)), elements=st.integers(0, P - 1)))
def test_rref_and_nullspace(a):
    red, pivots = rref(a, P)
    assert np.array_equal(red[:, pivots], np.eye(len(pivots), dtype=np.int64))
    ns = nullspace(a, P)
    assert len(pivots) + len(ns) == a.shape[1]
    assert not ((a @ ns.T) % P).any()
    if len(ns):
        assert rref(ns, P)[0].shape[0] == len(ns)


@settings(max_examples=60, deadline=None)
@given(square())
def test_charpoly_matches_sympy(a):
    x = sympy.symbols("x")
    expected = sympy.Poly(sympy.Matrix(a.tolist()).charpoly(x).as_expr(), x, modulus=P)
    coeffs = [int(c) % P for c in expected.all_coeffs()]
    assert charpoly(a, P).tolist() == coeffs


@settings(max_examples=40, deadline=None)
@given(square())
def test_hessenberg_is_similar(a):
    h, q = hessenberg(a, P, with_transform=True)
    assert not np.tril(h, -2).any()
    assert np.array_equal(h % P, (q @ a @ sympy_inverse(q)) % P)


def sympy_inverse(q):
    return np.array(sympy.Matrix(q.tolist()).inv_mod(P).tolist(), dtype=np.int64)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, P - 1), min_size=1, max_size=5, unique=True), st.integers(0, 10**6))
def test_eigenspaces_of_diagonalizable_operator(eigs, seed):
    rng = np.random.default_rng(seed)
    n = len(eigs)
    while True:
        s = rng.integers(0, P, size=(n, n))
        if sympy.Matrix(s.tolist()).det() % P:
            break
    op = (sympy_inverse(s) @ np.diag(eigs) @ s) % P
    spaces = eigenspaces(np.eye(n, dtype=np.int64), op, P)
    assert sum(len(b) for b in spaces) == n
    for b in spaces:
        image = (b @ op) % P
        lam = [e for e in eigs if np.array_equal(image, (e * b) % P)]
        assert len(lam) == 1
    assert sorted(roots(charpoly(op, P), P).tolist()) == sorted(eigs)
