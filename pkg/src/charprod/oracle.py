"""Reference character tables by brute force over the complex numbers.

This module deliberately shares nothing with the modular pipeline: the group
is re-enumerated from generator tuples, classes are found by conjugating
every element by every element, structure constants are counted over all
pairs, and characters come from floating-point eigenvectors of a random
combination of the class-sum matrices.  It is meant for groups of a few
hundred elements.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

ORACLE_LIMIT = 400


def _compose(p: tuple, q: tuple) -> tuple:
    # p first, then q
    return tuple(q[i] for i in p)


def _inverse(p: tuple) -> tuple:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def enumerate_elements(generators) -> list[tuple]:
    gens = [tuple(int(x) for x in g) for g in generators]
    n = len(gens[0]) if gens else 1
    identity = tuple(range(n))
    seen = {identity}
    order = [identity]
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = _compose(x, g)
                if y not in seen:
                    seen.add(y)
                    order.append(y)
                    nxt.append(y)
        frontier = nxt
        if len(order) > ORACLE_LIMIT:
            raise ValueError(f"group has more than {ORACLE_LIMIT} elements")
    return order


@dataclass(frozen=True)
class BruteTable:
    elements: list
    classes: list[list[tuple]]
    sizes: np.ndarray
    inverse_class: np.ndarray
    values: np.ndarray  # complex, rows = characters, columns = classes
    degrees: np.ndarray

    def class_of(self, element: tuple) -> int:
        for c, members in enumerate(self.classes):
            if element in members:
                return c
        raise KeyError(element)


def brute_force_table(generators, seed: int = 0) -> BruteTable:
    elements = enumerate_elements(generators)
    index = {x: i for i, x in enumerate(elements)}
    n = len(elements)
    inverses = [_inverse(x) for x in elements]
    class_id = [-1] * n
    classes: list[list[tuple]] = []
    for i, x in enumerate(elements):
        if class_id[i] >= 0:
            continue
        members = sorted({_compose(_compose(inverses[j], x), g) for j, g in enumerate(elements)})
        for y in members:
            class_id[index[y]] = len(classes)
        classes.append(members)
    k = len(classes)
    sizes = np.array([len(c) for c in classes])
    inverse_class = np.array([class_id[index[_inverse(c[0])]] for c in classes])
    # a[i, j, l] = #{(x, y) in C_i x C_j : x y = g_l} for a fixed g_l in C_l
    a = np.zeros((k, k, k))
    for i, ci in enumerate(classes):
        for x in ci:
            for y in elements:
                z = _compose(x, y)
                l = class_id[index[z]]
                if classes[l][0] == z:
                    a[i, class_id[index[y]], l] += 1
    rng = np.random.default_rng(seed)
    coeffs = rng.standard_normal(k)
    # central characters w satisfy sum_l a[i, j, l] w_l = w_i w_j, so w is a
    # right eigenvector of M_j[i, l] = a[i, j, l] for every j
    m = np.einsum("j,ijl->il", coeffs, a)
    _, vecs = np.linalg.eig(m)
    rows, degrees = [], []
    identity_class = class_id[index[elements[0]]]
    for v in vecs.T:
        w = v / v[identity_class]
        s = float(np.real(np.sum(w * w[inverse_class] / sizes)))
        d = math.sqrt(n / s)
        rows.append(w * d / sizes)
        degrees.append(int(round(d)))
    order = sorted(range(k), key=lambda r: (degrees[r], [round(float(np.real(x)), 6) for x in rows[r]]))
    values = np.array([rows[r] for r in order])
    return BruteTable(elements, classes, sizes, inverse_class, values, np.array([degrees[r] for r in order]))


def inner_products(values: np.ndarray, sizes: np.ndarray, order: int) -> np.ndarray:
    """Gram matrix [chi_i, chi_j]."""
    return (values * sizes) @ values.conj().T / order


def square_multiplicities(values: np.ndarray, sizes: np.ndarray, order: int) -> np.ndarray:
    """m[i, j] = [chi_i conj(chi_i), chi_j], rounded to integers."""
    squares = np.abs(values) ** 2
    return np.rint(np.real((squares * sizes) @ values.conj().T / order)).astype(np.int64)
