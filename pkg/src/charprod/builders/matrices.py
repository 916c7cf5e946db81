"""Matrix groups over prime fields realized as permutation groups.

Matrices act on row vectors, ``v -> v M``, so the permutation of ``M N`` is
the product (left to right) of the permutations of ``M`` and ``N``.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from ..perm.group import PermGroup
from .fields import FFMatrix


def all_vectors(q: int, n: int) -> np.ndarray:
    """All of GF(q)^n; row ``i`` holds the base-q digits of ``i`` (most significant first)."""
    idx = np.arange(q**n)
    return np.stack([(idx // q ** (n - 1 - j)) % q for j in range(n)], axis=1)


def vector_index(vecs: np.ndarray, q: int) -> np.ndarray:
    n = vecs.shape[-1]
    return (np.asarray(vecs) % q) @ (q ** np.arange(n - 1, -1, -1))


class MatrixGroup(PermGroup):
    """A group of invertible matrices over GF(q), acting on (nonzero) vectors."""

    def __init__(self, q: int, matrices: Sequence, action: str = "vectors", *, name=None, **kwargs):
        mats = [m if isinstance(m, FFMatrix) else FFMatrix.of(q, m) for m in matrices]
        if not mats:
            raise ValueError("at least one matrix is required")
        n = mats[0].n
        if any(m.n != n or m.q != q for m in mats):
            raise ValueError("matrices must share field and dimension")
        if any(m.det() == 0 for m in mats):
            raise ValueError("singular matrix")
        if action not in ("vectors", "nonzero-vectors"):
            raise ValueError(f"unknown action {action!r}")
        self.q, self.n, self.action = q, n, action
        self.matrices = tuple(mats)
        self.vectors = all_vectors(q, n)
        if action == "nonzero-vectors":
            self.vectors = self.vectors[1:]
        super().__init__([self.perm_of(m) for m in mats], len(self.vectors), name=name, **kwargs)

    def perm_of(self, m) -> np.ndarray:
        m = m if isinstance(m, FFMatrix) else FFMatrix.of(self.q, m)
        images = vector_index((self.vectors @ m.array) % self.q, self.q)
        if self.action == "nonzero-vectors":
            images = images - 1
        return images.astype(np.int16)

    def _point_of(self, vec) -> int:
        i = int(vector_index(np.asarray(vec)[None, :], self.q)[0])
        return i - 1 if self.action == "nonzero-vectors" else i

    def matrix_of(self, perm) -> FFMatrix:
        """Recover the matrix of a group element from the images of the unit vectors."""
        perm = np.asarray(perm)
        rows = []
        for i in range(self.n):
            e = np.zeros(self.n, dtype=np.int64)
            e[i] = 1
            rows.append(self.vectors[perm[self._point_of(e)]])
        return FFMatrix.of(self.q, np.array(rows))

    def element_matrix(self, i: int) -> FFMatrix:
        return self.matrix_of(self.elements[int(i)])

    def matrix_subgroup(self, matrices, name=None) -> "MatrixGroup":
        return MatrixGroup(self.q, matrices, self.action, name=name, parent=self)

    def orbits_on_nonzero_vectors(self) -> list[list[int]]:
        """Orbits on the nonzero vectors, as sorted lists of vector indices."""
        shift = 1 if self.action == "nonzero-vectors" else 0
        nonzero = np.arange(1, self.q**self.n)
        parent = np.arange(self.q**self.n)

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for g in self.generator_arrays:
            images = g[nonzero - shift].astype(np.int64) + shift
            for v, w in zip(nonzero.tolist(), images.tolist()):
                ra, rb = find(v), find(w)
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
        orbits: dict[int, list[int]] = {}
        for v in nonzero.tolist():
            orbits.setdefault(int(find(v)), []).append(v)
        return sorted(orbits.values(), key=lambda o: (len(o), o))


def matrix_group(q: int, matrices, action: str = "vectors", name=None, **kwargs) -> MatrixGroup:
    return MatrixGroup(q, matrices, action, name=name, **kwargs)
