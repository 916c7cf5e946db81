"""Extraspecial groups of exponent p in symplectic coordinates.

Elements are pairs (v, z) with v in GF(p)^2n and z in GF(p), multiplied by

    (u, z)(v, w) = (u + v, z + w + f(u, v)),  f(u, v) = <u, v> / 2,

where <u, v> = u J v^T for J = [[0, I], [-I, 0]].  The element (v, z) is
encoded as the integer ``vector_index(v) * p + z``; the carrier is the
right-regular permutation representation on these codes, so the code of a
carrier element is its image of point 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from sympy import isprime

from ..errors import NotSymplectic
from ..perm.group import PermGroup
from .fields import FFMatrix, standard_symplectic_form
from .matrices import all_vectors, vector_index


@dataclass(frozen=True, eq=False)
class ExtraspecialGroup:
    p: int
    n: int
    carrier: PermGroup = field(repr=False)
    form: np.ndarray = field(repr=False)

    @property
    def order(self) -> int:
        return self.p ** (2 * self.n + 1)

    @property
    def vectors(self) -> np.ndarray:
        return all_vectors(self.p, 2 * self.n)

    def encode(self, v, z) -> np.ndarray:
        v = np.asarray(v, dtype=np.int64)
        return vector_index(v, self.p) * self.p + np.asarray(z, dtype=np.int64) % self.p

    def decode(self, code) -> tuple[np.ndarray, np.ndarray]:
        code = np.asarray(code, dtype=np.int64)
        return self.vectors[code // self.p], code % self.p

    def pairing(self, u, v) -> np.ndarray:
        """The symplectic form <u, v> (batched over leading axes)."""
        u = np.asarray(u, dtype=np.int64)
        v = np.asarray(v, dtype=np.int64)
        return np.einsum("...i,ij,...j->...", u, self.form, v) % self.p

    def multiply_codes(self, a, b) -> np.ndarray:
        (u, z), (v, w) = self.decode(a), self.decode(b)
        half = pow(2, -1, self.p)
        return self.encode((u + v) % self.p, z + w + half * self.pairing(u, v))

    def coordinates(self, i: int) -> tuple[np.ndarray, int]:
        """(v, z) of the carrier element with index ``i``."""
        v, z = self.decode(int(self.carrier.elements[int(i)][0]))
        return v, int(z)

    def code_of(self, perm) -> int:
        return int(np.asarray(perm)[0])

    def element_perm(self, v, z) -> np.ndarray:
        """Right multiplication by (v, z) as a permutation of the codes."""
        codes = np.arange(self.order)
        return self.multiply_codes(codes, self.encode(v, z)).astype(np.int64)

    def index_of(self, v, z) -> int:
        return self.carrier.index(self.element_perm(v, z))


def extraspecial(p: int, n: int, **kwargs) -> ExtraspecialGroup:
    """The extraspecial group of order p^(2n+1) and exponent p (p odd)."""
    if p == 2 or not isprime(p):
        raise ValueError("the exponent-p model needs an odd prime; use the named Q8oD8 for p = 2")
    if n < 1:
        raise ValueError("n must be positive")
    form = standard_symplectic_form(n) % p
    shell = ExtraspecialGroup(p, n, carrier=None, form=form)
    eye = np.eye(2 * n, dtype=np.int64)
    gens = [shell.element_perm(eye[i], 0) for i in range(2 * n)]
    carrier = PermGroup(gens, shell.order, name=f"{p}^(1+{2 * n})", **kwargs)
    return ExtraspecialGroup(p, n, carrier=carrier, form=form)


def check_symplectic(M: FFMatrix, form: np.ndarray) -> None:
    """Raise NotSymplectic with the first basis pair (i, j) where M fails."""
    a = M.array
    lhs = (a @ form @ a.T) % M.q
    rhs = np.asarray(form) % M.q
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        i, j = (int(t) for t in bad[0])
        raise NotSymplectic(f"<e{i}M, e{j}M> = {lhs[i, j]} but <e{i}, e{j}> = {rhs[i, j]}", pair=(i, j))


def winter_lift(M, E: ExtraspecialGroup) -> np.ndarray:
    """The automorphism (v, z) -> (vM, z) as a permutation of E's codes."""
    M = M if isinstance(M, FFMatrix) else FFMatrix.of(E.p, M)
    if M.q != E.p or M.n != 2 * E.n:
        raise NotSymplectic("matrix has the wrong field or dimension")
    check_symplectic(M, E.form)
    codes = np.arange(E.order)
    v, z = E.decode(codes)
    return E.encode((v @ M.array) % E.p, z).astype(np.int64)
