"""Semidirect, central and wreath products as permutation groups."""

from __future__ import annotations

from functools import cached_property

import numpy as np

from ..errors import GroupTooLarge, NotSymplectic
from ..perm.group import ENUMERATION_BOUND, PermGroup
from .extraspecial import ExtraspecialGroup, winter_lift
from .fields import GaloisField
from .matrices import MatrixGroup


class ExtraspecialSemidirect(PermGroup):
    """E x| H acting on the element set of E.

    E acts by right translation and H by the lifted automorphisms
    (v, z) -> (vM, z); this action is faithful, so the degree is |E|.
    """

    def __init__(self, E: ExtraspecialGroup, H: MatrixGroup, name=None, **kwargs):
        if not isinstance(H, MatrixGroup) or H.q != E.p or H.n != 2 * E.n:
            raise NotSymplectic("H must be a matrix group over GF(p) of dimension 2n")
        self.E_data = E
        self.H_matrices = H.matrices
        self._translations = E.carrier.generator_arrays
        self._lifts = [winter_lift(M, E) for M in H.matrices]
        super().__init__(self._translations + self._lifts, E.order, name=name, **kwargs)
        self.complement_order = H.order

    @cached_property
    def extraspecial_subgroup(self) -> PermGroup:
        return self.subgroup(self._translations, name="E")

    @cached_property
    def complement(self) -> PermGroup:
        return self.subgroup(self._lifts, name="H")


def semidirect_extraspecial(E: ExtraspecialGroup, H: MatrixGroup, name=None, **kwargs) -> ExtraspecialSemidirect:
    return ExtraspecialSemidirect(E, H, name=name, **kwargs)


def tensor_product_group(A: MatrixGroup, B: MatrixGroup, name=None) -> MatrixGroup:
    """Image of A x B acting on the Kronecker product of the natural modules.

    When A and B both contain -I this realizes their central product.
    """
    if A.q != B.q:
        raise ValueError("factors must be over the same field")
    ea = np.eye(A.n, dtype=np.int64)
    eb = np.eye(B.n, dtype=np.int64)
    mats = [np.kron(m.array, eb) for m in A.matrices] + [np.kron(ea, m.array) for m in B.matrices]
    return MatrixGroup(A.q, mats, A.action, name=name)


class WreathAffine(PermGroup):
    """C_p wr_X (F x| F*) with X = GF(q), q = p^m, and the affine action x -> f1 + f2 x.

    Points are pairs (x, c), x in X and c in Z_p, encoded as ``x * p + c``.
    """

    def __init__(self, p: int, m: int, name=None, bound: int = ENUMERATION_BOUND, **kwargs):
        field = GaloisField(p, m)
        q = field.q
        predicted = p**q * q * (q - 1)
        if predicted > bound:
            raise GroupTooLarge(f"wreath product of order {predicted} exceeds the bound {bound}")
        self.field, self.p, self.m, self.q = field, p, m, q
        xs = np.repeat(np.arange(q), p)
        cs = np.tile(np.arange(p), q)

        def point(x, c):
            return x * p + c

        self._base = []
        for x0 in range(q):
            img = point(xs, np.where(xs == x0, (cs + 1) % p, cs))
            self._base.append(img)
        self._translations = [point(field.add_table[xs, b], cs) for b in field.additive_basis()]
        w = field.primitive_element()
        self._scalars = [point(field.mul_table[xs, w], cs)] if q > 2 else []
        gens = self._base + self._translations + self._scalars
        super().__init__(gens, p * q, name=name or f"C{p} wr AGL(1,{q})", enumeration_bound=bound, **kwargs)

    @cached_property
    def K(self) -> PermGroup:
        """The base group C_p^X."""
        return self.subgroup(self._base, name="K")

    @cached_property
    def F(self) -> PermGroup:
        """Translations x -> x + f1."""
        return self.subgroup(self._translations, name="F")

    @cached_property
    def Fstar(self) -> PermGroup:
        """Scalars x -> f2 x."""
        return self.subgroup(self._scalars or [np.arange(self.degree)], name="F*")

    @cached_property
    def M(self) -> PermGroup:
        return self.subgroup(self._translations + self._scalars, name="M")


def wreath_affine(p: int, m: int = 1, **kwargs) -> WreathAffine:
    return WreathAffine(p, m, **kwargs)
