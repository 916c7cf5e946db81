"""A solvable subgroup H of Sp(4,3) transitive on the 80 nonzero vectors,
with F(H) extraspecial of order 32 and |F2(H)/F(H)| = 5, and the product
of H with the extraspecial group 3^(1+4).

Q8 o D8 is realized by the Kronecker action of Q8 <= SL(2,3) and
D8 <= O(2,3), moved into the standard symplectic basis.  H is then found
inside the normalizer of that subgroup in Sp(4,3): an element of order 5
and, if needed, an involution to reach transitivity.  Candidates are
tried in a seeded random order and then by a full scan; every accepted H
is verified exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import SearchFailed
from ..perm.group import PermGroup
from ..perm.subgroups import fitting_chain, normalizer_mask
from .extraspecial import extraspecial
from .fields import FFMatrix, inv_mod, standard_symplectic_form, symplectic_basis
from .matrices import MatrixGroup
from .named import q8_tensor_d8, symplectic
from .products import ExtraspecialSemidirect, semidirect_extraspecial

DEFAULT_SEED = 20240901


@dataclass(eq=False)
class CaseVResult:
    H: MatrixGroup
    fitting: PermGroup
    fitting2: PermGroup
    orbit_sizes: list[int]
    matrices: list[FFMatrix] = field(repr=False)
    search_path: str = "random"


def extraspecial32_in_sp43() -> list[FFMatrix]:
    """Generators of Q8 o D8 inside Sp(4,3) for the form [[0, I], [-I, 0]]."""
    T = q8_tensor_d8()
    form = np.kron(standard_symplectic_form(1), np.eye(2, dtype=np.int64))
    P = symplectic_basis(form, 3)
    Pinv = inv_mod(P, 3)
    return [FFMatrix.of(3, (P @ m.array @ Pinv) % 3) for m in T.matrices]


def _orbits(perms: list[np.ndarray], degree: int) -> list[int]:
    labels = np.arange(degree)
    changed = True
    while changed:
        changed = False
        for g in perms:
            merged = np.minimum(labels, labels[g])
            merged_back = np.empty_like(merged)
            merged_back[g] = merged
            new = np.minimum(merged, merged_back)
            new = new[new]
            if not np.array_equal(new, labels):
                labels, changed = new, True
    return sorted(np.bincount(labels)[np.unique(labels)].tolist())


def _is_transitive_on_nonzero(group_perms: list[np.ndarray], degree: int) -> bool:
    return _orbits(group_perms, degree) == [1, degree - 1]


def build_case_v_subgroup(seed: int = DEFAULT_SEED) -> CaseVResult:
    """Search Sp(4,3) for the group H; raises SearchFailed if none exists."""
    Sp = symplectic(2, 3)
    fmats = extraspecial32_in_sp43()
    fidx = [Sp.index(Sp.perm_of(m)) for m in fmats]
    fmask = Sp.closure(fidx)
    N = normalizer_mask(Sp, fmask)
    orders = Sp.element_orders
    fives = np.flatnonzero(N & (orders == 5))
    twos = np.flatnonzero(N & ~fmask & (orders == 2))
    rng = np.random.default_rng(seed)

    def attempt(y):
        gens = fidx + [int(y)]
        Hmask = Sp.closure(gens)
        if _is_transitive_on_nonzero([Sp.elements[g] for g in gens], Sp.degree):
            return gens
        hnorm = normalizer_mask(Sp, Hmask)
        for t in twos[hnorm[twos]]:
            more = gens + [int(t)]
            if _is_transitive_on_nonzero([Sp.elements[g] for g in more], Sp.degree):
                return more
        return None

    def accept(gens, path):
        mats = [Sp.element_matrix(g) for g in gens]
        H = MatrixGroup(3, mats, "vectors", name="H")
        F, F2 = fitting_chain(H)
        if F.order != 32 or F2.order // F.order != 5 or H.order not in (160, 320):
            return None
        return CaseVResult(H, F, F2, _orbits(H.generator_arrays, H.degree), mats, path)

    for y in rng.permutation(fives)[:8]:
        gens = attempt(y)
        if gens is not None and (res := accept(gens, "random")) is not None:
            return res
    for y in fives:
        gens = attempt(y)
        if gens is not None and (res := accept(gens, "scan")) is not None:
            return res
    raise SearchFailed("no transitive subgroup with the required Fitting data in Sp(4,3)")


def case_v_group(H: MatrixGroup | None = None, seed: int = DEFAULT_SEED) -> ExtraspecialSemidirect:
    """3^(1+4) x| H for the subgroup H found above."""
    if H is None:
        H = build_case_v_subgroup(seed).H
    return semidirect_extraspecial(extraspecial(3, 2), H, name="3^(1+4):H")
