"""Subgroup machinery for enumerated permutation groups.

Functions ending in ``_mask`` work with boolean masks over the element list
of ``G`` and are the workhorses; the public wrappers return subgroup
handles (``PermGroup`` objects whose ``parent`` is ``G``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np
from sympy import factorint, isprime

from ..errors import EnumerationRequired, NotNormal, NotSolvable, NotSubgroup
from .group import PermGroup


def as_mask(G: PermGroup, S) -> np.ndarray:
    """Coerce a subgroup handle, mask, or index collection to a mask over ``G``."""
    if isinstance(S, PermGroup):
        if S is G:
            return np.ones(G.order, dtype=bool)
        return S.mask_in(G)
    arr = np.asarray(S)
    if arr.dtype == bool:
        if arr.shape != (G.order,):
            raise ValueError("mask has the wrong length")
        return arr
    mask = np.zeros(G.order, dtype=bool)
    mask[arr.astype(np.int64).reshape(-1)] = True
    return mask


def _generator_indices(G: PermGroup, S) -> list[int]:
    if isinstance(S, PermGroup):
        if S is G:
            return [G.index(g) for g in G.generator_arrays]
        return [G.index(g) for g in S.generator_arrays]
    return G.generators_for_mask(as_mask(G, S))


def _handle(G: PermGroup, mask: np.ndarray, name: str | None = None) -> PermGroup:
    if mask.all():
        return G
    return G.subgroup_from_mask(mask, name=name)


def _require(G: PermGroup) -> None:
    if not G.is_enumerable:
        raise EnumerationRequired(f"{G!r} is not enumerable")


# -- centralizers and normality -------------------------------------------


def centralizer_mask(G: PermGroup, S) -> np.ndarray:
    _require(G)
    if isinstance(S, PermGroup) or (np.asarray(S).dtype == bool):
        elems = _generator_indices(G, S)
    else:
        elems = np.asarray(list(S), dtype=np.int64).reshape(-1).tolist()
    idx = np.arange(G.order)
    mask = np.ones(G.order, dtype=bool)
    for s in elems:
        mask &= G.mul(idx, s) == G.mul(s, idx)
    return mask


def centralizer(G: PermGroup, S) -> PermGroup:
    """Centralizer in ``G`` of a subgroup or a collection of element indices."""
    return _handle(G, centralizer_mask(G, S))


def center_mask(G: PermGroup) -> np.ndarray:
    return centralizer_mask(G, G)


def center(G: PermGroup) -> PermGroup:
    return _handle(G, center_mask(G), name="Z")


def is_subgroup_mask(G: PermGroup, mask: np.ndarray) -> bool:
    members = np.flatnonzero(mask)
    if members.size == 0 or not mask[G.identity_index]:
        return False
    try:
        G.generators_for_mask(mask)
    except NotSubgroup:
        return False
    return True


def is_normal(G: PermGroup, N) -> bool:
    mask = as_mask(G, N)
    gens_n = _generator_indices(G, N)
    for g in G.generator_arrays:
        gi = G.index(g)
        if not mask[G.conj(np.asarray(gens_n, dtype=np.int64), gi)].all():
            return False
    return True


def normalizer_mask(G: PermGroup, H) -> np.ndarray:
    _require(G)
    hmask = as_mask(G, H)
    gens_h = _generator_indices(G, H)
    idx = np.arange(G.order)
    mask = np.ones(G.order, dtype=bool)
    for h in gens_h:
        mask &= hmask[G.conj(h, idx)]
    return mask


def normalizer(G: PermGroup, H) -> PermGroup:
    return _handle(G, normalizer_mask(G, H))


# -- closures ----------------------------------------------------------------


def normal_closure_mask(G: PermGroup, S) -> np.ndarray:
    """Smallest normal subgroup of ``G`` containing the element set ``S``."""
    _require(G)
    if isinstance(S, PermGroup) or np.asarray(S).dtype == bool:
        seeds = np.flatnonzero(as_mask(G, S))
    else:
        seeds = np.unique(np.asarray(list(S), dtype=np.int64).reshape(-1))
    if seeds.size and (seeds < 0).any():
        raise NotSubgroup("element set is not contained in the group")
    cls = G.classes
    target = cls.mask_of(np.unique(cls.class_of[seeds])) if seeds.size else np.zeros(G.order, bool)
    target[G.identity_index] = True
    # one representative per class is usually enough to generate
    gens = [int(cls.members(c)[0]) for c in np.unique(cls.class_of[seeds])] if seeds.size else []
    gens = [g for g in gens if g != G.identity_index]
    H = G.closure(gens)
    while True:
        missing = np.flatnonzero(target & ~H)
        if missing.size == 0:
            return H
        gens.append(int(missing[0]))
        H = G.closure(gens, start=H)


def normal_closure(G: PermGroup, S) -> PermGroup:
    return _handle(G, normal_closure_mask(G, S))


def join_mask(G: PermGroup, *subs) -> np.ndarray:
    gens = []
    for S in subs:
        gens.extend(_generator_indices(G, S))
    return G.closure(gens)


# -- derived series, solvability, nilpotency ---------------------------------


def derived_subgroup_mask(G: PermGroup, H=None) -> np.ndarray:
    """Commutator subgroup of ``H`` (default ``G``) as a mask over ``G``.

    ``H`` must be normal in ``G``: the result is then the ``G``-normal
    closure of the commutators of ``H``'s generators.
    """
    H = G if H is None else H
    gens = np.asarray(_generator_indices(G, H), dtype=np.int64)
    if gens.size == 0:
        mask = np.zeros(G.order, dtype=bool)
        mask[G.identity_index] = True
        return mask
    a, b = np.meshgrid(gens, gens)
    comms = np.unique(G.commutator(a.ravel(), b.ravel()))
    return normal_closure_mask(G, comms)


@dataclass(frozen=True)
class DerivedSeries:
    orders: tuple[int, ...]
    masks: tuple[np.ndarray, ...]
    solvable: bool

    @property
    def length(self) -> int:
        if not self.solvable:
            raise NotSolvable(f"derived series stabilizes at order {self.orders[-1]}")
        return len(self.orders) - 1


def derived_series(G: PermGroup) -> DerivedSeries:
    _require(G)
    masks = [np.ones(G.order, dtype=bool)]
    orders = [G.order]
    while orders[-1] > 1:
        D = derived_subgroup_mask(G, masks[-1])
        n = int(D.sum())
        if n == orders[-1]:
            return DerivedSeries(tuple(orders), tuple(masks), solvable=False)
        masks.append(D)
        orders.append(n)
    return DerivedSeries(tuple(orders), tuple(masks), solvable=True)


def derived_length(G: PermGroup) -> int:
    """Derived length; raises NotSolvable for non-solvable groups."""
    return derived_series(G).length


def is_solvable(G: PermGroup) -> bool:
    return derived_series(G).solvable


# -- Sylow subgroups and the Fitting chain --------------------------------------


def _p_part(n: int, p: int) -> int:
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def sylow_mask(G: PermGroup, p: int) -> np.ndarray:
    """A Sylow ``p``-subgroup, grown from a ``p``-element inside normalizers."""
    _require(G)
    target = _p_part(G.order, p)
    orders = G.element_orders
    is_p_elt = _p_power(orders, p)
    P = np.zeros(G.order, dtype=bool)
    P[G.identity_index] = True
    gens: list[int] = []
    while P.sum() < target:
        N = normalizer_mask(G, P) if gens else np.ones(G.order, dtype=bool)
        cand = np.flatnonzero(N & ~P & is_p_elt)
        if cand.size == 0:
            raise RuntimeError("Sylow search stalled")
        # the element of largest order grows P fastest
        y = int(cand[np.argmax(orders[cand])])
        gens.append(y)
        P = G.closure(gens, start=P if len(gens) > 1 else None)
    return P


def _p_power(orders: np.ndarray, p: int) -> np.ndarray:
    o = orders.copy()
    while True:
        div = (o % p == 0) & (o > 1)
        if not div.any():
            break
        o[div] //= p
    return o == 1


def core_mask(G: PermGroup, H) -> np.ndarray:
    """Largest normal subgroup of ``G`` inside ``H``: the classes contained in it."""
    hmask = as_mask(G, H)
    cls = G.classes
    inside = np.bincount(cls.class_of, weights=hmask, minlength=cls.k) == cls.sizes
    return inside[cls.class_of]


def p_core_mask(G: PermGroup, p: int) -> np.ndarray:
    return core_mask(G, sylow_mask(G, p))


def fitting_mask(G: PermGroup) -> np.ndarray:
    cores = [p_core_mask(G, p) for p in sorted(factorint(G.order))]
    if not cores:
        return np.ones(G.order, dtype=bool)
    gens = []
    for c in cores:
        if c.sum() > 1:
            gens.extend(G.generators_for_mask(c))
    return G.closure(gens)


def fitting_subgroup(G: PermGroup) -> PermGroup:
    return _handle(G, fitting_mask(G), name="F")


def is_nilpotent(G: PermGroup) -> bool:
    return bool(fitting_mask(G).all())


def fitting_chain(G: PermGroup) -> tuple[PermGroup, PermGroup]:
    """``(F(G), F2(G))`` where ``F2/F`` is the Fitting subgroup of ``G/F``."""
    if not is_solvable(G):
        raise NotSolvable("the Fitting chain is only defined here for solvable groups")
    F = fitting_mask(G)
    Q = quotient_group(G, F)
    F2 = Q.preimage_mask(fitting_mask(Q.group))
    return _handle(G, F, name="F"), _handle(G, F2, name="F2")


# -- quotients ---------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Quotient:
    """``G/N`` acting regularly on the cosets of ``N``."""

    source: PermGroup
    kernel: np.ndarray
    group: PermGroup
    projection: np.ndarray
    coset_of: np.ndarray

    def preimage_mask(self, S) -> np.ndarray:
        return as_mask(self.group, S)[self.projection]

    def image_mask(self, S) -> np.ndarray:
        mask = np.zeros(self.group.order, dtype=bool)
        mask[self.projection[as_mask(self.source, S)]] = True
        return mask

    def project(self, i):
        return self.projection[np.asarray(i)]


def quotient_group(G: PermGroup, N) -> Quotient:
    _require(G)
    nmask = as_mask(G, N)
    if not is_normal(G, N if isinstance(N, PermGroup) else nmask):
        raise NotNormal("quotient requires a normal subgroup")
    n = int(nmask.sum())
    index = G.order // n
    # cosets x N are the orbits of right multiplication by N
    members = np.flatnonzero(nmask)
    coset = np.full(G.order, -1, dtype=np.int64)
    reps = []
    order = np.concatenate([[G.identity_index], np.arange(G.order)])
    for x in order.tolist():
        if coset[x] >= 0:
            continue
        coset[G.mul(x, members)] = len(reps)
        reps.append(x)
        if len(reps) == index:
            break
    if (coset < 0).any():
        raise NotNormal("cosets do not partition the group")
    reps = np.asarray(reps, dtype=np.int64)
    # right action xN -> xgN, well defined because N is normal
    gens = []
    for g in G.generator_arrays:
        gi = G.index(g)
        gens.append(coset[G.mul(reps, gi)])
    Qg = PermGroup(gens, index, name=f"quotient of order {index}")
    if Qg.order != index:
        raise NotNormal("coset action is not regular")
    # an element is determined by the image of the trivial coset (label 0)
    by_image = np.empty(index, dtype=np.int64)
    by_image[Qg.elements[:, 0]] = np.arange(index)
    projection = by_image[coset]
    return Quotient(G, nmask, Qg, projection, coset)


# -- chief factors and normal subgroups ----------------------------------------


def _order_mod(G: PermGroup, x: int, zmask: np.ndarray) -> int:
    cur = x
    t = 1
    while not zmask[cur]:
        cur = int(G.mul(cur, x))
        t += 1
    return t


def minimal_normal_subgroups_above_mask(G: PermGroup, Z) -> list[np.ndarray]:
    """Every ``E`` with ``E/Z`` minimal normal in ``G/Z``, in canonical order."""
    zmask = as_mask(G, Z)
    if zmask.all():
        raise ValueError("Z equals G: there is no chief factor above it")
    if not is_normal(G, Z if isinstance(Z, PermGroup) else zmask):
        raise NotNormal("Z is not normal")
    cls = G.classes
    zclasses = cls.classes_in(zmask)
    candidates = {}
    for c in range(cls.k):
        r = int(cls.representatives[c])
        if zmask[r]:
            continue
        if not isprime(_order_mod(G, r, zmask)):
            continue
        gens_mask = cls.mask_of(list(zclasses) + [c])
        E = normal_closure_mask(G, np.flatnonzero(gens_mask))
        candidates.setdefault(E.tobytes(), E)
    cands = list(candidates.values())
    minimal = [E for E in cands if not any((F.sum() < E.sum()) and (F <= E).all() for F in cands)]
    minimal.sort(key=lambda m: (int(m.sum()), tuple(np.flatnonzero(m))))
    return minimal


def minimal_normal_above(G: PermGroup, Z) -> PermGroup:
    """``E`` with ``E/Z`` a chief factor of ``G``; smallest order, then lexicographic."""
    return _handle(G, minimal_normal_subgroups_above_mask(G, Z)[0], name="E")


def normal_subgroups_masks(G: PermGroup) -> list[np.ndarray]:
    """All normal subgroups, as unions of classes closed under joins."""
    cls = G.classes
    found: dict[frozenset, np.ndarray] = {}
    for c in range(cls.k):
        m = normal_closure_mask(G, cls.members(c)[:1])
        found.setdefault(frozenset(cls.classes_in(m).tolist()), m)
    changed = True
    while changed:
        changed = False
        items = list(found.items())
        for i, (ka, ma) in enumerate(items):
            for kb, mb in items[i + 1 :]:
                if ka <= kb or kb <= ka:
                    continue
                union = ka | kb
                if union in found:
                    continue
                m = normal_closure_mask(G, np.flatnonzero(ma | mb))
                key = frozenset(cls.classes_in(m).tolist())
                if key not in found:
                    found[key] = m
                    changed = True
    out = list(found.values())
    out.sort(key=lambda m: (int(m.sum()), tuple(np.flatnonzero(m)[:8])))
    return out


def index_of(G: PermGroup, H) -> int:
    return G.order // int(as_mask(G, H).sum())


def subgroup_product_order(G: PermGroup, A, B) -> int:
    a = as_mask(G, A)
    b = as_mask(G, B)
    return int(a.sum()) * int(b.sum()) // int((a & b).sum())


def intersection_mask(G: PermGroup, *subs) -> np.ndarray:
    return reduce(np.logical_and, (as_mask(G, S) for S in subs))
