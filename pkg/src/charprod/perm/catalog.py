"""Isomorphism tests against a small catalog of named groups.

A candidate is first filtered by a fingerprint (order, class sizes,
element-order histogram, character degrees); survivors are decided by a
search for images of the model's generators, extended along the Cayley
graph of the model and checked for consistency and bijectivity.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np

from ..errors import OutOfCatalog
from .group import PermGroup

CATALOG_LIMIT = 64

# names tried for each order, most specific first; S3 and V4 stand in for D6 and D4
_SPECIAL = ("Q8", "Q16", "SD16", "V4", "S3", "S4", "A4", "SL(2,3)", "GL(2,3)", "~GL(2,3)", "Q8oD8")


def catalog_names(order: int) -> list[str]:
    names = [n for n in _SPECIAL if _order_of(n) == order]
    if order % 2 == 0 and order >= 8:
        names.append(f"D{order}")
    names.append(f"C{order}")
    return names


@lru_cache(maxsize=None)
def _order_of(name: str) -> int:
    return _model(name).group.order


@dataclass(frozen=True, eq=False)
class _Model:
    group: PermGroup
    gens: tuple[int, ...]
    fingerprint: tuple
    # BFS spanning tree: (element, parent element, generator slot), identity first
    tree: tuple[tuple[int, int, int], ...]


def fingerprint(G: PermGroup) -> tuple:
    """Isomorphism invariants: order, class sizes, element orders, degrees."""
    from ..characters.table import character_table

    cls = G.classes
    orders, counts = np.unique(G.element_orders, return_counts=True)
    degrees = sorted(int(d) for d in character_table(G).degrees)
    return (
        G.order,
        tuple(sorted(int(s) for s in cls.sizes)),
        tuple(zip(orders.tolist(), counts.tolist())),
        tuple(degrees),
    )


def _spanning_tree(G: PermGroup, gens: list[int]) -> tuple:
    seen = np.zeros(G.order, dtype=bool)
    root = G.identity_index
    seen[root] = True
    tree = [(root, -1, -1)]
    frontier = [root]
    while frontier:
        nxt = []
        for x in frontier:
            for s, g in enumerate(gens):
                y = int(G.mul(x, g))
                if not seen[y]:
                    seen[y] = True
                    tree.append((y, x, s))
                    nxt.append(y)
        frontier = nxt
    return tuple(tree)


@lru_cache(maxsize=None)
def _model(name: str) -> _Model:
    from ..builders.named import named_group

    G = named_group(name)
    gens = G.generators_for_mask(np.ones(G.order, dtype=bool)) if G.order > 1 else []
    return _Model(G, tuple(gens), fingerprint(G), _spanning_tree(G, gens))


def _try_images(M: _Model, G: PermGroup, images: tuple[int, ...]) -> bool:
    """Does model generator s -> images[s] extend to an isomorphism M -> G?"""
    phi = np.full(M.group.order, -1, dtype=np.int64)
    phi[M.tree[0][0]] = G.identity_index
    for y, x, s in M.tree[1:]:
        phi[y] = int(G.mul(phi[x], images[s]))
    if len(np.unique(phi)) != M.group.order:
        return False
    # homomorphism check: phi(x g) = phi(x) phi(g) for every element and generator
    xs = np.arange(M.group.order)
    for s, g in enumerate(M.gens):
        if not np.array_equal(phi[M.group.mul(xs, g)], G.mul(phi[xs], images[s])):
            return False
    return True


def find_isomorphism(M: _Model, G: PermGroup) -> tuple[int, ...] | None:
    """Images in G of the model generators, or None."""
    if not M.gens:
        return ()
    morders = M.group.element_orders[list(M.gens)]
    gorders = G.element_orders
    cls = G.classes
    pools = []
    for s, o in enumerate(morders):
        cand = np.flatnonzero(gorders == o)
        if s == 0:
            # the first image may be taken up to conjugacy
            cand = cls.representatives[cls.rep_orders == o]
        pools.append(cand.tolist())
    for images in product(*pools):
        if _try_images(M, G, images):
            return tuple(int(i) for i in images)
    return None


def is_isomorphic_to(G: PermGroup, name: str) -> bool:
    M = _model(name)
    if G.order != M.group.order:
        return False
    if fingerprint(G) != M.fingerprint:
        return False
    return find_isomorphism(M, G) is not None


def catalog_isomorphism_type(G: PermGroup) -> str | None:
    """Catalog name of a group isomorphic to G, or None."""
    if G.order > CATALOG_LIMIT:
        raise OutOfCatalog(f"order {G.order} is above the catalog limit {CATALOG_LIMIT}")
    if G.order == 1:
        return "C1"
    fp = fingerprint(G)
    for name in catalog_names(G.order):
        M = _model(name)
        if M.fingerprint == fp and find_isomorphism(M, G) is not None:
            return name
    return None
