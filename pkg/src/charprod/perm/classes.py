"""Conjugacy classes by orbit computation over the full element list."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from ..errors import EnumerationRequired


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@dataclass(frozen=True, eq=False)
class ConjugacyData:
    """Conjugacy classes of an enumerated group.

    Class 0 is always the identity class.  ``power_classes[c][t]`` is the
    class of ``rep_c ** t`` for ``0 <= t < order(rep_c)``.
    """

    group: object
    representatives: np.ndarray
    sizes: np.ndarray
    class_of: np.ndarray
    inverse_class: np.ndarray
    rep_orders: np.ndarray
    exponent: int
    power_classes: tuple
    power_maps: dict = field(repr=False)

    @property
    def k(self) -> int:
        return len(self.representatives)

    def __len__(self) -> int:
        return self.k

    def power_map(self, k: int) -> np.ndarray:
        """Class of ``g**k`` for ``g`` in each class."""
        return np.array([pc[k % len(pc)] for pc in self.power_classes], dtype=np.int64)

    def members(self, c: int) -> np.ndarray:
        return np.flatnonzero(self.class_of == c)

    def classes_in(self, mask: np.ndarray) -> np.ndarray:
        """Classes whose representative lies in ``mask``."""
        return np.flatnonzero(mask[self.representatives])

    def mask_of(self, classes) -> np.ndarray:
        sel = np.zeros(self.k, dtype=bool)
        sel[np.asarray(list(classes), dtype=np.int64)] = True
        return sel[self.class_of]

    @property
    def centralizer_orders(self) -> np.ndarray:
        return self.group.order // self.sizes


def conjugacy_classes(G) -> ConjugacyData:
    """Classes of ``G`` as connected components of the conjugation graph."""
    if not G.is_enumerable:
        raise EnumerationRequired("conjugacy classes need an enumerable group")
    n = G.order
    idx = np.arange(n)
    rows, cols = [], []
    for g in G.generator_arrays:
        gi = G.index(g)
        rows.append(idx)
        cols.append(G.conj(idx, gi))
    rows = np.concatenate(rows)
    cols = np.concatenate(cols)
    graph = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(n, n))
    ncomp, labels = connected_components(graph, directed=True, connection="weak")

    reps = np.full(ncomp, n, dtype=np.int64)
    np.minimum.at(reps, labels, idx)
    sizes = np.bincount(labels, minlength=ncomp)
    orders = G.element_orders[reps]
    ident = labels[G.identity_index]
    key = np.lexsort((reps, sizes, orders, np.arange(ncomp) != ident))
    relabel = np.empty(ncomp, dtype=np.int64)
    relabel[key] = np.arange(ncomp)
    class_of = relabel[labels]
    reps = reps[key]
    sizes = sizes[key]
    orders = orders[key]
    class_of.setflags(write=False)

    inverse_class = class_of[G.inverse_indices[reps]]

    max_order = int(orders.max())
    pcs = np.empty((len(reps), max_order), dtype=np.int64)
    cur = np.full(len(reps), G.identity_index, dtype=np.int64)
    for t in range(max_order):
        pcs[:, t] = class_of[cur]
        cur = G.mul(cur, reps)
    power_classes = tuple(pcs[c, : orders[c]].copy() for c in range(len(reps)))
    exponent = int(np.lcm.reduce(orders))
    power_maps = {
        d: np.array([pc[d % len(pc)] for pc in power_classes], dtype=np.int64)
        for d in _divisors(exponent)
    }
    return ConjugacyData(
        group=G,
        representatives=reps,
        sizes=sizes,
        class_of=class_of,
        inverse_class=inverse_class,
        rep_orders=orders,
        exponent=exponent,
        power_classes=power_classes,
        power_maps=power_maps,
    )
