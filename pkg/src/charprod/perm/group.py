"""Permutation groups with exact order, membership and element enumeration.

Enumerated groups keep their elements in a fixed order (sorted by the images
of the stabilizer-chain base), and most algorithms in this package work on
integer element indices into that list.
"""

from __future__ import annotations

import math
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from ..errors import DegreeMismatch, EnumerationRequired, GroupTooLarge, NotSubgroup
from .permutation import Permutation, as_array, perm_dtype
from .schreier import StabilizerChain

ENUMERATION_BOUND = 200_000
SAFETY_BOUND = 10**7


class PermGroup:
    """A finite group generated by permutations of equal degree."""

    def __init__(
        self,
        generators: Iterable,
        degree: int | None = None,
        *,
        name: str | None = None,
        parent: "PermGroup | None" = None,
        enumeration_bound: int = ENUMERATION_BOUND,
        safety_bound: int = SAFETY_BOUND,
    ):
        arrays = [as_array(g) for g in generators]
        if degree is None:
            if not arrays:
                raise ValueError("degree is required when no generators are given")
            degree = len(arrays[0])
        for a in arrays:
            if len(a) != degree:
                raise DegreeMismatch(f"generator of degree {len(a)} in a group of degree {degree}")
        if not arrays:
            arrays = [np.arange(degree, dtype=perm_dtype(degree))]
        self.degree = degree
        self.name = name
        self.parent = parent
        self.enumeration_bound = enumeration_bound
        self._gen_arrays = [np.array(a, dtype=perm_dtype(degree)) for a in arrays]
        self.chain = StabilizerChain(degree, self._gen_arrays)
        self.order = self.chain.order
        if self.order > safety_bound:
            raise GroupTooLarge(f"group of order {self.order} exceeds the safety bound {safety_bound}")
        self.base = list(self.chain.base) or [0]

    # -- basic properties --------------------------------------------------

    def __repr__(self) -> str:
        label = self.name or "PermGroup"
        return f"<{label} of order {self.order} on {self.degree} points>"

    def __len__(self) -> int:
        return self.order

    @property
    def generators(self) -> tuple[Permutation, ...]:
        return tuple(Permutation._trusted(a) for a in self._gen_arrays)

    @property
    def generator_arrays(self) -> list[np.ndarray]:
        return list(self._gen_arrays)

    @property
    def is_enumerable(self) -> bool:
        return self.order <= self.enumeration_bound

    def contains(self, p) -> bool:
        arr = as_array(p)
        return len(arr) == self.degree and self.chain.contains(arr)

    __contains__ = contains

    def is_abelian(self) -> bool:
        gens = self._gen_arrays
        return all(np.array_equal(a[b], b[a]) for a in gens for b in gens)

    # -- enumeration -------------------------------------------------------

    def _require_enumeration(self) -> None:
        if not self.is_enumerable:
            raise EnumerationRequired(
                f"group of order {self.order} exceeds the enumeration bound {self.enumeration_bound}"
            )

    @cached_property
    def _radix(self) -> int | None:
        if self.degree ** len(self.base) < 2**62:
            return self.degree
        return None

    def _encode(self, base_images: np.ndarray):
        if self._radix is None:
            return [bytes(np.ascontiguousarray(r, dtype=np.int32)) for r in base_images]
        weights = self.degree ** np.arange(len(self.base), dtype=np.int64)
        return base_images.astype(np.int64) @ weights

    @cached_property
    def _enumeration(self):
        self._require_enumeration()
        elems = self.chain.enumerate()
        bimg = elems[:, self.base]
        keys = self._encode(bimg)
        if self._radix is None:
            order = sorted(range(len(keys)), key=keys.__getitem__)
            order = np.array(order, dtype=np.int64)
            lookup = {keys[i]: pos for pos, i in enumerate(order)}
        else:
            order = np.argsort(keys, kind="stable")
            lookup = None
            keys = keys[order]
        elems = elems[order]
        elems.setflags(write=False)
        bimg = np.ascontiguousarray(elems[:, self.base])
        if lookup is None:
            return elems, bimg, keys, None
        return elems, bimg, None, lookup

    @property
    def elements(self) -> np.ndarray:
        """(order, degree) array of all elements, in canonical order."""
        return self._enumeration[0]

    @property
    def base_images(self) -> np.ndarray:
        return self._enumeration[1]

    def element(self, i: int) -> Permutation:
        return Permutation._trusted(self.elements[int(i)])

    def __iter__(self):
        for i in range(self.order):
            yield self.element(i)

    def index_from_base_images(self, bimg: np.ndarray, check: bool = True) -> np.ndarray:
        bimg = np.asarray(bimg)
        flat = bimg.reshape(-1, len(self.base))
        _, _, keys, lookup = self._enumeration
        if lookup is not None:
            enc = self._encode(flat)
            idx = np.array([lookup.get(k, -1) for k in enc], dtype=np.int64)
        else:
            enc = self._encode(flat)
            idx = np.searchsorted(keys, enc)
            idx = np.minimum(idx, len(keys) - 1)
            bad = keys[idx] != enc
            if bad.any():
                idx = idx.astype(np.int64)
                idx[bad] = -1
        if check and (idx < 0).any():
            raise NotSubgroup("element not in group")
        return idx.reshape(bimg.shape[:-1])

    def indices(self, perms, check: bool = True) -> np.ndarray:
        """Element indices of a batch of permutations (shape (..., degree))."""
        arr = np.asarray(perms if not isinstance(perms, Permutation) else perms.array)
        if arr.shape[-1] != self.degree:
            raise DegreeMismatch("wrong degree")
        idx = self.index_from_base_images(arr[..., self.base], check=False)
        if check:
            if (idx < 0).any():
                raise NotSubgroup("element not in group")
            found = self.elements[idx.reshape(-1)]
            if not np.array_equal(found, arr.reshape(-1, self.degree)):
                raise NotSubgroup("element not in group")
        return idx

    def index(self, p) -> int:
        return int(self.indices(as_array(p, self.degree)[None, :])[0])

    @cached_property
    def identity_index(self) -> int:
        return self.index(np.arange(self.degree))

    # -- index arithmetic --------------------------------------------------

    def mul(self, a, b) -> np.ndarray:
        """Indices of ``x_a * x_b`` (apply ``x_a`` first)."""
        a = np.asarray(a)
        b = np.asarray(b)
        if b.ndim == 0:
            img = self.elements[int(b)][self.base_images[a]]
        else:
            a, b = np.broadcast_arrays(a, b)
            img = self.elements[b.reshape(-1)[:, None], self.base_images[a.reshape(-1)]]
            img = img.reshape(a.shape + (len(self.base),))
        return self.index_from_base_images(img, check=False)

    @cached_property
    def inverse_indices(self) -> np.ndarray:
        elems = self.elements
        inv_bimg = np.empty((self.order, len(self.base)), dtype=np.int64)
        for j, b in enumerate(self.base):
            inv_bimg[:, j] = np.argmax(elems == b, axis=1)
        inv = self.index_from_base_images(inv_bimg, check=False)
        inv.setflags(write=False)
        return inv

    def inverse_elements(self) -> np.ndarray:
        return self.elements[self.inverse_indices]

    def conj(self, x, g) -> np.ndarray:
        """Indices of ``g^-1 x g`` (broadcasting over x and g)."""
        return self.mul(self.mul(self.inverse_indices[np.asarray(g)], x), g)

    def commutator(self, x, y) -> np.ndarray:
        """Indices of ``x^-1 y^-1 x y``."""
        inv = self.inverse_indices
        return self.mul(self.mul(inv[np.asarray(x)], inv[np.asarray(y)]), self.mul(x, y))

    def power(self, x, k: int) -> np.ndarray:
        x = np.asarray(x)
        result = np.full(x.shape, self.identity_index, dtype=np.int64)
        if k < 0:
            x = self.inverse_indices[x]
            k = -k
        base = x
        while k:
            if k & 1:
                result = self.mul(result, base)
            k >>= 1
            if k:
                base = self.mul(base, base)
        return result

    @cached_property
    def element_orders(self) -> np.ndarray:
        elems = self.elements
        start = self.base_images
        target = np.asarray(self.base)[None, :]
        cur = start.astype(np.int64)
        orders = np.zeros(self.order, dtype=np.int64)
        n = 1
        pending = np.arange(self.order)
        while pending.size:
            done = (cur == target).all(axis=1)
            orders[pending[done]] = n
            keep = ~done
            pending = pending[keep]
            cur = elems[pending[:, None], cur[keep]]
            n += 1
        orders.setflags(write=False)
        return orders

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*np.unique(self.element_orders).tolist())

    def closure(self, gens, start=None) -> np.ndarray:
        """Boolean mask of the subgroup generated by element indices ``gens``.

        ``start`` may be a mask of an already-closed subgroup contained in
        the result.
        """
        gens = np.unique(np.asarray(list(gens), dtype=np.int64))
        mask = np.zeros(self.order, dtype=bool)
        if start is not None:
            mask |= start
            frontier = np.flatnonzero(start)
        else:
            mask[self.identity_index] = True
            frontier = np.array([self.identity_index])
        while frontier.size:
            new = np.concatenate([self.mul(frontier, g) for g in gens]) if gens.size else frontier[:0]
            new = np.unique(new)
            new = new[~mask[new]]
            mask[new] = True
            frontier = new
        return mask

    # -- subgroups ---------------------------------------------------------

    def subgroup(self, gens, name: str | None = None) -> "PermGroup":
        """Subgroup generated by permutations or element indices."""
        gens = list(gens)
        arrays = []
        for g in gens:
            if isinstance(g, (int, np.integer)):
                arrays.append(self.elements[int(g)])
            else:
                arr = as_array(g, self.degree)
                if not self.contains(arr):
                    raise NotSubgroup("generator is not an element of the group")
                arrays.append(arr)
        return PermGroup(arrays, self.degree, name=name, parent=self, enumeration_bound=self.enumeration_bound)

    def generators_for_mask(self, mask: np.ndarray) -> list[int]:
        """A small generating set (element indices) for the subgroup ``mask``."""
        target = int(mask.sum())
        gens: list[int] = []
        current = np.zeros(self.order, dtype=bool)
        current[self.identity_index] = True
        if target == 1:
            return gens
        members = np.flatnonzero(mask)
        # large element orders first keeps the generating set short
        orders = self.element_orders[members]
        candidates = members[np.argsort(-orders, kind="stable")]
        for c in candidates:
            if current[c]:
                continue
            gens.append(int(c))
            current = self.closure(gens, start=current)
            if current.sum() == target:
                break
        if not np.array_equal(current, mask):
            raise NotSubgroup("mask is not a subgroup")
        return gens

    def subgroup_from_mask(self, mask: np.ndarray, name: str | None = None) -> "PermGroup":
        mask = np.asarray(mask, dtype=bool)
        gens = self.generators_for_mask(mask)
        sub = self.subgroup(gens, name=name)
        sub.__dict__["parent_mask"] = mask.copy()
        return sub

    @cached_property
    def parent_indices(self) -> np.ndarray:
        """Indices of this group's elements inside ``parent``."""
        if self.parent is None:
            return np.arange(self.order)
        return self.parent.indices(self.elements)

    @cached_property
    def parent_mask(self) -> np.ndarray:
        mask = np.zeros(self.parent.order if self.parent is not None else self.order, dtype=bool)
        mask[self.parent_indices] = True
        return mask

    def mask_in(self, G: "PermGroup") -> np.ndarray:
        """Membership mask of this group's elements inside ``G``."""
        if G is self.parent:
            return self.parent_mask
        if G is self:
            return np.ones(self.order, dtype=bool)
        mask = np.zeros(G.order, dtype=bool)
        mask[G.indices(self.elements)] = True
        return mask

    def is_subgroup_of(self, G: "PermGroup") -> bool:
        return self.degree == G.degree and all(G.contains(g) for g in self._gen_arrays)

    def as_subgroup_of(self, G: "PermGroup", name: str | None = None) -> "PermGroup":
        if not self.is_subgroup_of(G):
            raise NotSubgroup("not a subgroup")
        if self.parent is G:
            return self
        return PermGroup(self._gen_arrays, self.degree, name=name or self.name, parent=G,
                         enumeration_bound=G.enumeration_bound)

    @cached_property
    def classes(self):
        from .classes import conjugacy_classes

        return conjugacy_classes(self)


def trivial_group(degree: int = 1) -> PermGroup:
    return PermGroup([], degree, name="C1")


def group_from_generators(gens: Sequence, **kwargs) -> PermGroup:
    """Build a group from a non-empty list of equal-degree permutations."""
    gens = list(gens)
    if not gens:
        raise ValueError("at least one generator is required")
    return PermGroup(gens, **kwargs)
