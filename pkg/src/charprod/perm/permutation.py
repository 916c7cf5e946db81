"""Permutations of {0, ..., n-1}.

Products compose left to right: ``(p * q)(i) == q(p(i))``, so ``p * q``
applies ``p`` first.  Conjugation is ``x ** g == g**-1 * x * g``.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

import numpy as np


def perm_dtype(degree: int):
    return np.int16 if degree < 2**15 else np.int32


def as_array(p, degree: int | None = None) -> np.ndarray:
    """Coerce a Permutation, sequence or array to a validated image array."""
    if isinstance(p, Permutation):
        arr = p.array
    else:
        arr = np.asarray(p)
        if arr.ndim != 1:
            raise ValueError("a permutation must be one-dimensional")
        arr = arr.astype(perm_dtype(len(arr)))
    if degree is not None and len(arr) != degree:
        from ..errors import DegreeMismatch

        raise DegreeMismatch(f"expected degree {degree}, got {len(arr)}")
    return arr


class Permutation:
    """Immutable permutation given by its image list."""

    __slots__ = ("_images", "_array")

    def __init__(self, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError("images do not form a bijection")
        self._images = images
        arr = np.array(images, dtype=perm_dtype(len(images)))
        arr.setflags(write=False)
        self._array = arr

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles: Sequence[Sequence[int]]) -> "Permutation":
        images = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a] = b
        return cls(images)

    @classmethod
    def _trusted(cls, arr: np.ndarray) -> "Permutation":
        obj = cls.__new__(cls)
        arr = np.array(arr, dtype=perm_dtype(len(arr)))
        arr.setflags(write=False)
        obj._array = arr
        obj._images = tuple(int(i) for i in arr)
        return obj

    @property
    def degree(self) -> int:
        return len(self._images)

    @property
    def images(self) -> tuple[int, ...]:
        return self._images

    @property
    def array(self) -> np.ndarray:
        return self._array

    def __call__(self, i: int) -> int:
        return self._images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.degree != other.degree:
            from ..errors import DegreeMismatch

            raise DegreeMismatch("cannot multiply permutations of different degree")
        return Permutation._trusted(other._array[self._array])

    def inverse(self) -> "Permutation":
        inv = np.empty_like(self._array)
        inv[self._array] = np.arange(self.degree, dtype=inv.dtype)
        return Permutation._trusted(inv)

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self._images))

    def order(self) -> int:
        return math.lcm(*self.cycle_lengths()) if self.degree else 1

    def cycle_lengths(self) -> list[int]:
        seen = [False] * self.degree
        lengths = []
        for start in range(self.degree):
            if seen[start]:
                continue
            n, i = 0, start
            while not seen[i]:
                seen[i] = True
                i = self._images[i]
                n += 1
            lengths.append(n)
        return lengths

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen or self._images[start] == start:
                continue
            cyc = [start]
            seen.add(start)
            i = self._images[start]
            while i != start:
                cyc.append(i)
                seen.add(i)
                i = self._images[i]
            out.append(tuple(cyc))
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._images == other._images

    def __hash__(self) -> int:
        return hash(self._images)

    def __repr__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return f"Permutation.identity({self.degree})"
        return f"Permutation<{self.degree}>" + "".join(str(c).replace(",)", ")") for c in cyc)
