"""Deterministic Schreier-Sims stabilizer chain.

Permutations are numpy image arrays composed left to right: the product
"first a, then b" is ``b[a]``.
"""

from __future__ import annotations

import numpy as np


class StabilizerChain:
    """Base and strong generating set for a permutation group.

    ``transversals[l][pt]`` maps ``base[l]`` to ``pt`` and lies in the
    pointwise stabilizer of ``base[:l]``.
    """

    def __init__(self, degree: int, generators):
        self.degree = degree
        self.identity = np.arange(degree, dtype=np.int16 if degree < 2**15 else np.int32)
        gens = [np.asarray(g, dtype=self.identity.dtype) for g in generators]
        self.generators = [g for g in gens if not np.array_equal(g, self.identity)]
        self.base: list[int] = []
        self.level_gens: list[list[np.ndarray]] = []
        self.transversals: list[dict[int, np.ndarray]] = []
        self.inverse_transversals: list[dict[int, np.ndarray]] = []
        self._checked: list[set] = []
        self._build()

    # -- construction -------------------------------------------------

    def _new_level(self, point: int) -> None:
        self.base.append(point)
        self.level_gens.append([])
        self.transversals.append({point: self.identity})
        self.inverse_transversals.append({point: self.identity})
        self._checked.append(set())

    def _extend_orbit(self, level: int) -> None:
        trans = self.transversals[level]
        inv = self.inverse_transversals[level]
        gens = self.level_gens[level]
        queue = list(trans)
        while queue:
            nxt = []
            for pt in queue:
                u = trans[pt]
                for s in gens:
                    img = int(s[pt])
                    if img not in trans:
                        w = s[u]
                        trans[img] = w
                        winv = np.empty_like(w)
                        winv[w] = self.identity
                        inv[img] = winv
                        nxt.append(img)
            queue = nxt

    def _add_generator(self, g: np.ndarray, levels) -> None:
        for l in levels:
            self.level_gens[l].append(g)
            self._extend_orbit(l)

    def strip(self, g: np.ndarray, start: int = 0):
        """Sift ``g`` through the chain; return (residue, level reached)."""
        for l in range(start, len(self.base)):
            pt = int(g[self.base[l]])
            inv = self.inverse_transversals[l].get(pt)
            if inv is None:
                return g, l
            g = inv[g]
        return g, len(self.base)

    def _build(self) -> None:
        if not self.generators:
            return
        for g in self.generators:
            if all(int(g[b]) == b for b in self.base):
                moved = int(np.flatnonzero(g != self.identity)[0])
                self._new_level(moved)
        for l in range(len(self.base)):
            fixing = [g for g in self.generators if all(int(g[b]) == b for b in self.base[:l])]
            self.level_gens[l].extend(fixing)
            self._extend_orbit(l)

        i = len(self.base) - 1
        while i >= 0:
            failed_at = self._check_level(i)
            if failed_at is None:
                i -= 1
            else:
                i = failed_at

    def _check_level(self, i: int):
        """Verify every Schreier generator at level ``i``.

        Returns the deepest level that received a new strong generator, or
        None if the level is complete.
        """
        trans = self.transversals[i]
        inv = self.inverse_transversals[i]
        checked = self._checked[i]
        for pt in list(trans):
            u = trans[pt]
            for gi, s in enumerate(self.level_gens[i]):
                key = (pt, gi)
                if key in checked:
                    continue
                img = int(s[pt])
                # u_pt * s * u_img^-1 fixes base[i]
                sg = inv[img][s[u]]
                checked.add(key)
                h, j = self.strip(sg, i + 1)
                if j < len(self.base) or not np.array_equal(h, self.identity):
                    if j == len(self.base):
                        moved = int(np.flatnonzero(h != self.identity)[0])
                        self._new_level(moved)
                    self._add_generator(h, range(i + 1, j + 1))
                    # the pair must be re-examined later only if it still fails
                    checked.discard(key)
                    return j
        return None

    # -- queries ---------------------------------------------------------

    @property
    def order(self) -> int:
        n = 1
        for t in self.transversals:
            n *= len(t)
        return n

    def contains(self, g: np.ndarray) -> bool:
        if len(g) != self.degree:
            return False
        h, j = self.strip(np.asarray(g, dtype=self.identity.dtype))
        return j == len(self.base) and np.array_equal(h, self.identity)

    def strong_generators(self) -> list[np.ndarray]:
        seen = []
        for gens in self.level_gens:
            for g in gens:
                if not any(g is s for s in seen):
                    seen.append(g)
        return seen

    def enumerate(self) -> np.ndarray:
        """All group elements as an (order, degree) array."""
        arr = self.identity[None, :]
        for l in range(len(self.base) - 1, -1, -1):
            reps = list(self.transversals[l].values())
            arr = np.concatenate([u[arr] for u in reps], axis=0)
        return arr
