"""Finite-field arithmetic: matrices over prime fields and small GF(p^m) tables."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np
from sympy import isprime


@dataclass(frozen=True)
class FFMatrix:
    """Square matrix over the prime field GF(q)."""

    q: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not isprime(self.q):
            raise ValueError("only prime fields are supported as matrix entry domains")
        rows = tuple(tuple(int(v) % self.q for v in row) for row in self.entries)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def of(cls, q: int, rows) -> "FFMatrix":
        return cls(q, tuple(tuple(r) for r in np.asarray(rows).tolist()))

    @classmethod
    def identity(cls, q: int, n: int) -> "FFMatrix":
        return cls.of(q, np.eye(n, dtype=np.int64))

    @property
    def n(self) -> int:
        return len(self.entries)

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)

    def __mul__(self, other: "FFMatrix") -> "FFMatrix":
        return FFMatrix.of(self.q, (self.array @ other.array) % self.q)

    def __pow__(self, k: int) -> "FFMatrix":
        if k < 0:
            return self.inverse() ** (-k)
        result = FFMatrix.identity(self.q, self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def det(self) -> int:
        return det_mod(self.array, self.q)

    def inverse(self) -> "FFMatrix":
        return FFMatrix.of(self.q, inv_mod(self.array, self.q))

    def order(self) -> int:
        one = FFMatrix.identity(self.q, self.n)
        cur, k = self, 1
        while cur != one:
            cur = cur * self
            k += 1
        return k

    def transpose(self) -> "FFMatrix":
        return FFMatrix.of(self.q, self.array.T)

    def preserves(self, form: np.ndarray) -> bool:
        a = self.array
        return np.array_equal((a @ form @ a.T) % self.q, np.asarray(form) % self.q)


def det_mod(a: np.ndarray, p: int) -> int:
    a = np.array(a, dtype=np.int64) % p
    n = len(a)
    det = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r, c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[[c, piv]] = a[[piv, c]]
            det = -det
        det = det * int(a[c, c]) % p
        inv = pow(int(a[c, c]), -1, p)
        for r in range(c + 1, n):
            if a[r, c]:
                a[r] = (a[r] - a[r, c] * inv * a[c]) % p
    return det % p


def inv_mod(a: np.ndarray, p: int) -> np.ndarray:
    a = np.array(a, dtype=np.int64) % p
    n = len(a)
    aug = np.concatenate([a, np.eye(n, dtype=np.int64)], axis=1)
    for c in range(n):
        piv = next((r for r in range(c, n) if aug[r, c]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[[c, piv]] = aug[[piv, c]]
        aug[c] = aug[c] * pow(int(aug[c, c]), -1, p) % p
        for r in range(n):
            if r != c and aug[r, c]:
                aug[r] = (aug[r] - aug[r, c] * aug[c]) % p
    return aug[:, n:]


def standard_symplectic_form(n: int) -> np.ndarray:
    """Gram matrix [[0, I], [-I, 0]] of size 2n (entries as integers, unreduced)."""
    J = np.zeros((2 * n, 2 * n), dtype=np.int64)
    J[:n, n:] = np.eye(n, dtype=np.int64)
    J[n:, :n] = -np.eye(n, dtype=np.int64)
    return J


def symplectic_basis(form: np.ndarray, p: int) -> np.ndarray:
    """Rows ``e_1..e_n, f_1..f_n`` with Gram matrix the standard form.

    Returns P with ``P form P^T == standard_symplectic_form`` (mod p).
    """
    form = np.asarray(form, dtype=np.int64) % p
    dim = len(form)
    remaining = [np.eye(dim, dtype=np.int64)[i] for i in range(dim)]
    es, fs = [], []

    def pair(u, v):
        return int(u @ form @ v) % p

    while remaining:
        e = remaining.pop(0)
        j = next((j for j, v in enumerate(remaining) if pair(e, v)), None)
        if j is None:
            raise ValueError("form is degenerate")
        f = remaining.pop(j)
        f = f * pow(pair(e, f), -1, p) % p
        es.append(e)
        fs.append(f)
        projected = []
        for v in remaining:
            # v - <v,f> e + <v,e> f is orthogonal to both e and f
            w = (v - pair(v, f) * e + pair(v, e) * f) % p
            projected.append(w)
        remaining = [w for w in projected if w.any()]
    return np.array(es + fs, dtype=np.int64)


class GaloisField:
    """GF(p^m) with elements encoded as integers 0..q-1 (base-p coefficients)."""

    def __init__(self, p: int, m: int = 1):
        if not isprime(p) or m < 1:
            raise ValueError("GF(p^m) needs a prime p and m >= 1")
        self.p, self.m, self.q = p, m, p**m
        self.modulus = self._irreducible() if m > 1 else None
        digits = np.array([[(x // p**i) % p for i in range(m)] for x in range(self.q)], dtype=np.int64)
        self._digits = digits
        weights = p ** np.arange(m)
        self.add_table = ((digits[:, None, :] + digits[None, :, :]) % p) @ weights
        self.mul_table = np.array([[self._mul(a, b) for b in range(self.q)] for a in range(self.q)], dtype=np.int64)
        self.neg = np.array([int(((-digits[x]) % p) @ weights) for x in range(self.q)])

    def _irreducible(self) -> tuple[int, ...]:
        p, m = self.p, self.m
        for tail in itertools.product(range(p), repeat=m):
            poly = list(tail) + [1]  # monic, low degree first
            if poly[0] == 0:
                continue
            # a root-free polynomial of degree <= 3 is irreducible
            if m <= 3 and not any(self._eval(poly, x) % p == 0 for x in range(p)):
                return tuple(poly)
        raise ValueError(f"no irreducible polynomial found for m={m}")

    @staticmethod
    def _eval(poly, x):
        return sum(c * x**i for i, c in enumerate(poly))

    def _mul(self, a: int, b: int) -> int:
        p, m = self.p, self.m
        if m == 1:
            return a * b % p
        da = [(a // p**i) % p for i in range(m)]
        db = [(b // p**i) % p for i in range(m)]
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % p
        mod = self.modulus
        for k in range(2 * m - 2, m - 1, -1):
            c = prod[k]
            if c:
                for i in range(m + 1):
                    prod[k - m + i] = (prod[k - m + i] - c * mod[i]) % p
        return sum(prod[i] * p**i for i in range(m))

    def primitive_element(self) -> int:
        for g in range(2, self.q) if self.q > 2 else [1]:
            x, k = g, 1
            while x != 1 and k < self.q:
                x = int(self.mul_table[x, g])
                k += 1
            if k == self.q - 1:
                return g
        return 1

    def additive_basis(self) -> list[int]:
        return [self.p**i for i in range(self.m)]
