"""Irreducible character tables by the Dixon-Burnside method.

Class-multiplication coefficients a[j, i, k] = #{x in C_j : x^-1 g_k in C_i}
give commuting matrices whose common eigenvectors, normalized at the
identity class, are the central characters w_i = |C_i| chi(g_i) / chi(1).
Everything is computed in F_l for the smallest prime l = 1 mod exp(G) with
l > 2|G|; a fixed primitive exp(G)-th root z in F_l is identified with
exp(2 pi i / exp(G)) to lift values to the complex numbers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np
from sympy import primefactors

from ..errors import TableMismatch
from ..perm.classes import ConjugacyData
from ..perm.group import PermGroup
from .modular import choose_modulus, eigenspaces, root_of_unity

DEFAULT_SEED = 1729
MAX_SPLIT_ROUNDS = 64


def class_matrices(G: PermGroup, cls: ConjugacyData | None = None) -> np.ndarray:
    """Array ``a`` of shape (k, k, k) with a[j, i, l] = #{x in C_j : x^-1 g_l in C_i}."""
    cls = cls or G.classes
    k = cls.k
    inv = G.inverse_indices
    class_of = np.asarray(cls.class_of)
    a = np.zeros((k, k, k), dtype=np.int64)
    xs = np.arange(G.order)
    for l, g in enumerate(cls.representatives.tolist()):
        ys = G.mul(inv[xs], g)
        flat = class_of[xs] * k + class_of[ys]
        a[:, :, l] = np.bincount(flat, minlength=k * k).reshape(k, k)
    return a


@dataclass(frozen=True, eq=False)
class CharacterTable:
    """Irr(G): values in F_l (rows = characters, columns = classes) plus complex lifts."""

    group: PermGroup
    classes: ConjugacyData
    modulus: int
    root: int
    exponent: int
    values: np.ndarray
    degrees: np.ndarray
    seed: int = field(default=DEFAULT_SEED)

    @property
    def k(self) -> int:
        return len(self.degrees)

    def __len__(self) -> int:
        return self.k

    @cached_property
    def root_multiplicities(self) -> list[np.ndarray]:
        """Per class, an array (k, order) of eigenvalue multiplicities of every row."""
        return [root_multiplicities(self, self.values, c) for c in range(self.classes.k)]

    @cached_property
    def complex_values(self) -> np.ndarray:
        return complex_lift(self, self.values, self.root_multiplicities)

    def row(self, i: int):
        from .classfunc import ClassFunction

        return ClassFunction(self, self.values[i])

    def rows(self):
        return [self.row(i) for i in range(self.k)]

    @property
    def principal(self):
        return self.row(0)

    def class_function(self, values):
        from .classfunc import ClassFunction

        return ClassFunction(self, np.asarray(values, dtype=np.int64) % self.modulus)

    def check_orthogonality(self) -> bool:
        """Both orthogonality relations, exactly in F_l."""
        l = self.modulus
        sizes = self.classes.sizes % l
        conj = self.values[:, self.classes.inverse_class]
        first = (self.values * sizes) % l @ conj.T % l
        first = first * pow(self.group.order, -1, l) % l
        if not np.array_equal(first, np.eye(self.k, dtype=np.int64)):
            return False
        second = (self.values.T @ conj) % l
        expected = np.diag(self.classes.centralizer_orders % l)
        return bool(np.array_equal(second, expected))


def root_multiplicities(table: CharacterTable, values: np.ndarray, c: int) -> np.ndarray:
    """Multiplicities m_t of z_o^t as eigenvalues of rho(g), g in class ``c`` of order o.

    Computed by the discrete Fourier transform over the powers of g, which
    inverts chi(g^s) = sum_t m_t z_o^(ts); results are residues mod l.
    """
    l = table.modulus
    powers = table.classes.power_classes[c]
    o = len(powers)
    zo = pow(table.root, table.exponent // o, l)
    vals = np.atleast_2d(values)[:, powers] % l
    return (vals @ _dft_kernel(l, zo, o).T) % l * pow(o, -1, l) % l


@lru_cache(maxsize=4096)
def _dft_kernel(l: int, zo: int, o: int) -> np.ndarray:
    """kernel[t, s] = zo^(-t s) mod l."""
    pw = np.ones(o, dtype=np.int64)
    for j in range(1, o):
        pw[j] = pw[j - 1] * zo % l
    t = np.arange(o)
    kernel = pw[(-np.outer(t, t)) % o]
    kernel.setflags(write=False)
    return kernel


def complex_lift(table: CharacterTable, values: np.ndarray, mults=None) -> np.ndarray:
    """Complex values from per-class root multiplicities (which must be exact integers)."""
    values = np.atleast_2d(values)
    l = table.modulus
    out = np.zeros(values.shape, dtype=complex)
    for c in range(table.classes.k):
        m = mults[c] if mults is not None else root_multiplicities(table, values, c)
        m = np.where(m > l // 2, m - l, m)
        o = m.shape[1]
        zeta = np.exp(2j * np.pi * np.arange(o) / o)
        out[:, c] = m @ zeta
    return out


def _split(a: np.ndarray, l: int, rng: np.random.Generator) -> list[np.ndarray]:
    k = a.shape[0]
    ops = np.transpose(a, (0, 2, 1)) % l  # row-vector form: w^T a_j^T = w_j w^T
    pending = [np.eye(k, dtype=np.int64)]
    done = []
    for _ in range(MAX_SPLIT_ROUNDS):
        if not pending:
            return done
        coeffs = rng.integers(0, l, size=k)
        op = np.tensordot(coeffs, ops, axes=1) % l
        nxt = []
        for space in pending:
            parts = eigenspaces(space, op, l)
            if sum(len(p) for p in parts) != len(space):
                raise TableMismatch("class algebra is not split over F_l")
            for p in parts:
                (done if len(p) == 1 else nxt).append(p)
        pending = nxt
    raise TableMismatch("eigenspace splitting did not terminate")


def character_table(
    G: PermGroup,
    seed: int = DEFAULT_SEED,
    modulus: int | None = None,
    root: int | None = None,
) -> CharacterTable:
    """Dixon-Burnside character table of an enumerable group.

    ``modulus`` and ``root`` may be supplied (for subgroup tables that must
    agree with a parent table); the root must then be a primitive
    exp(G)-th root of unity.
    """
    cls = G.classes
    n = G.order
    exponent = cls.exponent
    l = modulus or choose_modulus(exponent, n)
    if (l - 1) % exponent or l <= 2 * n:
        raise TableMismatch(f"modulus {l} is unsuitable for a group of order {n} and exponent {exponent}")
    z = root if root is not None else root_of_unity(exponent, l)
    if pow(z, exponent, l) != 1 or any(pow(z, exponent // p, l) == 1 for p in primefactors(exponent)):
        raise TableMismatch("root is not a primitive root of unity of the group exponent")

    rng = np.random.default_rng(seed)
    a = class_matrices(G, cls)
    spaces = _split(a, l, rng)
    sizes = cls.sizes.astype(np.int64)
    inv_sizes = np.array([pow(int(s), -1, l) for s in sizes], dtype=np.int64)
    rows, degrees = [], []
    for space in spaces:
        w = space[0]
        w = w * pow(int(w[0]), -1, l) % l
        s = int((w * w[cls.inverse_class] % l * inv_sizes % l).sum() % l)
        d2 = n * pow(s, -1, l) % l
        d = math.isqrt(d2)
        if d * d != d2:
            raise TableMismatch(f"degree square {d2} is not a perfect square")
        rows.append(w * d % l * inv_sizes % l)
        degrees.append(d)
    values = np.array(rows, dtype=np.int64)
    degrees = np.array(degrees, dtype=np.int64)
    # principal character first, then by degree, then by value vector
    order = sorted(range(len(rows)), key=lambda i: (degrees[i], values[i].tolist()))
    values = values[order]
    degrees = degrees[order]
    values.setflags(write=False)
    degrees.setflags(write=False)
    table = CharacterTable(G, cls, l, z, exponent, values, degrees, seed)
    if int((degrees**2).sum()) != n or not table.check_orthogonality():
        raise TableMismatch("computed table fails the orthogonality relations")
    return table


def subgroup_table(parent: CharacterTable, H: PermGroup, seed: int | None = None) -> CharacterTable:
    """Table of a subgroup H sharing the parent's modulus and compatible root."""
    e = H.classes.exponent
    if parent.exponent % e:
        raise TableMismatch("subgroup exponent does not divide the group exponent")
    root = pow(parent.root, parent.exponent // e, parent.modulus)
    return character_table(H, seed=parent.seed if seed is None else seed, modulus=parent.modulus, root=root)
