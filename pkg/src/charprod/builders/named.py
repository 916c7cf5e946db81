"""Small named groups with fixed, documented generators.

Abstract groups (cyclic, dihedral, quaternion, semidihedral) use the
right-regular representation of a metacyclic model; linear groups act on the
vectors (or nonzero vectors) of their natural module.
"""

from __future__ import annotations

import re

import numpy as np

from ..errors import UnknownGroup
from ..perm.group import PermGroup, trivial_group
from .fields import FFMatrix, standard_symplectic_form
from .matrices import MatrixGroup

# ~GL(2,3) inside SL(2,7)
TILDE_X = ((2, 2), (5, 2))
TILDE_Y = ((3, 2), (2, 4))
TILDE_Z = ((4, 0), (1, 2))

# subgroups of SL(2,3): Q8 and a cyclic group of order 4
Q8_IN_SL23 = (((0, 2), (1, 0)), ((1, 1), (1, 2)))
C4_IN_SL23 = (((0, 2), (1, 0)),)
SL23_GENS = (((1, 1), (0, 1)), ((0, 2), (1, 0)))
# a copy of SL(2,3) inside SL(2,5) (orders 4 and 3)
SL23_IN_SL25 = (((3, 0), (0, 2)), ((3, 2), (1, 1)))
# dihedral group of order 8 in O(2,3): signed permutation matrices
D8_IN_GL23 = (((0, 1), (2, 0)), ((1, 0), (0, 2)))


def _regular(elements: list, mul, generators: list, name: str) -> PermGroup:
    index = {e: i for i, e in enumerate(elements)}
    perms = [np.array([index[mul(e, g)] for e in elements]) for g in generators]
    return PermGroup(perms, len(elements), name=name)


def metacyclic(n: int, r: int, s: int, name: str) -> PermGroup:
    """Group of pairs (a, b), a mod n, b mod 2, with
    (a, b)(c, d) = (a + r^b c + s [b = d = 1], b + d)."""
    elements = [(a, b) for b in range(2) for a in range(n)]

    def mul(x, y):
        a, b = x
        c, d = y
        return ((a + (r if b else 1) * c + (s if b and d else 0)) % n, (b + d) % 2)

    return _regular(elements, mul, [(1 % n, 0), (0, 1)], name)


def cyclic(n: int) -> PermGroup:
    if n < 1:
        raise UnknownGroup(f"C{n}")
    if n == 1:
        return trivial_group()
    return PermGroup([np.roll(np.arange(n), -1)], n, name=f"C{n}")


def dihedral(order: int) -> PermGroup:
    if order < 4 or order % 2:
        raise UnknownGroup(f"D{order}")
    return metacyclic(order // 2, -1, 0, f"D{order}")


def quaternion(order: int = 8) -> PermGroup:
    if order < 8 or order & (order - 1):
        raise UnknownGroup(f"Q{order}")
    n = order // 2
    return metacyclic(n, -1, n // 2, f"Q{order}")


def semidihedral16() -> PermGroup:
    return metacyclic(8, 3, 0, "SD16")


def symmetric(n: int) -> PermGroup:
    if n == 1:
        return trivial_group()
    gens = [np.roll(np.arange(n), -1)]
    t = np.arange(n)
    t[[0, 1]] = [1, 0]
    gens.append(t)
    return PermGroup(gens, n, name=f"S{n}")


def alternating(n: int) -> PermGroup:
    if n < 3:
        return trivial_group()
    gens = []
    for k in range(2, n):
        c = np.arange(n)
        c[[0, 1, k]] = [1, k, 0]
        gens.append(c)
    return PermGroup(gens, n, name=f"A{n}")


def klein_four() -> PermGroup:
    return PermGroup([[1, 0, 3, 2], [2, 3, 0, 1]], 4, name="V4")


def special_linear2(q: int) -> MatrixGroup:
    """SL(2,q) on the nonzero vectors of GF(q)^2."""
    gens = [[[1, 1], [0, 1]], [[0, q - 1], [1, 0]]]
    return MatrixGroup(q, gens, "nonzero-vectors", name=f"SL(2,{q})")


def general_linear23() -> MatrixGroup:
    gens = [[[1, 1], [0, 1]], [[0, 2], [1, 0]], [[2, 0], [0, 1]]]
    return MatrixGroup(3, gens, "nonzero-vectors", name="GL(2,3)")


def transvection(w, form: np.ndarray, q: int) -> FFMatrix:
    """Matrix of v -> v + <v, w> w for row vectors, <u, v> = u form v^T."""
    w = np.asarray(w, dtype=np.int64)
    return FFMatrix.of(q, np.eye(len(w), dtype=np.int64) + np.outer(form @ w, w))


def symplectic(n: int, q: int) -> MatrixGroup:
    """Sp(2n, q) for the form [[0, I], [-I, 0]], generated by transvections."""
    J = standard_symplectic_form(n)
    eye = np.eye(2 * n, dtype=np.int64)
    vectors = [eye[i] for i in range(2 * n)]
    vectors += [eye[i] + eye[i + 1] for i in range(n - 1)]
    vectors += [eye[n + i] + eye[n + i + 1] for i in range(n - 1)]
    gens = [transvection(w, J, q) for w in vectors]
    return MatrixGroup(q, gens, "vectors", name=f"Sp({2 * n},{q})")


def tilde_gl23() -> MatrixGroup:
    """~GL(2,3) as the subgroup of SL(2,7) generated by three fixed matrices,
    acting on the 48 nonzero vectors of GF(7)^2."""
    return MatrixGroup(7, [TILDE_X, TILDE_Y, TILDE_Z], "nonzero-vectors", name="~GL(2,3)")


def tilde_gl23_relations() -> dict[str, bool]:
    """Check the defining relations on the three matrices.

    Conjugation is read as a^b = b a b^-1 with the ordinary matrix product;
    the first four relations do not depend on this choice.
    """
    x, y, z = (FFMatrix.of(7, m) for m in (TILDE_X, TILDE_Y, TILDE_Z))
    one = FFMatrix.identity(7, 2)

    def conj(a, b):
        return b * a * b.inverse()

    return {
        "x^8 = 1": x**8 == one,
        "y^2 = x^4": y**2 == x**4,
        "z^3 = 1": z**3 == one,
        "x^y = x^-1": conj(x, y) == x.inverse(),
        "z^x = x^2 y z^-1": conj(z, x) == x**2 * y * z.inverse(),
        "(x^2)^z = y": conj(x**2, z) == y,
    }


def q8_tensor_d8() -> MatrixGroup:
    """Q8 o D8 as Q8 (x) D8 acting on GF(3)^2 (x) GF(3)^2.

    Q8 <= SL(2,3) and D8 <= O(2,3) share the central -I, so the Kronecker
    image is the central product; it preserves the alternating form J (x) I.
    """
    eye = np.eye(2, dtype=np.int64)
    mats = [np.kron(np.array(m), eye) for m in Q8_IN_SL23]
    mats += [np.kron(eye, np.array(m)) for m in D8_IN_GL23]
    return MatrixGroup(3, mats, "nonzero-vectors", name="Q8oD8")


_ALIASES = {
    "~GL(2,3)": tilde_gl23,
    "TILDE-GL(2,3)": tilde_gl23,
    "TILDE-GL23": tilde_gl23,
    "Q8OD8": q8_tensor_d8,
    "Q8∘D8": q8_tensor_d8,
    "Q8*D8": q8_tensor_d8,
    "Q8": lambda: quaternion(8),
    "Q16": lambda: quaternion(16),
    "SD16": semidihedral16,
    "V4": klein_four,
    "S3": lambda: symmetric(3),
    "S4": lambda: symmetric(4),
    "A4": lambda: alternating(4),
    "GL(2,3)": general_linear23,
    "SP(4,3)": lambda: symplectic(2, 3),
}

CATALOG_NAMES = (
    "C<n>", "D<2n>", "Q8", "Q16", "SD16", "V4", "S3", "S4", "A4",
    "SL(2,3)", "SL(2,5)", "SL(2,7)", "GL(2,3)", "Sp(4,3)", "~GL(2,3)", "Q8oD8",
)


def named_group(name: str) -> PermGroup:
    """Build a catalog group by name (see ``CATALOG_NAMES``)."""
    key = name.strip().upper().replace(" ", "")
    if key in _ALIASES:
        G = _ALIASES[key]()
        G.name = G.name or name
        return G
    if m := re.fullmatch(r"C_?(\d+)", key):
        return cyclic(int(m.group(1)))
    if m := re.fullmatch(r"D_?(\d+)", key):
        return dihedral(int(m.group(1)))
    if m := re.fullmatch(r"SL\(2,([357])\)", key):
        return special_linear2(int(m.group(1)))
    raise UnknownGroup(name)
