"""Linear algebra over a prime field F_l with int64 numpy arrays.

All routines assume l < 2**31 so that products of two residues fit in int64;
row reductions reduce after every step.
"""

from __future__ import annotations

import numpy as np
from sympy import isprime, primitive_root


def choose_modulus(exponent: int, order: int) -> int:
    """Smallest prime l with l = 1 mod exponent and l > 2 * order."""
    l = -(-2 * order // exponent) * exponent + 1
    while not isprime(l):
        l += exponent
    return l


def root_of_unity(exponent: int, l: int) -> int:
    """A primitive exponent-th root of unity in F_l (from the least primitive root)."""
    if (l - 1) % exponent:
        raise ValueError(f"F_{l} has no primitive {exponent}-th root of unity")
    return pow(int(primitive_root(l)), (l - 1) // exponent, l)


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p and the pivot columns."""
    a = np.array(a, dtype=np.int64) % p
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        factors = a[:, c].copy()
        factors[r] = 0
        if factors.any():
            a = (a - np.outer(factors, a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Basis (as rows) of {x : a x = 0} over F_p."""
    a = np.asarray(a, dtype=np.int64)
    n = a.shape[1]
    red, pivots = rref(a, p)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for r, c in enumerate(pivots):
            basis[i, c] = (-red[r, f]) % p
    return basis


def left_nullspace(a: np.ndarray, p: int) -> np.ndarray:
    """Basis (as rows) of {x : x a = 0}."""
    return nullspace(np.asarray(a).T, p)


def hessenberg(a: np.ndarray, p: int, with_transform: bool = False):
    """Upper Hessenberg matrix h similar to ``a`` over F_p.

    With ``with_transform`` also returns Q such that h = Q a Q^-1, so a left
    eigenvector y of h gives the left eigenvector y Q of ``a``.
    """
    h = np.array(a, dtype=np.int64) % p
    n = len(h)
    q = np.eye(n, dtype=np.int64)
    for j in range(n - 2):
        nz = np.flatnonzero(h[j + 1:, j])
        if nz.size == 0:
            continue
        piv = j + 1 + int(nz[0])
        if piv != j + 1:
            h[[j + 1, piv]] = h[[piv, j + 1]]
            h[:, [j + 1, piv]] = h[:, [piv, j + 1]]
            q[[j + 1, piv]] = q[[piv, j + 1]]
        inv = pow(int(h[j + 1, j]), -1, p)
        u = h[j + 2:, j] * inv % p
        if not u.any():
            continue
        # rows r > j+1: r -= u_r * row(j+1); then column j+1 += sum_r u_r * column r
        h[j + 2:] = (h[j + 2:] - np.outer(u, h[j + 1])) % p
        h[:, j + 1] = (h[:, j + 1] + h[:, j + 2:] @ u) % p
        q[j + 2:] = (q[j + 2:] - np.outer(u, q[j + 1])) % p
    return (h, q) if with_transform else h


def hessenberg_charpoly(h: np.ndarray, p: int) -> np.ndarray:
    """Characteristic polynomial of an upper Hessenberg matrix, highest degree first."""
    n = len(h)
    # polys[m] holds the charpoly of the leading m x m block, lowest degree first
    polys = [np.array([1], dtype=np.int64)]
    for m in range(1, n + 1):
        cur = np.zeros(m + 1, dtype=np.int64)
        prev = polys[m - 1]
        cur[1:] += prev
        cur[:m] -= h[m - 1, m - 1] * prev
        prod = 1
        for i in range(1, m):
            prod = prod * int(h[m - i, m - i - 1]) % p
            if prod == 0:
                break
            coef = int(h[m - i - 1, m - 1]) * prod % p
            if coef:
                cur[: m - i] -= coef * polys[m - i - 1]
        polys.append(cur % p)
    return polys[n][::-1].copy()


def charpoly(a: np.ndarray, p: int) -> np.ndarray:
    """Characteristic polynomial det(xI - a) mod p, highest degree first (O(n^3))."""
    return hessenberg_charpoly(hessenberg(a, p), p)


def poly_eval(coeffs: np.ndarray, xs: np.ndarray, p: int) -> np.ndarray:
    xs = np.asarray(xs, dtype=np.int64)
    acc = np.zeros(xs.shape, dtype=np.int64)
    for c in np.asarray(coeffs, dtype=np.int64):
        acc = (acc * xs + c) % p
    return acc


def roots(coeffs: np.ndarray, p: int) -> np.ndarray:
    """All roots in F_p of a polynomial (highest degree first), by exhaustive evaluation."""
    return np.flatnonzero(poly_eval(coeffs, np.arange(p), p) == 0)


def derivative(coeffs: np.ndarray, p: int) -> np.ndarray:
    coeffs = np.asarray(coeffs, dtype=np.int64)
    n = len(coeffs) - 1
    return coeffs[:-1] * np.arange(n, 0, -1) % p


def _pivots(basis: np.ndarray) -> np.ndarray:
    """Pivot columns of a matrix already in RREF."""
    return np.argmax(basis != 0, axis=1)


def restrict_operator(basis: np.ndarray, op: np.ndarray, p: int) -> np.ndarray:
    """Matrix of x -> x op on the row space of an RREF ``basis`` (in that basis).

    The row space must be invariant under ``op``.
    """
    image = (basis @ op) % p
    return image[:, _pivots(basis)]


def _simple_left_eigenvectors(h: np.ndarray, lams: np.ndarray, p: int) -> np.ndarray:
    """Left eigenvectors of an unreduced Hessenberg h by forward substitution.

    Column j of x (h - lam I) = 0 involves x_0..x_(j+1) only, so with x_0 = 1
    the entries follow one by one.
    """
    n = len(h)
    lams = np.asarray(lams, dtype=np.int64)
    x = np.zeros((len(lams), n), dtype=np.int64)
    x[:, 0] = 1
    for j in range(n - 1):
        col = h[: j + 1, j]
        s = (x[:, : j + 1] @ col - lams * x[:, j]) % p
        x[:, j + 1] = (-s) * pow(int(h[j + 1, j]), -1, p) % p
    return x


def eigenspaces(basis: np.ndarray, op: np.ndarray, p: int) -> list[np.ndarray]:
    """Split an invariant row space into eigenspaces of x -> x op.

    ``basis`` must be in RREF.  Returns RREF bases; their dimensions sum to
    that of ``basis`` when the restriction is diagonalizable over F_p.
    """
    red = restrict_operator(basis, op, p)
    d = len(red)
    h, q = hessenberg(red, p, with_transform=True)
    cp = hessenberg_charpoly(h, p)
    lams = roots(cp, p)
    simple = poly_eval(derivative(cp, p), lams, p) != 0 if d > 1 else np.ones(len(lams), dtype=bool)
    unreduced = d == 1 or bool(np.all(np.diagonal(h, offset=-1) % p))
    out = []
    if unreduced and simple.any():
        ys = _simple_left_eigenvectors(h, lams[simple], p)
        coords = ys @ q % p
        ok = np.all((coords @ red) % p == (lams[simple, None] * coords) % p, axis=1)
        for lam_ok, c in zip(ok, coords):
            if not lam_ok:
                raise ArithmeticError("eigenvector check failed")
            v = c @ basis % p
            piv = int(np.argmax(v != 0))
            out.append((v * pow(int(v[piv]), -1, p) % p)[None, :])
        rest = lams[~simple]
    else:
        rest = lams
    for lam in rest.tolist():
        shifted = (red - lam * np.eye(d, dtype=np.int64)) % p
        coords = left_nullspace(shifted, p)
        if len(coords):
            space, _ = rref((coords @ basis) % p, p)
            out.append(space)
    return out


def to_symmetric(x, p: int):
    """Map residues to the representatives in (-p/2, p/2)."""
    x = np.asarray(x, dtype=np.int64) % p
    return np.where(x > p // 2, x - p, x)
