"""Class functions over F_l: products, conjugates, inner products,
decompositions, kernels and restriction to subgroups."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import NotACharacter, NotSubgroup, TableMismatch
from ..perm.group import PermGroup
from .modular import to_symmetric
from .table import CharacterTable, complex_lift, root_multiplicities, subgroup_table


class ClassFunction:
    """A class function given by its values (mod l) on the classes of a table."""

    __slots__ = ("table", "values")

    def __init__(self, table: CharacterTable, values):
        values = np.asarray(values, dtype=np.int64) % table.modulus
        if values.shape != (table.classes.k,):
            raise ValueError("one value per class is required")
        values.setflags(write=False)
        self.table = table
        self.values = values

    def _check(self, other: "ClassFunction") -> None:
        if other.table is not self.table:
            raise TableMismatch("class functions belong to different tables")

    def __eq__(self, other) -> bool:
        return isinstance(other, ClassFunction) and other.table is self.table and np.array_equal(
            self.values, other.values
        )

    def __hash__(self) -> int:
        return hash(self.values.tobytes())

    def __mul__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.table, self.values * other.values % self.table.modulus)

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.table, self.values + other.values)

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.table, self.values - other.values)

    def scale(self, c: int) -> "ClassFunction":
        return ClassFunction(self.table, self.values * int(c))

    def conjugate(self) -> "ClassFunction":
        return ClassFunction(self.table, self.values[self.table.classes.inverse_class])

    def is_real(self) -> bool:
        return self.conjugate() == self

    @property
    def degree(self) -> int:
        """Value at the identity, as an integer in (-l/2, l/2)."""
        return int(to_symmetric(self.values[0], self.table.modulus))

    def inner(self, other: "ClassFunction") -> int:
        return inner_product(self, other)

    def root_multiplicities(self) -> list[np.ndarray]:
        """Per class, eigenvalue multiplicities as signed integers."""
        l = self.table.modulus
        return [to_symmetric(root_multiplicities(self.table, self.values, c)[0], l)
                for c in range(self.table.classes.k)]

    @property
    def complex_values(self) -> np.ndarray:
        return complex_lift(self.table, self.values)[0]

    def __repr__(self) -> str:
        return f"ClassFunction(degree={self.degree}, values={to_symmetric(self.values, self.table.modulus).tolist()})"


def product(f: ClassFunction, g: ClassFunction) -> ClassFunction:
    return f * g


def conjugate(f: ClassFunction) -> ClassFunction:
    return f.conjugate()


def is_real(f: ClassFunction) -> bool:
    return f.is_real()


def inner_product(f: ClassFunction, g: ClassFunction) -> int:
    """(1/|G|) sum_C |C| f(C) g(C^-1), as the integer in (-l/2, l/2)."""
    f._check(g)
    t = f.table
    l = t.modulus
    sizes = t.classes.sizes % l
    s = int((f.values * g.values[t.classes.inverse_class] % l * sizes % l).sum() % l)
    return int(to_symmetric(s * pow(t.group.order, -1, l), l))


def multiplicities(f: ClassFunction) -> np.ndarray:
    """[f, chi] for every row chi of the table (signed integers)."""
    t = f.table
    l = t.modulus
    sizes = t.classes.sizes % l
    weighted = f.values * sizes % l
    conj_rows = t.values[:, t.classes.inverse_class]
    raw = (conj_rows @ weighted) % l * pow(t.group.order, -1, l) % l
    return to_symmetric(raw, l)


@dataclass(frozen=True)
class Constituent:
    index: int
    multiplicity: int
    degree: int
    kernel_order: int


@dataclass(frozen=True)
class DecompositionReport:
    """f = sum m_i chi_i over the table rows; eta counts non-principal constituents."""

    input_degree: int
    principal_multiplicity: int
    constituents: tuple[Constituent, ...]

    @property
    def eta(self) -> int:
        return sum(1 for c in self.constituents if c.index != 0)

    @property
    def nonprincipal(self) -> tuple[Constituent, ...]:
        return tuple(c for c in self.constituents if c.index != 0)

    @property
    def multiplicity_multiset(self) -> list[int]:
        return sorted(c.multiplicity for c in self.nonprincipal)

    @property
    def constituent_degrees(self) -> list[int]:
        return sorted(c.degree for c in self.nonprincipal)

    def consistent(self) -> bool:
        return sum(c.multiplicity * c.degree for c in self.constituents) == self.input_degree

    def to_dict(self) -> dict:
        return {
            "input_degree": self.input_degree,
            "principal_multiplicity": self.principal_multiplicity,
            "eta": self.eta,
            "constituents": [
                {"index": c.index, "multiplicity": c.multiplicity, "degree": c.degree, "kernel_order": c.kernel_order}
                for c in self.constituents
            ],
        }


def decompose(f: ClassFunction) -> DecompositionReport:
    """Multiplicities of every irreducible in a character ``f``."""
    t = f.table
    ms = multiplicities(f)
    if (ms < 0).any():
        raise NotACharacter(f"negative multiplicity {int(ms.min())}")
    parts = []
    for i in np.flatnonzero(ms).tolist():
        parts.append(Constituent(i, int(ms[i]), int(t.degrees[i]), kernel_order(t.row(i))))
    report = DecompositionReport(f.degree, int(ms[0]), tuple(parts))
    if not report.consistent():
        raise NotACharacter("multiplicities do not account for the degree")
    return report


def _character_multiplicities(f: ClassFunction) -> list[np.ndarray]:
    d = f.degree
    mults = f.root_multiplicities()
    for m in mults:
        if (m < 0).any() or int(m.sum()) != d:
            raise NotACharacter("eigenvalue multiplicities are not those of a representation")
    return mults


def kernel_classes(f: ClassFunction) -> np.ndarray:
    """Classes on which every eigenvalue of the representation is 1."""
    d = f.degree
    return np.array([c for c, m in enumerate(_character_multiplicities(f)) if m[0] == d], dtype=np.int64)


def center_classes(f: ClassFunction) -> np.ndarray:
    """Classes on which the representation is scalar (|f(g)| = f(1))."""
    return np.array(
        [c for c, m in enumerate(_character_multiplicities(f)) if np.count_nonzero(m) == 1], dtype=np.int64
    )


def kernel_mask(f: ClassFunction) -> np.ndarray:
    return f.table.classes.mask_of(kernel_classes(f))


def kernel_order(f: ClassFunction) -> int:
    return int(f.table.classes.sizes[kernel_classes(f)].sum())


def kernel(f: ClassFunction) -> PermGroup:
    G = f.table.group
    mask = kernel_mask(f)
    return G if mask.all() else G.subgroup_from_mask(mask, name="Ker")


def z_mask(f: ClassFunction) -> np.ndarray:
    return f.table.classes.mask_of(center_classes(f))


def z_of_character(f: ClassFunction) -> PermGroup:
    G = f.table.group
    mask = z_mask(f)
    return G if mask.all() else G.subgroup_from_mask(mask, name="Z(chi)")


def is_faithful(f: ClassFunction) -> bool:
    return kernel_order(f) == 1


def restrict(f: ClassFunction, H: PermGroup, H_table: CharacterTable | None = None) -> ClassFunction:
    """f on the classes of a subgroup H (elements are matched by permutation)."""
    G = f.table.group
    if H.degree != G.degree or not H.is_subgroup_of(G):
        raise NotSubgroup("restriction needs a subgroup on the same points")
    Ht = H_table or subgroup_table(f.table, H)
    if Ht.modulus != f.table.modulus:
        raise TableMismatch("subgroup table uses a different modulus")
    reps = H.elements[Ht.classes.representatives]
    g_classes = f.table.classes.class_of[G.indices(reps)]
    return ClassFunction(Ht, f.values[g_classes])


def is_irreducible_on(f: ClassFunction, H: PermGroup, H_table: CharacterTable | None = None) -> bool:
    r = restrict(f, H, H_table)
    return inner_product(r, r) == 1


def norm_on_subgroup(f: ClassFunction, mask: np.ndarray) -> int:
    """[f_N, f_N] for a normal subgroup N given as a union of G-classes."""
    t = f.table
    l = t.modulus
    cls = np.flatnonzero(mask[t.classes.representatives])
    order = int(t.classes.sizes[cls].sum())
    s = int((f.values[cls] * f.values[t.classes.inverse_class[cls]] % l * (t.classes.sizes[cls] % l) % l).sum() % l)
    return int(to_symmetric(s * pow(order, -1, l), l))


def degree_set(table: CharacterTable) -> set[int]:
    return set(int(d) for d in table.degrees)
