"""Structural data attached to a faithful irreducible character.

Everything here works on an enumerated ``PermGroup`` together with its
character table: decompositions of chi * conj(chi), fully ramified sections
E/Z, conjugation orbits on (E/Z)^#, character stabilizers, and a summary of
the quotient G/E (catalog type and Fitting data).
"""

from __future__ import annotations

import weakref
from dataclasses import dataclass, field

import numpy as np
from sympy import factorint

from ..characters.classfunc import (
    ClassFunction,
    DecompositionReport,
    center_classes,
    decompose,
    norm_on_subgroup,
)
from ..characters.table import CharacterTable, character_table
from ..errors import NotNormal, OutOfCatalog
from ..perm.catalog import CATALOG_LIMIT, catalog_isomorphism_type
from ..perm.group import PermGroup
from ..perm.subgroups import (
    as_mask,
    center_mask,
    derived_length,
    derived_subgroup_mask,
    fitting_mask,
    is_normal,
    minimal_normal_subgroups_above_mask,
    quotient_group,
)

ZERO_TOL = 1e-9


def _row(table: CharacterTable, chi) -> ClassFunction:
    return chi if isinstance(chi, ClassFunction) else table.row(int(chi))


def eta(G: PermGroup, index: int, table: CharacterTable | None = None) -> DecompositionReport:
    """Decomposition of chi * conj(chi) for row ``index`` of the table of G."""
    table = table or character_table(G)
    chi = table.row(index)
    return decompose(chi * chi.conjugate())


def is_prime_power(n: int) -> bool:
    return n > 1 and len(factorint(n)) == 1


# -- fully ramified sections ----------------------------------------------------


@dataclass(frozen=True)
class RamificationCheck:
    """The four conditions for E/Z to be fully ramified, tested separately."""

    restriction_irreducible: bool
    scalar_on_z: bool
    square_index: bool
    vanishes_off_z: bool
    e: int
    index: int

    @property
    def holds(self) -> bool:
        return self.restriction_irreducible and self.scalar_on_z and self.square_index and self.vanishes_off_z

    def __bool__(self) -> bool:
        return self.holds


def fully_ramified_check(table: CharacterTable, chi, E, Z) -> RamificationCheck:
    """Is E/Z fully ramified with respect to chi?  ``E`` and ``Z`` must be normal."""
    G = table.group
    f = _row(table, chi)
    emask, zmask = as_mask(G, E), as_mask(G, Z)
    if not is_normal(G, emask) or not is_normal(G, zmask):
        raise NotNormal("E and Z must be normal subgroups")
    if not (zmask <= emask).all():
        raise ValueError("Z must be contained in E")
    cls = table.classes
    d = f.degree
    index = int(emask.sum()) // int(zmask.sum())
    irreducible = norm_on_subgroup(f, emask) == 1
    # chi_Z = e * lambda: each class of Z acts by a scalar, so e = chi(1)
    zc = cls.classes_in(zmask)
    scalar = bool(np.isin(zc, center_classes(f)).all())
    e = d if scalar else 0
    off = cls.classes_in(emask & ~zmask)
    vanishes = bool(np.all(np.abs(f.complex_values[off]) < ZERO_TOL))
    return RamificationCheck(irreducible, scalar, e > 1 and e * e == index, vanishes, e, index)


# -- conjugation orbits on a section --------------------------------------------


def _coset_labels(G: PermGroup, emask: np.ndarray, zmask: np.ndarray) -> np.ndarray:
    """Label each element of E by its coset xZ (-1 outside E)."""
    labels = np.full(G.order, -1, dtype=np.int64)
    zs = np.flatnonzero(zmask)
    n = 0
    for x in np.flatnonzero(emask).tolist():
        if labels[x] < 0:
            labels[G.mul(x, zs)] = n
            n += 1
    return labels


def is_elementary_abelian_section(G: PermGroup, E, Z) -> bool:
    emask, zmask = as_mask(G, E), as_mask(G, Z)
    if not (zmask <= emask).all():
        return False
    index = int(emask.sum()) // int(zmask.sum())
    if index == 1:
        return True
    primes = factorint(index)
    if len(primes) != 1:
        return False
    (p,) = primes
    if not (derived_subgroup_mask(G, emask) <= zmask).all():
        return False
    xs = np.flatnonzero(emask)
    return bool(zmask[G.power(xs, p)].all())


def orbit_count_on_section(G: PermGroup, E, Z, acting=None) -> tuple[int, list[int]]:
    """Orbits of conjugation on the nonzero vectors of the elementary abelian E/Z.

    ``acting`` (default G) is the subgroup whose generators act.
    """
    emask, zmask = as_mask(G, E), as_mask(G, Z)
    if not is_elementary_abelian_section(G, emask, zmask):
        raise ValueError("E/Z is not an elementary abelian section")
    labels = _coset_labels(G, emask, zmask)
    n = int(labels.max()) + 1
    reps = np.array([int(np.flatnonzero(labels == c)[0]) for c in range(n)], dtype=np.int64)
    zero = int(labels[G.identity_index])
    if acting is None or acting is G:
        gens = [G.index(g) for g in G.generator_arrays]
    else:
        gens = G.generators_for_mask(as_mask(G, acting))
    parent = list(range(n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for g in gens:
        images = labels[G.conj(reps, g)]
        for a, b in zip(range(n), images.tolist()):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    roots = [find(a) for a in range(n) if a != zero]
    sizes = sorted(np.unique(roots, return_counts=True)[1].tolist()) if roots else []
    return len(sizes), sizes


# -- stabilizers of characters of a normal subgroup -----------------------------


def character_stabilizer(G: PermGroup, K: PermGroup, theta: int, K_table: CharacterTable) -> PermGroup:
    """{g in G : theta^g = theta} for row ``theta`` of the table of a normal K."""
    kmask = as_mask(G, K)
    if not is_normal(G, kmask):
        raise NotNormal("K is not normal in G")
    class_in_k = np.full(G.order, -1, dtype=np.int64)
    class_in_k[G.indices(K.elements)] = K_table.classes.class_of
    values = K_table.values[theta]
    reps = G.indices(K.elements[K_table.classes.representatives])
    gs = np.arange(G.order)
    stable = np.ones(G.order, dtype=bool)
    for c, r in enumerate(reps.tolist()):
        moved = class_in_k[G.conj(r, gs)]
        stable &= values[moved] == values[c]
    return G if stable.all() else G.subgroup_from_mask(stable, name="stabilizer")


# -- quotient summaries ----------------------------------------------------------


def catalog_type_or_none(G: PermGroup) -> str | None:
    if G.order > CATALOG_LIMIT:
        return None
    try:
        return catalog_isomorphism_type(G)
    except OutOfCatalog:
        return None


def is_extraspecial(P: PermGroup) -> bool:
    """p-group whose center, derived subgroup and Frattini subgroup coincide with order p."""
    primes = factorint(P.order)
    if len(primes) != 1:
        return False
    (p,) = primes
    z = center_mask(P)
    if int(z.sum()) != p:
        return False
    if not np.array_equal(derived_subgroup_mask(P), z):
        return False
    return bool(z[P.power(np.arange(P.order), p)].all())


def is_dihedral(G: PermGroup) -> bool:
    """Order 2n (n >= 2) with a cyclic subgroup of index 2 outside which every element is an involution."""
    n2 = G.order
    if n2 < 4 or n2 % 2:
        return False
    n = n2 // 2
    orders = G.element_orders
    for r in np.flatnonzero(orders == n).tolist():
        R = G.closure([r])
        if bool(np.all(orders[~R] == 2)):
            return True
    if n == 2:
        return bool(np.count_nonzero(orders == 2) == 3)
    return False


@dataclass(frozen=True)
class FittingData:
    fitting_order: int
    fitting_type: str | None
    fitting_extraspecial: bool
    second_index: int
    top_index: int

    def to_dict(self) -> dict:
        return {
            "fitting_order": self.fitting_order,
            "fitting_type": self.fitting_type,
            "fitting_extraspecial": self.fitting_extraspecial,
            "F2_over_F": self.second_index,
            "top_index": self.top_index,
        }


def fitting_data(G: PermGroup) -> FittingData:
    """(type of F(G), |F2(G)/F(G)|, |G/F2(G)|) for an enumerated solvable G."""
    F = fitting_mask(G)
    Q = quotient_group(G, F)
    F2 = Q.preimage_mask(fitting_mask(Q.group))
    f = int(F.sum())
    Fgroup = G if F.all() else G.subgroup_from_mask(F, name="F")
    return FittingData(
        f, catalog_type_or_none(Fgroup), is_extraspecial(Fgroup), int(F2.sum()) // f, G.order // int(F2.sum())
    )


@dataclass(frozen=True)
class SectionData:
    """One chief factor E/Z above the center and what chi does on it."""

    e_order: int
    index: int
    ramification: RamificationCheck
    orbit_count: int | None
    orbit_sizes: tuple[int, ...]
    quotient_order: int
    quotient_type: str | None
    fitting: FittingData | None
    mask: np.ndarray = field(repr=False, compare=False)

    @property
    def fully_ramified(self) -> bool:
        return self.ramification.holds

    @property
    def e(self) -> int:
        return self.ramification.e

    def to_dict(self) -> dict:
        return {
            "E_order": self.e_order,
            "index": self.index,
            "fully_ramified": self.fully_ramified,
            "e": self.e,
            "orbit_count": self.orbit_count,
            "orbit_sizes": list(self.orbit_sizes),
            "quotient_order": self.quotient_order,
            "quotient_type": self.quotient_type,
            "fitting": self.fitting.to_dict() if self.fitting else None,
        }


@dataclass(frozen=True)
class StructureReport:
    """Center, derived length, G/Z type and every chief factor E/Z above the center."""

    z_order: int
    dl: int
    center_quotient_order: int
    center_quotient_type: str | None
    sections: tuple[SectionData, ...]

    @property
    def primary(self) -> SectionData | None:
        """The first fully ramified section, else the first section."""
        for s in self.sections:
            if s.fully_ramified:
                return s
        return self.sections[0] if self.sections else None

    def to_dict(self) -> dict:
        return {
            "Z_order": self.z_order,
            "dl": self.dl,
            "G_over_Z_order": self.center_quotient_order,
            "G_over_Z_type": self.center_quotient_type,
            "sections": [s.to_dict() for s in self.sections],
        }


# character-independent data (orbits, quotient types) is shared by every row of a table
_CACHE: "weakref.WeakKeyDictionary[PermGroup, dict]" = weakref.WeakKeyDictionary()


def cached(G: PermGroup, key, compute):
    """Memoize a character-independent computation on G."""
    store = _CACHE.setdefault(G, {})
    if key not in store:
        store[key] = compute()
    return store[key]


def _orbits(G: PermGroup, emask: np.ndarray, zmask: np.ndarray):
    try:
        return orbit_count_on_section(G, emask, zmask)
    except ValueError:
        return None, []


def _quotient_summary(G: PermGroup, emask: np.ndarray):
    Q = quotient_group(G, emask).group
    return catalog_type_or_none(Q), fitting_data(Q)


def section_data(table: CharacterTable, chi, emask: np.ndarray, zmask: np.ndarray, quotient: bool = True) -> SectionData:
    G = table.group
    ram = fully_ramified_check(table, chi, emask, zmask)
    key = (emask.tobytes(), zmask.tobytes())
    count, sizes = cached(G, ("orbits",) + key, lambda: _orbits(G, emask, zmask))
    qtype, fit = None, None
    qorder = G.order // int(emask.sum())
    if quotient:
        qtype, fit = cached(G, ("quotient", key[0]), lambda: _quotient_summary(G, emask))
    return SectionData(int(emask.sum()), ram.index, ram, count, tuple(sizes), qorder, qtype, fit, emask)


def chief_factors_above(G: PermGroup, mask: np.ndarray) -> list[np.ndarray]:
    """Cached ``minimal_normal_subgroups_above_mask``."""
    return cached(G, ("minimal", mask.tobytes()), lambda: minimal_normal_subgroups_above_mask(G, mask))


def center_of(G: PermGroup) -> np.ndarray:
    """Cached mask of Z(G)."""
    return cached(G, "center", lambda: center_mask(G))


def _group_summary(G: PermGroup):
    zmask = center_of(G)
    zq = quotient_group(G, zmask).group
    return zmask, derived_length(G), zq.order, catalog_type_or_none(zq)


def group_summary(G: PermGroup):
    """(center mask, derived length, |G/Z|, catalog type of G/Z), cached per group."""
    return cached(G, "summary", lambda: _group_summary(G))


def structure_report(table: CharacterTable, chi) -> StructureReport:
    G = table.group
    zmask, dl, zq_order, zq_type = group_summary(G)
    sections = []
    if not zmask.all():
        for emask in chief_factors_above(G, zmask):
            sections.append(section_data(table, chi, emask, zmask))
    return StructureReport(int(zmask.sum()), dl, zq_order, zq_type, tuple(sections))
