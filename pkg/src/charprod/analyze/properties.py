"""Invariants that must hold for every faithful character in the corpus.

Each check returns plain data (booleans, counts, offending orders) so the
suite and the property tests can report failures with witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..characters.classfunc import DecompositionReport, kernel_mask, multiplicities, norm_on_subgroup
from ..characters.modular import to_symmetric
from ..characters.table import CharacterTable, subgroup_table
from ..perm.group import PermGroup
from ..perm.subgroups import join_mask, minimal_normal_subgroups_above_mask, normal_subgroups_masks
from .structure import ZERO_TOL, SectionData, cached, center_of, character_stabilizer

EXHAUSTIVE_LIMIT = 5000
SAMPLE_SIZE = 24


def constituent_kernels(table: CharacterTable, report: DecompositionReport) -> list[np.ndarray]:
    return [kernel_mask(table.row(c.index)) for c in report.nonprincipal]


def center_is_kernel_intersection(table: CharacterTable, report: DecompositionReport) -> bool:
    """For faithful chi, Z(G) equals the intersection of the kernels of the constituents."""
    zmask = center_of(table.group)
    inter = np.ones(table.group.order, dtype=bool)
    for k in constituent_kernels(table, report):
        inter &= k
    return bool(np.array_equal(inter, zmask))


def some_multiplicity_one(report: DecompositionReport) -> bool:
    return not report.nonprincipal or any(c.multiplicity == 1 for c in report.nonprincipal)


def normal_subgroups(G: PermGroup, rng: np.random.Generator | None = None) -> tuple[list[np.ndarray], bool]:
    """All normal subgroups when |G| <= EXHAUSTIVE_LIMIT, else a sample; flag says which."""
    masks = cached(G, "normal-subgroups", lambda: normal_subgroups_masks(G))
    if G.order <= EXHAUSTIVE_LIMIT or len(masks) <= SAMPLE_SIZE:
        return masks, True
    rng = rng or np.random.default_rng(0)
    pick = np.sort(rng.choice(len(masks), size=SAMPLE_SIZE, replace=False))
    return [masks[i] for i in pick], False


def irreducibility_biconditional(
    table: CharacterTable, index: int, report: DecompositionReport, masks: list[np.ndarray]
) -> list[int]:
    """Orders of normal N where [chi_N irreducible] differs from [N lies in no constituent kernel]."""
    chi = table.row(index)
    kernels = constituent_kernels(table, report)
    bad = []
    for n in masks:
        irreducible = norm_on_subgroup(chi, n) == 1
        outside = all(not (n <= k).all() for k in kernels)
        if irreducible != outside:
            bad.append(int(n.sum()))
    return bad


@dataclass(frozen=True)
class RegularInstance:
    r_order: int
    s_order: int
    t_order: int
    holds: bool


def regular_character_instances(table: CharacterTable, index: int) -> list[RegularInstance]:
    """Pairs R, S of normal subgroups with R meet S = Z on whose product chi vanishes off R and off S.

    In each such situation chi * conj(chi) restricted to T = RS must vanish
    off Z and be constant on Z, i.e. be a multiple of the regular character
    of T/Z inflated to T.
    """
    G = table.group
    zmask = center_of(G)
    chi = table.row(index)
    cls = table.classes
    values = chi.complex_values
    cls_of = cls.class_of
    masks = [m for m in normal_subgroups(G)[0] if (zmask <= m).all() and m.sum() > zmask.sum()]
    out = []
    for i, r in enumerate(masks):
        for s in masks[i + 1 :]:
            if not np.array_equal(r & s, zmask):
                continue
            t = join_mask(G, r, s)
            off = (t & ~r) | (t & ~s)
            if np.any(np.abs(values[cls_of[np.flatnonzero(off)]]) > ZERO_TOL):
                continue
            prod = np.abs(values) ** 2
            tz = cls_of[np.flatnonzero(t & ~zmask)]
            zc = cls_of[np.flatnonzero(zmask)]
            ok = bool(np.all(prod[tz] < ZERO_TOL) and np.allclose(prod[zc], prod[zc][0]))
            out.append(RegularInstance(int(r.sum()), int(s.sum()), int(t.sum()), ok))
    return out


def symplectic_divisibility(section: SectionData) -> dict:
    """Arithmetic consequences of a symplectic action of G/E on E/Z.

    A transitive action on the e^2 - 1 nonzero vectors forces e^2 - 1 to
    divide |G/E|; a cyclic G/E acting irreducibly has order dividing e + 1.
    """
    e = int(round(section.index ** 0.5))
    out = {}
    if section.orbit_count == 1:
        out["transitive_divides"] = section.quotient_order % (e * e - 1) == 0
    qtype = section.quotient_type or ""
    if qtype.startswith("C") and section.quotient_order > 1:
        out["cyclic_divides"] = (e + 1) % section.quotient_order == 0
    return out


def nonabelian_kernel_identity(table: CharacterTable, report: DecompositionReport, alpha1: int, alpha2: int) -> dict:
    """alpha1 * alpha2 = alpha1(1) alpha2 as class functions, and m2 = 1 + alpha1(1)."""
    a1, a2 = table.row(alpha1), table.row(alpha2)
    m = {c.index: c.multiplicity for c in report.nonprincipal}
    return {
        "product_identity": (a1 * a2) == a2.scale(a1.degree),
        "multiplicity_identity": m.get(alpha2) == 1 + a1.degree,
    }


@dataclass(frozen=True)
class RestrictionFormInstance:
    l_order: int
    n_order: int
    theta_degree: int
    is_character: bool
    principal_free: bool

    @property
    def holds(self) -> bool:
        return self.is_character and self.principal_free


def restriction_form_instances(table: CharacterTable) -> list[RestrictionFormInstance]:
    """Check theta * conj(theta) - (1_N)^L for chief factors L/N of G.

    For every G-invariant theta in Irr(L) whose restriction to N is reducible,
    the difference must be a character (or zero) whose restriction to N does
    not contain 1_N.  The induced character (1_N)^L is |L:N| on N and 0 off N.
    """
    G = table.group
    out = []
    for n in normal_subgroups(G)[0]:
        if n.all():
            continue
        for lmask in minimal_normal_subgroups_above_mask(G, n):
            L = G.subgroup_from_mask(lmask, name="L")
            Lt = subgroup_table(table, L)
            l = Lt.modulus
            n_in_l = n[L.parent_indices]
            n_classes = n_in_l[Lt.classes.representatives]
            index = int(lmask.sum() // n.sum())
            induced = Lt.class_function(np.where(n_classes, index, 0))
            sizes = Lt.classes.sizes % l
            for th in range(Lt.k):
                theta = Lt.row(th)
                if norm_on_subgroup(theta, n_in_l) == 1:
                    continue
                if character_stabilizer(G, L, th, Lt) is not G:
                    continue
                phi = theta * theta.conjugate() - induced
                on_n = int((phi.values * sizes % l)[n_classes].sum() % l) * pow(int(n.sum()), -1, l) % l
                out.append(RestrictionFormInstance(
                    int(lmask.sum()), int(n.sum()), theta.degree,
                    bool((multiplicities(phi) >= 0).all()), int(to_symmetric(on_n, l)) == 0,
                ))
    return out
