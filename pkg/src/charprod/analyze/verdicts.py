"""Mechanical verdicts for faithful characters with eta = 1 or eta = 2.

Each verdict first records precondition failures (chi not faithful, G not
solvable, eta different from the value the classification is about); when
those hold it matches computed structure against the expected case list and
either names the case or reports a violation with the data that failed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..characters.classfunc import DecompositionReport, is_faithful, kernel_mask, multiplicities, restrict
from ..characters.table import CharacterTable, character_table, subgroup_table
from ..perm.group import PermGroup
from ..perm.subgroups import is_nilpotent, is_solvable, quotient_group
from .structure import (
    SectionData,
    StructureReport,
    cached,
    character_stabilizer,
    chief_factors_above,
    eta,
    group_summary,
    is_dihedral,
    is_prime_power,
    orbit_count_on_section,
    section_data,
    structure_report,
)

DL_BOUND = 18
DL_BOUND_ABELIAN_KERNEL = 6

# chi(1) -> acceptable types of G/E for the eta = 1 cases with a catalog quotient
ETA_ONE_QUOTIENTS = {3: ("Q8", "SL(2,3)"), 5: ("SL(2,3)",), 7: ("~GL(2,3)",)}
ETA_ONE_CASES = {2: "i", 3: "ii", 5: "iii", 7: "iv", 9: "v"}
NONABELIAN_KERNEL_QUOTIENTS = {10: "SL(2,3)", 14: "~GL(2,3)"}


def _preconditions(G: PermGroup, table: CharacterTable, index: int, want_eta: int):
    chi = table.row(index)
    failures = []
    report = eta(G, index, table)
    if not is_faithful(chi):
        failures.append("character is not faithful")
    if not cached(G, "solvable", lambda: is_solvable(G)):
        failures.append("group is not solvable")
    if report.eta != want_eta:
        failures.append(f"eta is {report.eta}, not {want_eta}")
    return chi, report, failures


# -- eta = 1 -----------------------------------------------------------------------


@dataclass(frozen=True)
class EtaOneVerdict:
    applies: bool
    case: str | None
    degree: int
    eta: int
    m: int | None
    precondition_failures: tuple[str, ...] = ()
    structure: StructureReport | None = None
    witness: dict = field(default_factory=dict)

    @property
    def violation(self) -> bool:
        return self.case == "violation"

    def to_dict(self) -> dict:
        return {
            "kind": "eta-one",
            "applies": self.applies,
            "case": self.case,
            "degree": self.degree,
            "eta": self.eta,
            "m": self.m,
            "precondition_failures": list(self.precondition_failures),
            "structure": self.structure.to_dict() if self.structure else None,
            "witness": self.witness,
        }


def _eta_one_section_ok(d: int, s: SectionData) -> bool:
    if not s.fully_ramified or s.e != d:
        return False
    if d in ETA_ONE_QUOTIENTS:
        return s.quotient_type in ETA_ONE_QUOTIENTS[d]
    if d == 9:
        f = s.fitting
        return f is not None and f.fitting_order == 32 and f.fitting_extraspecial and f.second_index == 5 and f.top_index <= 2
    return False


def classify_eta_one(G: PermGroup, index: int, table: CharacterTable | None = None) -> EtaOneVerdict:
    """Match a faithful chi with chi * conj(chi) = 1 + m alpha against the five cases."""
    table = table or character_table(G)
    chi, report, failures = _preconditions(G, table, index, 1)
    d = chi.degree
    if failures:
        return EtaOneVerdict(False, None, d, report.eta, None, tuple(failures))
    m = report.nonprincipal[0].multiplicity
    structure = structure_report(table, index)
    witness: dict = {"m": m, "alpha_degree": report.nonprincipal[0].degree}
    problems = []
    if m != 1:
        problems.append(f"m = {m}")
    if not any(s.fully_ramified and s.e * s.e == s.index == d * d for s in structure.sections):
        problems.append("no chief factor E/Z with chi(1)^2 = |E:Z|")
    if d not in ETA_ONE_CASES:
        problems.append(f"degree {d} is not one of 2, 3, 5, 7, 9")
    elif d == 2:
        witness["G_over_Z_type"] = structure.center_quotient_type
        if structure.center_quotient_type not in ("A4", "S4"):
            problems.append(f"G/Z has type {structure.center_quotient_type}")
    else:
        good = [i for i, s in enumerate(structure.sections) if _eta_one_section_ok(d, s)]
        witness["matching_sections"] = good
        if not good:
            problems.append("no chief factor has the expected quotient data")
    if problems:
        witness["problems"] = problems
        return EtaOneVerdict(True, "violation", d, 1, m, (), structure, witness)
    return EtaOneVerdict(True, ETA_ONE_CASES[d], d, 1, m, (), structure, witness)


# -- eta = 2 -----------------------------------------------------------------------


@dataclass(frozen=True)
class EtaTwoClauses:
    even_order: bool
    dl: int
    kernel_is_center: tuple[bool, bool]
    kernel_abelian: tuple[bool, bool]
    kernel_orders: tuple[int, int]
    degrees: tuple[int, int]
    multiplicities: tuple[int, int]
    prime_power_or_special: bool

    @property
    def kernel_clause(self) -> bool:
        return any(self.kernel_is_center)

    @property
    def holds(self) -> bool:
        return self.even_order and self.dl <= DL_BOUND and self.kernel_clause and self.prime_power_or_special

    def to_dict(self) -> dict:
        return {
            "even_order": self.even_order,
            "dl": self.dl,
            "kernel_is_center": list(self.kernel_is_center),
            "kernel_abelian": list(self.kernel_abelian),
            "kernel_orders": list(self.kernel_orders),
            "alpha_degrees": list(self.degrees),
            "multiplicities": list(self.multiplicities),
            "prime_power_or_special": self.prime_power_or_special,
        }


@dataclass(frozen=True)
class EtaTwoVerdict:
    applies: bool
    subcase: str | None
    degree: int
    eta: int
    clauses: EtaTwoClauses | None = None
    precondition_failures: tuple[str, ...] = ()
    witness: dict = field(default_factory=dict)
    problems: tuple[str, ...] = ()

    @property
    def violation(self) -> bool:
        return self.applies and bool(self.problems)

    def to_dict(self) -> dict:
        return {
            "kind": "eta-two",
            "applies": self.applies,
            "subcase": self.subcase,
            "degree": self.degree,
            "eta": self.eta,
            "clauses": self.clauses.to_dict() if self.clauses else None,
            "precondition_failures": list(self.precondition_failures),
            "witness": self.witness,
            "problems": list(self.problems),
            "violation": self.violation,
        }


def _is_abelian_mask(G: PermGroup, mask: np.ndarray) -> bool:
    xs = np.flatnonzero(mask)
    gens = G.generators_for_mask(mask)
    for g in gens:
        if not np.array_equal(G.mul(xs, g), G.mul(g, xs)):
            return False
    return True


def ordered_constituents(report: DecompositionReport, kernels: list[np.ndarray], zmask: np.ndarray):
    """(alpha_1, alpha_2): alpha_1 is the one whose kernel exceeds Z when exactly one does."""
    parts = list(zip(report.nonprincipal, kernels))
    is_z = [np.array_equal(k, zmask) for _, k in parts]
    if is_z.count(False) == 1:
        parts.sort(key=lambda p: np.array_equal(p[1], zmask))
    else:
        parts.sort(key=lambda p: (p[0].degree, p[0].multiplicity, p[0].index))
    return parts


def _nilpotent_checks(G, d, clauses, zmask, witness) -> list[str]:
    problems = []
    Q = quotient_group(G, zmask).group
    dihedral = is_dihedral(Q) and is_prime_power(Q.order) and Q.order % 2 == 0
    witness["G_over_Z_order"] = Q.order
    witness["G_over_Z_dihedral_2_group"] = dihedral
    if d != 2:
        problems.append(f"chi(1) = {d}, expected 2")
    if clauses.multiplicities != (1, 1):
        problems.append(f"multiplicities {clauses.multiplicities}")
    if not dihedral:
        problems.append("G/Z is not a dihedral 2-group")
    return problems


def _kernels_equal_checks(table, index, d, clauses, zmask, witness) -> list[str]:
    G = table.group
    problems = []
    sections = [section_data(table, index, e, zmask, quotient=False) for e in chief_factors_above(G, zmask)]
    witness["sections"] = [s.to_dict() for s in sections]
    if not any(s.fully_ramified and s.orbit_count == 2 for s in sections):
        problems.append("no fully ramified chief factor with 2 orbits")
    if clauses.multiplicities != (1, 1):
        problems.append(f"multiplicities {clauses.multiplicities}")
    if not is_prime_power(d):
        problems.append(f"chi(1) = {d} is not a prime power")
    return problems


def _abelian_kernel_checks(table, index, d, clauses, kmask, witness) -> list[str]:
    G = table.group
    problems = []
    K = G.subgroup_from_mask(kmask, name="K")
    Kt = subgroup_table(table, K)
    below = restrict(table.row(index), K, Kt)
    theta = int(np.flatnonzero(multiplicities(below) > 0)[0])
    stab = character_stabilizer(G, K, theta, Kt)
    smask = stab.mask_in(G) if stab is not G else np.ones(G.order, dtype=bool)
    lmasks = chief_factors_above(G, kmask)
    results = []
    for lmask in lmasks:
        inter = smask & lmask
        product_order = int(smask.sum()) * int(lmask.sum()) // int(inter.sum())
        count, sizes = orbit_count_on_section(G, lmask, kmask, acting=smask)
        ok = product_order == G.order and np.array_equal(inter, kmask) and count == 1
        results.append({
            "L_order": int(lmask.sum()),
            "G_equals_stabilizer_times_L": product_order == G.order,
            "stabilizer_meets_L_in_K": bool(np.array_equal(inter, kmask)),
            "orbits_on_L_over_K": sizes,
            "ok": bool(ok),
        })
    witness.update({
        "K_order": int(kmask.sum()),
        "theta": theta,
        "theta_degree": int(Kt.degrees[theta]),
        "stabilizer_order": int(smask.sum()),
        "chief_factors": results,
    })
    if not any(r["ok"] for r in results):
        problems.append("no chief factor L/K with G = G_theta L, G_theta meet L = K and a transitive action")
    if clauses.dl > DL_BOUND_ABELIAN_KERNEL:
        problems.append(f"dl = {clauses.dl} > {DL_BOUND_ABELIAN_KERNEL}")
    if clauses.multiplicities[0] != 1:
        problems.append(f"m_1 = {clauses.multiplicities[0]}")
    if not is_prime_power(d):
        problems.append(f"chi(1) = {d} is not a prime power")
    return problems


def _nonabelian_kernel_checks(table, index, d, clauses, kmask, zmask, witness) -> list[str]:
    G = table.group
    problems = []
    if clauses.multiplicities != (1, 4):
        problems.append(f"multiplicities {clauses.multiplicities}, expected (1, 4)")
    if clauses.degrees[0] != 3:
        problems.append(f"alpha_1(1) = {clauses.degrees[0]}, expected 3")
    if d not in NONABELIAN_KERNEL_QUOTIENTS:
        problems.append(f"chi(1) = {d} is not 10 or 14")
    found = []
    for emask in chief_factors_above(G, zmask):
        if not (emask <= kmask).all():
            continue
        s = section_data(table, index, emask, zmask)
        found.append(s.to_dict())
        expected = NONABELIAN_KERNEL_QUOTIENTS.get(d)
        if expected and s.quotient_type == expected and s.fitting and s.fitting.fitting_type == "Q8":
            witness["G_over_E_type"] = s.quotient_type
    witness["sections_in_kernel"] = found
    if "G_over_E_type" not in witness:
        problems.append("no chief factor E/Z inside the kernel with the expected G/E")
    return problems


def classify_eta_two(G: PermGroup, index: int, table: CharacterTable | None = None) -> EtaTwoVerdict:
    """Check the clauses for chi * conj(chi) = 1 + m1 alpha1 + m2 alpha2 and dispatch to a subcase."""
    table = table or character_table(G)
    chi, report, failures = _preconditions(G, table, index, 2)
    d = chi.degree
    if failures:
        return EtaTwoVerdict(False, None, d, report.eta, precondition_failures=tuple(failures))
    zmask, dl = group_summary(G)[:2]
    kernels = [kernel_mask(table.row(c.index)) for c in report.nonprincipal]
    (a1, k1), (a2, k2) = ordered_constituents(report, kernels, zmask)
    is_z = (bool(np.array_equal(k1, zmask)), bool(np.array_equal(k2, zmask)))
    abelian = (_is_abelian_mask(G, k1), _is_abelian_mask(G, k2))
    mults = (a1.multiplicity, a2.multiplicity)
    if all(abelian):
        special = is_prime_power(d)
    else:
        special = sorted(mults) == [1, 4] and d in (10, 14)
    clauses = EtaTwoClauses(
        G.order % 2 == 0, dl, is_z, abelian,
        (int(k1.sum()), int(k2.sum())), (a1.degree, a2.degree), mults, special,
    )
    problems = []
    if not clauses.even_order:
        problems.append("odd order")
    if clauses.dl > DL_BOUND:
        problems.append(f"dl = {clauses.dl} > {DL_BOUND}")
    if not clauses.kernel_clause:
        problems.append("neither kernel equals Z")
    if not special:
        problems.append("neither the prime-power nor the {10, 14} alternative holds")
    witness: dict = {"alpha_indices": [a1.index, a2.index]}
    if cached(G, "nilpotent", lambda: is_nilpotent(G)):
        subcase = "nilpotent"
        problems += _nilpotent_checks(G, d, clauses, zmask, witness)
    elif all(is_z):
        subcase = "kernels-equal"
        problems += _kernels_equal_checks(table, index, d, clauses, zmask, witness)
    elif abelian[0]:
        subcase = "abelian-kernel"
        problems += _abelian_kernel_checks(table, index, d, clauses, k1, witness)
    else:
        subcase = "nonabelian-kernel"
        problems += _nonabelian_kernel_checks(table, index, d, clauses, k1, zmask, witness)
    return EtaTwoVerdict(True, subcase, d, 2, clauses, (), witness, tuple(problems))
