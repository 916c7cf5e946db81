"""The reproduction suite: every acceptance claim as a list of checked rows.

Each criterion produces rows ``(claim, expected, computed, passed)``.  The
report built from the rows is canonical and carries no timings, so two runs
with the same seed produce identical bytes; timings are returned separately.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .analyze.properties import (
    center_is_kernel_intersection,
    irreducibility_biconditional,
    nonabelian_kernel_identity,
    normal_subgroups,
    regular_character_instances,
    some_multiplicity_one,
    symplectic_divisibility,
)
from .analyze.scan import scan_table
from .analyze.structure import eta, fitting_data, group_summary, is_dihedral, structure_report
from .analyze.verdicts import classify_eta_one, classify_eta_two
from .builders.named import named_group, tilde_gl23_relations
from .builders.products import wreath_affine
from .builders.spec import GroupSpec, build, shipped_specs
from .characters.classfunc import is_faithful, kernel_mask, multiplicities
from .characters.table import DEFAULT_SEED, CharacterTable, character_table
from .errors import CharprodError
from .oracle import brute_force_table, square_multiplicities
from .perm.catalog import is_isomorphic_to
from .perm.group import ENUMERATION_BOUND, PermGroup
from .perm.subgroups import derived_subgroup_mask, fitting_subgroup, quotient_group, sylow_mask
from .report import dumps_json, envelope, markdown_table, table_to_dict

ORACLE_TOL = 1e-8


@dataclass(frozen=True)
class SuiteRow:
    claim: str
    expected: str
    computed: str
    passed: bool

    def to_dict(self) -> dict:
        return {"claim": self.claim, "expected": self.expected, "computed": self.computed, "passed": self.passed}


@dataclass
class CriterionResult:
    key: str
    title: str
    budget: float
    rows: list[SuiteRow]
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    @property
    def within_budget(self) -> bool:
        return self.seconds <= self.budget

    def to_dict(self) -> dict:
        return {
            "key": self.key,
            "title": self.title,
            "passed": self.passed,
            "rows": [r.to_dict() for r in self.rows],
        }


@dataclass
class SuiteContext:
    seed: int = DEFAULT_SEED
    bound: int = ENUMERATION_BOUND
    include_stretch: bool = False
    corpus: list[GroupSpec] | None = None
    _tables: dict = field(default_factory=dict)

    def specs(self) -> dict[str, GroupSpec]:
        return shipped_specs()

    def table(self, spec_id: str) -> CharacterTable:
        if spec_id not in self._tables:
            spec = self.specs()[spec_id]
            self._tables[spec_id] = character_table(spec.build(self.bound), seed=self.seed)
        return self._tables[spec_id]

    def table_of(self, spec: GroupSpec) -> CharacterTable:
        key = spec.dumps()
        if key not in self._tables:
            self._tables[key] = character_table(spec.build(self.bound), seed=self.seed)
        return self._tables[key]


def _faithful_of_degree(table: CharacterTable, degree: int) -> list[int]:
    return [i for i in range(table.k) if table.degrees[i] == degree and is_faithful(table.row(i))]


def _counts(items) -> str:
    c = Counter(items)
    return "; ".join(f"{n} x {k}" for k, n in sorted(c.items(), key=lambda kv: str(kv[0])))


# -- agreement with the brute-force oracle -------------------------------------------


def compare_with_oracle(G: PermGroup, table: CharacterTable) -> tuple[bool, str]:
    brute = brute_force_table(G.generator_arrays)
    if len(brute.elements) != G.order:
        return False, f"oracle enumerated {len(brute.elements)} elements"
    to_dixon = np.array([table.classes.class_of[G.index(np.array(c[0]))] for c in brute.classes])
    if sorted(to_dixon.tolist()) != list(range(table.k)):
        return False, "class partitions differ"
    dixon = table.complex_values[:, to_dixon]
    # match oracle rows to modular rows by value
    dist = np.abs(brute.values[:, None, :] - dixon[None, :, :]).max(axis=2)
    match = dist.argmin(axis=1)
    if sorted(match.tolist()) != list(range(table.k)):
        return False, "rows do not match one to one"
    deviation = float(dist[np.arange(table.k), match].max())
    same_degrees = sorted(brute.degrees.tolist()) == sorted(int(d) for d in table.degrees)
    oracle_mults = square_multiplicities(brute.values, brute.sizes, G.order)
    dixon_mults = np.array([multiplicities(table.row(int(j)) * table.row(int(j)).conjugate()) for j in match])
    same_mults = bool(np.array_equal(oracle_mults, dixon_mults[:, match]))
    ok = same_degrees and same_mults and deviation < ORACLE_TOL
    return ok, (
        f"k={table.k}, degrees {'agree' if same_degrees else 'differ'}, "
        f"multiplicity matrices {'agree' if same_mults else 'differ'}, max deviation {deviation:.1e}"
    )


ORACLE_GROUPS = (
    "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C12", "V4", "S3", "D8", "D16", "D32", "D64",
    "Q8", "Q16", "SD16", "A4", "S4", "SL(2,3)", "GL(2,3)", "~GL(2,3)",
)


def criterion_oracle(ctx: SuiteContext) -> list[SuiteRow]:
    rows = []
    expected = f"same degrees and multiplicity matrices, values within {ORACLE_TOL:g}"
    groups: list[tuple[str, PermGroup]] = [(n, named_group(n)) for n in ORACLE_GROUPS]
    groups.append(("wreath_affine(2,1)", wreath_affine(2, 1)))
    e27c4 = ctx.table("e27_c4").group
    groups.append(("E(3^3):C4", e27c4))
    zmask = group_summary(e27c4)[0]
    groups.append(("E(3^3):C4 modulo its center", quotient_group(e27c4, zmask).group))
    groups.append(("E(3^3):C4 modulo E(3^3)", quotient_group(e27c4, e27c4.extraspecial_subgroup).group))
    for name, G in groups:
        ok, computed = compare_with_oracle(G, character_table(G, seed=ctx.seed))
        rows.append(SuiteRow(f"{name} (order {G.order}): modular table equals brute-force table", expected, computed, ok))
    return rows


# -- ~GL(2,3) ------------------------------------------------------------------------


def criterion_tilde_gl23(ctx: SuiteContext) -> list[SuiteRow]:
    G = named_group("~GL(2,3)")
    rows = [SuiteRow("~GL(2,3) has order 48", "48", str(G.order), G.order == 48)]
    for rel, ok in tilde_gl23_relations().items():
        rows.append(SuiteRow(f"~GL(2,3) generators satisfy {rel}", "true", str(ok).lower(), ok))
    P = G.subgroup_from_mask(sylow_mask(G, 2), name="P")
    q16 = is_isomorphic_to(P, "Q16")
    rows.append(SuiteRow("Sylow 2-subgroup of ~GL(2,3) is generalized quaternion", "Q16", "Q16" if q16 else "other", q16))
    F = fitting_subgroup(G)
    q8 = is_isomorphic_to(F, "Q8")
    rows.append(SuiteRow("Fitting subgroup of ~GL(2,3)", "Q8", "Q8" if q8 else f"order {F.order}", q8))
    D = G.subgroup_from_mask(derived_subgroup_mask(G), name="D")
    sl = is_isomorphic_to(D, "SL(2,3)") and G.order // D.order == 2
    rows.append(SuiteRow("~GL(2,3) contains SL(2,3) with index 2", "index 2 subgroup SL(2,3)",
                         f"derived subgroup of order {D.order}, SL(2,3): {is_isomorphic_to(D, 'SL(2,3)')}", sl))
    iso = is_isomorphic_to(G, "GL(2,3)")
    rows.append(SuiteRow("~GL(2,3) is not isomorphic to GL(2,3)", "not isomorphic",
                         "isomorphic" if iso else "not isomorphic", not iso))
    return rows


# -- eta = 1 examples ------------------------------------------------------------------

ETA_ONE_EXAMPLES = (
    # spec, label, degree, case, expected quotient (G/Z for case i, G/E otherwise)
    ("gl23", "GL(2,3)", 2, "i", "S4"),
    ("sl23", "SL(2,3)", 2, "i", "A4"),
    ("e27_q8", "E(3^3):Q8", 3, "ii", "Q8"),
    ("e27_sl23", "E(3^3):SL(2,3)", 3, "ii", "SL(2,3)"),
    ("e125_sl23", "E(5^3):SL(2,3)", 5, "iii", "SL(2,3)"),
    ("e343_tilde_gl23", "E(7^3):~GL(2,3)", 7, "iv", "~GL(2,3)"),
)


def _eta_one_row(ctx: SuiteContext, spec_id: str, label: str, degree: int, case: str, quotient: str) -> SuiteRow:
    table = ctx.table(spec_id)
    G = table.group
    outcomes = []
    ok = True
    for i in _faithful_of_degree(table, degree):
        v = classify_eta_one(G, i, table)
        if not v.applies:
            outcomes.append(f"eta={v.eta}")
            ok = False
            continue
        if case == "i":
            q = v.structure.center_quotient_type
        else:
            sections = v.structure.sections
            good = v.witness.get("matching_sections", [])
            q = sections[good[0]].quotient_type if good else None
        outcomes.append(f"eta=1 m={v.m} case ({v.case}) quotient {q}")
        ok &= v.case == case and q == quotient and v.m == 1
    if not outcomes:
        ok = False
    where = "G/Z" if case == "i" else "G/E"
    return SuiteRow(
        f"{label}: every faithful irreducible of degree {degree}",
        f"eta=1 m=1 case ({case}) {where} {quotient}",
        _counts(outcomes) or "no faithful character of that degree",
        bool(ok),
    )


def criterion_eta_one(ctx: SuiteContext) -> list[SuiteRow]:
    return [_eta_one_row(ctx, *example) for example in ETA_ONE_EXAMPLES]


def criterion_eta_one_stretch(ctx: SuiteContext) -> list[SuiteRow]:
    spec = ctx.specs()["e243_sp43_transitive"]
    H = build(spec.tree["complement"], ctx.bound)
    orbits = sorted(len(o) for o in H.orbits_on_nonzero_vectors())
    fit = fitting_data(H)
    rows = [
        SuiteRow("H <= Sp(4,3) is transitive on nonzero vectors", "one orbit of 80", str(orbits), orbits == [80]),
        SuiteRow("F(H) is extraspecial of order 32", "order 32, extraspecial",
                 f"order {fit.fitting_order}, extraspecial {fit.fitting_extraspecial}, type {fit.fitting_type}",
                 fit.fitting_order == 32 and fit.fitting_extraspecial),
        SuiteRow("|F2(H)/F(H)|", "5", str(fit.second_index), fit.second_index == 5),
        SuiteRow("|H/F2(H)| divides 2", "1 or 2", str(fit.top_index), fit.top_index in (1, 2)),
    ]
    table = ctx.table("e243_sp43_transitive")
    verdicts = [classify_eta_one(table.group, i, table) for i in _faithful_of_degree(table, 9)]
    ok = bool(verdicts) and all(v.case == "v" and v.m == 1 for v in verdicts)
    rows.append(SuiteRow(
        "E(3^5):H: every faithful irreducible of degree 9", "eta=1 m=1 case (v)",
        _counts(f"eta={v.eta} m={v.m} case ({v.case})" for v in verdicts) or "no faithful character of that degree", ok,
    ))
    return rows


# -- eta = 2 examples ------------------------------------------------------------------


def _eta_two_profile(table: CharacterTable, i: int) -> tuple:
    report = eta(table.group, i, table)
    zmask = group_summary(table.group)[0]
    parts = sorted(
        (c.degree, c.multiplicity, bool(np.array_equal(kernel_mask(table.row(c.index)), zmask)))
        for c in report.nonprincipal
    )
    return report.eta, tuple(parts)


def _describe(profile: tuple) -> str:
    e, parts = profile
    inner = ", ".join(f"deg {d} x{m}{' ker=Z' if kz else ''}" for d, m, kz in parts)
    return f"eta={e} [{inner}]"


def _eta_two_row(ctx, table, label, degree, expected_text, predicate, mode="all") -> SuiteRow:
    idx = _faithful_of_degree(table, degree)
    profiles = [_eta_two_profile(table, i) for i in idx]
    hits = [predicate(p) for p in profiles]
    if mode == "all":
        ok = bool(idx) and all(hits)
        claim = f"{label}: every faithful irreducible of degree {degree}"
    else:
        ok = any(hits)
        claim = f"{label}: some faithful irreducible of degree {degree}"
    computed = _counts(_describe(p) for p in profiles) or "no faithful character of that degree"
    computed += f" ({sum(hits)} of {len(idx)} match)"
    return SuiteRow(claim, expected_text, computed, ok)


def criterion_eta_two(ctx: SuiteContext) -> list[SuiteRow]:
    rows = []
    t = ctx.table("e27_c4")
    rows.append(_eta_two_row(
        ctx, t, "E(3^3):C4", 3, "eta=2, 1 + a1 + a2, both kernels equal Z",
        lambda p: p[0] == 2 and all(m == 1 and kz for _, m, kz in p[1]),
    ))
    for p, m in ((2, 1), (3, 1), (2, 2)):
        q = p**m
        W = wreath_affine(p, m, bound=ctx.bound)
        tw = character_table(W, seed=ctx.seed)
        rows.append(_eta_two_row(
            ctx, tw, f"wreath_affine({p},{m})", q, f"eta=2, degrees {q - 1} and {q * (q - 1)}, each once",
            lambda prof, q=q: prof[0] == 2 and [(d, mm) for d, mm, _ in prof[1]] == [(q - 1, 1), (q * (q - 1), 1)],
        ))
    t = ctx.table("e125_sl23")
    rows.append(_eta_two_row(
        ctx, t, "E(5^3):SL(2,3)", 10, "1 + a1 + 4 a2 with degrees 3 and 24",
        lambda p: p[0] == 2 and [(d, m) for d, m, _ in p[1]] == [(3, 1), (24, 4)],
    ))
    t = ctx.table("e343_tilde_gl23")
    rows.append(_eta_two_row(
        ctx, t, "E(7^3):~GL(2,3)", 14, "1 + a1 + 4 a2 with degrees 3 and 48",
        lambda p: p[0] == 2 and [(d, m) for d, m, _ in p[1]] == [(3, 1), (48, 4)],
        mode="exists",
    ))
    return rows


# -- dihedral 2-groups -----------------------------------------------------------------


def criterion_dihedral(ctx: SuiteContext) -> list[SuiteRow]:
    rows = []
    for spec_id in ("d16", "d32", "d64"):
        table = ctx.table(spec_id)
        G = table.group
        faithful = [i for i in range(table.k) if is_faithful(table.row(i))]
        outcomes = []
        ok = bool(faithful)
        for i in faithful:
            v = classify_eta_two(G, i, table)
            Q = quotient_group(G, group_summary(G)[0]).group
            dihedral = is_dihedral(Q) and Q.order == G.order // 2
            mults = v.clauses.multiplicities if v.clauses else None
            outcomes.append(f"degree {v.degree} eta={v.eta} m={list(mults) if mults else '-'} G/Z dihedral of order {Q.order}: {dihedral}")
            ok &= v.degree == 2 and v.eta == 2 and mults == (1, 1) and dihedral and not v.violation
        rows.append(SuiteRow(
            f"D{G.order}: every faithful irreducible",
            f"degree 2, eta=2, m=(1,1), G/Z dihedral of order {G.order // 2}",
            _counts(outcomes), bool(ok),
        ))
    return rows


# -- corpus-wide properties ------------------------------------------------------------


def corpus_property_rows(spec_id: str, table: CharacterTable) -> list[SuiteRow]:
    G = table.group
    scan = scan_table(spec_id, table, verdicts=False)
    faithful = [r for r in scan.records if r.faithful]
    masks, exhaustive = normal_subgroups(G)
    bad_center, bad_mult, bad_normal, bad_clause = [], [], [], []
    eta_two = 0
    for r in faithful:
        report = eta(G, r.index, table)
        if not center_is_kernel_intersection(table, report):
            bad_center.append(r.index)
        if r.degree > 1 and not some_multiplicity_one(report):
            bad_mult.append(r.index)
        if r.eta == 2 and r.degree > 1:
            eta_two += 1
            if irreducibility_biconditional(table, r.index, report, masks):
                bad_normal.append(r.index)
            v = classify_eta_two(G, r.index, table)
            if not (v.clauses and v.clauses.holds):
                bad_clause.append(r.index)
    coverage = "all" if exhaustive else "a sample of"
    return [
        SuiteRow(f"{spec_id}: center equals the intersection of constituent kernels",
                 "0 violations", f"{len(faithful)} faithful characters, violations {bad_center}", not bad_center),
        SuiteRow(f"{spec_id}: some constituent of chi conj(chi) has multiplicity 1",
                 "0 violations", f"{sum(r.degree > 1 for r in faithful)} nonlinear faithful characters, violations {bad_mult}",
                 not bad_mult),
        SuiteRow(f"{spec_id}: for eta=2, chi_N irreducible exactly when N lies in no constituent kernel",
                 "0 violations", f"{eta_two} characters against {coverage} {len(masks)} normal subgroups, violations {bad_normal}",
                 not bad_normal),
        SuiteRow(f"{spec_id}: for eta=2, even order, dl <= 18, a kernel equals Z, prime power or degree 10/14",
                 "0 violations", f"{eta_two} characters, violations {bad_clause}", not bad_clause),
    ]


def structural_identity_rows(ctx: SuiteContext) -> list[SuiteRow]:
    rows = []
    # regular-character situations in an extraspecial group of order 32
    t = ctx.table("q8_d8_central")
    inst = [x for i in _faithful_of_degree(t, 4) for x in regular_character_instances(t, i)]
    rows.append(SuiteRow(
        "q8_d8_central: chi conj(chi) on RS is a multiple of the regular character of RS/Z",
        "every detected pair R, S satisfies it", f"{len(inst)} pairs, {sum(x.holds for x in inst)} satisfy",
        bool(inst) and all(x.holds for x in inst),
    ))
    # divisibility facts for the symplectic sections of the examples
    for spec_id, degree in (("sl23", 2), ("e27_q8", 3), ("e27_sl23", 3), ("e27_c4", 3), ("e125_sl23", 5), ("e343_tilde_gl23", 7)):
        t = ctx.table(spec_id)
        i = _faithful_of_degree(t, degree)[0]
        facts = {}
        for s in structure_report(t, i).sections:
            if s.fully_ramified:
                facts.update(symplectic_divisibility(s))
        rows.append(SuiteRow(
            f"{spec_id}: orbit and cyclic divisibility on the fully ramified section",
            "every applicable fact holds", str(facts) if facts else "no applicable fact",
            bool(facts) and all(facts.values()),
        ))
    # the nonabelian-kernel identities
    for spec_id, degree in (("e125_sl23", 10), ("e343_tilde_gl23", 14)):
        t = ctx.table(spec_id)
        results = []
        for i in _faithful_of_degree(t, degree):
            v = classify_eta_two(t.group, i, t)
            if v.applies and v.subcase == "nonabelian-kernel":
                a1, a2 = v.witness["alpha_indices"]
                results.append(nonabelian_kernel_identity(t, eta(t.group, i, t), a1, a2))
        ok = bool(results) and all(all(r.values()) for r in results)
        rows.append(SuiteRow(
            f"{spec_id}: a1 a2 = a1(1) a2 and m2 = 1 + a1(1)", "both identities for every such character",
            f"{len(results)} characters, {sum(all(r.values()) for r in results)} satisfy both", ok,
        ))
    return rows


def corpus_specs(ctx: SuiteContext) -> list[tuple[str, GroupSpec]]:
    if ctx.corpus is not None:
        return [(s.id or f"spec-{i}", s) for i, s in enumerate(ctx.corpus)]
    return [(k, s) for k, s in ctx.specs().items() if ctx.include_stretch or not s.meta.get("stretch")]


def criterion_properties(ctx: SuiteContext) -> list[SuiteRow]:
    rows = []
    for spec_id, spec in corpus_specs(ctx):
        try:
            table = ctx.table_of(spec)
        except CharprodError as exc:  # reported as a failing row, the scan continues
            rows.append(SuiteRow(f"{spec_id}: builds", "a group and its table", f"{type(exc).__name__}: {exc}", False))
            continue
        rows += corpus_property_rows(spec_id, table)
    if ctx.corpus is None:
        rows += structural_identity_rows(ctx)
    return rows


# -- determinism -----------------------------------------------------------------------


def _fresh_report(spec: GroupSpec, seed: int, bound: int) -> str:
    table = character_table(spec.build(bound), seed=seed)
    doc = table_to_dict(table, spec.id or "spec")
    doc["records"] = [r.to_dict() for r in scan_table(spec.id or "spec", table).records]
    return dumps_json(doc)


def criterion_determinism(ctx: SuiteContext) -> list[SuiteRow]:
    rows = []
    for spec_id in ("sl23", "e27_c4", "wreath_3_1"):
        spec = ctx.specs()[spec_id]
        a = _fresh_report(spec, ctx.seed, ctx.bound)
        b = _fresh_report(spec, ctx.seed, ctx.bound)
        rows.append(SuiteRow(f"{spec_id}: table report from two fresh builds", "byte-identical",
                             "identical" if a == b else "different", a == b))
    return rows


# -- the suite -------------------------------------------------------------------------


@dataclass(frozen=True)
class Criterion:
    key: str
    title: str
    budget: float
    run: Callable[[SuiteContext], list[SuiteRow]]
    stretch: bool = False


CRITERIA = (
    Criterion("oracle-agreement", "Modular tables agree with brute-force complex tables", 60, criterion_oracle),
    Criterion("tilde-gl23-structure", "Structure of ~GL(2,3)", 10, criterion_tilde_gl23),
    Criterion("eta-one-examples", "Examples with eta = 1 in cases (i) to (iv)", 300, criterion_eta_one),
    Criterion("eta-one-case-v", "Example with eta = 1 in case (v)", 1800, criterion_eta_one_stretch, stretch=True),
    Criterion("eta-two-examples", "Examples with eta = 2", 600, criterion_eta_two),
    Criterion("dihedral-2-groups", "Dihedral 2-groups", 10, criterion_dihedral),
    Criterion("corpus-properties", "Properties over the corpus", 600, criterion_properties),
    Criterion("determinism", "Reports are reproducible", 60, criterion_determinism),
)


def run_suite(ctx: SuiteContext | None = None, progress: Callable[[CriterionResult], None] | None = None) -> list[CriterionResult]:
    ctx = ctx or SuiteContext()
    results = []
    for c in CRITERIA:
        if c.stretch and not ctx.include_stretch:
            continue
        if ctx.corpus is not None and c.key != "corpus-properties":
            continue
        start = time.perf_counter()
        rows = c.run(ctx)
        res = CriterionResult(c.key, c.title, c.budget, rows, time.perf_counter() - start)
        results.append(res)
        if progress:
            progress(res)
    return results


def suite_to_dict(results: list[CriterionResult], ctx: SuiteContext) -> dict:
    rows = [r for c in results for r in c.rows]
    return envelope("paper-suite", {
        "seed": ctx.seed,
        "include_stretch": ctx.include_stretch,
        "criteria": [c.to_dict() for c in results],
        "summary": {"rows": len(rows), "passed": sum(r.passed for r in rows), "failed": sum(not r.passed for r in rows)},
    })


def suite_markdown(results: list[CriterionResult], ctx: SuiteContext) -> str:
    rows = [r for c in results for r in c.rows]
    lines = [
        "# Reproduction suite",
        "",
        f"- seed: {ctx.seed}",
        f"- case (v) included: {'yes' if ctx.include_stretch else 'no'}",
        f"- rows: {len(rows)}, passed: {sum(r.passed for r in rows)}, failed: {sum(not r.passed for r in rows)}",
        "",
    ]
    for c in results:
        lines += [f"## {c.title} ({'pass' if c.passed else 'FAIL'})", ""]
        lines.append(markdown_table(
            ["claim", "expected", "computed", "result"],
            [[r.claim, r.expected, r.computed, "pass" if r.passed else "FAIL"] for r in c.rows],
        ))
        lines.append("")
    return "\n".join(lines)
