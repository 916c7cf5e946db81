"""Scan a corpus of group specs: one record per irreducible character."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ..builders.spec import GroupSpec
from ..characters.classfunc import is_faithful
from ..characters.table import DEFAULT_SEED, CharacterTable, character_table
from ..errors import CharprodError
from ..perm.group import ENUMERATION_BOUND
from .structure import eta
from .verdicts import classify_eta_one, classify_eta_two


@dataclass(frozen=True)
class ScanRecord:
    group_id: str
    index: int
    degree: int
    faithful: bool
    eta: int
    multiplicities: tuple[int, ...]
    constituent_degrees: tuple[int, ...]
    verdict: str

    def to_dict(self) -> dict:
        return {
            "group": self.group_id,
            "index": self.index,
            "degree": self.degree,
            "faithful": self.faithful,
            "eta": self.eta,
            "multiplicities": list(self.multiplicities),
            "constituent_degrees": list(self.constituent_degrees),
            "verdict": self.verdict,
        }


@dataclass(frozen=True)
class GroupScan:
    group_id: str
    order: int
    modulus: int
    records: tuple[ScanRecord, ...]


@dataclass
class ScanResult:
    groups: list[GroupScan] = field(default_factory=list)
    errors: list[tuple[str, str]] = field(default_factory=list)

    @property
    def records(self) -> list[ScanRecord]:
        return [r for g in self.groups for r in g.records]

    def to_dict(self) -> dict:
        return {
            "groups": [
                {"id": g.group_id, "order": g.order, "modulus": g.modulus, "characters": len(g.records)}
                for g in self.groups
            ],
            "records": [r.to_dict() for r in self.records],
            "errors": [{"group": gid, "error": msg} for gid, msg in self.errors],
        }


def verdict_summary(table: CharacterTable, index: int, eta_value: int, faithful: bool) -> str:
    """Short label: eta-one case, eta-two subcase (or violation), '-' otherwise."""
    if not faithful or table.degrees[index] == 1:
        return "-"
    G = table.group
    if eta_value == 1:
        v = classify_eta_one(G, index, table)
        return f"eta-one:{v.case}" if v.applies else "-"
    if eta_value == 2:
        v = classify_eta_two(G, index, table)
        if not v.applies:
            return "-"
        return f"eta-two:{v.subcase}" + (":violation" if v.violation else "")
    return "-"


def scan_table(group_id: str, table: CharacterTable, verdicts: bool = True) -> GroupScan:
    G = table.group
    records = []
    for i in range(table.k):
        report = eta(G, i, table)
        faithful = is_faithful(table.row(i))
        summary = verdict_summary(table, i, report.eta, faithful) if verdicts else "-"
        records.append(
            ScanRecord(
                group_id, i, int(table.degrees[i]), faithful, report.eta,
                tuple(report.multiplicity_multiset), tuple(report.constituent_degrees), summary,
            )
        )
    return GroupScan(group_id, G.order, table.modulus, tuple(records))


def _spec_name(spec: GroupSpec, position: int) -> str:
    return spec.id or f"spec-{position}"


def _scan_one(args) -> tuple[GroupScan | None, str | None]:
    spec, position, seed, bound, verdicts = args
    try:
        G = spec.build(bound)
        return scan_table(_spec_name(spec, position), character_table(G, seed=seed), verdicts), None
    except CharprodError as exc:
        return None, f"{type(exc).__name__}: {exc}"


def corpus_scan(
    specs,
    seed: int = DEFAULT_SEED,
    bound: int = ENUMERATION_BOUND,
    verdicts: bool = True,
    workers: int = 1,
) -> ScanResult:
    """Scan every spec in order; build errors are collected and the scan continues.

    With ``workers > 1`` specs are processed in parallel; results are merged
    in spec order so the output does not depend on scheduling.
    """
    specs = list(specs)
    jobs = [(s, i, seed, bound, verdicts) for i, s in enumerate(specs)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_scan_one, jobs))
    else:
        outcomes = [_scan_one(j) for j in jobs]
    result = ScanResult()
    for (spec, position, *_), (scan, error) in zip(jobs, outcomes):
        if error is not None:
            result.errors.append((_spec_name(spec, position), error))
        else:
            result.groups.append(scan)
    return result
