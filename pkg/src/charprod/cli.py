"""Command-line interface.

Exit codes: 0 success, 1 failed rows or violations, 2 unreadable spec,
3 group beyond the enumeration bound, 4 no character matches the selection.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import __version__
from .analyze.scan import corpus_scan
from .analyze.structure import eta
from .analyze.verdicts import classify_eta_one, classify_eta_two
from .builders.spec import GroupSpec, shipped_specs
from .characters.classfunc import is_faithful
from .characters.table import DEFAULT_SEED, CharacterTable, character_table
from .errors import CharprodError, EnumerationRequired, GroupTooLarge, SpecError
from .perm.group import ENUMERATION_BOUND
from .report import atomic_write, dumps_json, envelope, markdown_table, table_markdown, table_to_dict
from .suite import SuiteContext, run_suite, suite_markdown, suite_to_dict

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_SPEC = 2
EXIT_TOO_LARGE = 3
EXIT_NO_CHARACTER = 4


class NoCharacter(CharprodError):
    pass


def load_spec(ref: str) -> tuple[str, GroupSpec]:
    """A spec file path, or the name of a shipped spec."""
    path = Path(ref)
    if path.is_file():
        spec = GroupSpec.load(path)
        return spec.id or path.stem, spec
    shipped = shipped_specs()
    if ref in shipped:
        return ref, shipped[ref]
    raise SpecError(f"{ref!r} is neither a spec file nor a shipped spec ({', '.join(shipped)})")


def _table(args, ref: str) -> tuple[str, CharacterTable]:
    name, spec = load_spec(ref)
    return name, character_table(spec.build(args.bound), seed=args.seed)


def _write(args, stem: str, doc: dict, markdown: str) -> list[Path]:
    out = Path(args.out)
    written = []
    if args.format in (None, "json"):
        written.append(atomic_write(out / f"{stem}.json", dumps_json(doc)))
    if args.format in (None, "markdown"):
        written.append(atomic_write(out / f"{stem}.md", markdown))
    return written


def select_characters(table: CharacterTable, degree: int | None, index: int | None) -> list[int]:
    if index is not None:
        if not 0 <= index < table.k:
            raise NoCharacter(f"index {index} out of range 0..{table.k - 1}")
        return [index]
    if degree is None:
        return list(range(table.k))
    chosen = [i for i in range(table.k) if table.degrees[i] == degree]
    if not chosen:
        raise NoCharacter(f"no irreducible character of degree {degree}")
    return chosen


# -- commands --------------------------------------------------------------------------


def cmd_table(args) -> int:
    name, table = _table(args, args.spec)
    _write(args, f"{name}.table", table_to_dict(table, name), table_markdown(table, name))
    print(f"{name}: order {table.group.order}, {table.k} classes")
    print("degrees: " + " ".join(str(int(d)) for d in table.degrees))
    print(f"sum of squared degrees: {int((table.degrees.astype(int) ** 2).sum())}")
    return EXIT_OK


def cmd_eta(args) -> int:
    name, table = _table(args, args.spec)
    chosen = select_characters(table, args.char, args.index)
    reports = []
    rows = []
    for i in chosen:
        r = eta(table.group, i, table)
        d = r.to_dict()
        d["index"] = i
        d["faithful"] = is_faithful(table.row(i))
        reports.append(d)
        rows.append([i, int(table.degrees[i]), d["faithful"], r.eta, r.multiplicity_multiset, r.constituent_degrees])
        print(f"chi_{i}: degree {int(table.degrees[i])}, eta = {r.eta}, "
              f"multiplicities {list(r.multiplicity_multiset)}, constituent degrees {list(r.constituent_degrees)}")
    doc = envelope("eta", {"group": name, "seed": args.seed, "characters": reports})
    md = f"# eta for {name}\n\n" + markdown_table(
        ["index", "degree", "faithful", "eta", "multiplicities", "constituent degrees"], rows
    ) + "\n"
    _write(args, f"{name}.eta", doc, md)
    return EXIT_OK


def _verify(args, wanted_eta: int, classify, kind: str) -> int:
    name, table = _table(args, args.spec)
    G = table.group
    if args.char is None and args.index is None:
        chosen = [
            i for i in range(table.k)
            if table.degrees[i] > 1 and is_faithful(table.row(i)) and eta(G, i, table).eta == wanted_eta
        ]
    else:
        chosen = select_characters(table, args.char, args.index)
    verdicts = []
    rows = []
    violations = 0
    for i in chosen:
        v = classify(G, i, table)
        d = v.to_dict()
        d["index"] = i
        verdicts.append(d)
        label = getattr(v, "case", None) if wanted_eta == 1 else getattr(v, "subcase", None)
        if not v.applies:
            outcome = "not applicable: " + "; ".join(v.precondition_failures)
        elif v.violation:
            outcome = "VIOLATION"
            violations += 1
        else:
            outcome = f"holds ({label})"
        rows.append([i, v.degree, v.eta, outcome])
        print(f"chi_{i}: degree {v.degree}, eta = {v.eta}: {outcome}")
    if not chosen:
        print(f"no faithful nonlinear character with eta = {wanted_eta}")
    doc = envelope(kind, {"group": name, "seed": args.seed, "verdicts": verdicts})
    md = f"# {kind} for {name}\n\n" + markdown_table(["index", "degree", "eta", "outcome"], rows) + "\n"
    _write(args, f"{name}.{kind}", doc, md)
    return EXIT_FAILED if violations else EXIT_OK


def cmd_verify_a(args) -> int:
    return _verify(args, 1, classify_eta_one, "verify-a")


def cmd_verify_b(args) -> int:
    return _verify(args, 2, classify_eta_two, "verify-b")


def cmd_scan(args) -> int:
    if args.specs:
        loaded = [load_spec(ref) for ref in args.specs]
        specs = [s if s.id else GroupSpec(s.tree, n, s.description, s.meta) for n, s in loaded]
    else:
        specs = [s for s in shipped_specs().values() if args.include_stretch or not s.meta.get("stretch")]
    result = corpus_scan(specs, seed=args.seed, bound=args.bound, workers=args.workers)
    records = result.records
    for g in result.groups:
        eta_counts = {}
        for r in g.records:
            if r.faithful:
                eta_counts[r.eta] = eta_counts.get(r.eta, 0) + 1
        print(f"{g.group_id}: order {g.order}, {len(g.records)} characters, faithful eta counts {dict(sorted(eta_counts.items()))}")
    for gid, msg in result.errors:
        print(f"{gid}: error: {msg}")
    doc = envelope("scan", {"seed": args.seed, **result.to_dict()})
    md = "# Corpus scan\n\n" + markdown_table(
        ["group", "index", "degree", "faithful", "eta", "multiplicities", "constituent degrees", "verdict"],
        [[r.group_id, r.index, r.degree, r.faithful, r.eta, list(r.multiplicities), list(r.constituent_degrees), r.verdict]
         for r in records],
    ) + "\n"
    _write(args, "scan", doc, md)
    violations = sum(r.verdict.endswith("violation") for r in records)
    return EXIT_FAILED if violations or result.errors else EXIT_OK


def cmd_paper_suite(args) -> int:
    corpus = None
    if args.corpus is not None:
        corpus = [load_spec(ref)[1] for ref in args.corpus]
    ctx = SuiteContext(seed=args.seed, bound=args.bound, include_stretch=args.include_stretch, corpus=corpus)

    def progress(res):
        failed = [r for r in res.rows if not r.passed]
        print(f"{'PASS' if res.passed else 'FAIL'} {res.key}: {len(res.rows) - len(failed)}/{len(res.rows)} rows "
              f"in {res.seconds:.1f}s (budget {res.budget:.0f}s)", flush=True)
        for r in failed:
            print(f"    failed: {r.claim}: expected {r.expected}; computed {r.computed}", flush=True)

    results = run_suite(ctx, progress)
    _write(args, "paper-suite", suite_to_dict(results, ctx), suite_markdown(results, ctx))
    rows = [r for c in results for r in c.rows]
    print(f"{sum(r.passed for r in rows)} of {len(rows)} rows pass")
    return EXIT_OK if all(r.passed for r in rows) else EXIT_FAILED


# -- argument parsing ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"random seed (default {DEFAULT_SEED})")
    common.add_argument("--out", default=".", help="directory for report files (default: current directory)")
    common.add_argument("--format", choices=("json", "markdown"), default=None,
                        help="write only this report format (default: both)")
    common.add_argument("--bound", type=int, default=ENUMERATION_BOUND,
                        help=f"largest group order to enumerate (default {ENUMERATION_BOUND})")
    common.add_argument("--include-stretch", action="store_true", help="include the case (v) group of order 38880")

    selection = argparse.ArgumentParser(add_help=False)
    pick = selection.add_mutually_exclusive_group()
    pick.add_argument("--char", type=int, metavar="DEGREE", help="select characters of this degree")
    pick.add_argument("--index", type=int, help="select one character by its row index")

    parser = argparse.ArgumentParser(prog="charprod", description="Characters whose norm product has few constituents.")
    parser.add_argument("--version", action="version", version=f"charprod {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[common], help="compute a character table")
    p.add_argument("spec", help="spec file or shipped spec name")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("eta", parents=[common, selection], help="decompose chi * conj(chi)")
    p.add_argument("spec")
    p.set_defaults(func=cmd_eta)

    p = sub.add_parser("verify-a", parents=[common, selection], help="classify faithful characters with eta = 1")
    p.add_argument("spec")
    p.set_defaults(func=cmd_verify_a)

    p = sub.add_parser("verify-b", parents=[common, selection], help="classify faithful characters with eta = 2")
    p.add_argument("spec")
    p.set_defaults(func=cmd_verify_b)

    p = sub.add_parser("scan", parents=[common], help="scan specs (default: the shipped corpus)")
    p.add_argument("specs", nargs="*")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("paper-suite", parents=[common], help="run the reproduction suite")
    p.add_argument("--corpus", nargs="*", default=None, metavar="SPEC",
                   help="run only the corpus properties over these specs")
    p.set_defaults(func=cmd_paper_suite)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SPEC
    except (GroupTooLarge, EnumerationRequired) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except NoCharacter as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_CHARACTER


if __name__ == "__main__":
    sys.exit(main())
