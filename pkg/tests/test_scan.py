from charprod.analyze.scan import corpus_scan
from charprod.builders.spec import GroupSpec, shipped_specs


def spec(name, ident=None):
    return GroupSpec.from_dict({"id": ident or name, "type": "named", "name": name})


def test_c2():
    result = corpus_scan([spec("C2")])
    assert [(r.degree, r.faithful, r.eta) for r in result.records] == [(1, False, 0), (1, True, 0)]


def test_designated_eta_one_characters():
    specs = shipped_specs()
    ids = {"gl23": 2, "sl23": 2, "e27_q8": 3, "e27_sl23": 3}
    result = corpus_scan([specs[k] for k in ids])
    for g in result.groups:
        chosen = [r for r in g.records if r.faithful and r.degree == ids[g.group_id]]
        assert chosen and all(r.eta == 1 and r.verdict.startswith("eta-one:") for r in chosen)


def test_dihedral_scan():
    specs = shipped_specs()
    result = corpus_scan([specs[k] for k in ("d16", "d32", "d64")])
    for g in result.groups:
        assert any(r.faithful and r.degree == 2 and r.eta == 2 and r.verdict == "eta-two:nilpotent" for r in g.records)


def test_errors_are_collected():
    bad = GroupSpec({"type": "named", "name": "NoSuchGroup"}, "bad")
    result = corpus_scan([spec("C3"), bad, spec("Q8")])
    assert [g.group_id for g in result.groups] == ["C3", "Q8"]
    assert result.errors and result.errors[0][0] == "bad"


def test_parallel_scan_matches_serial():
    specs = [spec("S4"), spec("Q8"), spec("D16"), spec("SL(2,3)")]
    assert corpus_scan(specs, workers=3).to_dict() == corpus_scan(specs).to_dict()
