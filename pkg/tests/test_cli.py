import json

import pytest

from schurmzf.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_extended_jt_two_rows(capsys):
    code, out, _ = run(capsys, "verify", "extended-jt", "--shape", "2,2", "--N", "5", "--mode", "exact")
    assert code == 0
    rep = json.loads(out)
    assert rep["pass"] and rep["lhs_exact"] == rep["rhs_exact"]
    assert rep["tolerance"] is None


def test_hook_pieri_example(capsys):
    code, out, err = run(capsys, "verify", "pieri", "--kind", "hook_h", "--ell", "2", "--k", "1",
                         "--m", "1", "--N", "4", "--mode", "exact")
    assert code == 0
    rep = json.loads(out)
    assert rep["term_counts"]["sum_sym"] == 6 and rep["term_counts"]["U"] == 3
    assert "PASS" in err


def test_single_term_fails(capsys):
    code, _, _ = run(capsys, "verify", "pieri", "--kind", "hook_h", "--ell", "2", "--k", "1",
                     "--m", "1", "--shuffled")
    assert code == 1


def test_budget_exit(capsys):
    code, out, _ = run(capsys, "verify", "pieri", "--kind", "m2_hook_h", "--m", "3", "--X", "3",
                       "--ell", "1", "--max-terms", "100")
    assert code == 2
    assert json.loads(out)["reason"] == "budget"


def test_listings(capsys):
    code, out, err = run(capsys, "push", "--shape", "3,2,1", "--r", "2", "--flavor", "H")
    assert code == 0 and json.loads(out)["count"] == 7 and "7 entries" in err
    code, out, _ = run(capsys, "rims", "--shape", "2,2,2")
    data = json.loads(out)
    assert data["count"] == 6
    assert sorted(d["sign"] for d in data["decompositions"]) == [-1, -1, -1, 1, 1, 1]
    code, out, _ = run(capsys, "ssyt", "--shape", "2,1", "--N", "3", "--count")
    assert json.loads(out)["count"] == 8
    code, out, _ = run(capsys, "matrix", "--shape", "4,3,1")
    assert json.loads(out)["entries"][2] == [0, 1, ["s31"]]


def test_files_and_modes(tmp_path, capsys):
    tab = tmp_path / "t.json"
    tab.write_text(json.dumps({"shape": [2, 2], "rows": [["a", "b"], ["c", "d"]]}))
    exact = tmp_path / "a.json"
    exact.write_text(json.dumps({"a": 2, "b": 3, "c": 1, "d": 4}))
    cplx = tmp_path / "f.json"
    cplx.write_text(json.dumps({"a": {"re": 2.5, "im": 0.5}, "b": 3.0, "c": 2.0, "d": {"re": 2}}))
    mixed = tmp_path / "m.json"
    mixed.write_text(json.dumps({"a": 2, "b": 3.0, "c": 1, "d": 4}))

    code, out, _ = run(capsys, "verify", "path", "--vars", str(tab), "--assign", str(exact), "--N", "2")
    assert code == 0
    assert json.loads(out)["details"]["X_1"]["exact"] == "-3/16"
    code, _, _ = run(capsys, "verify", "star-nonstar", "--vars", str(tab), "--assign", str(cplx),
                     "--mode", "float", "--N", "12", "--tol", "1e-12")
    assert code == 0
    assert run(capsys, "verify", "lemma-diag", "--vars", str(tab), "--assign", str(mixed))[0] == 2
    assert run(capsys, "verify", "lemma-diag", "--vars", str(tab), "--assign", str(cplx))[0] == 2
    assert run(capsys, "verify", "lemma-diag", "--vars", str(tab), "--mode", "float", "--tol", "0")[0] == 2
    assert run(capsys, "verify", "lemma-diag", "--vars", str(tab), "--shape", "3")[0] == 2


def test_out_file_and_determinism(tmp_path, capsys):
    paths = [tmp_path / "r1.json", tmp_path / "r2.json"]
    for p in paths:
        assert run(capsys, "verify", "truncated-jt", "--shape", "3,2,1", "--N", "3", "--out", str(p))[0] == 0
    reps = [json.loads(p.read_text()) for p in paths]
    for r in reps:
        r.pop("elapsed_ms")
    assert reps[0] == reps[1]


def test_float_reports_are_reproducible(capsys):
    argv = ("verify", "extended-jt", "--shape", "3,2,2", "--N", "5", "--mode", "float")
    outs = [json.loads(run(capsys, *argv)[1]) for _ in range(2)]
    for o in outs:
        o.pop("elapsed_ms")
    assert outs[0] == outs[1] and outs[0]["pass"]


def test_usage_errors(capsys):
    assert run(capsys, "verify", "extended-jt", "--shape", "3,2,1,1,1", "--family", "mn")[0] == 2
    assert run(capsys, "verify", "extended-jt", "--shape", "2,3")[0] == 2
    assert run(capsys, "push", "--shape", "2,1")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["verify", "bogus"])
    assert exc.value.code == 2


def test_every_verifier_is_reachable(capsys):
    for argv in (["verify", "lemma-diag", "--shape", "3,2", "--flavor", "E"],
                 ["verify", "truncated-jt", "--shape", "2,2,1", "--flavor", "E"],
                 ["verify", "pieri", "--kind", "hook_e", "--ell", "2", "--k", "2", "--m", "2"],
                 ["verify", "pieri", "--kind", "thm83", "--k", "2"],
                 ["verify", "pieri", "--kind", "cor216", "--k", "2", "--ell", "1", "--m", "3"],
                 ["verify", "pieri", "--kind", "constant_s", "--shape", "2,1", "--m", "2", "--s", "2", "--N", "6"]):
        assert run(capsys, *argv)[0] == 0, argv


def test_suite_subset(capsys):
    code, out, err = run(capsys, "suite", "--only", "3", "6")
    assert code == 0
    assert json.loads(out)["passed"] == 2
    assert "criterion  6" in err
