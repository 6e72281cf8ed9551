import json
import subprocess
import sys
from dataclasses import replace

import pytest

from schubert_bounds import audit
from schubert_bounds.cli import main
from schubert_bounds.polyring import Poly, parse_poly

S1432 = "x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x2^2*x3"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_examples(capsys):
    code, out, _ = run(capsys, "compute", "schubert", "1432")
    assert code == 0 and parse_poly(out, n=4) == parse_poly(S1432, n=4)
    code, out, _ = run(capsys, "compute", "max", "1432")
    assert parse_poly(out, n=4) == parse_poly(S1432, n=4) + Poly.monomial((1, 1, 1, 0))
    code, out, _ = run(capsys, "compute", "key", "0,2")
    assert out.strip() == "x1^2 + x1*x2 + x2^2"


def test_compute_other_kinds(capsys):
    assert run(capsys, "compute", "rothe", "1432")[1].strip() == "[[],[2,3],[2],[]]"
    assert run(capsys, "compute", "skyline", "1,3,0,2")[1].strip() == "[[1,2,4],[2,4],[2],[]]"
    assert run(capsys, "compute", "lorentzian", "1423")[1].strip() == "false"
    assert run(capsys, "compute", "lorentzian", "1,1,0", "--composition")[1].strip() == "true"
    assert run(capsys, "compute", "min", "0,2", "--composition")[1].strip() == "x1^2 + x1*x2 + x2^2"
    assert run(capsys, "compute", "dual-char", "[[],[2,3],[2],[]]")[1].strip() == S1432


def test_json_round_trip(capsys):
    code, out, _ = run(capsys, "compute", "max", "1432", "--json")
    data = json.loads(out)
    assert data["n"] == 4
    f = Poly.from_json(data["terms"], n=data["n"])
    assert f.to_json() == data["terms"]
    coefs = {tuple(t["exp"]): t["coef"] for t in data["terms"]}
    assert coefs[(1, 1, 1, 0)] == "2"
    assert [t["exp"] for t in data["terms"]] == sorted((t["exp"] for t in data["terms"]), reverse=True)


def test_parse_errors_exit_2(capsys):
    code, _, err = run(capsys, "compute", "schubert", "14x2")
    assert code == 2 and "position 3" in err
    code, _, err = run(capsys, "compute", "key", "0,-2")
    assert code == 2
    code, _, err = run(capsys, "compute", "schubert", "1,2,3,4,5,6,7,8,9,10")
    assert code == 2 and "guard" in err


def test_unknown_theorem_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "nonsense"])
    assert exc.value.code == 2


def test_verify_schubert_max_n5(capsys):
    code, out, _ = run(capsys, "verify", "schubert-max", "--n", "5", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["summary"]["total"] == 120
    assert data["summary"]["disagreements"] == 0
    assert data["summary"]["both_true"] == 90


def test_verify_key_max_small(capsys):
    code, out, _ = run(capsys, "verify", "key-max", "--len", "2", "--max-part", "2", "--json")
    data = json.loads(out)
    assert code == 0 and data["summary"]["total"] == 9
    failing = [r["input"] for r in data["records"] if not r["lhs"]]
    assert failing == ["0,2"]


def test_verify_dependence_identity(capsys):
    code, out, _ = run(capsys, "verify", "dependence-identity", "--b", "6")
    assert code == 0
    assert "disagreements=0" in out


def test_guard_and_force(capsys, monkeypatch):
    code, _, err = run(capsys, "verify", "dualchar-schubert", "--n", "6")
    assert code == 2 and "--force" in err
    monkeypatch.setenv("SCHUBERT_BOUNDS_FORCE", "1")
    code, _, _ = run(capsys, "verify", "dependence-identity", "--b", "8")
    assert code == 0


def test_disagreement_exits_1(capsys, monkeypatch):
    broken = replace(audit.THEOREMS["schubert-max"], rhs=lambda w: True)
    monkeypatch.setitem(audit.THEOREMS, "schubert-max", broken)
    code, out, _ = run(capsys, "verify", "schubert-max", "--n", "4")
    assert code == 1
    assert "disagreements=2" in out


def test_report_determinism_and_out_file(tmp_path, capsys):
    a, b = tmp_path / "a.tsv", tmp_path / "b.tsv"
    assert main(["verify", "key-min", "--len", "3", "--max-part", "2", "--out", str(a)]) == 0
    assert main(["verify", "key-min", "--len", "3", "--max-part", "2", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    lines = a.read_text().splitlines()
    assert lines[5] == "input\tlhs\trhs\tagree"
    assert len([ln for ln in lines if not ln.startswith("#")]) == 1 + 27


def test_report_summary_counts_match_records():
    rep = audit.run_audit("schubert-min", n=5)
    s = rep.summary
    assert s["total"] == len(rep.records) == 120
    assert s["agreements"] + s["disagreements"] == s["total"]
    assert s["lhs_true"] == sum(r.lhs for r in rep.records)
    assert "wall_time" not in rep.to_json() and "wall_time" in rep.to_json(timing=True)


def test_all_theorems_run_small():
    ranges = {"perm": dict(n=4), "comp": dict(length=2, max_part=3), "k": dict(n=5), "b": dict(b=4)}
    for name, th in audit.THEOREMS.items():
        rep = audit.run_audit(name, **ranges[th.axis])
        assert rep.ok, name
    rep = audit.run_audit("reduced-disjoint", length=3, max_part=3)
    assert rep.search_range == {"len": 3, "max_part": 3} and rep.ok


def test_count_command(capsys):
    code, out, _ = run(capsys, "count", "--n", "6", "--json")
    assert code == 0
    assert [r["avoiders"] for r in json.loads(out)] == [1, 2, 6, 22, 90, 394]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "schubert_bounds", "compute", "key", "0,2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "x1^2 + x1*x2 + x2^2"
