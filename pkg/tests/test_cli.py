import json
import subprocess
import sys

import pytest

from weylmod.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_dim(capsys):
    code, data = run_json(capsys, "dim", "F4", "1,0,0,1")
    assert code == 0 and data["dim"] == "1053"
    code, out = run(capsys, "dim", "G2", "1,1")
    assert "64" in out


def test_classify_reducible(capsys):
    code, data = run_json(capsys, "classify", "B3", "1,0,1")
    assert code == 0
    assert data["globally_irreducible"] is False and data["witness_prime"] == 7
    assert data["chain"][0]["kind"] == "end-sum-base"


def test_classify_nodes_are_one_based(capsys):
    _, data = run_json(capsys, "classify", "D5", "0,0,3,0,0")
    a1 = [s for s in data["chain"] if s["kind"] == "a1-coefficient"]
    assert a1 and a1[0]["node"] == 3


def test_classify_irreducible(capsys):
    _, data = run_json(capsys, "classify", "E8", "0,0,0,0,0,0,0,1")
    assert data["globally_irreducible"] and data["reason"] == "e8-adjoint"


def test_jantzen(capsys):
    _, data = run_json(capsys, "jantzen", "B3", "1,0,1", "7", "--log")
    assert data["sum"] == [{"coeff": 1, "weight": [0, 0, 1]}]
    assert data["dim_L"] == "40" and data["dim_V"] == "48"
    assert len(data["term_log"]) == data["terms"]


def test_primes(capsys):
    _, data = run_json(capsys, "primes", "B2", "1,1")
    assert data["reducible_primes"] == [5]


def test_minuscule(capsys):
    _, data = run_json(capsys, "minuscule", "A3", "--below", "1,2,0")
    assert data["below"]["minuscule"] == [1, 0, 0]
    assert len(data["minuscule"]) == 4


def test_qm_and_root_info(capsys):
    _, data = run_json(capsys, "qm", "G2", "1,1")
    assert data["case"] == "G2-w1+w2" and data["all_proper_levis_irreducible"]
    _, data = run_json(capsys, "root-info", "E8")
    assert data["weyl_group_order"] == "696729600" and data["dual_coxeter_number"] == 30


def test_killing(capsys):
    _, data = run_json(capsys, "killing", "SL9/mu3")
    assert data["det"] == "1" and data["globally_nondegenerate"]
    _, data = run_json(capsys, "killing", "HSpin16")
    assert data["det"] == "1" and data["basis"][0] == "omega8"


@pytest.mark.parametrize("argv", [
    ["dim", "B3", "1,0"], ["jantzen", "A2", "1,0", "4"], ["classify", "A2", "--", "-1,0"],
    ["qm", "A1", "1"],
])
def test_domain_errors_exit_1(capsys, argv):
    code, out = run(capsys, *argv)
    assert code == 1
    err = json.loads(out)["error"]
    assert err["kind"] == "InvalidInputError" and err["message"]


@pytest.mark.parametrize("argv", [[], ["dim"], ["bogus"], ["verify", "--max-rank", "9"],
                                  ["verify", "--threads", "0"], ["dim", "C2", "1,0"],
                                  ["classify", "A2", "1,x"], ["killing", "SO7"],
                                  ["dim", "A2", "-1,0"]])
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_deterministic_output(capsys):
    first = run(capsys, "killing", "SL8/mu2", "--json")
    second = run(capsys, "killing", "SL8/mu2", "--json")
    assert first == second


def test_verify_small(capsys, tmp_path):
    out_file = tmp_path / "report.json"
    code, out = run(capsys, "verify", "--max-rank", "1", "--out", str(out_file))
    assert code == 0 and out.strip().endswith("ALL PASSED")
    report = json.loads(out_file.read_text())
    assert report["passed"] and report["max_rank"] == 1
    statuses = {c["id"]: c["status"] for c in report["checks"]}
    assert statuses["sl2"] == "pass" and statuses["e8-adjoint"] == "skipped"
    assert "seconds" not in report["checks"][0]


def test_verify_threads_match(capsys):
    code1, single = run(capsys, "verify", "--max-rank", "2", "--json")
    code2, multi = run(capsys, "verify", "--max-rank", "2", "--json", "--threads", "2")
    assert code1 == code2 == 0
    assert single == multi


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "weylmod", "dim", "E8", "1,0,0,0,0,0,0,0"],
                          capture_output=True, text=True, check=True)
    assert "3875" in proc.stdout
