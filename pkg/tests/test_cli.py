import json

import pytest

from shiftsg import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze(capsys):
    code, out, _ = run(capsys, "analyze", "--gens", "40,42,43,45")
    assert code == 0
    env = json.loads(out)
    assert set(env) == {"command", "inputs", "results", "warnings"}
    assert env["results"]["pf"] == [359, 361]
    assert env["results"]["ng_vector"] == [361, 359, 361, 359]
    assert json.dumps(env, sort_keys=True, indent=2) + "\n" == out


def test_analyze_domain_error(capsys):
    code, out, err = run(capsys, "analyze", "--gens", "4,6")
    assert code == 3 and out == "" and "NotNumerical" in err


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["analyze", "--gens", "a,b"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["family", "--shifts", "2,3,7", "--n", "63", "--lambda", "5..1"])
    assert exc.value.code == 2
    code, _, err = run(capsys, "family", "--shifts", "2,3,7", "--n", "63", "--csv")
    assert code == 2 and "--csv" in err
    code, _, _ = run(capsys, "verify")
    assert code == 2


def test_family_csv(capsys):
    code, out, _ = run(capsys, "family", "--shifts", "2,3,7", "--n", "63", "--lambda", "0..5",
                       "--report", "residue", "--csv")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "lambda,n,residue"
    assert lines[1:] == [f"{lam},{63 + 7 * lam},{9 + lam}" for lam in range(6)]


def test_family_threshold(capsys):
    argv = ["family", "--shifts", "2,3,7", "--n", "63", "--lambda", "0..2", "--report", "frobenius"]
    code, _, err = run(capsys, *argv)
    assert code == 3 and "BelowThreshold" in err
    code, out, err = run(capsys, *argv, "--observed")
    assert code == 0 and "warning:" in err
    env = json.loads(out)
    assert env["warnings"]
    assert [r["closed_form"] for r in env["results"]["frobenius"]] == [694, 841, 1002]


def test_family_reports(capsys):
    code, out, _ = run(capsys, "family", "--shifts", "2,3,5", "--n", "40", "--lambda", "0..2",
                       "--report", "pf,ng,bounds")
    assert code == 0
    res = json.loads(out)["results"]
    assert res["bounds"]["N"] == 36
    assert res["ng"][2]["transported"] == [551, 549, 551, 549]
    assert all(r["pf"] == r["predicted"] for r in res["pf"])


def test_verify_wrong_bijection(capsys):
    code, out, _ = run(capsys, "verify", "--shifts", "2,6,7", "--n", "88", "--lambda", "1",
                       "--show-wrong-bijection")
    assert code == 0
    inst = json.loads(out)["results"]["instances"][0]
    table = inst["wrong_bijection"]
    assert table["P_correct"] == [17, 92, 96, 100]
    assert table["P_wrong"] == [17, 85, 96, 100]
    assert [r["i"] for r in table["rows"] if r["differs"]] == [85]


def test_verify_random(capsys):
    code, out, _ = run(capsys, "verify", "--random", "7", "5", "--rk-max", "8")
    assert code == 0
    res = json.loads(out)["results"]
    assert res["mismatches"] == 0 and len(res["instances"]) == 5
    code2, out2, _ = run(capsys, "verify", "--random", "7", "5", "--rk-max", "8")
    assert out2 == out


def test_module_entry():
    import subprocess
    import sys
    p = subprocess.run([sys.executable, "-m", "shiftsg", "analyze", "--gens", "2,3"],
                       capture_output=True, text=True)
    assert p.returncode == 0 and json.loads(p.stdout)["results"]["frobenius"] == 1
