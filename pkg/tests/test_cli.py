import json

import pytest

from eulerian_roots.cli import main


def run(capsys, *argv):
    code = main(list(argv) + ["--format", "json"])
    out = json.loads(capsys.readouterr().out)
    assert out["exit_code"] == code
    assert out["schema"] == "eulerian/1"
    return code, out


def test_compute_standard(capsys):
    code, out = run(capsys, "compute", "--s", "1,3,5", "--n", "3")
    assert code == 0
    assert out["result"]["poly"]["coeffs"] == ["1", "10", "4"]


def test_compute_type_d_refined_table(capsys):
    assert main(["compute", "--kind", "typeD", "--n", "3", "--refined"]) == 0
    text = capsys.readouterr().out
    assert len(text.strip().splitlines()) == 6
    assert "2x(x + 3)" in text


def test_compute_pq_initial(capsys):
    code, out = run(capsys, "compute", "--s", "2", "--n", "1", "--kind", "pq")
    terms = out["result"]["poly"]["terms"]
    assert {(t["x"], t["p"], t["q"], t["c"]) for t in terms} == {(0, 0, 0, "1"), (1, 1, 1, "1")}


def test_compute_group_and_multiset(capsys):
    code, out = run(capsys, "compute", "--group", "B", "--n", "2", "--stat", "des_D")
    assert out["result"]["poly"]["coeffs"] == ["2", "4", "2"]
    code, out = run(capsys, "compute", "--multiset", "1,1,2,2")
    assert out["result"]["poly"]["coeffs"] == ["1", "4", "1"]


def test_certify_exit_codes(capsys):
    assert run(capsys, "certify", "--input", "T:3")[0] == 0
    assert run(capsys, "certify", "--input", "2,0,2")[0] == 1
    assert run(capsys, "certify", "--input", "1,1,1")[0] == 1
    code, out = run(capsys, "certify", "--input", "A:3", "--check", "gamma")
    assert code == 0 and out["result"]["gammas"] == ["1", "2"]
    assert run(capsys, "certify", "--input", "E:1,3,5", "--check", "gamma")[0] == 1
    assert run(capsys, "certify", "--input", "B:5", "--check", "interlace-chain")[0] == 0
    assert run(capsys, "certify", "--input", "2,0,2", "--check", "shape")[0] == 1


def test_usage_errors(capsys):
    assert run(capsys, "certify", "--input", "Q:3")[0] == 2
    assert run(capsys, "compute", "--group", "S")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["compute", "--s", "1,x"])
    assert exc.value.code == 2


def test_budget_error(capsys, monkeypatch):
    monkeypatch.setenv("EULERIAN_ENUM_BUDGET", "100")
    assert run(capsys, "compute", "--group", "B", "--n", "5")[0] == 2


@pytest.mark.parametrize("suite,extra", [
    ("oracle", ["--max-n", "4"]),
    ("bijections", ["--max-n", "4"]),
    ("ehrhart", ["--max-n", "3", "--t-max", "8"]),
    ("identities", ["--max-n", "3"]),
])
def test_verify_suites(capsys, suite, extra):
    code, out = run(capsys, "verify", "--suite", suite, *extra)
    assert code == 0 and out["result"]["passed"]


def test_conjectures(capsys):
    code, out = run(capsys, "conjecture", "--name", "signed-multiset", "--n", "1")
    assert code == 0 and out["result"]["equal"]
    code, out = run(capsys, "conjecture", "--name", "affine-D", "--n", "4")
    assert code == 0 and out["result"]["certificate"]["is_real_rooted"]


def test_ehrhart_json_alias(capsys):
    assert main(["ehrhart", "--s", "1,3,5", "--t-max", "8", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["result"]["matches"] and out["result"]["counts"][1] == "14"


def test_identity(capsys):
    code, out = run(capsys, "identity", "--kind", "signedB", "--n", "3", "--t-max", "10")
    assert code == 0 and out["result"]["matches"]


def test_deterministic_output(capsys):
    argv = ["verify", "--suite", "bijections", "--max-n", "3"]
    _, a = run(capsys, *argv)
    _, b = run(capsys, *argv)
    a.pop("wall_time"), b.pop("wall_time")
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
