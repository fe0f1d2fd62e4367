import json

import pytest

from cyclact.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def out_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, (out, err)
    return json.loads(out)


def test_ring_mul(capsys):
    doc = out_json(
        capsys, "ring", "mul", "--m", "5", "--x", "[1,1,0,0,0]",
        "--y", "[0,-1,0,-1,0]",
    )
    assert doc["product"]["coeffs"] == [0, -1, -1, -1, -1]


def test_ring_aug_mod2(capsys):
    doc = out_json(capsys, "ring", "aug", "--m", "4", "--x", "[1,2,0,0]")
    assert doc["augmentation"] == 3
    doc = out_json(
        capsys, "ring", "aug", "--m", "4", "--x", "[1,2,0,0]", "--mod2"
    )
    assert doc["augmentation"] == 1


def test_ring_divide_and_normalize(capsys):
    doc = out_json(
        capsys, "ring", "divide", "--m", "5", "--x", "[1,2,1,0,0]",
        "--d", "[1,1,0,0,0]",
    )
    assert doc["quotient"]["coeffs"] == [1, 1, 0, 0, 0]
    doc = out_json(
        capsys, "ring", "normalize", "--m", "5",
        "--gens", "[[1,1,0,0,0],[0,0,0,0,0]]",
    )
    assert doc["normData"]["l"] == 2
    assert doc["normData"]["u"]["coeffs"] == [1, 1, 0, 0, 0]


def test_form_eval_and_mu(capsys):
    doc = out_json(
        capsys, "form", "eval", "--m", "4",
        "--x", "[[1,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]",
        "--y", "[[0,0,0,0],[0,0,0,0],[1,0,0,0],[0,0,0,0]]",
    )
    assert doc["lambda"]["coeffs"] == [1, 0, 0, 0]
    doc = out_json(
        capsys, "form", "mu", "--m", "4",
        "--x", "[[0,0,0,0],[1,0,0,0],[0,0,0,0],[0,0,1,0]]",
    )
    assert doc["mu"]["coeffs"] == [0, 0, 1, 0]
    assert doc["mu"]["kind"] == "TILDE"


def test_form_transvection_and_det(capsys):
    doc = out_json(
        capsys, "form", "transvection", "--m", "3", "--base", "e1,f2",
        "--c", "[1,0,0]",
    )
    assert doc["matrix"][0][1]["coeffs"] == [1, 0, 0]
    doc = out_json(
        capsys, "form", "det", "--m", "3",
        "--matrix", "[[[1,0,0],[0,1,0]],[[0,0,0],[1,0,0]]]",
    )
    assert doc["det"]["coeffs"] == [1, 0, 0]


def test_form_verify(capsys):
    S = "[[[1,0,0],[0,0,0],[0,0,0],[0,0,0]],[[0,0,0],[1,0,0],[0,0,0],[0,0,0]]]"
    U = "[[[0,0,0],[0,0,0],[1,0,0],[0,0,0]],[[0,0,0],[0,0,0],[0,0,0],[1,0,0]]]"
    doc = out_json(capsys, "form", "verify", "--m", "3", "--S", S, "--U", U)
    assert doc["certificate"]["det"]["coeffs"] == [1, 0, 0]


def test_lagrangian_solve_merges_flags_into_spec(capsys):
    spec = json.dumps({"a1": [0, 0, 0], "a2": [1, 0, 0], "b2": [0, 0, 0]})
    code, out, err = run(
        capsys, "lagrangian", "solve", "--branch", "odd-m", "--m", "3",
        "--spec", spec,
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["trace"]["branch"] == "odd-m"
    assert doc["trace"]["U"][0][2]["coeffs"] == [1, 0, 0]
    assert "U:" in err


def test_lagrangian_sweep_seed_flag_overrides_global(capsys):
    code1, out1, _ = run(
        capsys, "--json", "lagrangian", "sweep", "--branch", "odd-m",
        "--m", "5", "--count", "5", "--seed", "9",
    )
    code2, out2, _ = run(
        capsys, "--seed", "9", "--json", "lagrangian", "sweep", "--branch",
        "odd-m", "--m", "5", "--count", "5",
    )
    assert code1 == code2 == 0
    d1, d2 = json.loads(out1), json.loads(out2)
    d1["sweep"].pop("elapsedSeconds")
    d2["sweep"].pop("elapsedSeconds")
    assert d1 == d2


def test_json_flag_silences_stderr(capsys):
    code, out, err = run(capsys, "ahss", "report", "--m", "4")
    assert code == 0 and err != ""
    code, out2, err2 = run(capsys, "--json", "ahss", "report", "--m", "4")
    assert code == 0 and err2 == ""
    assert json.loads(out) == json.loads(out2)


def test_ahss_report_structure(capsys):
    doc = out_json(capsys, "--json", "ahss", "report", "--m", "6")
    assert doc["report"]["conclusion"] == "zero"
    assert doc["e2"]["pageIndex"] == 2
    assert doc["e2"]["entries"]["4,2"] == [2]


def test_ahss_sq(capsys):
    doc = out_json(
        capsys, "--json", "ahss", "sq", "--m", "2", "--k", "2", "--class", "x^3"
    )
    assert doc["square"]["terms"] == [[5, 0]]
    doc = out_json(
        capsys, "--json", "ahss", "sq", "--m", "4", "--k", "1", "--class", "y"
    )
    assert doc["square"]["terms"] == []


def test_census_exit_codes(capsys):
    code, out, _ = run(
        capsys, "--json", "census", "--n", "3", "--m", "3", "--g", "4"
    )
    assert code == 0
    assert json.loads(out)["census"]["classCount"] == 1
    code, out, _ = run(
        capsys, "--json", "census", "--n", "4", "--m", "3", "--g", "3",
        "--pontryagin", "0",
    )
    assert code == 2
    assert json.loads(out)["census"]["exists"] is False
    code, out, _ = run(
        capsys, "--json", "census", "--n", "8", "--m", "6", "--g", "5",
        "--pontryagin", "0,0",
    )
    assert code == 3
    assert json.loads(out)["census"]["parameterization"] == "OUT_OF_RANGE"


def test_errors_become_json_and_exit_one(capsys):
    code, out, err = run(
        capsys, "ring", "divide", "--m", "4", "--x", "[1,1,1,1]",
        "--d", "[0,0,0,0]",
    )
    assert code == 1
    doc = json.loads(out)
    assert doc["error"] == "NotDivisible"
    assert doc["detail"]


def test_selftest_smoke(capsys):
    doc = out_json(
        capsys, "--seed", "5", "--json", "selftest", "--scope", "ring"
    )
    body = doc["selftest"]
    assert body["fail"] == 0
    assert body["pass"] == body["total"]
    assert body["scope"] == "ring"


def test_stdin_spec(capsys, monkeypatch):
    import io

    spec = json.dumps({"a1": [0, 0, 0], "a2": [1, 0, 0], "b2": [0, 0, 0]})
    monkeypatch.setattr("sys.stdin", io.StringIO(spec))
    code, out, _ = run(
        capsys, "--json", "lagrangian", "solve", "--branch", "even-n",
        "--m", "3", "--spec", "-",
    )
    assert code == 0
    assert json.loads(out)["trace"]["branch"] == "even-n"
