import csv
import io
import json

import numpy as np
import pytest

from cloning import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_universal_fidelity(capsys):
    code, out, _ = run(capsys, "universal", "--state", "0,0,1")
    assert code == 0
    vals = {r["quantity"]: float(r["value"]) for r in rows(out)}
    assert vals["fidelity"] == pytest.approx(5 / 6, abs=1e-11)
    assert vals["rho1[00].re"] == pytest.approx(5 / 6, abs=1e-11)


def test_universal_eta_json(capsys):
    code, out, _ = run(capsys, "universal", "--state", "1,0,0", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"command", "config", "results", "checks"}
    assert doc["results"]["eta"] == pytest.approx(2 / 3, abs=1e-11)
    assert np.array(doc["results"]["rho2"]["re"]).shape == (2, 2)


def test_universal_other_state_forms(capsys):
    code, out, _ = run(capsys, "universal", "--angles", "1.0,2.0")
    assert code == 0
    code, out, _ = run(capsys, "universal", "--amplitudes", "0.6,0.8j")
    assert code == 0
    assert {r["quantity"]: float(r["value"]) for r in rows(out)}["eta"] == pytest.approx(2 / 3)


@pytest.mark.parametrize(
    "argv",
    [
        ["universal", "--state", "2,0,0"],
        ["universal", "--state", "0.5,0,0"],
        ["universal", "--state", "a,b,c"],
        ["universal", "--state", "1,0"],
        ["universal", "--amplitudes", "1,1"],
        ["universal"],
        ["capacity", "--eta", "1.5"],
        ["figures", "fig3"],
        ["verify", "nothing"],
        ["figures", "fig1", "--grid", "1"],
        ["verify", "capacity", "--tol", "novalue"],
        ["verify", "teleport", "--shots", "0"],
    ],
)
def test_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_bloch_norm_message(capsys):
    _, _, err = run(capsys, "universal", "--state", "2,0,0")
    assert "Bloch norm" in err and "> 1" in err


def test_fig1(capsys, tmp_path):
    path = tmp_path / "fig1.csv"
    code, _, _ = run(capsys, "figures", "fig1", "--grid", "51", "--out", str(path))
    assert code == 0
    raw = path.read_bytes()
    assert b"\r" not in raw
    data = rows(raw.decode())
    assert list(data[0]) == ["theta", "S", "F_l1", "F_l2", "F_l3"]
    assert len(data) == 51
    assert [float(data[0][k]) for k in ("F_l1", "F_l2", "F_l3")] == [1, 1, 1]
    assert float(data[-1]["theta"]) == pytest.approx(np.pi / 4, abs=1e-11)
    for r in data:
        assert float(r["F_l2"]) >= float(r["F_l1"])
        assert float(r["F_l3"]) >= float(r["F_l2"])


def test_fig2(capsys):
    code, out, _ = run(capsys, "figures", "fig2", "--grid", "11")
    assert code == 0
    data = rows(out)
    assert list(data[0]) == ["theta", "S", "s_modulus"]
    assert float(data[0]["s_modulus"]) == 1
    assert min(float(r["s_modulus"]) for r in data) > 2 / 3


def test_twelve_significant_digits(capsys):
    _, out, _ = run(capsys, "figures", "fig1", "--grid", "7")
    for r in rows(out):
        for v in r.values():
            digits = v.lstrip("-").split("e")[0].replace(".", "").lstrip("0")
            assert len(digits) <= 12


def test_unwritable_path(capsys, tmp_path):
    code, _, err = run(capsys, "figures", "fig1", "--out", str(tmp_path / "missing" / "x.csv"))
    assert code == 2
    assert "cannot write" in err


def test_capacity(capsys):
    code, out, _ = run(capsys, "capacity", "--eta", "0.5,0.7,1", "--continuity")
    assert code == 0
    data = rows(out)
    assert float(data[0]["bound"]) == 0
    assert float(data[2]["bound"]) == 1
    assert float(data[1]["conditional_bound"]) == pytest.approx(0.1, abs=1e-11)
    code, out, _ = run(capsys, "capacity", "--grid", "5")
    assert [float(r["eta"]) for r in rows(out)] == [0, 0.25, 0.5, 0.75, 1]
    assert "conditional_bound" not in rows(out)[0]


def test_verify_universal(capsys):
    code, out, _ = run(capsys, "verify", "universal")
    assert code == 0
    data = {r["name"]: r for r in rows(out)}
    assert float(data["universal.eta"]["value"]) == pytest.approx(2 / 3, abs=1e-11)
    assert all(r["result"] == "pass" for r in data.values())


def test_verify_failure_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "capacity", "--tol", "capacity.eta_0.8=1e-9")
    assert code == 1
    assert "FAIL" in out


def test_verify_json_schema(capsys):
    code, out, _ = run(capsys, "verify", "eavesdrop", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["command"] == "verify"
    for c in doc["checks"]:
        assert {"name", "value", "expected", "tolerance", "pass"} <= set(c)
        assert c["pass"] is True


def test_verify_all_deterministic(capsys):
    code_a, a, _ = run(capsys, "verify", "all", "--seed", "42", "--format", "json")
    code_b, b, _ = run(capsys, "verify", "all", "--seed", "42", "--format", "json")
    assert code_a == code_b == 0
    assert a == b
    names = [c["name"] for c in json.loads(a)["checks"]]
    assert "optimize.global_optimum_c0_c1_below_1e-6" in names
