import json
import subprocess
import sys

import pytest

from bmwskein import coeff as C
from bmwskein.cli import main
from bmwskein.young import Partition
from oracles import kauffman_oracle


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_qdim_single_cell(capsys):
    code, out, _ = run(capsys, "qdim", "-p", "1")
    assert code == 0
    assert C.parse(out.strip()) == C.loop_value()


def test_qdim_specialized_json(capsys):
    code, out, _ = run(capsys, "qdim", "-p", "2,1", "--spec", "B:2", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["spec"] == "B:2"
    assert data["closed_form_agrees"] is True
    from bmwskein.idem import qdim

    assert C.parse(data["wen"]) == C.specialize(qdim(Partition((2, 1))), C.Specialization("B", 2))


def test_qdim_both_forms(capsys):
    code, out, _ = run(capsys, "qdim", "-p", "2", "--form", "both")
    assert code == 0
    assert "wen:" in out and "wenzltwo:" in out and "equal: True" in out


def test_kauffman(capsys):
    assert C.parse(run(capsys, "kauffman", "-n", "1", "-w", "")[1].strip()) == C.loop_value()
    out = run(capsys, "kauffman", "-n", "2", "-w", "e1")[1]
    assert C.parse(out.strip()) == C.alpha() * C.loop_value()
    out = run(capsys, "kauffman", "-n", "2", "-w", "e1 e1 e1")[1]
    assert C.parse(out.strip()) == kauffman_oracle("e1 e1 e1", 2)


def test_kauffman_json_roundtrip(capsys):
    code, out, _ = run(capsys, "kauffman", "-n", "3", "-w", "e1 E2 h1", "--json")
    data = json.loads(out)
    assert code == 0 and data["n"] == 3
    assert C.parse(data["value"]) == kauffman_oracle("e1 E2 h1", 3)


def test_idem(capsys):
    code, out, _ = run(capsys, "idem", "-p", "2,1", "--json")
    data = json.loads(out)
    assert code == 0 and data["idempotent"] and data["qtrace_matches_qdim"]
    from bmwskein.bmw import AlgElem
    from bmwskein.idem import ytilde

    assert AlgElem.from_json(data["element"]) == ytilde(Partition((2, 1)))
    code, out, _ = run(capsys, "idem", "-p", "1", "--pair", "0")
    assert code == 0 and "idempotent=True" in out


def test_units(capsys):
    code, out, _ = run(capsys, "units", "-n", "3")
    assert code == 0
    assert "7 path idempotents, sum = 1: True" in out
    code, out, _ = run(capsys, "units", "-n", "2", "--json")
    data = json.loads(out)
    assert data["sum_is_identity"]
    assert set(data["units"]) == {"1", "1>2", "1>1,1", "1>0"}


def test_feasibility(capsys):
    code, out, _ = run(capsys, "feasibility", "-p", "2,1", "--json")
    assert code == 0 and json.loads(out)["ok"]
    code, out, _ = run(capsys, "feasibility", "-p", "2,1", "--spec", "root:3")
    assert code == 0 and "[3] vanishes" in out
    code, _, _ = run(capsys, "feasibility", "-p", "2,1", "--spec", "root:3", "--strict")
    assert code == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--suite", "relations", "--max-size", "3"],
        ["verify", "--suite", "dims", "--max-size", "3"],
        ["verify", "--suite", "brauer", "--N", "3", "--max-size", "2"],
    ],
)
def test_verify_passes(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert "pass" in out


def test_verify_listings(capsys):
    _, out, _ = run(capsys, "verify", "--suite", "brauer", "--N", "3", "--max-size", "2")
    assert "trace" in out
    _, out, _ = run(capsys, "verify", "--suite", "dims", "--max-size", "2")
    assert " = " in out
    code, out, _ = run(capsys, "verify", "--suite", "twist", "--max-size", "2", "--json")
    data = json.loads(out)
    assert code == 0 and data["ok"] and data["suites"][0]["suite"] == "twist"


@pytest.mark.parametrize(
    "argv",
    [
        ["qdim", "-p", "1,2"],
        ["qdim", "-p", "x"],
        ["kauffman", "-n", "2", "-w", "e5"],
        ["kauffman", "-n", "2", "-w", "q1"],
        ["units", "-n", "7"],
        ["verify", "--suite", "nope"],
        ["qdim", "-p", "1", "--spec", "Z:1"],
        ["frobnicate"],
        [],
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_max_n_env(capsys, monkeypatch):
    monkeypatch.setenv("BMW_MAX_N", "2")
    assert run(capsys, "units", "-n", "3")[0] == 2
    assert run(capsys, "units", "-n", "2")[0] == 0


def test_engine_error_exit_code(capsys):
    # more rows than the B(1) bound allows
    assert run(capsys, "qdim", "-p", "1,1", "--spec", "B:1")[0] == 1


def test_deterministic_output(capsys):
    first = run(capsys, "units", "-n", "2", "--json")[1]
    second = run(capsys, "units", "-n", "2", "--json")[1]
    assert first == second


def test_console_script():
    res = subprocess.run(
        [sys.executable, "-m", "bmwskein.cli", "qdim", "-p", "1"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert res.returncode == 0
    assert C.parse(res.stdout.strip()) == C.loop_value()
