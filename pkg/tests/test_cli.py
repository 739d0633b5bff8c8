import json
import subprocess
import sys

import pytest

from volring.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_flag_ring_a2(capsys):
    code, out, _ = run(capsys, "flag-ring", "A", "2")
    data = json.loads(out)
    assert code == 0
    assert data["presentation"]["hilbert"] == [1, 2, 2, 1]
    assert all(c["ok"] for c in data["checks"])


@pytest.mark.parametrize("args,hilbert", [(("A", "1"), [1, 1]), (("B", "2"), [1, 2, 2, 2, 1])])
def test_flag_ring_others(capsys, args, hilbert):
    code, out, _ = run(capsys, "flag-ring", *args)
    assert code == 0 and json.loads(out)["presentation"]["hilbert"] == hilbert


@pytest.mark.parametrize("name,hilbert", [("P2", [1, 1, 1]), ("P1xP1", [1, 2, 1]), ("point", [1])])
def test_toric_ring(capsys, name, hilbert):
    code, out, _ = run(capsys, "toric-ring", name)
    assert code == 0 and json.loads(out)["presentation"]["hilbert"] == hilbert


def test_toric_ring_from_json(capsys):
    fam = {"dim": 2, "rays": [[1, 0], [0, 1], [-1, -1]], "divisors": [[0, 0, 1]]}
    code, out, _ = run(capsys, "toric-ring", json.dumps(fam))
    assert code == 0 and json.loads(out)["presentation"]["hilbert"] == [1, 1, 1]


def test_gc(capsys):
    code, out, _ = run(capsys, "gc", "2", "1", "0", "--add", "[1,1,0]")
    checks = {c["name"]: c for c in json.loads(out)["checks"]}
    assert code == 0
    assert checks["lattice points = Weyl dimension"]["lhs"] == 8
    assert checks["N! volume = degree"]["lhs"] == "6"
    assert checks["additivity"]["ok"]
    code, out, _ = run(capsys, "gc", "3", "0")
    assert json.loads(out)["checks"][0]["lhs"] == 4


def test_moment_examples(capsys):
    code, out, _ = run(capsys, "moment", "sl2-counterexample")
    data = json.loads(out)
    assert code == 0 and data["witness"]["point"] == ["0"] and data["equal"] is False
    code, out, _ = run(capsys, "moment", "weight-sum", "--type", "A", "--rank", "2", "--params", "1", "0", "0", "1")
    assert code == 0 and json.loads(out)["equal"] is True
    code, out, _ = run(capsys, "moment", "group-compactification")
    assert code == 0 and json.loads(out)["polytopes"]["moment"]["vertices"] == [["0", "0"], ["2", "2"]]


def test_failed_check_exits_1(capsys):
    code, out, _ = run(capsys, "moment", "sl2-additivity", "--params", "2", "1", "1", "2")
    assert code == 1 and json.loads(out)["witness"]["point"] == ["0"]


def test_apolarity(capsys):
    P = {"nvars": 1, "terms": [{"exps": [3], "coef": "1"}]}
    code, out, _ = run(capsys, "apolarity", json.dumps(P))
    assert code == 0 and json.loads(out)["presentation"]["hilbert"] == [1, 1, 1, 1]
    P = {"nvars": 2, "terms": [{"exps": [1, 1], "coef": 1}]}
    code, out, _ = run(capsys, "apolarity", json.dumps(P))
    assert json.loads(out)["presentation"]["hilbert"] == [1, 2, 1]


@pytest.mark.parametrize(
    "argv",
    [
        ["apolarity", '{"nvars": 2, "terms": []}'],
        ["apolarity", "{not json"],
        ["flag-ring", "D", "2"],
        ["gc", "1", "2"],
        ["frobnicate"],
        ["flag-ring", "A", "3", "--cap-weyl", "5"],
        ["gc", "9", "0", "0", "0", "0", "--cap-lattice", "10"],
        ["toric-ring", "P7"],
        ["flag-ring", "A", "2", "--cap-weyl", "0"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_text_format_and_out_file(tmp_path, capsys):
    target = tmp_path / "r.txt"
    code, out, _ = run(capsys, "flag-ring", "A", "2", "--format", "text", "--out", str(target))
    assert code == 0 and out == ""
    text = target.read_text()
    assert "hilbert: [1, 2, 2, 1]" in text and "[PASS]" in text


def test_json_is_deterministic():
    cmd = [sys.executable, "-m", "volring.cli", "toric-ring", "Hirzebruch(1)"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest")
    data = json.loads(out)
    assert code == 0 and len(data["checks"]) == 12
