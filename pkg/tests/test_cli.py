from __future__ import annotations

import json
import shutil
import subprocess
import sys

import pytest

from hermhull.cli import EXIT_BUDGET, EXIT_CERT, EXIT_HYPOTHESIS, EXIT_OK, main
from hermhull.code import LinearCode, code_to_json
from hermhull.gf import tower_for_q


def run(tmp_path, name, *argv):
    out = tmp_path / name
    code = main([*argv, "--out", str(out)])
    return code, out


def test_construct_then_hull_then_eaqecc(tmp_path):
    code, path = run(tmp_path, "c.json", "construct", "--q", "5", "--n", "25", "--k", "4")
    assert code == EXIT_OK
    rec = json.loads(path.read_text())
    assert rec["report"]["self_orthogonal"] and rec["report"]["distance"]["d"] == 22
    code, hpath = run(tmp_path, "h.json", "hull", "--input", str(path), "--ell", "2")
    assert code == EXIT_OK
    assert json.loads(hpath.read_text())["report"]["hull_dim"] == 2
    code, epath = run(tmp_path, "e.csv", "eaqecc", "--input", str(hpath), "--format", "csv")
    assert code == EXIT_OK
    lines = epath.read_text().splitlines()
    assert lines[0].startswith("q,n,k_classical") and len(lines) == 3
    assert lines[1].split(",")[5:9] == ["25", "2", "22", "19"]


def test_embed_and_expand(tmp_path):
    code, path = run(tmp_path, "e.json", "embed", "--q", "3", "--n", "9", "--k", "2", "--i", "3")
    assert code == EXIT_OK
    rec = json.loads(path.read_text())
    assert rec["embedding"]["I"] == [1, 3] and rec["report"]["n"] == 12
    code, path = run(tmp_path, "x.json", "expand", "--q", "7", "--n", "17", "--k", "2", "--i", "7", "--no-distance")
    assert code == EXIT_OK
    assert json.loads(path.read_text())["report"]["k"] == 3


def test_outputs_are_byte_identical(tmp_path):
    argv = ("embed", "--q", "4", "--n", "16", "--k", "3", "--i", "2", "--seed", "7")
    _, a = run(tmp_path, "a.json", *argv)
    _, b = run(tmp_path, "b.json", *argv)
    assert a.read_bytes() == b.read_bytes()
    _, a = run(tmp_path, "a.csv", "table", "I", "--format", "csv")
    _, b = run(tmp_path, "b.csv", "table", "I", "--format", "csv")
    assert a.read_bytes() == b.read_bytes()


def test_exit_codes(tmp_path):
    # Hypothesis failure: n - 1 = 5 does not divide 24.
    assert main(["construct", "--q", "5", "--n", "6", "--k", "2"]) == EXIT_HYPOTHESIS
    # A non-self-orthogonal input cannot have its hull adjusted.
    _, path = run(tmp_path, "c.json", "construct", "--q", "3", "--n", "9", "--k", "2")
    # The row e_1 has Hermitian norm 1, so this code is not self-orthogonal.
    rec = {"code": code_to_json(LinearCode(tower_for_q(3), [[1, 0, 0, 0]]))}
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(rec))
    assert main(["hull", "--input", str(bad), "--ell", "1"]) == EXIT_HYPOTHESIS
    # Budget exhaustion.
    assert main(["minweight", "--input", str(path), "--budget", "3", "--method", "exhaustive"]) == EXIT_BUDGET
    # A stored distance that the search contradicts is a certificate failure.
    rec = json.loads(path.read_text())
    rec["code"]["d"] = rec["code"]["d_lower"] = 3
    wrong = tmp_path / "wrong.json"
    wrong.write_text(json.dumps(rec))
    assert main(["minweight", "--input", str(wrong)]) == EXIT_CERT


def test_curve_command(tmp_path):
    code, path = run(tmp_path, "p.json", "curve", "--q", "4", "--family", "hyperelliptic")
    assert code == EXIT_OK
    rec = json.loads(path.read_text())
    assert rec["points"] == 33 and rec["genus"] == 2
    code, path = run(tmp_path, "e.json", "curve", "--q", "4", "--family", "elliptic", "--m", "4")
    assert json.loads(path.read_text())["points"] == 9
    code, path = run(tmp_path, "k.json", "curve", "--q", "4", "--family", "hyperelliptic", "--k", "5")
    rec = json.loads(path.read_text())
    assert rec["report"]["k"] == 3 and rec["report"]["gram_rank"] == 0


def test_csv_without_tabular_form_is_rejected(capsys):
    assert main(["construct", "--q", "3", "--n", "9", "--k", "2", "--format", "csv"]) == EXIT_HYPOTHESIS


def test_missing_arguments_exit_with_usage():
    with pytest.raises(SystemExit) as exc:
        main(["construct", "--q", "3"])
    assert exc.value.code == 2


@pytest.mark.skipif(shutil.which("hermhull") is None, reason="console script not installed")
def test_console_script():
    out = subprocess.run(["hermhull", "--version"], capture_output=True, text=True, check=True)
    assert out.stdout.startswith("hermhull ")
    out = subprocess.run([sys.executable, "-m", "hermhull", "table", "II-points"], capture_output=True, text=True)
    assert out.returncode == 0 and json.loads(out.stdout)["table"] == "II-points"
