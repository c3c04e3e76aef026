import csv
import io
import json
import subprocess
import sys

import pytest

from freemoments import cli, verify
from freemoments.laurent import HLaurent


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_moment_json(capsys):
    code, out, _ = run(capsys, "moment", "-n", "6", "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert rep["tau"] == "2192"
    assert rep["expectation"] == {"-1": "72", "0": "2192", "1": "72"}
    assert rep["strata"] == {"2,2,2": "2560", "2,4": "-384", "6": "16"}
    assert "elapsed_ms" not in rep


def test_moment_json_is_byte_identical(capsys):
    _, a, _ = run(capsys, "moment", "-n", "8", "--format", "json")
    _, b, _ = run(capsys, "moment", "-n", "8", "--format", "json")
    assert a == b


def test_timing_flag_adds_elapsed(capsys):
    _, out, _ = run(capsys, "moment", "-n", "4", "--format", "json", "--timing")
    assert json.loads(out)["elapsed_ms"] >= 0


def test_moment_csv_rows(capsys):
    code, out, _ = run(capsys, "moment", "--max-degree", "8", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["degree"] for r in rows] == ["2", "4", "6", "8"]
    assert [r["tau"] for r in rows] == ["8", "120", "2192", "44264"]


@pytest.mark.parametrize("n", [4, 6, 8])
def test_methods_agree(capsys, n):
    taus = set()
    for method in ("pipeline", "amalgam", "f4"):
        _, out, _ = run(capsys, "moment", "-n", str(n), "--method", method, "--format", "json")
        taus.add(json.loads(out)["tau"])
    assert len(taus) == 1


def test_degree8_moment_flags_printed_values(capsys):
    _, out, _ = run(capsys, "moment", "-n", "8", "--format", "json")
    flagged = {d["paper_value"] for d in json.loads(out)["discrepancies"]}
    assert {"44256", "44284"} <= flagged


def test_cumulant(capsys):
    _, out, _ = run(capsys, "cumulant", "-n", "6", "--format", "json")
    rep = json.loads(out)
    assert rep["tau"] == "16"
    assert rep["expectation"] == {"-1": "-8", "0": "16", "1": "-8"}
    _, out2, _ = run(capsys, "cumulant", "-n", "6", "--method", "amalgam", "--format", "json")
    assert json.loads(out2)["expectation"] == rep["expectation"]


def test_expand(capsys):
    _, out, _ = run(capsys, "expand", "-n", "8", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows == [["n", "beta"], ["8", "1"], ["6", "22"], ["4", "202"], ["2", "958"], ["0", "2092"]]
    _, out, _ = run(capsys, "expand", "-n", "8", "--format", "json")
    flagged = {d["paper_value"] for d in json.loads(out)["discrepancies"]}
    assert flagged == {"744", "1316"}


def test_expand_rank(capsys):
    _, out, _ = run(capsys, "expand", "-n", "4", "--rank", "4", "--format", "json")
    rows = json.loads(out)["rows"]
    assert rows[-1] == {"n": "0", "beta": "120"}


def test_expect_methods(capsys):
    outs = []
    for method in ("pipeline", "amalgam"):
        _, out, _ = run(capsys, "expect", "-n", "4", "--method", method, "--format", "json")
        outs.append(json.loads(out))
    assert outs[0] == outs[1]
    assert outs[0]["expectation"] == {"-1": "1", "0": "28", "1": "1"}


def test_partitions(capsys):
    _, out, _ = run(capsys, "partitions", "-n", "8", "--format", "json")
    rep = json.loads(out)
    assert rep["nc_count"] == "1430"
    assert list(rep["strata"].values()) == ["14", "28", "8", "4", "1"]
    _, out, _ = run(capsys, "partitions", "-n", "6", "--format", "text")
    assert "2,2,2" in out


def test_fpq(capsys):
    _, out, _ = run(capsys, "fpq", "-k", "1", "-l", "3", "-p", "a", "-q", "b", "--format", "json")
    rep = json.loads(out)
    assert rep["value"] == {"1": "1"}
    assert rep["closed_form_matches"] is False
    _, out, _ = run(capsys, "fpq", "-k", "1", "-l", "1", "-p", "a", "-q", "A", "--format", "json")
    assert json.loads(out)["value"] == {"0": "1"}


def test_fpq_rejects_other_factor():
    with pytest.raises(SystemExit):
        cli.main(["fpq", "-k", "1", "-l", "1", "-p", "c", "-q", "a"])


def test_verify_ok(capsys):
    code, out, _ = run(capsys, "verify", "--max-degree", "8", "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert rep["ok"] is True
    last = rep["rows"][-1]
    assert last["pipeline_tau"] == last["amalgam_tau"] == last["f4_tau"] == "44264"
    assert any(d["paper_value"] == "44256" for d in rep["discrepancies"])


def test_verify_text_degree4(capsys):
    code, out, _ = run(capsys, "verify", "--max-degree", "4")
    assert code == 0
    assert "120" in out


def test_verify_disagreement_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(verify.pipeline, "expect_xy", lambda n, cap: HLaurent({0: 1}))
    code, _, _ = run(capsys, "verify", "--max-degree", "2", "--format", "json")
    assert code == 3


@pytest.mark.parametrize("argv", [
    ["moment", "-n", "12"],
    ["moment"],
    ["moment", "-n", "10", "--method", "f4"],
    ["cumulant", "-n", "6", "--method", "f4"],
    ["expect", "-n", "11"],
    ["verify", "--max-degree", "12"],
])
def test_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("error:")


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "freemoments", "moment", "-n", "6", "--format", "csv"],
                         capture_output=True, text=True, check=True)
    assert res.stdout.splitlines() == ["degree,method,tau", "6,pipeline,2192"]
