import csv
import json
import subprocess
import sys

import pytest

from hypvol.certify import Certificate, replay, Status
from hypvol.cli import RunConfig, UsageError, run


def _out(tmp_path, argv, name="out"):
    path = tmp_path / name
    code = run(argv + ["--out", str(path)])
    return code, path.read_bytes()


def test_table1_md(tmp_path):
    code, data = _out(tmp_path, ["verify", "table", "--id", "1", "--format", "md"])
    assert code == 0
    lines = data.decode().splitlines()
    body = [ln for ln in lines if ln.startswith("| [")]
    assert len(body) == 18
    assert body[0] == "| [1.215,1.220] | 5.304 | 2.216 | .629 (E) | 6.899 |"
    assert body[6] == "| [1.260,1.270] | 4.808 | 3.648 | .524 (F) | 6.908 |"


def test_table1_csv_shape(tmp_path):
    code, data = _out(tmp_path, ["verify", "table", "--id", "1", "--format", "csv"])
    rows = list(csv.reader(data.decode().splitlines()))
    assert code == 0 and len(rows) == 19
    assert all(len(r) == 5 for r in rows)


def test_table_json_round_trip(tmp_path):
    code, data = _out(tmp_path, ["verify", "table", "--id", "2", "--format", "json"])
    payload = json.loads(data)
    cert = Certificate.from_json(payload["certificate"])
    assert code == 0 and cert.to_json() == payload["certificate"]
    assert replay(cert) is Status.CERTIFIED
    assert len(payload["rows"]) == 4


def test_window_default_json(tmp_path):
    code, data = _out(tmp_path, ["certify", "window", "--target", "6.89", "--lo", "1.215", "--hi", "1.439"])
    d = json.loads(data)
    assert code == 0 and d["status"] == "certified"
    assert set(d) == {"claim_id", "config_digest", "status", "depth_used", "pieces"}
    assert set(d["pieces"][0]) == {"lo", "hi", "bound_lo", "bound_hi", "kind"}


def test_window_exit_codes(tmp_path):
    assert run(["certify", "window", "--target", "7.2", "--lo", "1.215", "--hi", "1.439", "--out", str(tmp_path / "a")]) == 1
    argv = ["certify", "window", "--target", "6.93", "--lo", "1.215", "--hi", "1.439", "--max-depth", "2"]
    assert run(argv + ["--out", str(tmp_path / "b")]) == 2


def test_lemma_no111_prints_witness(tmp_path):
    code, data = _out(tmp_path, ["certify", "lemma", "--id", "no111", "--format", "md"])
    assert code == 0 and "1.255" in data.decode()


def test_tail_and_all(tmp_path):
    assert _out(tmp_path, ["certify", "tail"])[0] == 0
    code, data = _out(tmp_path, ["verify", "all"], "all")
    assert code == 0 and data.decode().count("| certified |") == 10


def test_deterministic_across_threads(tmp_path):
    base = ["certify", "window", "--target", "6.89", "--lo", "1.215", "--hi", "1.439"]
    _, a = _out(tmp_path, base + ["--threads", "1"], "a")
    _, b = _out(tmp_path, base + ["--threads", "4"], "b")
    _, c = _out(tmp_path, ["--threads", "2"] + base, "c")
    assert a == b == c


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bogus"],
        ["verify", "table", "--id", "3"],
        ["verify", "table"],
        ["certify", "window", "--target", "x", "--lo", "1.215", "--hi", "1.439"],
        ["certify", "window", "--target", "6.89", "--lo", "1.1", "--hi", "1.439"],
        ["certify", "window", "--target", "6.89", "--lo", "1.215", "--hi", "1.439", "--max-depth", "65"],
        ["certify", "window", "--target", "6.89", "--lo", "1.215", "--hi", "1.439", "--max-depth", "0"],
        ["certify", "lemma", "--id", "nope"],
        ["verify", "all", "--unknown-flag"],
        ["verify", "all", "--format", "xml"],
        ["verify", "all", "--slack", "0"],
        ["verify", "all", "--threads", "0"],
    ],
)
def test_usage_errors(argv, capsys):
    assert run(argv) == 64


def test_io_error():
    assert run(["verify", "table", "--id", "1", "--out", "/nonexistent-dir/x.md"]) == 74


def test_env_config(tmp_path, monkeypatch):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"format": "csv"}))
    monkeypatch.setenv("HYPVOL_CONFIG", str(cfg))
    code, data = _out(tmp_path, ["verify", "table", "--id", "2"])
    assert code == 0 and data.decode().startswith("cosh l1,")
    cfg.write_text("{not json")
    assert run(["verify", "table", "--id", "2"]) == 64
    cfg.write_text(json.dumps({"colour": "red"}))
    assert run(["verify", "table", "--id", "2"]) == 64
    monkeypatch.setenv("HYPVOL_CONFIG", str(tmp_path / "missing.json"))
    assert run(["verify", "table", "--id", "2"]) == 74


def test_run_config_validation():
    with pytest.raises(UsageError):
        RunConfig(command="verify all", output_format="md", max_depth=65)
    RunConfig(command="verify all", output_format="md", max_depth=64)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hypvol", "certify", "lemma", "--id", "borbounds", "--format", "json"],
        capture_output=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["lemmas"][0]["verdict"] == "certified"
