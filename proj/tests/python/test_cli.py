import json
import os
import subprocess
from pathlib import Path

import pytest

CLI = os.environ.get("MINKRADII_CLI")
DATA = Path(__file__).resolve().parent.parent / "data"
SQUARE = str(DATA / "square.json")
TRIANGLE = str(DATA / "triangle.json")

pytestmark = pytest.mark.skipif(not CLI, reason="MINKRADII_CLI not set")


def run(*args):
    proc = subprocess.run([CLI, *args], capture_output=True, text=True)
    return proc.returncode, proc.stdout


def report(*args):
    code, out = run(*args)
    rep = json.loads(out)
    assert rep["exit"] == code
    return code, rep


def test_compute_is_exact_and_repeatable():
    args = ("compute", "--body", SQUARE, "--gauge", TRIANGLE)
    code, first = run(*args)
    assert code == 0
    assert run(*args)[1] == first
    rep = json.loads(first)
    assert rep["results"]["R"]["value"] == "8/3"
    assert rep["results"]["R"]["translation"] == ["-1/3", "-1/3"]
    assert len(rep["inputs"]) == 2 and len(rep["inputs"][0]["sha256"]) == 64
    assert "." not in json.dumps(rep["results"])
    code, rep = report("compute", "--body", SQUARE, "--gauge", SQUARE, "--which", "R,r")
    assert rep["results"]["R"]["value"] == "1" and rep["results"]["r"]["value"] == "1"
    code, rep = report(*args, "--approx")
    assert rep["approx"]["values"]["R"].startswith("2.666")


def test_sandwich_diameter(tmp_path):
    out = tmp_path / "pair.json"
    assert run("construct", "sandwich-outer", "--dim", "2", "--lambda", "1", "--mu", "1/2", "--out", str(out))[0] == 0
    pair = json.loads(out.read_text())
    (tmp_path / "s.json").write_text(json.dumps(pair["simplex"]))
    (tmp_path / "c.json").write_text(json.dumps(pair["gauge"]))
    code, rep = report("compute", "--body", str(tmp_path / "s.json"), "--gauge", str(tmp_path / "c.json"), "--which", "D")
    assert rep["results"]["D"]["value"] == "4/3"


def test_input_errors():
    assert run("compute", "--body", "missing.json", "--gauge", TRIANGLE)[0] == 2
    assert run("verify", "no-such-suite", "--body", SQUARE, "--gauge", TRIANGLE)[0] == 2
    assert run("construct", "triangle-blend", "--lambda", "abc")[0] == 2
    assert run("construct", "sandwich-inner", "--lambda", "1", "--mu", "2")[0] == 2
    assert run("compute", "--body", SQUARE)[0] == 2
    assert run("--help")[0] == 0


def test_float_coordinates_rejected(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"dim": 2, "vertices": [[0.5, 0], [1, 0], [0, 1]]}')
    code, rep = report("compute", "--body", str(bad), "--gauge", TRIANGLE)
    assert code == 2 and rep["error"]["kind"] == "parse-error"


def test_verify_family_instances():
    code, rep = report("verify", "simplex-equality", "--family", "sandwich-outer", "--dim", "2",
                       "--lambda", "1", "--mu", "1/2", "--reflect")
    assert code == 0
    assert all(c["value"] for c in rep["results"]["report"]["conditions"])
    code, rep = report("verify", "planar-triangle", "--family", "triangle-blend", "--lambda", "3/5")
    assert code == 0
    assert rep["results"]["report"]["consistent"]
    assert not any(c["value"] for c in rep["results"]["report"]["conditions"])


def test_homothetic_gauge_is_reported():
    # C = 2S: the equivalence breaks at this boundary and the tool says so.
    code, rep = report("verify", "simplex-equality", "--family", "sandwich-inner", "--lambda", "2", "--mu", "0")
    assert code == 1 and rep["status"] == "violation"


def test_construct_round_trip(tmp_path):
    out = tmp_path / "pair.json"
    code, _ = report("construct", "complete-nonconcentric", "--dim", "3", "--out", str(out))
    assert code == 0
    code, rep = report("verify", "simplex-equality", "--pair", str(out))
    assert code == 0 and rep["results"]["family"] == "complete-nonconcentric"
    assert rep["results"]["report"]["consistent"]
    assert rep["inputs"][0]["path"] == str(out)


def test_certify(tmp_path):
    out = tmp_path / "cert.json"
    code, rep = report("certify", "--body", SQUARE, "--gauge", TRIANGLE, "--out", str(out))
    assert code == 0 and rep["results"]["valid"] and rep["results"]["valid_after_reread"]
    assert rep["results"]["R"] == "8/3"
    cert = json.loads(out.read_text())
    assert len(cert["contacts"]) <= 3


def test_random_chains():
    code, rep = report("verify", "chains", "--trials", "200", "--seed", "7")
    assert code == 0 and rep["results"]["passed"] == 200


def test_random_suites_repeatable():
    a = run("verify", "radius-ratios", "--trials", "10", "--seed", "3")
    assert a[0] == 0 and run("verify", "radius-ratios", "--trials", "10", "--seed", "3") == a


def test_explore_plane_has_no_hits():
    code, rep = report("explore", "--trials", "1000", "--dim", "2", "--seed", "1")
    assert code == 0
    assert rep["results"]["hits"] == []
    assert rep["results"]["complete"] == rep["results"]["candidates"] == 2000
