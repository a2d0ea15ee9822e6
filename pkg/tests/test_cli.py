from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from legsat.atlas import bundled_profile
from legsat.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_invariants(capsys):
    lw = '{"n":2,"orient":[1,1],"closed":false,"blocks":["X0","X0","X0"]}'
    code, out, _ = run(capsys, "invariants", "--legword", lw)
    assert code == 0 and out.strip() == "reltb=3 relrot=0"
    code, out, _ = run(capsys, "invariants", "--legword", lw, "--json")
    assert json.loads(out) == {"reltb": 3, "relrot": 0}


def test_invariants_bad_input(capsys):
    code, _, err = run(capsys, "invariants", "--legword", "{not json")
    assert code == 2 and "error" in err
    bad = '{"n":2,"orient":[1,-1],"closed":false,"blocks":["X1"]}'
    code, _, err = run(capsys, "invariants", "--legword", bad)
    assert code == 1


def test_satellite(capsys):
    code, out, _ = run(capsys, "satellite", "--pattern", '{"family":"whitehead","m":-80}', "--companion", "-39,-10")
    assert code == 0 and out.strip() == "tb=1 rot=0 sl=1"
    code, out, _ = run(capsys, "satellite", "--pattern", '{"winding":2,"reltb":3,"relrot":0}', "--companion", "1,0", "--json")
    assert json.loads(out) == [{"tb": 7, "rot": 0, "sl": 7}]


def test_satellite_bad_companion(capsys):
    code, _, _ = run(capsys, "satellite", "--pattern", '{"family":"whitehead","m":0}', "--companion", "x")
    assert code == 2


def test_range_grid_top_row(capsys):
    code, out, _ = run(capsys, "range", "whitehead-double", "--profile", "t13_3", "-m", "-80")
    assert code == 0
    assert out.splitlines()[0].strip() == "12"


def test_range_from_profile_file(capsys, tmp_path):
    path = tmp_path / "t13_3.json"
    path.write_text(json.dumps(bundled_profile().to_json()))
    code, out, _ = run(capsys, "range", "whitehead-double", "--profile", str(path), "-m", "-80", "--depth", "0")
    assert code == 0 and out.strip() == "12"


def test_range_other_families(capsys):
    code, out, _ = run(capsys, "range", "two-braid", "--profile", "t13_3", "-m", "-79", "--json", "--depth", "0")
    assert code == 0 and len(json.loads(out)["entries"]) == 16
    code, out, _ = run(capsys, "range", "cable", "--profile", "t13_3", "-p", "-118", "-q", "3", "--json", "--depth", "0")
    assert code == 0 and json.loads(out)["max_tb"] == -354
    code, out, _ = run(capsys, "range", "whitehead-double", "--profile", "t13_3", "-m", "-80", "--transverse")
    assert code == 0 and out.splitlines()[:2] == ["sl= 1  6", "sl=-1  2"]


def test_range_domain_and_usage_errors(capsys, tmp_path):
    code, _, err = run(capsys, "range", "two-braid", "--profile", "t13_3", "-m", "-78")
    assert code == 1 and "EvenM" in err
    thin = tmp_path / "thin.json"
    thin.write_text(json.dumps({"name": "thin", "t_bar": -1, "peak_rots": [0], "flags": {}}))
    code, _, err = run(capsys, "range", "whitehead-double", "--profile", str(thin), "-m", "0")
    assert code == 1 and "HypothesisNotDeclared" in err
    code, _, _ = run(capsys, "range", "cable", "--profile", "t13_3", "-p", "1")
    assert code == 2
    code, _, _ = run(capsys, "range", "whitehead-double", "--profile", "nope", "-m", "0")
    assert code == 2


def test_argparse_usage_error_exits_2(capsys):
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 2


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "whitehead", "-m", "-4")
    assert code == 0 and out.splitlines()[0] == "classes: 9"
    code, out, _ = run(capsys, "classify", "whitehead", "-m", "-4", "--stab", "+1")
    assert out.splitlines()[0] == "classes: 3"
    code, out, _ = run(capsys, "classify", "whitehead", "-m", "-4", "--stab", "+1,-1", "--json")
    assert len(json.loads(out)["classes"]) == 1
    code, out, _ = run(capsys, "classify", "two-braid", "-m", "-3", "--json")
    rows = json.loads(out)["classes"]
    assert sorted(r["relrot"] for r in rows) == [-3, -1, 1, 3]
    assert {r["reltb"] for r in rows} == {-6}
    code, out, _ = run(capsys, "classify", "whitehead", "-m", "2")
    assert out.splitlines()[0] == "classes: 2"


def test_oracle_whitehead(capsys):
    code, out, _ = run(capsys, "oracle", "whitehead", "-m", "-4")
    lines = out.splitlines()
    assert code == 0
    assert "classes: 9" in lines and "expected: 9" in lines and lines[-1] == "PASS"


def test_oracle_variants(capsys):
    code, out, _ = run(capsys, "oracle", "whitehead", "-m", "-4", "--stab", "-1")
    assert code == 0 and out.splitlines()[-1] == "PASS"
    code, out, _ = run(capsys, "oracle", "two-braid", "-m", "-5", "--json")
    obj = json.loads(out)
    assert code == 0 and obj["pass"] and obj["expected"] == 6
    code, out, _ = run(capsys, "oracle", "positive", "-w", "1,2,1", "--closed")
    assert code == 0 and out.splitlines()[-1] == "PASS"
    code, _, _ = run(capsys, "oracle", "positive")
    assert code == 2


def test_render_roundtrip(capsys, tmp_path, monkeypatch):
    for argv in (
        ["range", "whitehead-double", "--profile", "t13_3", "-m", "-77"],
        ["range", "whitehead-double", "--profile", "t13_3", "-m", "-72", "--transverse"],
        ["range", "cable", "--profile", "t13_3", "-p", "-118", "-q", "3", "--depth", "2"],
    ):
        _, grid, _ = run(capsys, *argv)
        _, js, _ = run(capsys, *argv, "--json")
        f = tmp_path / "r.json"
        f.write_text(js)
        _, again, _ = run(capsys, "render", "--range", str(f))
        assert again == grid
        monkeypatch.setattr(sys, "stdin", io.StringIO(js))
        _, again, _ = run(capsys, "render", "--range", "-")
        assert again == grid


def test_output_is_deterministic(capsys):
    argv = ["oracle", "whitehead", "-m", "-5", "--json"]
    first = run(capsys, *argv)
    assert all(run(capsys, *argv) == first for _ in range(3))


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "legsat", "range", "whitehead-double", "--profile", "t13_3", "-m", "-80", "--depth", "1"],
        capture_output=True, text=True, check=False,
    )
    assert res.returncode == 0
    assert [ln.split() for ln in res.stdout.splitlines()] == [["12"], ["6", "6"]]
