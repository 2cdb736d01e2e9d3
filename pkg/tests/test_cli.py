import json
import subprocess
import sys

import pytest

from weylgroupoid import __version__
from weylgroupoid.cli import run

from conftest import INPUTS


def inp(name):
    return str(INPUTS / name)


def test_version(capsys):
    with pytest.raises(SystemExit) as e:
        run(["--version"])
    assert e.value.code == 0
    assert capsys.readouterr().out.strip() == f"weylgroupoid {__version__}"


def test_scheme_check(capsys):
    assert run(["scheme", "check", "-i", inp("a2.json"), "--root-system"]) == 0
    out = capsys.readouterr().out
    assert "1 objects" in out and "root system" in out


def test_three_object_root_system_fails(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert run(["scheme", "check", "-i", inp("three_objects.json"), "--root-system",
                "--json", str(out)]) == 2
    data = json.loads(out.read_text())
    assert not data["root_system"]["ok"]
    assert ["X3", [1, -1]] in data["root_system"]["failures"]["R1"]


def test_roots(capsys):
    assert run(["roots", "-i", inp("three_objects.json"), "--object", "X3"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("X3: 24 real roots, 11 positive")
    assert "(1, -1)" in out


def test_groupoid(tmp_path):
    out = tmp_path / "g.json"
    assert run(["groupoid", "-i", inp("super_a2.toml"), "--json", str(out)]) == 0
    data = json.loads(out.read_text())
    assert data["verdict"] == "Finite"
    assert [len(v) for v in data["objects"].values()] == [6, 6, 6]


def test_affine_groupoid_is_not_finite(capsys):
    assert run(["groupoid", "-i", inp("affine_a1.json"), "--max-length", "10"]) == 1
    assert "UnknownWithinBounds" in capsys.readouterr().out


def test_duflo_dot(tmp_path):
    dot = tmp_path / "d.dot"
    assert run(["duflo", "-i", inp("three_objects.json"), "--object", "X1", "--dot", str(dot)]) == 0
    assert dot.read_text().count("->") == 18


def test_census_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(["census", "-i", inp("b2.json"), "--json", str(a)]) == 0
    assert run(["census", "-i", inp("b2.json"), "--json", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    data = json.loads(a.read_text())
    assert data["count"] == 8 and data["records"][0]["word"] == []
    assert "8 coideal subalgebras" in capsys.readouterr().out


def test_census_domain_error(capsys):
    assert run(["census", "-i", inp("three_objects.json")]) == 1
    assert "NotRootSystem" in capsys.readouterr().err


def test_oracle_round_trip(tmp_path, capsys):
    stored = tmp_path / "c.json"
    assert run(["census", "-i", inp("a2.json"), "--json", str(stored)]) == 0
    assert run(["oracle", "verify", "-i", inp("a2.json"), "--census", str(stored),
                "--cap", "5", "--guard"]) == 0
    out = capsys.readouterr().out
    assert "stored census matches" in out and "6/6 pass" in out


def test_oracle_detects_tampering(tmp_path):
    stored = tmp_path / "c.json"
    assert run(["census", "-i", inp("a2.json"), "--json", str(stored)]) == 0
    data = json.loads(stored.read_text())
    data["records"][1]["lambda"] = [[0, 1]]
    stored.write_text(json.dumps(data))
    assert run(["oracle", "verify", "-i", inp("a2.json"), "--census", str(stored),
                "--cap", "4"]) == 2


def test_oracle_needs_braiding():
    assert run(["oracle", "verify", "-i", inp("three_objects.json")]) == 1


def test_input_errors(tmp_path, capsys):
    assert run(["roots", "-i", str(tmp_path / "missing.json")]) == 3
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["roots", "-i", str(bad)]) == 3
    bad.write_text('{"rank": 3, "q": [["-1"]]}')
    assert run(["roots", "-i", str(bad)]) == 3
    assert run(["roots", "-i", inp("a2.json"), "--object", "nope"]) == 3
    same = str(tmp_path / "x.json")
    assert run(["duflo", "-i", inp("a2.json"), "--json", same, "--dot", same]) == 3


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as e:
        run(["census"])
    assert e.value.code == 3
    with pytest.raises(SystemExit) as e:
        run(["roots", "-i", inp("a2.json"), "--cap", "0"])
    assert e.value.code == 3


def test_console_module():
    res = subprocess.run([sys.executable, "-m", "weylgroupoid.cli", "census", "-i", inp("a2.json")],
                         capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.splitlines()[0] == "6 coideal subalgebras at object 0"
