import json
import subprocess
import sys

import pytest

from liechar import char_x, parse_algebra, rewrite_to_z
from liechar.cli import main
from liechar.serialize import genfun_from_json, poly_from_json, tpoly_from_json
from fixtures import A2_D, A2_N, tpoly


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_genfun_json_roundtrip(capsys):
    code, out, _ = run(capsys, "genfun", "--algebra", "A2")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema_version"] == 1 and doc["verified"] is True and doc["timings"] is None
    res = genfun_from_json(doc)
    assert res.numerator == tpoly(A2_N) and res.denominator == tpoly(A2_D)
    assert tpoly_from_json(doc["numerator"], 2, 2) == tpoly(A2_N)


def test_cache_is_byte_identical(capsys, tmp_path):
    _, cold, _ = run(capsys, "genfun", "--algebra", "C2")
    assert list((tmp_path / "cache").glob("*.json"))
    _, warm, _ = run(capsys, "genfun", "--algebra", "C2")
    _, fresh, _ = run(capsys, "--no-cache", "genfun", "--algebra", "C2")
    assert cold == warm == fresh


def test_corrupt_cache_entry_is_recomputed(capsys, tmp_path):
    _, first, _ = run(capsys, "operator", "--algebra", "A2")
    (entry,) = (tmp_path / "cache").glob("*.json")
    entry.write_text(entry.read_text().replace('"9"', '"7"'))
    _, second, _ = run(capsys, "operator", "--algebra", "A2")
    assert first == second


def test_verify_and_tamper(capsys, tmp_path):
    path = tmp_path / "c2.json"
    assert run(capsys, "genfun", "--algebra", "C2", "--out", str(path))[0] == 0
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 0 and json.loads(out)["verified"] is True
    doc = json.loads(path.read_text())
    doc["numerator"][0]["coeff"][0]["coeff"] = "3"
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "verify", str(path))
    assert code == 2 and json.loads(out)["verified"] is False


def test_verify_schema_errors(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"schema_version": 99, "algebra": "A1"}))
    assert run(capsys, "verify", str(path))[0] == 4
    path.write_text(json.dumps({"schema_version": 1, "algebra": "A1"}))
    assert run(capsys, "verify", str(path))[0] == 4
    path.write_text("not json")
    assert run(capsys, "verify", str(path))[0] == 4
    assert run(capsys, "verify", str(tmp_path / "missing.json"))[0] == 4


@pytest.mark.parametrize("argv", [
    ["chars", "--algebra", "G2"],
    ["chars", "--algebra", "D2"],
    ["chars", "--algebra", "A7"],
    ["chars", "--algebra", "A2", "--max", "-1"],
    ["genfun", "--algebra", "A2", "--direction", "1,2"],
    ["genfun", "--algebra", "A2", "--direction", "1"],
    ["recurrence", "--algebra", "A2", "--axis", "3"],
    ["dims", "--algebra", "A2", "--order", "-2"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 4


@pytest.mark.parametrize("argv", [["chars"], ["frobnicate"], []])
def test_parser_errors_exit_4(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 4


def test_chars_b3_against_weyl_formula(capsys):
    code, out, _ = run(capsys, "chars", "--algebra", "B3", "--max", "2")
    assert code == 0
    alg = parse_algebra("B3")
    rows = json.loads(out)["characters"]
    assert len(rows) == 27
    for row in rows:
        m = tuple(row["weight"])
        assert poly_from_json(row["poly"], 3) == rewrite_to_z(alg, char_x(alg, m).poly)


def test_text_outputs(capsys):
    _, out, _ = run(capsys, "genfun", "--algebra", "A1", "--format", "text")
    assert "D = 1 - z1*t + t^2" in out and "verified: true" in out
    _, out, _ = run(capsys, "operator", "--algebra", "C2", "--format", "text")
    assert "dz2: 8*z2" in out
    _, out, _ = run(capsys, "recurrence", "--algebra", "A2", "--format", "text")
    assert "onset: 3" in out
    _, out, _ = run(capsys, "dims", "--algebra", "A2", "--format", "text", "--order", "1")
    assert "dim(1,1) = 8" in out
    _, out, _ = run(capsys, "chars", "--algebra", "C2", "--format", "text", "--max", "1")
    assert "chi(1,1) = z1*z2 - z1" in out


def test_ray_and_timings(capsys):
    code, out, _ = run(capsys, "genfun", "--algebra", "A2", "--direction", "1,1", "--timings")
    doc = json.loads(out)
    assert code == 0 and doc["direction"] == [1, 1] and "verify" in doc["timings"]


def test_console_entry_point(tmp_path):
    out = tmp_path / "a1.json"
    proc = subprocess.run([sys.executable, "-m", "liechar", "genfun", "--algebra", "A1", "--out", str(out)],
                          capture_output=True, text=True, env={"LIECHAR_CACHE": str(tmp_path / "c"), "PATH": ""})
    assert proc.returncode == 0, proc.stderr
    assert json.loads(out.read_text())["verified"] is True
