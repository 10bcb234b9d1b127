import json
import math
import subprocess
import sys

import pytest

from pharmonic import mapfile
from pharmonic.cli import main
from pharmonic.harmonic import HarmonicSeries, PHarmonicMap

from .conftest import random_map

IDENTITY = "p=1 N=1\n1 1 1.0 0.0 z\n"
CONJUGATE = "p=1 N=1\n1 1 1.0 0.0 zbar\n"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def csv_row(text):
    return [float(v) for v in text.strip().split(",")]


def test_constants(capsys):
    code, out, _ = run(capsys, "constants")
    assert code == 0
    c = json.loads(out)
    assert c["s0"] == pytest.approx(4.1996, abs=1e-4)
    assert c["M0"] == pytest.approx(1.1296, abs=1e-4)
    assert c["r0"] == pytest.approx(math.sqrt((5 - math.sqrt(17)) / 2), abs=1e-9)
    assert c["M1"] == pytest.approx(2.2976, abs=1e-4)


def test_constants_csv(capsys):
    code, out, _ = run(capsys, "constants", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "name,value"
    assert len(out.splitlines()) == 5


class TestLandau:
    def test_theorem_41_row(self, capsys):
        code, out, _ = run(capsys, "landau", "--theorem", "41", "--M", "2", "--p", "2")
        assert code == 0
        assert csv_row(out) == pytest.approx([2, 2, 0.0206783, 0.00227639], rel=2e-3)
        assert out.strip() == "2,2,0.0206783,0.0022764"

    def test_theorem_42_row(self, capsys):
        code, out, _ = run(capsys, "landau", "--theorem", "42", "--M", "3", "--p", "2")
        assert code == 0
        M, p, rho, R = csv_row(out)
        assert (M, p) == (3, 2)
        assert rho == pytest.approx(0.0037942, rel=2e-3)
        assert R == pytest.approx(1.00669e-8, rel=2e-3)

    def test_M_below_one(self, capsys):
        code, out, err = run(capsys, "landau", "--theorem", "41", "--M", "0.5", "--p", "2")
        assert code == 2 and out == ""
        assert "M must be ≥ 1" in err

    @pytest.mark.parametrize("argv", [
        ["landau", "--theorem", "41", "--M", "2", "--p", "0"],
        ["landau", "--theorem", "41", "--M", "2", "--p", "2", "--tol", "0"],
        ["landau", "--theorem", "43", "--M", "2", "--p", "2"],
        ["landau", "--theorem", "41", "--M", "2"],
        ["nonsense"],
        [],
    ])
    def test_usage_errors(self, capsys, argv):
        assert run(capsys, *argv)[0] == 2

    def test_precision_flag_and_env(self, capsys, monkeypatch):
        base = ["landau", "--theorem", "41", "--M", "2", "--p", "2"]
        _, wide, _ = run(capsys, *base, "--precision", "12")
        assert len(wide.split(",")[2]) > len("0.0206783")
        monkeypatch.setenv("PHARMONIC_PRECISION", "12")
        assert run(capsys, *base)[1] == wide
        # the flag beats the environment
        assert run(capsys, *base, "--precision", "6")[1].strip() == "2,2,0.0206783,0.0022764"

    def test_bad_precision_env(self, capsys, monkeypatch):
        monkeypatch.setenv("PHARMONIC_PRECISION", "many")
        code, _, err = run(capsys, "landau", "--theorem", "41", "--M", "2", "--p", "2")
        assert code == 2 and "PHARMONIC_PRECISION" in err

    def test_json(self, capsys):
        code, out, _ = run(capsys, "landau", "--theorem", "42", "--M", "2", "--p", "3", "--format", "json")
        row = json.loads(out)
        assert code == 0 and row["theorem"] == "42" and row["p"] == 3
        assert row["R"] == pytest.approx(1.2693e-11, rel=2e-3)

    def test_table(self, capsys):
        code, out, _ = run(capsys, "landau-table", "--theorem", "42")
        lines = out.splitlines()
        assert code == 0 and lines[0] == "M,p,rho,R" and len(lines) == 9
        assert [int(l.split(",")[1]) for l in lines[1:]] == [2] * 4 + [3] * 4

    def test_table_custom_grid(self, capsys):
        code, out, _ = run(capsys, "landau-table", "--theorem", "41", "--M", "1.5,2.5", "--p", "1")
        assert code == 0 and len(out.splitlines()) == 3


class TestConfig:
    def test_config_values_and_override(self, capsys, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("# solver settings\ntheorem = 41\nM = 3\np = 4\n")
        _, out, _ = run(capsys, "landau", "--config", str(cfg))
        assert csv_row(out)[:2] == [3, 4]
        _, out, _ = run(capsys, "landau", "--config", str(cfg), "--M", "2")
        assert csv_row(out)[:2] == [2, 4]

    def test_bad_config_line(self, capsys, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("theorem 41\n")
        code, _, err = run(capsys, "landau", "--config", str(cfg))
        assert code == 2 and ":1:" in err

    def test_missing_config(self, capsys, tmp_path):
        assert run(capsys, "constants", "--config", str(tmp_path / "absent.cfg"))[0] == 2


class TestBloch:
    def test_p3(self, capsys):
        code, out, _ = run(capsys, "bloch", "--p", "3", "--M", "1")
        b = json.loads(out)
        assert code == 0
        assert b["bound"] == pytest.approx(4.037006, rel=1e-5)
        assert "note" not in b

    def test_p1_degenerate(self, capsys):
        b = json.loads(run(capsys, "bloch", "--p", "1", "--M", "1")[1])
        assert b["y_star"] == "degenerate"
        assert b["bound"] == 4 / math.pi

    def test_p2_note(self, capsys):
        b = json.loads(run(capsys, "bloch", "--p", "2", "--M", "1")[1])
        assert b["bound"] == pytest.approx(2.666827, abs=1e-6)
        assert "30.7682" in b["note"]

    def test_linear_in_M(self, capsys):
        one = json.loads(run(capsys, "bloch", "--p", "4", "--M", "1")[1])
        three = json.loads(run(capsys, "bloch", "--p", "4", "--M", "3")[1])
        assert three["bound"] == pytest.approx(3 * one["bound"], rel=1e-14)

    def test_emit_curve(self, capsys, tmp_path):
        path = tmp_path / "phi.csv"
        code, _, _ = run(capsys, "bloch", "--p", "3", "--emit-curve", str(path), "--curve-points", "50")
        lines = path.read_text().splitlines()
        assert code == 0 and lines[0] == "y,phi" and len(lines) == 52
        y, v = map(float, lines[-1].split(","))
        assert y == 1.0 and v == pytest.approx(3 * 2 / math.pi)

    def test_M_must_be_positive(self, capsys):
        assert run(capsys, "bloch", "--p", "2", "--M", "0")[0] == 2


class TestCheck:
    def test_identity_starlike(self, capsys, tmp_path):
        f = tmp_path / "id.map"
        f.write_text(IDENTITY)
        code, out, _ = run(capsys, "check", str(f), "--predicate", "starlike")
        rep = json.loads(out)
        assert code == 0 and rep["passed"]
        assert rep["min_margin"] == pytest.approx(1)
        assert set(rep) == {"passed", "min_margin", "worst_point", "points_checked", "vacuous"}

    def test_conjugate_not_sense_preserving(self, capsys, tmp_path):
        f = tmp_path / "conj.map"
        f.write_text(CONJUGATE)
        code, out, err = run(capsys, "check", str(f), "--predicate", "sense")
        assert code == 1 and not json.loads(out)["passed"]
        assert "Jacobian" in err

    def test_duplicate_line(self, capsys, tmp_path):
        f = tmp_path / "dup.map"
        f.write_text(IDENTITY + "1 1 2.0 0.0 z\n")
        code, out, err = run(capsys, "check", str(f), "--predicate", "sense")
        assert code == 2 and out == ""
        assert "3" in err

    def test_malformed_line_number(self, capsys, tmp_path):
        f = tmp_path / "bad.map"
        f.write_text("p=1 N=2\n# comment\n1 1 1.0 0.0 z\n1 2 oops 0 z\n")
        code, _, err = run(capsys, "check", str(f), "--predicate", "convex")
        assert code == 2 and "line 4" in err

    def test_missing_file(self, capsys, tmp_path):
        assert run(capsys, "check", str(tmp_path / "nope.map"), "--predicate", "sense")[0] == 2

    def test_output_file(self, capsys, tmp_path):
        f = tmp_path / "id.map"
        f.write_text(IDENTITY)
        dest = tmp_path / "report.json"
        code, out, _ = run(capsys, "check", str(f), "--predicate", "convex", "-o", str(dest),
                           "--radii", "8", "--angles", "16")
        assert code == 0 and out == ""
        assert json.loads(dest.read_text())["points_checked"] == 128


class TestVariability:
    def test_csv(self, capsys):
        code, out, _ = run(capsys, "variability", "--p", "2", "--z0", "0.5", "--samples", "2000")
        lines = out.splitlines()
        assert code == 0 and lines[0] == "re,im"
        assert lines[-1].startswith("# coverage_radius=")
        pts = [complex(*map(float, l.split(","))) for l in lines[1:-1]]
        assert len(pts) == 2000
        assert max(abs(w) for w in pts) <= 1 + 1e-9

    def test_json(self, capsys):
        out = run(capsys, "variability", "--p", "3", "--z0", "0.5+0.2j", "--samples", "500",
                  "--format", "json")[1]
        body = json.loads(out)
        assert body["n_points"] == len(body["points"]) == 500
        assert body["max_modulus"] <= 1 + 1e-9

    @pytest.mark.parametrize("argv", [
        ["--p", "1", "--z0", "0.5"],
        ["--p", "2", "--z0", "1.0"],
        ["--p", "2", "--z0", "half"],
    ])
    def test_rejects(self, capsys, argv):
        assert run(capsys, "variability", *argv)[0] == 2


@pytest.mark.parametrize("argv", [
    ["constants"],
    ["landau-table", "--theorem", "41"],
    ["bloch", "--p", "5", "--M", "2"],
    ["variability", "--p", "2", "--z0", "0.3-0.1j", "--samples", "300"],
])
def test_deterministic(capsys, argv):
    first = run(capsys, *argv)[1]
    assert run(capsys, *argv)[1] == first


def test_map_roundtrip(rng):
    for p in range(1, 5):
        m = random_map(rng, p, int(rng.integers(0, 6)))
        assert mapfile.loads(mapfile.dumps(m)) == m


def test_roundtrip_through_check(capsys, tmp_path):
    m = PHarmonicMap.from_G(HarmonicSeries.from_dicts(c={1: 0.5}), HarmonicSeries.from_dicts(c={1: 1}))
    f = tmp_path / "w.map"
    mapfile.dump(m, f)
    assert mapfile.load(f) == m
    assert run(capsys, "check", str(f), "--predicate", "starlike")[0] == 0


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pharmonic", "landau", "--theorem", "41", "--M", "2",
                           "--p", "2"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert csv_row(proc.stdout) == pytest.approx([2, 2, 0.0206783, 0.00227639], rel=2e-3)
