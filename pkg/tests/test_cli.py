import json
import math
import subprocess
import sys

import numpy as np
import pytest
from click.testing import CliRunner

from torusheat.cli import cli, format_value
from torusheat.theta import theta_null_t


@pytest.fixture
def run():
    runner = CliRunner()

    def _run(*args):
        return runner.invoke(cli, [str(a) for a in args])

    return _run


def _csv(path):
    lines = path.read_text().split("\n")
    assert lines[-1] == ""
    return lines[0], np.array([[float(v) for v in ln.split(",")] for ln in lines[1:-1]])


def test_format_value():
    assert format_value(1.0864348112133080) == "1.086434811213308"
    assert format_value(0.0) == "0"
    assert format_value(2.5e-7) == "2.500000000000000e-07"
    v = 0.123456789012345678
    assert abs(float(format_value(v)) - v) < 1e-15


def test_theta(run):
    r = run("theta", "--j", 3, "--z", 0, "--t", 1)
    assert r.exit_code == 0
    assert r.output.strip() == "1.086434811213308"
    assert run("theta", "--j", 1, "--z", 0, "--q", 0.3).output.strip() == "0"
    g = float(run("theta", "--j", 4, "--z", 0, "--t", 1).output) ** 2
    assert g == pytest.approx(0.834627, abs=5e-6)


def test_theta_json(run):
    r = run("theta", "--j", 2, "--z", 0.1, "--q", 0.5, "--json")
    data = json.loads(r.output)
    assert data["j"] == 2 and data["q"] == 0.5 and data["t"] is None


@pytest.mark.parametrize(
    "args",
    [
        ("theta", "--j", 3, "--z", 0),
        ("theta", "--j", 3, "--z", 0, "--t", 1, "--q", 0.5),
        ("theta", "--j", 7, "--z", 0, "--t", 1),
        ("theta", "--z", 0, "--t", 1),
        ("extremal", "--lattice", "circle"),
        ("extremal", "--lattice", "gen:1,2,3"),
        ("sweep", "--variable", "t", "--start", 2, "--stop", 1, "--steps", 5, "--quantity", "k", "--output", "-"),
        ("sweep", "--variable", "t", "--start", 1, "--stop", 2, "--steps", 1, "--quantity", "k", "--output", "-"),
        ("sweep", "--variable", "k_comp", "--start", 0.1, "--stop", 0.9, "--steps", 3, "--quantity", "kernel", "--output", "-"),
        ("verify", "--suite", "bogus"),
        ("nonsense",),
    ],
)
def test_usage_errors(run, args):
    assert run(*args).exit_code == 2


def test_domain_errors(run):
    assert run("theta", "--j", 3, "--z", 0, "--q", 1.5).exit_code == 3
    assert run("theta", "--j", 3, "--z", 0, "--t", -1).exit_code == 3
    assert run("extremal", "--lattice", "rect:-2").exit_code == 3
    assert run("extremal", "--lattice", "hex", "--t", 0).exit_code == 3
    r = run("extremal", "--lattice", "gen:1,2,3,4")
    assert r.exit_code == 3
    assert "determinant is -2.0" in r.output


def test_extremal_hex(run):
    data = json.loads(run("extremal", "--lattice", "hex", "--t", 1, "--json").output)
    assert data["A"] == pytest.approx(0.920371, abs=5e-7)
    assert data["B"] == pytest.approx(1.159595, abs=5e-7)
    assert data["ratio"] == pytest.approx(2 ** (-1 / 3), abs=1e-12)
    assert data["ratio"] == pytest.approx(0.793700, abs=1e-6)
    assert len(data["min_locations"]) == 2


def test_extremal_square_and_rect(run):
    data = json.loads(run("extremal", "--lattice", "square", "--json").output)
    assert data["A"] == pytest.approx(0.834627, abs=5e-6)
    assert data["B"] == pytest.approx(1.18034, abs=5e-6)
    data = json.loads(run("extremal", "--lattice", "rect:2", "--t", 1, "--json").output)
    assert data["A"] == pytest.approx(theta_null_t(4, 4.0) * theta_null_t(4, 0.25), rel=1e-15)


def test_extremal_text_and_general(run):
    r = run("extremal", "--lattice", "gen:1,0.3,0,1", "--t", 1)
    assert r.exit_code == 0
    lines = r.output.splitlines()
    assert [ln.split()[0] for ln in lines] == ["A", "B", "ratio", "min_at", "max_at"]
    # the gen grammar is row-major: [[1, 0.3], [0, 1]] is a shear, not its transpose
    assert float(lines[0].split()[1]) == pytest.approx(0.867393, abs=1e-6)


def test_sweep_k_over_t(run, tmp_path):
    out = tmp_path / "k.csv"
    r = run("sweep", "--variable", "t", "--start", 0.1, "--stop", 5, "--steps", 100, "--quantity", "k", "--output", out)
    assert r.exit_code == 0
    header, data = _csv(out)
    assert header == "t,k"
    assert data.shape == (100, 2)
    assert np.all(np.diff(data[:, 1]) < 0)


def test_sweep_a_over_k_comp(run, tmp_path):
    out = tmp_path / "a.csv"
    run("sweep", "--variable", "k_comp", "--start", 0.01, "--stop", 0.99, "--steps", 99, "--quantity", "A", "--output", out)
    _, data = _csv(out)
    peak = data[np.argmax(data[:, 1]), 0]
    assert abs(peak - 1 / math.sqrt(2)) <= 0.005


def test_sweep_ratio_symmetric_in_m_comp(run, tmp_path):
    out = tmp_path / "r.csv"
    run("sweep", "--variable", "m_comp", "--start", 0.02, "--stop", 0.98, "--steps", 49, "--quantity", "ratio", "--output", out)
    _, data = _csv(out)
    assert np.allclose(data[:, 1], data[::-1, 1], rtol=1e-12)


def test_sweep_other_combinations(run, tmp_path):
    for var, qty in (("alpha", "A"), ("alpha", "kernel"), ("alpha", "m"), ("t", "kernel"), ("t", "ratio"), ("m_comp", "k")):
        out = tmp_path / f"{var}_{qty}.csv"
        r = run("sweep", "--variable", var, "--start", 0.5, "--stop", 0.9, "--steps", 3, "--quantity", qty, "--output", out)
        assert r.exit_code == 0, r.output
        header, data = _csv(out)
        assert header == f"{var},{qty}"
        assert np.all(np.isfinite(data))


def test_sweep_alpha_matches_closed_form(run, tmp_path):
    out = tmp_path / "alpha.csv"
    run("sweep", "--variable", "alpha", "--start", 0.5, "--stop", 2, "--steps", 4, "--quantity", "B", "--t", 0.7, "--output", out)
    _, data = _csv(out)
    from torusheat.extremal import rect_max_temp

    for alpha, b in data:
        assert b == pytest.approx(rect_max_temp(alpha, 0.7).value, rel=1e-14)


def test_sweep_deterministic(run, tmp_path):
    paths = [tmp_path / "a.csv", tmp_path / "b.csv"]
    for p in paths:
        run("sweep", "--variable", "t", "--start", 0.2, "--stop", 3, "--steps", 20, "--quantity", "ratio", "--lattice", "hex", "--output", p)
    assert paths[0].read_bytes() == paths[1].read_bytes()
    assert b"\r" not in paths[0].read_bytes()


def test_sweep_unwritable(run, tmp_path):
    r = run("sweep", "--variable", "t", "--start", 1, "--stop", 2, "--steps", 3, "--quantity", "k", "--output", tmp_path / "missing" / "x.csv")
    assert r.exit_code == 4


def test_sweep_json(run, tmp_path):
    out = tmp_path / "j.csv"
    r = run("sweep", "--variable", "t", "--start", 1, "--stop", 2, "--steps", 3, "--quantity", "m", "--output", out, "--json")
    assert json.loads(r.output)["rows"] == 3


def test_verify(run):
    r = run("verify", "--suite", "constants")
    assert r.exit_code == 0
    assert "constants.signature3_chain" in r.output
    data = json.loads(run("verify", "--json").output)
    assert data["passed"]
    assert data["elapsed_s"] < 60


def test_verify_injected_failure(run):
    r = run("verify", "--suite", "moduli", "--inject-failure", "moduli.round_trip")
    assert r.exit_code == 1
    assert "FAIL" in r.output and "moduli.round_trip" in r.output


def test_constants_command(run):
    data = json.loads(run("constants", "--json").output)
    names = [c["name"] for c in data]
    assert "gauss_constant" in names
    assert all(c["max_residual"] < 1e-10 for c in data)


def test_console_entry_point():
    r = subprocess.run(
        [sys.executable, "-m", "torusheat.cli", "theta", "--j", "3", "--z", "0", "--t", "1"],
        capture_output=True,
        text=True,
    )
    assert r.returncode == 0
    assert r.stdout.strip() == "1.086434811213308"
    r = subprocess.run(
        [sys.executable, "-m", "torusheat.cli", "extremal", "--lattice", "gen:2,0,0,1"],
        capture_output=True,
        text=True,
    )
    assert r.returncode == 3
