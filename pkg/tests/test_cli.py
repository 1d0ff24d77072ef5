import csv
import io
import json

import numpy as np
import pytest
from click.testing import CliRunner

from harmonic_radius import coeff_file
from harmonic_radius.cli import format_number, main
from harmonic_radius.extremal import build_extremal
from harmonic_radius.mapping import HarmonicMapping


@pytest.fixture
def run(monkeypatch):
    monkeypatch.delenv("HARMONIC_RADIUS_TOL", raising=False)
    runner = CliRunner()

    def invoke(*args, env=None):
        return runner.invoke(main, list(args), env=env)

    return invoke


def test_format_number():
    assert format_number(0.1 + 0.2) == 0.3
    assert format_number(1 / 3) == 0.333333333333
    assert format_number(True) is True
    assert format_number(float("inf")) is None


def test_radius_starlike(run):
    res = run("radius", "--family", "starlike-bbhj", "--alpha", "0")
    assert res.exit_code == 0
    out = json.loads(res.output)
    assert list(out)[:7] == ["family", "params", "root", "bracket", "residual", "unique", "iterations"]
    assert out["root"] == pytest.approx(0.0614313, abs=1e-6)


def test_radius_uniform(run):
    res = run("radius", "--family", "uniform-phi", "--c", "1", "--b1", "0", "--lambda", "0")
    assert res.exit_code == 0
    assert json.loads(res.output)["root"] == pytest.approx(0.292893, abs=1e-6)


def test_radius_errors(run):
    assert run("radius", "--family", "starlike-bbhj", "--alpha", "1.5").exit_code == 2
    assert run("radius", "--family", "bogus").exit_code == 2
    assert run("radius", "--family", "uniform-phi").exit_code == 2


def test_radius_ambiguity_exit(run, monkeypatch):
    import harmonic_radius.radius as R

    monkeypatch.setattr(R, "radius_polynomial", lambda p, r: np.cos(12 * np.asarray(r)))
    res = run("radius", "--family", "starlike-bbhj")
    assert res.exit_code == 3


def test_radius_deterministic(run):
    a = run("radius", "--family", "convex-convexhalf", "--alpha", "0.3")
    b = run("radius", "--family", "convex-convexhalf", "--alpha", "0.3")
    assert a.output == b.output and a.output.encode() == b.output.encode()


def test_tol_env(run):
    loose = run("radius", "--family", "convex-bbhj", env={"HARMONIC_RADIUS_TOL": "1e-6"})
    tight = run("radius", "--family", "convex-bbhj")
    assert json.loads(loose.output)["iterations"] < json.loads(tight.output)["iterations"]
    assert run("radius", "--family", "convex-bbhj", env={"HARMONIC_RADIUS_TOL": "x"}).exit_code == 2


def test_radius_out_file(run, tmp_path):
    out = tmp_path / "r.json"
    res = run("radius", "--family", "starlike-bbhj", "--out", str(out))
    assert res.exit_code == 0 and res.output == ""
    assert json.loads(out.read_text())["root"] == pytest.approx(0.0614313, abs=1e-6)


def test_radius_table_alpha(run):
    res = run("radius-table", "--family", "starlike-bbhj", "--sweep", "0:0.9:0.1")
    assert res.exit_code == 0
    rows = list(csv.DictReader(io.StringIO(res.output)))
    assert len(rows) == 10
    assert [r["alpha"] for r in rows][:4] == ["0", "0.1", "0.2", "0.3"]
    roots = [float(r["root"]) for r in rows]
    assert np.all(np.diff(roots) <= 0)
    assert all(r["nonincreasing"] == "true" for r in rows)


def test_radius_table_lambda_json(run):
    res = run("radius-table", "--family", "lambda-starlike-bbhj", "--sweep", "0:1:0.5", "--format", "json")
    assert res.exit_code == 0
    doc = json.loads(res.output)
    roots = [r["root"] for r in doc["rows"]]
    assert len(roots) == 3
    assert roots[0] == pytest.approx(0.112903, abs=1e-6)
    assert roots[-1] == pytest.approx(0.0614313, abs=1e-6)


@pytest.mark.parametrize("sweep", ["1:0:0.1", "0:1:0", "0:1", "a:b:c"])
def test_radius_table_bad_sweep(run, sweep):
    assert run("radius-table", "--family", "starlike-bbhj", "--sweep", sweep).exit_code == 2


def test_radius_table_out_of_range(run):
    assert run("radius-table", "--family", "starlike-bbhj", "--sweep", "0.5:1.5:0.5").exit_code == 2


@pytest.fixture
def sharp_file(tmp_path, run):
    path = tmp_path / "sharp.json"
    assert run("extremal", "--kind", "sharp-df-bbhj", "--truncation", "100", "--out", str(path)).exit_code == 0
    return path


def test_check_pass_fail(run, sharp_file):
    ok = json.loads(run("check", "--input", str(sharp_file), "--criterion", "fully-starlike", "--radius", "0.06").output)
    assert ok["verdict"] == "pass"
    bad = json.loads(run("check", "--input", str(sharp_file), "--criterion", "fully-starlike", "--radius", "0.07").output)
    assert bad["verdict"] == "fail"
    assert bad["sum"] > 1


def test_check_koebe_at_r(run, tmp_path):
    # the Koebe coefficients themselves only reach the sum bound at r = 0.112903
    path = tmp_path / "koebe.json"
    run("extremal", "--kind", "koebe", "--truncation", "100", "--out", str(path))
    r1 = json.loads(run("check", "--input", str(path), "--criterion", "fully-starlike", "--radius", "0.07").output)
    r2 = json.loads(run("check", "--input", str(path), "--criterion", "fully-starlike", "--radius", "0.12").output)
    assert r1["verdict"] == "pass" and r2["verdict"] == "fail"


def test_check_unscaled_is_inconclusive_or_fail(run, tmp_path):
    path = tmp_path / "small.json"
    f = HarmonicMapping.from_coefficients([1.0, 0.05], [0.1], tail_scale=1.0, tail_degree=2)
    coeff_file.write(path, f)
    out = json.loads(run("check", "--input", str(path), "--criterion", "fully-starlike").output)
    assert out["verdict"] == "inconclusive"


def test_check_hypothesis_violation(run, tmp_path):
    path = tmp_path / "b1.json"
    path.write_text(json.dumps({"a": [[0.1, 0.0]], "b": [[1.0, 0.0]]}))
    assert run("check", "--input", str(path), "--criterion", "k2-lambda").exit_code == 3


def test_check_parse_errors(run, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"a": [[1, 2],\n')
    res = run("check", "--input", str(path), "--criterion", "k2-lambda")
    assert res.exit_code == 2
    assert "line 2" in res.output
    path.write_text(json.dumps({"a": [[1, 2, 3]], "b": []}))
    res = run("check", "--input", str(path), "--criterion", "k2-lambda")
    assert res.exit_code == 2 and "'a'[0]" in res.output
    assert run("check", "--input", str(tmp_path / "missing.json"), "--criterion", "k2-lambda").exit_code == 2


def test_check_radius_range(run, sharp_file):
    assert run("check", "--input", str(sharp_file), "--criterion", "fully-convex", "--radius", "0").exit_code == 2
    assert run("check", "--input", str(sharp_file), "--criterion", "fully-convex", "--radius", "1.5").exit_code == 2


def test_jacobian_scan_bbhj(run):
    res = run("jacobian-scan", "--kind", "sharp-df-bbhj", "--r-max", "0.15", "--samples", "2000")
    assert res.exit_code == 0
    lines = res.output.splitlines()
    assert lines[0] == "r,jacobian"
    data = [l for l in lines[1:] if not l.startswith("#")]
    assert len(data) == 2000
    roots = [float(l.split(",")[1]) for l in lines if l.startswith("# root")]
    assert roots == pytest.approx([0.0614313, 0.0903331], abs=1e-6)


def test_jacobian_scan_convexhalf(run):
    res = run("jacobian-scan", "--kind", "sharp-df-convexhalf", "--r-max", "0.25", "--samples", "2000")
    roots = [float(l.split(",")[1]) for l in res.output.splitlines() if l.startswith("# root")]
    assert roots == pytest.approx([0.0903331, 0.164878], abs=1e-6)


def test_jacobian_scan_no_roots(run):
    res = run("jacobian-scan", "--kind", "sharp-df-bbhj", "--r-max", "0.05", "--samples", "100")
    assert res.output.splitlines()[-1] == "# no roots"


def test_jacobian_scan_errors(run):
    assert run("jacobian-scan", "--kind", "koebe", "--r-max", "0.1").exit_code == 2
    assert run("jacobian-scan", "--kind", "sharp-df-bbhj", "--r-max", "1.5").exit_code == 2
    assert run("jacobian-scan", "--kind", "uniform-f0", "--r-max", "0.5").exit_code == 2


def test_jacobian_scan_deterministic(run):
    a = run("jacobian-scan", "--kind", "uniform-f0", "--r-max", "0.5", "--samples", "50", "--c", "1")
    b = run("jacobian-scan", "--kind", "uniform-f0", "--r-max", "0.5", "--samples", "50", "--c", "1")
    assert a.output == b.output


@pytest.mark.parametrize("suite", ["identities", "radii"])
def test_verify_pass(run, suite):
    res = run("verify", "--suite", suite)
    assert res.exit_code == 0
    doc = json.loads(res.stdout)
    assert doc["passed"]
    if suite == "radii":
        assert len(doc["checks"]) == 6


def test_verify_bogus(run):
    assert run("verify", "--suite", "bogus").exit_code == 2


def test_verify_failure_exit(run, monkeypatch):
    import harmonic_radius.verification as V

    monkeypatch.setitem(V.SUITES, "radii", lambda: [V.Check("x", False, "forced")])
    res = run("verify", "--suite", "radii")
    assert res.exit_code == 1
    assert "failing: x" in res.stderr


def test_coeff_file_roundtrip(tmp_path):
    rng = np.random.default_rng(5)
    a = np.r_[1.0, rng.normal(size=30) + 1j * rng.normal(size=30)]
    b = rng.normal(size=31) * 1e-3 + 1j * rng.normal(size=31) / 7
    f = HarmonicMapping.from_coefficients(a, b)
    path = tmp_path / "f.json"
    coeff_file.write(path, f)
    g = coeff_file.read(path)
    assert np.array_equal(np.abs(g.h.coeffs), np.abs(f.h.coeffs))
    assert np.array_equal(np.abs(g.g.coeffs), np.abs(f.g.coeffs))
    assert np.array_equal(g.h.coeffs, f.h.coeffs)


def test_coeff_file_roundtrip_cli(run, tmp_path):
    path = tmp_path / "k.json"
    run("extremal", "--kind", "koebe", "--truncation", "64", "--out", str(path))
    g = coeff_file.read(path)
    f = build_extremal("koebe", 64)
    assert np.array_equal(np.abs(g.h.coeffs), np.abs(f.h.coeffs))
    assert np.array_equal(np.abs(g.g.coeffs), np.abs(f.g.coeffs))
    assert (g.h.tail_scale, g.h.tail_degree) == (1.0, 2.0)


def test_coeff_file_validation():
    with pytest.raises(coeff_file.CoeffFileError, match="unknown"):
        coeff_file.loads('{"a": [], "b": [], "c": 1}')
    with pytest.raises(coeff_file.CoeffFileError, match="top level"):
        coeff_file.loads("[1, 2]")
    with pytest.raises(coeff_file.CoeffFileError, match="tail"):
        coeff_file.loads('{"a": [[5.0, 0]], "b": [], "tail": {"C": 1, "d": 0}}')
    with pytest.raises(coeff_file.CoeffFileError):
        coeff_file.loads('{"a": [[true, 0]], "b": []}')
    with pytest.raises(coeff_file.CoeffFileError):
        coeff_file.dumps(HarmonicMapping.from_coefficients([2.0]))
