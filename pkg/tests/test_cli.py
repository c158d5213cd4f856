import csv
import io
import json
import subprocess
import sys

import pytest

from taulab import cli
from taulab.checks import REGISTRY, Sampler, derive_seed, splitmix64


def run(args, capsys):
    code = cli.main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_splitmix_reference_value():
    # first output of splitmix64 seeded with 0
    assert splitmix64(0) == 0xE220A8397B1DCDAF


def test_derived_seeds_differ_per_check():
    assert derive_seed(1, "a") != derive_seed(1, "b")
    assert derive_seed(1, "a") == derive_seed(1, "a")


def test_rational_sampling_ranges():
    smp = Sampler(3)
    for _ in range(2000):
        x = smp.rational()
        assert x != 0 and x.denominator <= 20 and abs(x.numerator) <= 50


def test_phase_suite_passes(capsys):
    code, out, _ = run(["verify", "--suite", "phase", "--seed", "1", "--trials", "5", "--jobs", "1"], capsys)
    assert code == 0
    assert "0 failed" in out


def test_json_schema(capsys):
    code, out, _ = run(["verify", "--suite", "sympoly", "--trials", "1", "--out", "json", "--jobs", "1"], capsys)
    assert code == 0
    rep = json.loads(out)
    assert set(rep) == {"version", "suite", "seed", "checks"}
    assert rep["suite"] == "sympoly" and rep["seed"] == "0"
    names = [c["name"] for c in rep["checks"]]
    assert names == sorted(names)
    for c in rep["checks"]:
        assert set(c) == {"name", "params", "status", "lhs", "rhs", "residual", "elapsed"}
        assert all(isinstance(v, str) for k, v in c.items() if k != "params")
        assert all(isinstance(v, str) for v in c["params"].values())
        assert c["residual"] == "0/1"


def test_csv_one_row_per_check(capsys):
    code, out, _ = run(["verify", "--suite", "felderhof", "--trials", "1", "--out", "csv", "--jobs", "1"], capsys)
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][:2] == ["name", "status"]
    assert len(rows) - 1 == sum(1 for c in REGISTRY.values() if c.suite == "felderhof")


def test_reports_are_deterministic(capsys):
    args = ["verify", "--suite", "fermion", "--trials", "2", "--out", "json", "--no-timing", "--seed", "99"]
    _, a, _ = run(args + ["--jobs", "1"], capsys)
    _, b, _ = run(args + ["--jobs", "2"], capsys)
    assert a == b


def test_induced_failure(capsys):
    code, out, _ = run(["verify", "--suite", "heights", "--trials", "1", "--tolerance", "0",
                        "--out", "json", "--jobs", "1"], capsys)
    assert code == 1
    rep = json.loads(out)
    failed = [c for c in rep["checks"] if c["status"] == "fail"]
    assert failed
    assert all(c["lhs"] and c["rhs"] and c["residual"] for c in failed)


@pytest.mark.parametrize("args", [
    ["verify", "--suite", "bogus"],
    ["verify"],
    ["verify", "--suite", "toda", "--seed", str(1 << 64)],
    ["verify", "--suite", "toda", "--trials", "0"],
    ["verify", "--suite", "toda", "--tolerance", "abc"],
    ["compute", "dwpf", "--model", "sixvertex", "--n", "2", "--method", "nonsense"],
    ["compute", "pp-census"],
    ["nothing"],
])
def test_usage_errors(args, capsys):
    code, _, _ = run(args, capsys)
    assert code == 2


def test_config_file_and_override(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# defaults\nsuite = sympoly\ntrials = 1\nout = json\njobs = 1\n")
    code, out, _ = run(["verify", "--config", str(cfg)], capsys)
    assert code == 0 and json.loads(out)["suite"] == "sympoly"
    code, out, _ = run(["verify", "--config", str(cfg), "--out", "csv"], capsys)
    assert out.startswith("name,status")


def test_config_unknown_key(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("colour = blue\n")
    code, _, err = run(["verify", "--config", str(cfg)], capsys)
    assert code == 2 and "unknown key" in err


def test_report_write_failure(tmp_path, capsys):
    code, _, err = run(["verify", "--suite", "sympoly", "--trials", "1", "--jobs", "1",
                        "--report", str(tmp_path / "missing" / "r.txt")], capsys)
    assert code == 1 and "cannot write" in err


def test_compute_census(capsys):
    code, out, _ = run(["compute", "pp-census", "--box", "2", "2", "2", "--out", "json"], capsys)
    rep = json.loads(out)
    assert code == 0 and rep["count"] == "20" and rep["matches_macmahon"] == "true"


def test_compute_routes_agree(capsys):
    vals = []
    for method in ("izergin", "lascoux", "kirillov_smirnov"):
        code, out, _ = run(["compute", "dwpf", "--model", "sixvertex", "--n", "3", "--method", method,
                            "--seed", "7", "--out", "json"], capsys)
        assert code == 0
        vals.append(json.loads(out)["value"])
    assert len(set(vals)) == 1 and "/" in vals[0]


def test_compute_with_point_file(tmp_path, capsys):
    pt = tmp_path / "p.json"
    pt.write_text(json.dumps({"alpha": ["1/2", "-3/7"], "beta": ["2/5", "5/3"]}))
    code, out, _ = run(["compute", "dwpf", "--model", "felderhof", "--n", "2", "--method", "determinant",
                        "--point", str(pt), "--out", "json"], capsys)
    assert code == 0
    assert json.loads(out)["value"] == "17/42"  # (1 + 3/14)(1 - 2/3)


def test_compute_degenerate_point(tmp_path, capsys):
    pt = tmp_path / "p.json"
    pt.write_text(json.dumps({"alpha": ["1/2", "1/2"], "beta": ["2/5", "5/3"]}))
    code, _, err = run(["compute", "dwpf", "--model", "felderhof", "--n", "2", "--method", "product",
                        "--point", str(pt)], capsys)
    assert code == 2 and "degenerate" in err


def test_compute_height_and_identity(capsys):
    code, out, _ = run(["compute", "dwpf", "--model", "ps-elliptic", "--n", "2", "--method", "bruteforce",
                        "--seed", "3", "--out", "json"], capsys)
    a = json.loads(out)["value"]
    run(["compute", "dwpf", "--model", "ps-elliptic", "--n", "2", "--method", "product", "--seed", "3",
         "--out", "json"], capsys)
    code, out, _ = run(["compute", "elliptic-identity", "--n", "3", "--seed", "1", "--out", "json"], capsys)
    assert code == 0 and float(json.loads(out)["residual"]) < 1e-30
    assert len(a) > 40


def test_compute_tau_routes(capsys):
    vals = []
    for method in ("family", "double-schur"):
        code, out, _ = run(["compute", "tau", "--n", "3", "--s", "1", "--method", method, "--out", "json"], capsys)
        assert code == 0
        vals.append(json.loads(out)["value"])
    assert vals[0] == vals[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "taulab", "--version"], capture_output=True, text=True)
    assert proc.returncode == 0 and "taulab" in proc.stdout
