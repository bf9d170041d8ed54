import json
import subprocess
import sys


def run_cli(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "schlicht.cli", *args],
        capture_output=True,
        text=True,
    )
    return proc


def test_verify_pass_exit_zero(tmp_path):
    out = tmp_path / "rep.json"
    proc = run_cli("verify", "--suite", "area", "--seed", "7", "--out", str(out))
    assert proc.returncode == 0
    data = json.loads(out.read_text())
    assert data["pass"] is True
    assert data["seed"] == 7
    assert data["suites"][0]["suite"] == "area"


def test_verify_report_written_even_on_failure(tmp_path):
    out = tmp_path / "dec.json"
    proc = run_cli(
        "weinstein", "decompose", "--function", "identity", "--n", "6",
        "--T", "2", "--out", str(out),
    )
    assert proc.returncode == 1  # horizon too short: check honestly fails
    data = json.loads(out.read_text())
    assert data["pass"] is False


def test_unknown_suite_is_usage_error():
    proc = run_cli("verify", "--suite", "nope")
    assert proc.returncode == 2


def test_bad_flag_is_usage_error():
    proc = run_cli("verify", "--nonsense")
    assert proc.returncode == 2


def test_numeric_error_exit_three():
    # step size above the solver's limit trips the numeric-error path
    proc = run_cli(
        "loewner", "trace", "--kappa", "const:-1", "--T", "1", "--step", "0.5",
        "--grid", "polar:2x2", "--out", "-",
    )
    assert proc.returncode == 3


def test_determinism(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        proc = run_cli(
            "verify", "--suite", "weinstein", "--quick", "--seed", "42",
            "--out", str(path),
        )
        assert proc.returncode == 0
    assert a.read_bytes() == b.read_bytes()


def test_table_legendre_rows():
    proc = run_cli("table", "--kind", "legendre", "--n", "2")
    assert proc.returncode == 0
    lines = proc.stdout.strip().splitlines()
    assert lines[0].startswith("degree")
    assert lines[3].split(",")[1:4] == ["-1/2", "0", "3/2"]


def test_table_lambda_pattern():
    proc = run_cli("table", "--kind", "lambda", "--t", "0", "--n", "6", "--k", "0")
    row = proc.stdout.strip().splitlines()[1].split(",")
    assert [float(x) for x in row[1:]] == [1.0, 0.0, 1.0, 0.0, 1.0, 0.0, 1.0]


def test_table_coefficients_koebe():
    proc = run_cli("table", "--kind", "coefficients", "--function", "koebe", "--n", "5")
    rows = [line.split(",") for line in proc.stdout.strip().splitlines()[1:]]
    assert [float(r[1]) for r in rows] == [0.0, 1.0, 2.0, 3.0, 4.0, 5.0]


def test_table_byte_identical(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    for path in (a, b):
        run_cli("table", "--kind", "lambda", "--t", "0.5", "--n", "10", "--out", str(path))
    assert a.read_bytes() == b.read_bytes()


def test_trace_csv(tmp_path):
    out = tmp_path / "trace.csv"
    proc = run_cli(
        "loewner", "trace", "--kappa", "const:-1", "--T", "2", "--step", "1e-3",
        "--grid", "polar:2x4", "--samples", "4", "--out", str(out),
    )
    assert proc.returncode == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "t,z_re,z_im,f_re,f_im,etf_re,etf_im"
    assert len(lines) == 1 + 5 * 8  # 5 stored times, 8 grid points


def test_verify_focus_milin_identity():
    proc = run_cli("verify", "--suite", "milin", "--function", "identity", "--n", "1")
    assert proc.returncode == 0
    data = json.loads(proc.stdout)
    case = data["suites"][0]["cases"][0]
    assert case["lhs"] == -1.0 and case["rhs"] == 0.0 and case["pass"]


def test_verify_focus_weinstein():
    proc = run_cli("verify", "--suite", "weinstein", "--t", "0.5", "--n", "8")
    assert proc.returncode == 0
    data = json.loads(proc.stdout)
    cases = {c["id"]: c for c in data["suites"][0]["cases"]}
    assert cases["oracle-discrepancy"]["lhs"] < 1e-8
    assert cases["min-lambda"]["pass"]


def test_weinstein_lambda_oracle_gaps():
    proc = run_cli("weinstein", "lambda", "--t", "0.5", "--k", "3", "--N", "12")
    assert proc.returncode == 0
    data = json.loads(proc.stdout)
    assert data["fourier_max_gap"] < 1e-8
    assert data["legendre_max_gap"] < 1e-8
    assert abs(data["values"][3] - 0.22313016014842982) < 1e-10
