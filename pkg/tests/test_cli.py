import json
import subprocess
import sys

from hamtwist.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_counit(capsys):
    code, out, _ = run_cli(capsys, "compute", "counit", "--elt", "DH[1;2]", "--N", "2")
    assert code == 0 and out.strip() == "0"


def test_compute_delta_radford_row(capsys):
    code, out, _ = run_cli(capsys, "compute", "delta", "--variant", "utq",
                           "--p", "3", "--q", "1", "--elt", "DHp[1;1]@3")
    assert code == 0
    # 1 (x) h + h (x) f with f = 1 + et + e^2 t^2 and e = 2 DHp[1;2]@3
    assert "t^0: [1 (x) DHp[1;1]@3] + [DHp[1;1]@3 (x) 1]" in out
    assert "t^1: 2*[DHp[1;1]@3 (x) DHp[1;2]@3]" in out
    assert "t^2: [DHp[1;1]@3 (x) DHp[1;2]@3^2]" in out


def test_compute_delta_char0_json(capsys):
    code, out, _ = run_cli(capsys, "compute", "delta", "--variant", "char0-vertical",
                           "--n", "1", "--k", "1", "--N", "3", "--elt", "DH[1;1]",
                           "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["t^0"] == "[1 (x) DH[1;1]] + [DH[1;1] (x) 1]"
    assert set(payload) == {"t^0", "t^1", "t^2", "t^3"}


def test_compute_antipode(capsys):
    code, out, _ = run_cli(capsys, "compute", "antipode", "--variant", "char0-vertical",
                           "--n", "1", "--N", "2", "--elt", "DH[1;2]")
    assert code == 0
    # S(e) = -(1-et)^-1 e = -e - e^2 t - ...
    assert out.splitlines()[0] == "t^0: -DH[1;2]"
    assert out.splitlines()[1] == "t^1: -DH[1;2]^2"


def test_exit_code_config_error(capsys):
    code, _, err = run_cli(capsys, "compute", "delta", "--variant", "char0-horizontal",
                           "--n", "1", "--m", "2", "--N", "2", "--elt", "DH[1;1]")
    assert code == 2 and "invalid configuration" in err


def test_exit_code_parse_error(capsys):
    code, _, err = run_cli(capsys, "compute", "delta", "--elt", "DH[oops]", "--N", "2")
    assert code == 3 and "parse error" in err


def test_exit_code_inadmissible(capsys):
    code, _, err = run_cli(capsys, "compute", "delta", "--variant", "utq",
                           "--p", "3", "--q", "0", "--elt", "DHp[2;2]@3")
    assert code == 4 and "inadmissible" in err


def test_missing_N_is_config_error(capsys):
    code, _, err = run_cli(capsys, "compute", "delta", "--elt", "DH[1;1]")
    assert code == 2


def test_verify_dims_report(tmp_path, capsys):
    report = tmp_path / "dims.jsonl"
    code, _, err = run_cli(capsys, "verify", "dims", "--report", str(report),
                           "--no-timing")
    assert code == 0
    lines = report.read_text().strip().split("\n")
    recs = [json.loads(x) for x in lines]
    assert all(r["status"] == "pass" for r in recs)
    assert {"check_id", "context", "parameters", "status", "witness",
            "wall_time_ms"} == set(recs[0])
    assert "pass=" in err


def test_verify_report_determinism(tmp_path, capsys):
    a = tmp_path / "a.jsonl"
    b = tmp_path / "b.jsonl"
    for path in (a, b):
        code, _, _ = run_cli(capsys, "verify", "dims", "--seed", "123",
                             "--report", str(path), "--no-timing")
        assert code == 0
    assert a.read_bytes() == b.read_bytes()


def test_verify_parallel_jobs(tmp_path, capsys):
    a = tmp_path / "a.jsonl"
    b = tmp_path / "b.jsonl"
    code, _, _ = run_cli(capsys, "verify", "dims", "--report", str(a), "--no-timing")
    assert code == 0
    code, _, _ = run_cli(capsys, "verify", "dims", "--jobs", "2",
                         "--report", str(b), "--no-timing")
    assert code == 0
    assert a.read_bytes() == b.read_bytes()


def test_verify_figures(tmp_path, capsys):
    figdir = tmp_path / "figs"
    code, _, err = run_cli(capsys, "verify", "jordanian", "--report",
                           str(tmp_path / "r.jsonl"), "--figures", str(figdir))
    assert code == 0
    assert (figdir / "check_status.png").exists()
    assert (figdir / "suite_timing.png").exists()


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hamtwist.cli", "compute", "counit",
         "--elt", "DH[0;1]", "--N", "1"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "0"
