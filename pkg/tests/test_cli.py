import json
import subprocess
import sys

from cuspsemi import cli, verify
from cuspsemi.verify import CheckResult


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_info_json(capsys):
    code, out, _ = run_cli(capsys, "info", "--gens", "6,10,15")
    assert code == 0
    payload = json.loads(out)
    assert payload["generators"] == [6, 10, 15]
    assert payload["frobenius"] == 29
    assert payload["genus"] == 15
    assert payload["symmetric"] is True
    assert payload["apery"] == [0, 25, 20, 15, 10, 35]
    assert payload["betti_up_to"] == [30]


def test_info_whole_line_has_null_symmetry(capsys):
    code, out, _ = run_cli(capsys, "info", "--gens", "1")
    assert code == 0
    assert json.loads(out)["symmetric"] is None


def test_info_gcd_usage_error(capsys):
    code, _, err = run_cli(capsys, "info", "--gens", "4,6")
    assert code == 2
    assert "gcd" in err


def test_generic_deterministic(capsys):
    code, out1, _ = run_cli(capsys, "generic", "--profile", "8,10,12", "--seed", "3")
    assert code == 0
    code2, out2, _ = run_cli(capsys, "generic", "--profile", "8,10,12", "--seed", "3")
    assert code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["conductor"] == 28
    assert payload["genus"] == 16
    assert payload["seeds"] == [3, 4, 5]


def test_generic_env_prime(capsys, monkeypatch):
    monkeypatch.setenv("CUSPSEMI_PRIME", "2147483647")
    code, out, _ = run_cli(capsys, "generic", "--profile", "4,6")
    assert code == 0
    payload = json.loads(out)
    assert payload["prime"] == 2147483647
    assert payload["conductor"] == 16


def test_generic_rejects_small_prime(capsys):
    code, _, err = run_cli(capsys, "generic", "--profile", "4,6", "--prime", "97")
    assert code == 2
    assert "prime" in err


def test_verify_pass_exit_zero(capsys):
    code, out, _ = run_cli(capsys, "verify", "m2-gaps")
    assert code == 0
    assert "result: PASS" in out


def test_verify_unknown_theorem(capsys):
    code, _, err = run_cli(capsys, "verify", "not-a-theorem")
    assert code == 2
    assert "unknown theorem" in err


def test_verify_requires_theorem(capsys):
    code, _, err = run_cli(capsys, "verify")
    assert code == 2
    assert "theorem id" in err


def test_verify_list(capsys):
    code, out, _ = run_cli(capsys, "verify", "--list-theorems")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == len(verify.THEOREMS)
    assert lines == sorted(lines)


def test_verify_failure_exit_one(capsys, monkeypatch):
    def broken():
        res = CheckResult("broken")
        res.row("always fails", False, "synthetic")
        return res

    monkeypatch.setitem(verify.THEOREMS, "broken", ("synthetic failure", broken))
    code, out, _ = run_cli(capsys, "verify", "broken")
    assert code == 1
    assert "FAIL always fails" in out
    assert "result: FAIL" in out


def test_verify_flag_passthrough(capsys):
    code, out, _ = run_cli(capsys, "verify", "supersym-invariants", "--max-abc", "300")
    assert code == 0
    assert "result: PASS" in out


def test_sweep_supersym_csv(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--family", "supersym", "--max-abc", "300")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("# cuspsemi ")
    assert lines[1].split(",")[:4] == ["a", "b", "c", "genus"]
    first = lines[2].split(",")
    assert first[:3] == ["2", "3", "5"]
    # rows come out in ascending (a, b, c) order
    keys = [tuple(map(int, ln.split(",")[:3])) for ln in lines[2:]]
    assert keys == sorted(keys)


def test_sweep_deterministic_and_workers_stable(capsys):
    args = ("sweep", "--family", "supersym", "--max-abc", "400")
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    _, out3, _ = run_cli(capsys, *args, "--workers", "4")
    assert out1 == out2 == out3


def test_sweep_supersym_spot_row(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--family", "supersym", "--max-abc", "200")
    assert code == 0
    rows = out.splitlines()[2:]
    spot = next(ln for ln in rows if ln.startswith("4,5,7,"))
    assert spot == "4,5,7,99,197,8,92,99,true,true,negative,true,96,177"


def test_sweep_arith_csv(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--family", "arith", "--m", "2..2", "--l", "4..8")
    assert code == 0
    lines = out.splitlines()
    header = lines[1].split(",")
    assert header[:3] == ["m", "l", "genus"]
    genus_at = header.index("genus")
    upper_at = header.index("genus_upper")
    for ln in lines[2:]:
        cells = ln.split(",")
        assert cells[genus_at] == cells[upper_at]
    assert lines[2].split(",")[:3] == ["2", "4", "16"]


def test_sweep_generic_requires_three_trials(capsys):
    code, _, err = run_cli(capsys, "sweep", "--family", "generic", "--l", "4..4", "--trials", "2")
    assert code == 2
    assert "trials" in err


def test_sweep_generic_json(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--family", "generic", "--l", "4..5", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["family"] == "generic"
    rows = payload["rows"]
    assert [r["l"] for r in rows] == [4, 5]
    assert all(r["in_bounds"] for r in rows)


def test_sweep_file_output(tmp_path, capsys):
    target = tmp_path / "sweep.csv"
    code, out, _ = run_cli(capsys, "sweep", "--family", "supersym", "--max-abc", "200", "--out", str(target))
    assert code == 0
    assert out == ""
    text = target.read_bytes()
    assert text.startswith(b"# cuspsemi ")
    assert b"\r" not in text  # plain LF line endings


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cuspsemi", "info", "--gens", "12,15,20"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["frobenius"] == 73


def test_console_script_parity():
    a = subprocess.run(
        [sys.executable, "-m", "cuspsemi", "sweep", "--family", "supersym", "--max-abc", "200"],
        capture_output=True,
    )
    b = subprocess.run(
        [sys.executable, "-m", "cuspsemi", "sweep", "--family", "supersym", "--max-abc", "200"],
        capture_output=True,
    )
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
