import json
import subprocess
import sys

from latzeta.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classgroup_json(capsys):
    code, out, _ = run_cli(capsys, "classgroup", "--disc", "-20", "--json")
    assert code == 0
    obj = json.loads(out)
    assert obj["h"] == 2
    assert obj["classes"] == [[1, 0, 5], [2, 2, 3]]
    assert obj["structure"] == "Z/2"
    assert obj["subgroups"]["ortho"] == [[1, 0, 5]]


def test_json_round_trips_byte_identical(capsys):
    for argv in (
        ["classgroup", "--disc", "-23", "--json"],
        ["verify", "--disc", "-7", "--max", "12", "--json"],
        ["euler", "--disc", "-23", "--max", "40", "--json"],
        ["residue", "--disc", "-4", "--max", "40", "--json"],
    ):
        code, out, _ = run_cli(capsys, *argv)
        assert code == 0
        assert json.dumps(json.loads(out), sort_keys=True, indent=2) + "\n" == out


def test_verify_ok_and_exit_zero(capsys):
    code, out, _ = run_cli(capsys, "verify", "--disc", "-23", "--max", "30", "--all-classes")
    assert code == 0
    assert "OK" in out and "mismatch" not in out


def test_verify_csv_columns(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--disc", "-8", "--max", "15", "--mode", "sl", "--csv"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "m,a_formula,a_brute,match"
    assert len(lines) == 16
    for line in lines[1:]:
        m, af, ab, match = line.split(",")
        assert af == ab and match == "1"


def test_verify_csv_needs_single_report(capsys):
    code, _, err = run_cli(capsys, "verify", "--disc", "-8", "--max", "10", "--csv")
    assert code == 2
    assert "single" in err


def test_verify_json_schema(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--disc", "-20", "--max", "10", "--mode", "gl",
        "--form", "2,2,3", "--json",
    )
    assert code == 0
    obj = json.loads(out)
    assert set(obj) == {
        "disc", "form", "mode", "N", "coeffs_formula", "coeffs_brute",
        "mismatches", "elapsed_ms",
    }
    assert obj["form"] == [2, 2, 3]
    assert obj["mismatches"] == []
    assert len(obj["coeffs_formula"]) == 10


def test_domain_errors_exit_two(capsys):
    assert run_cli(capsys, "classgroup", "--disc", "-12")[0] == 2
    assert run_cli(capsys, "verify", "--disc", "-20", "--form", "1,1,6")[0] == 2
    assert run_cli(capsys, "verify", "--disc", "-20", "--form", "1,1")[0] == 2
    assert run_cli(capsys, "verify", "--disc", "-20", "--form", "-1,0,-5")[0] == 2
    assert run_cli(capsys, "brute", "--disc", "7")[0] == 2


def test_usage_error_exit_two(capsys):
    assert main(["verify"]) == 2  # missing --disc
    assert main(["no-such-command"]) == 2


def test_max_cap_respects_env(capsys, monkeypatch):
    monkeypatch.setenv("LATZETA_MAX_N", "50")
    assert run_cli(capsys, "verify", "--disc", "-7", "--max", "60")[0] == 2
    assert run_cli(capsys, "verify", "--disc", "-7", "--max", "50")[0] == 0


def test_euler_reports_witness_and_structure(capsys):
    code, out, _ = run_cli(capsys, "euler", "--disc", "-23", "--max", "100")
    assert code == 0
    assert "fails" in out and "m=6" in out and "Z/3" in out and "agrees" in out


def test_localfactor_output(capsys):
    code, out, _ = run_cli(capsys, "localfactor", "--disc", "-7", "--prime", "2", "--powers", "3")
    assert code == 0
    assert "a[2^3] = 8" in out
    code, out, _ = run_cli(
        capsys, "localfactor", "--disc", "-7", "--prime", "3", "--powers", "2", "--json"
    )
    assert json.loads(out)["coefficients"] == [1, 4, 13]


def test_brute_and_formula_tables_agree(capsys):
    code, brute_out, _ = run_cli(
        capsys, "brute", "--disc", "-24", "--max", "20", "--mode", "gl", "--csv"
    )
    assert code == 0
    code, formula_out, _ = run_cli(
        capsys, "formula", "--disc", "-24", "--max", "20", "--mode", "gl", "--csv"
    )
    assert code == 0
    assert brute_out == formula_out


def test_brute_jobs_flag(capsys):
    code, out, _ = run_cli(
        capsys, "brute", "--disc", "-4", "--max", "12", "--mode", "sl", "--csv", "--jobs", "2"
    )
    assert code == 0
    assert out.strip().splitlines()[1] == "1,1"


def test_residue_plain_output(capsys):
    code, out, _ = run_cli(capsys, "residue", "--disc", "-3", "--max", "60")
    assert code == 0
    assert "DIAGNOSTIC" in out and "doubling ratio" in out and "exact" in out


def test_module_entrypoint_help():
    proc = subprocess.run(
        [sys.executable, "-m", "latzeta", "--help"], capture_output=True, text=True
    )
    assert proc.returncode == 0
    assert "verify" in proc.stdout
