"""End-to-end tests for the command-line tool."""

import os
import subprocess

import pytest

CLI = os.environ.get("PTDIRAC_CLI")
if not CLI or not os.path.exists(CLI):
    pytest.skip("PTDIRAC_CLI not set", allow_module_level=True)


def run(*args, **kwargs):
    return subprocess.run([CLI, *args], capture_output=True, text=True, **kwargs)


def test_solve_reference_state():
    r = run("solve", "--symmetry", "spin", "--alpha", "0.35", "--A", "8", "--B", "2",
            "--M", "5.0", "--Cs", "0.35", "--n", "0", "--kappa", "1")
    assert r.returncode == 0
    assert "4.32062879" in r.stdout
    assert "n_max" in r.stdout


def test_solve_text_constant_misses_the_reference_value():
    # the -0.35 constant from the source text lands ~0.013 away
    r = run("solve", "--symmetry", "spin", "--Cs", "-0.35", "--n", "0", "--kappa", "1")
    assert r.returncode == 0
    assert "4.30760307" in r.stdout


def test_solve_rejects_zero_kappa():
    r = run("solve", "--kappa", "0")
    assert r.returncode == 1
    assert "kappa must be nonzero" in r.stderr


def test_unknown_flag_is_a_usage_error():
    r = run("solve", "--definitely-not-a-flag", "3")
    assert r.returncode == 1


def test_solve_pspin():
    r = run("solve", "--symmetry", "pspin", "--Cps", "-15", "--n", "1", "--kappa", "2")
    assert r.returncode == 0
    assert "-5.17025116" in r.stdout


def test_solve_no_root_exit_code():
    # Cps = -10: the whole window is radicand-invalid, no roots exist
    r = run("solve", "--symmetry", "pspin", "--Cps", "-10", "--n", "1", "--kappa", "2")
    assert r.returncode == 2
    assert "no physical root" in r.stdout


def test_table_is_byte_stable():
    a = run("table", "--symmetry", "spin")
    b = run("table", "--symmetry", "spin")
    assert a.returncode == 0
    assert a.stdout == b.stdout
    lines = a.stdout.strip().split("\n")
    assert lines[0] == "l,n,kappa_neg,kappa_pos,labels,energy,reference,delta"
    assert len(lines) == 9


def test_table_markdown_and_custom_states():
    r = run("table", "--symmetry", "spin", "--format", "markdown", "--states", "0:1")
    assert r.returncode == 0
    assert r.stdout.startswith("|")
    assert "0p3/2" in r.stdout


def test_table_empty_state_list():
    r = run("table", "--states", "")
    assert r.returncode == 1
    assert "at least one state" in r.stderr


def test_table_flags_nonnormalizable_rows():
    r = run("table", "--symmetry", "pspin")
    assert r.returncode == 0
    assert "non-normalizable" in r.stderr
    assert "-4.91520909" in r.stdout  # value still reproduced


def test_scan_single_step_matches_solve():
    r = run("scan", "--vary", "M", "--from", "5.0", "--to", "5.0", "--steps", "1",
            "--Cs", "0.35", "--n", "0", "--kappa", "1")
    assert r.returncode == 0
    lines = r.stdout.strip().split("\n")
    assert lines[0] == "param,n,kappa,energy,converged"
    value = lines[1].split(",")
    assert value[3].startswith("4.32062879")
    assert value[4] == "1"


def test_scan_monotone_trend_in_m():
    r = run("scan", "--vary", "M", "--from", "4.0", "--to", "8.0", "--steps", "9",
            "--Cs", "0.35", "--n", "0", "--kappa", "1")
    assert r.returncode == 0
    energies = [float(line.split(",")[3]) for line in r.stdout.strip().split("\n")[1:]]
    assert all(b > a for a, b in zip(energies, energies[1:]))


def test_scan_reports_unconverged_rows():
    r = run("scan", "--symmetry", "pspin", "--vary", "Cps", "--from", "-10", "--to", "-6",
            "--steps", "5", "--n", "1", "--kappa", "2")
    assert r.returncode == 0
    for line in r.stdout.strip().split("\n")[1:]:
        assert line.endswith(",0")
        assert "nan" in line


def test_scan_usage_errors():
    assert run("scan", "--vary", "bogus", "--from", "1", "--to", "2", "--steps", "3").returncode == 1
    assert run("scan", "--vary", "M", "--from", "1", "--to", "1", "--steps", "5").returncode == 1
    assert run("scan", "--vary", "M", "--from", "1", "--to", "2", "--steps", "0").returncode == 1


def test_wavefunction_csv_and_decay():
    r = run("wavefunction", "--symmetry", "spin", "--Cs", "0.35", "--n", "0", "--kappa", "1",
            "--x-from", "0.5", "--x-to", "40.0", "--samples", "40")
    assert r.returncode == 0
    lines = r.stdout.strip().split("\n")
    assert lines[0] == "x,F_re,F_im,G_re,G_im"
    assert len(lines) == 41
    first = [float(v) for v in lines[1].split(",")[1:3]]
    last = [float(v) for v in lines[-1].split(",")[1:3]]
    assert (last[0] ** 2 + last[1] ** 2) < 1e-12 * (first[0] ** 2 + first[1] ** 2)


def test_wavefunction_requires_samples():
    r = run("wavefunction", "--n", "0", "--kappa", "1", "--samples", "0")
    assert r.returncode == 1


def test_wavefunction_samples_depend_on_x0_but_energy_does_not():
    a = run("wavefunction", "--Cs", "0.35", "--n", "0", "--kappa", "1", "--x0", "0.05",
            "--x-from", "1.0", "--x-to", "1.0", "--samples", "1")
    b = run("wavefunction", "--Cs", "0.35", "--n", "0", "--kappa", "1", "--x0", "0.3",
            "--x-from", "1.0", "--x-to", "1.0", "--samples", "1")
    assert a.stdout != b.stdout
    ea = run("solve", "--Cs", "0.35", "--n", "0", "--kappa", "1", "--x0", "0.05").stdout
    eb = run("solve", "--Cs", "0.35", "--n", "0", "--kappa", "1", "--x0", "0.3").stdout
    assert ea.split("\n")[1] == eb.split("\n")[1]  # identical E line


def test_config_file_precedence(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("Cs=-0.35\nn=0\nkappa=1\n")
    from_config = run("solve", "--config", str(cfg))
    assert "4.30760307" in from_config.stdout
    overridden = run("solve", "--config", str(cfg), "--Cs", "0.35")
    assert "4.32062879" in overridden.stdout


def test_validate_quick():
    r = run("validate", "--quick")
    assert r.returncode == 0
    assert "Winner" in r.stdout
    assert "PASS" in r.stdout
    assert "FAIL" not in r.stdout
