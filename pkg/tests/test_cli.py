import json
import math

import pytest

from fricke import cli


def run(capsys, *argv):
    code = cli.dispatch(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_complex():
    assert cli.parse_complex("0.3+0.2i") == 0.3 + 0.2j
    assert cli.parse_complex("-0.25-0.15i") == -0.25 - 0.15j
    assert cli.parse_complex("2") == 2.0
    assert cli.parse_complex("-1.5e-3") == -0.0015
    assert cli.parse_complex("0.2i") == 0.2j
    assert cli.parse_complex("-0.4i") == -0.4j
    with pytest.raises(cli.CliInputError):
        cli.parse_complex("abc")


def test_verify_dodeca_exit_zero(capsys):
    code, out, err = run(capsys, "verify", "dodeca", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    assert "tolerances" in payload and "residuals" in payload
    assert max(payload["residuals"].values()) <= 1e-8


def test_charvar_residual_torus(capsys):
    code, out, _ = run(
        capsys, "charvar", "residual", "--surface", "torus",
        "--coords", "2,2,2", "--weight", "1/10",
    )
    assert code == 0
    payload = json.loads(out)
    assert abs(payload["residual"][0] - (2 - 2 * math.cos(math.pi / 5))) <= 1e-12


def test_charvar_lift_dodeca(capsys):
    s5 = math.sqrt(5.0)
    coords = f"{-1-s5},{-1-s5},{-1.5*(1+s5)}"
    # leading '-' values need the '=' form under argparse
    code, out, _ = run(
        capsys, "charvar", "lift", "--coords=" + coords, "--weight", "3/10"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 4
    assert all(l["residual"] <= 1e-8 for l in payload["lifts"])


def test_charvar_rejects_bad_weight(capsys):
    code, _, err = run(
        capsys, "charvar", "residual", "--surface", "sphere",
        "--coords", "0,0,0", "--weight", "1/10",
    )
    assert code == 2
    assert err.startswith("E:input:")


def test_lorentz_angles(capsys):
    code, out, _ = run(capsys, "lorentz", "angles")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["dihedral_cosines"]) == 6
    diffs = [
        abs(a - b)
        for a, b in zip(payload["dihedral_cosines"], payload["expected"])
    ]
    assert max(diffs) <= 1e-9


def test_covering_check(capsys):
    code, out, _ = run(
        capsys, "covering", "check", "--weight", "2/5", "--signs", "1,-1,-1"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] and payload["all_positive"]


def test_monodromy_verb(capsys):
    code, out, _ = run(
        capsys, "monodromy", "--a", "0.2", "--chi", "0.3+0.2i",
        "--r", "0.1", "--tau", "1",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["residuals"]["character_equation"] <= 1e-6
    assert payload["residuals"]["commutator_trace"] <= 1e-6
    assert len(payload["X"]) == 4


def test_monodromy_rejects_half_lattice_chi(capsys):
    code, _, err = run(
        capsys, "monodromy", "--a", "0.2", "--chi", "0", "--r", "0.1", "--tau", "1"
    )
    assert code == 2
    assert err.startswith("E:input:")


def test_spin_verb(capsys):
    code, out, _ = run(capsys, "spin", "--state", "+,+", "--graft", "yx", "--tau", "1")
    assert code == 0
    payload = json.loads(out)
    assert payload["final"] == "-,-"
    assert payload["residuals"]["holonomy_x"] <= 1e-10


def test_unknown_flag_rejected(capsys):
    code, _, _ = run(capsys, "verify", "dodeca", "--frobnicate")
    assert code == 2


def test_config_file_and_overrides(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("tol_mono=1e-5\nsteps=2000\n# comment\n")
    code, out, _ = run(
        capsys, "--config", str(cfg), "--tol-mono", "1e-4",
        "monodromy", "--a", "0.2", "--chi", "0.3+0.2i", "--r", "0.1", "--tau", "1",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["tolerances"]["tol_mono"] == 1e-4  # flag wins over file


def test_config_rejects_bad_key(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("frobs=3\n")
    code, _, err = run(capsys, "--config", str(cfg), "lorentz", "angles")
    assert code == 2
    assert err.startswith("E:input:")


def test_config_validates_budget(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("steps=10\n")
    code, _, err = run(capsys, "--config", str(cfg), "lorentz", "angles")
    assert code == 2


def test_locus_csv_svg_deterministic(tmp_path, capsys):
    args = [
        "locus", "--r", "0.1", "--n", "12", "--a-min", "0.7", "--a-max", "0.95",
    ]
    csv1 = tmp_path / "a.csv"
    svg1 = tmp_path / "a.svg"
    code, _, _ = run(capsys, *args, "--csv", str(csv1), "--svg", str(svg1))
    assert code == 0
    csv2 = tmp_path / "b.csv"
    svg2 = tmp_path / "b.svg"
    code, _, _ = run(capsys, *args, "--csv", str(csv2), "--svg", str(svg2))
    assert code == 0
    assert csv1.read_bytes() == csv2.read_bytes()
    body1 = [l for l in svg1.read_text().splitlines() if not l.startswith("<!--")]
    body2 = [l for l in svg2.read_text().splitlines() if not l.startswith("<!--")]
    assert body1 == body2
    header = csv1.read_text().splitlines()[0]
    assert header == "a_re,a_im,x_re,x_im,y_re,y_im,z_re,z_im,eta_residual"
    assert "<svg" in svg1.read_text() and "dodecahedral point" in svg1.read_text()


def test_match_fixed_tau(capsys):
    code, out, _ = run(
        capsys, "match", "--y-target", "1.8", "--r", "0.1", "--tau", "1",
        "--bracket", "0.05,0.7",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["residuals"]["y_mismatch"] <= 1e-6
    assert payload["evaluations"] <= 60


def test_match_reports_straddle_failure(capsys):
    code, _, err = run(
        capsys, "match", "--y-target", "50", "--r", "0.1", "--tau", "1",
        "--bracket", "0.1,0.5",
    )
    assert code == 1
    assert err.startswith("E:check:")


def test_jacobian_verb(capsys):
    code, out, _ = run(
        capsys, "jacobian", "--a", "0.3", "--tau", "1", "--r", "0.1"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["rank"] == 2
