import json

import pytest

from kummer_lcd import parse_divisor, parse_function, builtin_curve
from kummer_lcd.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


def test_curve_info(capsys):
    report = run_json(capsys, "curve", "info", "--curve", "hermitian-q2")
    assert report["results"] == {
        "label": "hermitian-q2", "r": 2, "m": 3, "genus": 1,
        "num_rational_points": 9, "deg_standard_D": 6,
    }


def test_curve_info_from_spec_file(capsys, tmp_path):
    path = tmp_path / "spec.json"
    path.write_text(json.dumps({
        "p": 2, "k": 4, "modulus": [1, 1, 0, 0, 1], "m": 5,
        "alphas": [[0, 0, 0, 0], [1, 0, 0, 0]], "label": "gf16-quotient"}))
    report = run_json(capsys, "curve", "info", "--curve", str(path))
    assert report["results"]["genus"] == 2
    assert report["results"]["num_rational_points"] == 33


def test_spec_dir_env(capsys, tmp_path, monkeypatch):
    path = tmp_path / "mycurve.json"
    path.write_text(json.dumps({
        "p": 2, "k": 2, "modulus": [1, 1, 1], "m": 3,
        "alphas": [[0, 0], [1, 0]], "label": "env-curve"}))
    monkeypatch.setenv("KUMMER_LCD_SPEC_DIR", str(tmp_path))
    report = run_json(capsys, "curve", "info", "--curve", "mycurve.json")
    assert report["results"]["label"] == "env-curve"


def test_curve_points_roundtrip(capsys):
    curve = builtin_curve("hermitian-q2")
    report = run_json(capsys, "curve", "points", "--curve", "hermitian-q2")
    labels = report["results"]["points"]
    assert len(labels) == 9
    from kummer_lcd import parse_place
    assert [parse_place(curve, s) for s in labels] == list(curve.rational_points())


def test_rr_basis_roundtrip(capsys):
    curve = builtin_curve("hermitian-q2")
    report = run_json(capsys, "rr", "basis", "--curve", "hermitian-q2",
                      "--divisor", "3*Pinf+1*P1")
    assert report["results"]["dimension"] == 4
    for text in report["results"]["basis"]:
        parse_function(curve, text)
    assert parse_divisor(curve, report["inputs"]["divisor"]) == \
        parse_divisor(curve, "3*Pinf+1*P1")


def test_semigroup_outputs(capsys):
    report = run_json(capsys, "semigroup", "gaps", "--curve", "hermitian-q3")
    assert report["results"]["gaps"] == [1, 2, 5]
    report = run_json(capsys, "semigroup", "gamma", "--curve", "hermitian-q3",
                      "--tuple", "1,2")
    assert report["results"]["gamma"] == [[1, 5], [2, 2], [5, 1]]


def test_nonspecial_commands(capsys):
    report = run_json(capsys, "nonspecial", "--curve", "hermitian-q3",
                      "--degree", "g")
    assert report["results"]["divisor"] == "1*P1+2*P2"
    assert report["results"]["ell"] == 1
    report = run_json(capsys, "nonspecial", "--curve", "hermitian-q3",
                      "--degree", "g-1", "--minus", "P3")
    assert report["results"]["divisor"] == "1*P1+2*P2-1*P3"
    assert report["results"]["ell"] == 0


def test_code_build_and_matrix_csv(capsys, tmp_path):
    out = tmp_path / "gen.csv"
    report = run_json(capsys, "code", "build", "--curve", "hermitian-q2",
                      "--G", "3*Pinf+1*P1", "--out", str(out))
    assert report["results"]["n"] == 6 and report["results"]["k"] == 4
    assert report["results"]["lcd"] is True
    lines = out.read_text().strip().splitlines()
    assert len(lines) == 5
    header = lines[0].split(",", 1)[1]
    assert header.count("[") == 12  # six (a,b) column labels
    # entries re-parse to field elements
    from kummer_lcd import parse_element
    curve = builtin_curve("hermitian-q2")
    cell = lines[1].split('","')[1].strip('"')
    parse_element(curve.field, cell)


def test_code_dual_hull_mindist(capsys):
    report = run_json(capsys, "code", "dual", "--curve", "hermitian-q2",
                      "--G", "3*Pinf+1*P1")
    assert report["results"]["k"] == 2
    report = run_json(capsys, "code", "hull", "--curve", "hermitian-q2",
                      "--G", "3*Pinf+1*P1")
    assert report["results"]["hull_dim"] == 0 and report["results"]["lcd"]
    report = run_json(capsys, "code", "mindist", "--curve", "hermitian-q2",
                      "--G", "3*Pinf+1*P1")
    assert report["results"]["d"] == 2 and report["results"]["exact"]


def test_lcd_check_constructions(capsys):
    report = run_json(capsys, "code", "lcd-check", "--construction", "hermitian",
                      "--q", "2")
    assert all(check["pass"] for check in report["checks"])
    assert len(report["results"]["runs"]) == 2
    report = run_json(capsys, "code", "lcd-check", "--construction", "curve1",
                      "--q", "4")
    run = report["results"]["runs"][0]
    assert run["k"] == 16 and run["certificate"]["lcd"]


def test_lcd_check_maxcur_explicit_divisor(capsys):
    report = run_json(capsys, "code", "lcd-check", "--construction", "maxcur",
                      "--curve", "hermitian-q2", "--G", "3*Pinf+1*P1")
    cert = report["results"]["runs"][0]["certificate"]
    assert cert["family"] == "maximal" and cert["lcd"]
    assert cert["H"] == "1*P1+2*P2-1*Pinf"
    # a failing hypothesis exits nonzero and flags the window
    code, out, _ = run_cli(capsys, "code", "lcd-check", "--construction",
                           "maxcur", "--curve", "hermitian-q2", "--G", "5*P1+1*P2")
    assert code == 1
    cert = json.loads(out)["results"]["runs"][0]["certificate"]
    assert cert["checks"]["degree_window"] is False


def test_verify_paper_examples(capsys):
    report = run_json(capsys, "verify", "paper-examples", "--which", "hermitian-q2")
    assert report["results"]["failed"] == 0
    assert any("matrix-G-entries" in c["name"] for c in report["checks"])


def test_exit_codes(capsys):
    code, _, err = run_cli(capsys, "rr", "basis", "--curve", "hermitian-q2",
                           "--divisor", "junk")
    assert code == 2 and "parse error" in err
    code, _, err = run_cli(capsys, "code", "build", "--curve", "hermitian-q2",
                           "--G", "7*Pinf")
    assert code == 1 and "precondition" in err
    code, _, err = run_cli(capsys, "curve", "info", "--curve", "missing.json")
    assert code == 2


def test_json_output_is_deterministic(capsys):
    first = run_cli(capsys, "curve", "info", "--curve", "hermitian-q3")[1]
    second = run_cli(capsys, "curve", "info", "--curve", "hermitian-q3")[1]
    assert first == second


def test_pretty_output(capsys):
    code, out, _ = run_cli(capsys, "curve", "info", "--curve", "hermitian-q2",
                           "--pretty")
    assert code == 0 and "genus: 1" in out
