import subprocess
import sys

import pytest

from branecalc.cli import ParseError, main, parse_model, print_model

S3 = "algebra S3\ngen x 3\n"
S4 = "algebra S4\ngen x 4\ngen y 7\nd y = x^2\n"


@pytest.fixture
def s3_file(tmp_path):
    p = tmp_path / "s3.model"
    p.write_text(S3)
    return str(p)


@pytest.fixture
def s4_file(tmp_path):
    p = tmp_path / "s4.model"
    p.write_text(S4)
    return str(p)


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


# ---------------------------------------------------------------------------
# parser


def test_parse_round_trip_is_identity():
    for text in (S3, S4, "gen a 2\ngen b 5\nd b = 1/2*a^3\ninfo m = 5\n"):
        canonical = print_model(parse_model(text))
        assert print_model(parse_model(canonical)) == canonical


def test_parse_reports_line_and_column():
    with pytest.raises(ParseError) as exc:
        parse_model("gen x 3\ngen x 4\n")
    assert "line 2" in str(exc.value)


def test_parse_rejects_undeclared_generator():
    with pytest.raises(ParseError):
        parse_model("gen x 4\nd x = z^2\n")


def test_parse_rejects_inhomogeneous_differential():
    with pytest.raises(ParseError) as exc:
        parse_model("gen x 4\ngen y 7\nd y = x^2 + x\n")
    assert "homogeneous" in str(exc.value)


def test_parse_rejects_wrong_degree_differential():
    with pytest.raises(ParseError):
        parse_model("gen x 4\ngen y 7\nd y = x\n")


def test_parse_accepts_comments_and_rationals():
    mf = parse_model("# a comment\ngen a 2\ngen b 5  # trailing\nd b = 1/3*a^3\n")
    assert mf.gens == [("a", 2), ("b", 5)]


def test_parse_negative_info_value():
    mf = parse_model("gen x 3\ninfo mbar = -1\n")
    assert mf.info == {"mbar": -1}


# ---------------------------------------------------------------------------
# commands and exit codes


def test_check_dga_ok(s4_file, capsys):
    code, out, _ = run(["check-dga", s4_file], capsys)
    assert code == 0 and "OK" in out


def test_check_dga_fails_with_witness(tmp_path, capsys):
    p = tmp_path / "bad.model"
    p.write_text("gen a 1\ngen b 2\nd a = b\nd b = a*b\n")
    code, out, _ = run(["check-dga", str(p)], capsys)
    assert code == 1
    assert "FAIL" in out and "a" in out


def test_parse_errors_exit_2(tmp_path, capsys):
    p = tmp_path / "bad.model"
    p.write_text("gen x 4\nd x = q\n")
    code, _, err = run(["check-dga", str(p)], capsys)
    assert code == 2 and "error:" in err


def test_missing_file_exits_2(capsys):
    code, _, err = run(["check-dga", "/nonexistent.model"], capsys)
    assert code == 2 and "error:" in err


def test_cohomology_table(s4_file, capsys):
    code, out, _ = run(
        ["cohomology", s4_file, "--max-degree", "8", "--format", "tsv"], capsys
    )
    assert code == 0
    rows = [line.split("\t") for line in out.strip().splitlines()]
    assert rows[0] == ["degree", "dim", "representatives"]
    assert rows[1] == ["0", "1", "1"]
    assert rows[5] == ["4", "1", "x"]
    assert rows[9][:2] == ["8", "0"]


def test_sphere_model_emission(s3_file, capsys):
    code, out, _ = run(
        ["sphere-model", s3_file, "--k", "2", "--format", "tsv"], capsys
    )
    assert code == 0
    assert "s1_x\t2\t0" in out


def test_path_model_emission(s4_file, capsys):
    code, out, _ = run(["path-model", s4_file, "--format", "tsv"], capsys)
    assert code == 0
    assert "s1_x\t3\t-x@L + x@R" in out


def test_brane_product_tsv_is_byte_identical(s3_file, capsys):
    argv = ["brane-product", s3_file, "--max-degree", "6", "--format", "tsv"]
    _, first, _ = run(argv, capsys)
    _, second, _ = run(argv, capsys)
    assert first == second
    assert "0\t1\t1\tx\t1" in first


def test_brane_coproduct_values(s3_file, capsys):
    code, out, _ = run(
        ["brane-coproduct", s3_file, "--max-degree", "6", "--format", "tsv"],
        capsys,
    )
    assert code == 0
    assert "1\ts2_x\t1\t1\t-1" in out
    assert "1\t1\ts2_x\t1\t1" in out


def test_brane_coproduct_rejects_other_codimensions(s3_file, capsys):
    code, _, err = run(
        ["brane-coproduct", s3_file, "--k", "3", "--max-degree", "6"], capsys
    )
    assert code == 2 and "error:" in err


def test_verify_suites_pass(s3_file, s4_file, capsys):
    for argv in (
        ["verify", s3_file, "--suite", "golden"],
        ["verify", s3_file, "--suite", "comm"],
        ["verify", s3_file, "--suite", "signs"],
        ["verify", s4_file, "--suite", "vanishing", "--max-degree", "10"],
    ):
        code, out, _ = run(argv, capsys)
        assert code == 0, argv
        assert "PASS" in out and "FAIL" not in out


def test_verify_suite_fails_on_wrong_model(s3_file, capsys):
    # the vanishing suite needs an even generator: S³ is rejected as a usage error
    code, _, err = run(["verify", s3_file, "--suite", "vanishing"], capsys)
    assert code == 2 and "error:" in err


def test_console_script_runs(s3_file):
    proc = subprocess.run(
        [sys.executable, "-m", "branecalc.cli", "check-dga", s3_file],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "OK" in proc.stdout


def test_usage_error_exits_2():
    proc = subprocess.run(
        [sys.executable, "-m", "branecalc.cli", "bogus-command"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2
