"""Golden-file and exit-code tests for the command line"""

from fractions import Fraction

import pytest

from cli.app import build_parser, main
from cli.commands import COMMANDS
from engine.capacity import ViolationKind, ViolationReport, check_submodular_exhaustive
from engine.choquet import PointFunction
from utils.file_formats import parse_capacity_text, read_capacity_file
from utils.sqlite_logger import SQLiteLogger


def run(capsys, *argv):
    status = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return status, captured.out, captured.err


# check

@pytest.mark.parametrize("fixture,status", [("cap_sub", 0), ("cap_add", 0), ("cap_bad", 1)])
def test_check_golden(capsys, data_dir, golden, fixture, status):
    code, out, _ = run(capsys, "check", data_dir / f"{fixture}.txt")
    assert code == status
    assert out == golden(f"check_{fixture}.txt")


def test_check_machine_format(capsys, data_dir, golden):
    code, out, _ = run(capsys, "--format", "machine", "check", data_dir / "cap_bad.txt")
    assert code == 1
    assert out == golden("check_cap_bad_machine.txt")


def test_flags_after_the_verb(capsys, data_dir):
    code, out, _ = run(capsys, "check", data_dir / "cap_sub.txt", "--format", "machine")
    assert code == 0
    assert out == "verdict=submodular\n"


def test_quiet_prints_nothing(capsys, data_dir):
    code, out, _ = run(capsys, "check", "--quiet", data_dir / "cap_bad.txt")
    assert code == 1
    assert out == ""


def test_malformed_capacity_exits_2_with_line(capsys, data_dir):
    code, out, err = run(capsys, "check", data_dir / "cap_missing_mask.txt")
    assert code == 2
    assert out == ""
    assert "cap_missing_mask.txt:4" in err
    assert "missing key 1" in err


@pytest.mark.parametrize("body,line", [
    ("capacity v1\nn ²\n", 2),
    ("capacity v1\nn 1\n0 0\n¹ 1\n", 4),
])
def test_non_ascii_digits_exit_2(capsys, write_file, body, line):
    path = write_file("cap.txt", body)
    code, out, err = run(capsys, "check", path)
    assert code == 2
    assert out == ""
    assert f"cap.txt:{line}" in err


def test_missing_file_exits_2(capsys, tmp_path):
    code, _, err = run(capsys, "check", tmp_path / "nowhere.txt")
    assert code == 2
    assert err.startswith("error: ")


# integrate

@pytest.mark.parametrize("fixture,function", [
    ("cap_sub", "x_21.txt"),
    ("cap_add", "x_third.txt"),
    ("cap_bad", "x_21.txt"),
])
def test_integrate_golden(capsys, data_dir, golden, fixture, function):
    code, out, _ = run(capsys, "integrate", data_dir / f"{fixture}.txt", data_dir / function)
    assert code == 0
    assert out == golden(f"integrate_{fixture}.txt")


@pytest.mark.parametrize("method", ["layer", "sorted", "both"])
def test_integrate_methods_agree(capsys, data_dir, method):
    code, out, _ = run(capsys, "integrate", "--method", method,
                       data_dir / "cap_sub.txt", data_dir / "x_21.txt")
    assert (code, out) == (0, "17/10\n")


def test_integrate_zero_function(capsys, data_dir):
    code, out, _ = run(capsys, "integrate", data_dir / "cap_bad.txt", data_dir / "zero.txt")
    assert (code, out) == (0, "0\n")


def test_integrate_dimension_mismatch_exits_2(capsys, data_dir):
    code, _, err = run(capsys, "integrate", data_dir / "cap_sub.txt", data_dir / "x_n3.txt")
    assert code == 2
    assert "dimension" in err


def test_integrate_cross_check_failure_exits_3(capsys, data_dir, mocker):
    mocker.patch("cli.commands.integrate.choquet_sorted", return_value=Fraction(0))
    code, out, err = run(capsys, "integrate", data_dir / "cap_sub.txt", data_dir / "x_21.txt")
    assert code == 3
    assert out == ""
    assert "cross-check" in err


# prove

@pytest.mark.parametrize("fixture", ["cap_sub", "cap_add"])
def test_prove_golden(capsys, data_dir, golden, fixture):
    code, out, _ = run(capsys, "prove", data_dir / f"{fixture}.txt",
                       data_dir / "x_10.txt", data_dir / "y_01.txt")
    assert code == 0
    assert out == golden(f"prove_{fixture}.txt")


def test_prove_non_submodular_prints_counterexample(capsys, data_dir, golden):
    code, out, _ = run(capsys, "prove", data_dir / "cap_bad.txt",
                       data_dir / "x_21.txt", data_dir / "zero.txt")
    assert code == 1
    assert out == golden("prove_cap_bad.txt")


def test_prove_zero_functions(capsys, data_dir, golden):
    code, out, _ = run(capsys, "prove", data_dir / "cap_sub.txt",
                       data_dir / "zero.txt", data_dir / "zero.txt")
    assert code == 0
    assert out == golden("prove_zero.txt")


def test_prove_rational_functions(capsys, data_dir):
    code, out, _ = run(capsys, "prove", data_dir / "cap_sub.txt",
                       data_dir / "x_rational.txt", data_dir / "x_third.txt")
    assert code == 0
    assert out.splitlines()[-2].startswith("subadditivity: ")
    assert out.splitlines()[-1].startswith("final: ")


def test_prove_machine_format(capsys, data_dir):
    code, out, _ = run(capsys, "--format", "machine", "prove", data_dir / "cap_sub.txt",
                       data_dir / "x_10.txt", data_dir / "y_01.txt")
    assert code == 0
    assert out == "valid=true\ndepth=0\nsteps=1\nfinal_lhs=1\nfinal_rhs=7/5\n"


# lemma

def test_lemma_k2_window(capsys, golden):
    code, out, _ = run(capsys, "lemma", "--k", 2, "--bound", 7)
    assert code == 0
    assert out == golden("lemma_k2_b7.txt")


def test_lemma_small_window(capsys, golden):
    code, out, _ = run(capsys, "lemma", "--k", 0, "--bound", 3)
    assert code == 0
    assert out == golden("lemma_k0_b3.txt")


def test_lemma_default_bound(capsys):
    code, out, _ = run(capsys, "lemma", "--k", 1)
    assert code == 0
    # bound 2k+3 = 5 gives six grid rows plus the verdict
    assert len(out.splitlines()) == 7


def test_lemma_window_too_small_exits_2(capsys):
    code, out, err = run(capsys, "lemma", "--k", 3, "--bound", 4)
    assert code == 2
    assert out == ""
    assert "2k+2" in err


def test_lemma_machine_format(capsys):
    code, out, _ = run(capsys, "--format", "machine", "lemma", "--k", 0, "--bound", 3)
    assert code == 0
    assert out.splitlines()[-1] == "verdict=ok"


# scan

def test_scan_golden(capsys, golden):
    code, out, _ = run(capsys, "scan", "--n", 1, "--count", 4, "--seed", 1)
    assert code == 0
    assert out == golden("scan_n1.txt")


def test_scan_n2(capsys):
    code, out, _ = run(capsys, "scan", "--n", 2, "--count", 30, "--max-value", 3, "--seed", 11)
    assert code == 0
    assert "verdict: ok" in out


def test_scan_over_budget_exits_2(capsys):
    code, out, err = run(capsys, "scan", "--n", 6, "--count", 10, "--max-value", 5)
    assert code == 2
    assert out == ""
    assert "budget" in err


def test_scan_large_n_is_refused_even_when_sampling(capsys):
    code, out, err = run(capsys, "scan", "--n", 12, "--count", 1, "--sample")
    assert code == 2
    assert out == ""
    assert "submodularity" in err


def test_scan_disagreement_exits_3(capsys, mocker):
    bogus = ViolationReport(ViolationKind.SUBADDITIVITY,
                            (PointFunction.of([1]), PointFunction.of([1])), Fraction(2), Fraction(1))
    mocker.patch("engine.verifier.exhaustive_subadditivity", return_value=bogus)
    code, out, _ = run(capsys, "scan", "--n", 1, "--count", 2, "--seed", 3)
    assert code == 3
    assert "verdict: DISAGREEMENT" in out
    assert "[disagreement 0]" in out
    assert "function v1" in out


def test_scan_csv_and_history(capsys, tmp_path):
    csv_path = tmp_path / "records.csv"
    db_path = tmp_path / "history.db"
    code, _, _ = run(capsys, "--history", db_path, "scan", "--n", 1, "--count", 3,
                     "--csv", csv_path)
    assert code == 0
    assert csv_path.read_text(encoding="utf-8").startswith("index,generator,seed")

    history = SQLiteLogger(str(db_path))
    rows = history.get_history()
    assert len(rows) == 1
    details = history.get_scan_details(rows[0][0])
    assert details['capacities_tested'] == 3


# generate

def test_generate_forced_capacity(capsys, golden):
    code, out, _ = run(capsys, "generate", "--n", 1, "--kind", "monotone")
    assert code == 0
    assert out == golden("generate_n1_monotone.txt")


def test_generate_then_check(capsys, tmp_path):
    out_path = tmp_path / "gen.txt"
    code, _, _ = run(capsys, "generate", "--n", 3, "--kind", "submodular", "--seed", 5, "--out", out_path)
    assert code == 0
    assert check_submodular_exhaustive(read_capacity_file(str(out_path))) is None

    code, out, _ = run(capsys, "check", out_path)
    assert (code, out) == (0, "submodular\n")


def test_generate_is_byte_identical(capsys, tmp_path):
    first, second = tmp_path / "a.txt", tmp_path / "b.txt"
    for path in (first, second):
        assert run(capsys, "generate", "--n", 3, "--seed", 9, "--out", path)[0] == 0
    assert first.read_bytes() == second.read_bytes()
    text = first.read_text(encoding="utf-8")
    assert parse_capacity_text(text) is not None


# argument handling

def test_unknown_verb_exits_2(capsys):
    code, _, _ = run(capsys, "frobnicate")
    assert code == 2


def test_missing_verb_exits_2(capsys):
    code, _, _ = run(capsys)
    assert code == 2


def test_help_exits_0(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0
    assert "scan" in out


def test_parser_defaults():
    args = build_parser().parse_args(["scan", "--n", "2"])
    assert (args.count, args.max_value, args.seed) == (100, 3, 0)
    assert args.format == "text" and args.quiet is False


def test_command_metrics(capsys):
    command = COMMANDS["lemma"]()
    assert command.execute(build_parser().parse_args(["lemma", "--k", "0", "--bound", "3"])) == 0
    assert command.execute(build_parser().parse_args(["lemma", "--k", "2", "--bound", "3"])) == 2
    metrics = command.get_metrics()
    assert metrics['command'] == "lemma"
    assert (metrics['total_runs'], metrics['successful_runs'], metrics['failed_runs']) == (2, 1, 1)
    assert metrics['average_response_time'] >= 0


def test_scan_workers_help_notes_determinism(capsys):
    code, out, _ = run(capsys, "scan", "--help")
    assert code == 0
    assert "GIL" in out
