"""Tests for the blaschke-pick command line."""
import json

import pytest

from blaschke_pick.cli import (
    EXIT_FAILURE,
    EXIT_INVALID,
    EXIT_NO_TRIPLE,
    EXIT_NOT_ADMISSIBLE,
    EXIT_OK,
    build_parser,
    exit_code_for,
    main,
)
from blaschke_pick.core import CheckReport
from blaschke_pick.errors import InvalidArgument, NotAdmissible, NumericalFailure, ValidationError


@pytest.fixture
def problem(problems_dir):
    """Path of a canned problem file by stem."""

    def path(name: str) -> str:
        return str(problems_dir / f"{name}.json")

    return path


@pytest.fixture(autouse=True)
def _clean_env(monkeypatch):
    for name in ("LOGLEVEL", "BLASCHKE_PICK_DELTA_TOL", "BLASCHKE_PICK_SAMPLES", "BLASCHKE_PICK_RANK_TOL"):
        monkeypatch.delenv(name, raising=False)


class TestExitCodes:
    """Test the mapping from exceptions to exit codes."""

    def test_mapping(self):
        """Test one exception of each class."""
        assert exit_code_for(NotAdmissible("x", index=1)) == EXIT_NOT_ADMISSIBLE
        assert exit_code_for(ValidationError([])) == EXIT_INVALID
        assert exit_code_for(FileNotFoundError("x")) == EXIT_INVALID
        assert exit_code_for(NumericalFailure("x")) == EXIT_FAILURE

    def test_internal_value_errors_are_failures(self):
        """Test that only caller input maps to exit 3."""
        assert exit_code_for(InvalidArgument("bad flag")) == EXIT_INVALID
        assert exit_code_for(ValueError("matrix is not Hermitian")) == EXIT_FAILURE


class TestParser:
    """Test argument parsing."""

    def test_gamma_defaults_to_auto(self):
        """Test the --gamma default."""
        args = build_parser().parse_args(["solve", "p.json"])
        assert args.gamma == "auto"
        assert args.delta_tol is None

    def test_check_defaults(self):
        """Test the check defaults."""
        args = build_parser().parse_args(["check"])
        assert (args.count, args.seed, args.max_nodes) == (20, 0, 8)

    def test_command_required(self):
        """Test that a subcommand is required."""
        with pytest.raises(SystemExit):
            build_parser().parse_args([])


class TestSolveCommand:
    """Test ``blaschke-pick solve``."""

    def test_success(self, problem, capsys):
        """Test exit 0 and a parseable report."""
        assert main(["solve", problem("generic_6")]) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["command"] == "solve"
        assert report["winding_degree"] == 5
        assert report["certificates"]["revalidated"] is True
        assert set(report["numerator"][0]) == {"re", "im"}

    def test_byte_identical_reruns(self, problem, capsys):
        """Test that two runs print the same bytes."""
        main(["solve", problem("generic_6"), "--gamma", "3,4,5,6,7"])
        first = capsys.readouterr().out
        main(["solve", problem("generic_6"), "--gamma", "3,4,5,6,7"])
        assert capsys.readouterr().out == first

    def test_not_admissible(self, problem, capsys):
        """Test exit 2 with the failing pivot in the payload."""
        assert main(["solve", problem("fixed_point_3"), "--gamma", "1,1"]) == EXIT_NOT_ADMISSIBLE
        captured = capsys.readouterr()
        assert captured.out == ""
        assert '"error": "not_admissible"' in captured.err
        assert '"index": 2' in captured.err

    @pytest.mark.parametrize("gamma", ["1,abc", "1,-1", "1,2,3"])
    def test_invalid_gamma(self, problem, capsys, gamma):
        """Test exit 3 for malformed γ."""
        assert main(["solve", problem("fixed_point_3"), "--gamma", gamma]) == EXIT_INVALID
        assert '"error": "invalid_gamma"' in capsys.readouterr().err

    def test_invalid_problem(self, problem, capsys):
        """Test exit 3 with the violations listed."""
        assert main(["solve", problem("duplicate_nodes")]) == EXIT_INVALID
        assert '"violations"' in capsys.readouterr().err

    def test_missing_file(self, tmp_path, capsys):
        """Test exit 3 for a missing file."""
        assert main(["solve", str(tmp_path / "nope.json")]) == EXIT_INVALID
        assert "FileNotFoundError" in capsys.readouterr().err

    def test_constant(self, problem, capsys):
        """Test that the constant problem is solved with degree 0."""
        assert main(["solve", problem("constant_3")]) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["extra"] == {"constant": True}
        assert report["predicted_degree"] == 0

    def test_failed_revalidation_is_not_emitted(self, problem, capsys, mocker):
        """Test exit 1 and no report when the winding number disagrees with the degree."""
        mocker.patch("blaschke_pick.core.winding_degree", return_value=7)
        assert main(["solve", problem("fixed_point_3"), "--gamma", "2,2"]) == EXIT_FAILURE
        captured = capsys.readouterr()
        assert captured.out == ""
        assert '"error": "numerical_failure"' in captured.err
        assert '"winding_degree": 7' in captured.err
        assert '"predicted_degree": 2' in captured.err
        assert '"revalidated": false' in captured.err

    def test_summary(self, problem, capsys):
        """Test that --summary leaves stdout as pure JSON."""
        assert main(["solve", problem("fixed_point_3"), "--summary"]) == EXIT_OK
        captured = capsys.readouterr()
        json.loads(captured.out)
        assert "blaschke-pick solve" in captured.err


class TestReduceCommand:
    """Test ``blaschke-pick reduce``."""

    def test_success(self, problem, capsys):
        """Test the reduction of three fixed points."""
        assert main(["reduce", problem("fixed_point_3")]) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["predicted_degree"] == 1
        assert report["extra"]["reduction"]["triple"] == [1, 2, 3]

    @pytest.mark.parametrize("name", ["anti_oriented_3", "two_nodes"])
    def test_no_triple(self, problem, capsys, name):
        """Test exit 4 for missing orientation, including n = 2."""
        assert main(["reduce", problem(name)]) == EXIT_NO_TRIPLE
        assert '"error": "no_oriented_triple"' in capsys.readouterr().err

    def test_constant(self, problem, capsys):
        """Test exit 3 for the constant problem."""
        assert main(["reduce", problem("constant_3")]) == EXIT_INVALID
        assert '"error": "constant_problem"' in capsys.readouterr().err


class TestTraceCommand:
    """Test ``blaschke-pick trace``."""

    def test_csv(self, problem, capsys):
        """Test the header, row count and unit modulus."""
        assert main(["trace", problem("fixed_point_3"), "--samples", "32"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "theta,re_f,im_f,abs_f,arg_f"
        assert len(lines) == 33
        assert all(abs(float(line.split(",")[3]) - 1.0) < 1e-9 for line in lines[1:])

    def test_too_few_samples(self, problem, capsys):
        """Test that fewer than 16 samples is invalid input."""
        assert main(["trace", problem("fixed_point_3"), "--samples", "4"]) == EXIT_INVALID


class TestOtherCommands:
    """Test ``mindegree`` and ``check``."""

    def test_mindegree(self, problem, capsys):
        """Test q = 1 for fixed points."""
        assert main(["mindegree", problem("fixed_point_3")]) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["q"] == 1
        assert report["certified"] is True

    def test_check(self, capsys):
        """Test a short seeded self-check."""
        assert main(["check", "--count", "3", "--seed", "5", "--max-nodes", "5"]) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["passed"] is True
        assert report["count"] == 3

    def test_check_bad_count(self, capsys):
        """Test exit 3 for a non-positive count."""
        assert main(["check", "--count", "0"]) == EXIT_INVALID

    def test_check_failure_exits_nonzero(self, capsys, mocker):
        """Test exit 1 when any self-check instance fails, with the report still printed."""
        failing = CheckReport(count=1, seed=0, max_nodes=3, degree_failures=1)
        failing.failures.append({"instance": 0, "n": 3, "winding_degree": 1, "predicted_degree": 2})
        mocker.patch("blaschke_pick.cli.random_check", return_value=failing)
        assert main(["check", "--count", "1"]) == EXIT_FAILURE
        report = json.loads(capsys.readouterr().out)
        assert report["passed"] is False
        assert report["degree_failures"] == 1

    def test_bad_environment_setting(self, capsys, monkeypatch):
        """Test exit 3 when a BLASCHKE_PICK_* variable is malformed."""
        monkeypatch.setenv("BLASCHKE_PICK_SAMPLES", "many")
        assert main(["check", "--count", "1"]) == EXIT_INVALID
        assert '"error": "invalid_argument"' in capsys.readouterr().err
