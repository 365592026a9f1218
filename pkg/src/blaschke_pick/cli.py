"""
Command-line front end for blaschke-pick.

    blaschke-pick solve problem.json --gamma 2,2
    blaschke-pick reduce problem.json
    blaschke-pick trace problem.json --gamma auto --samples 256
    blaschke-pick mindegree problem.json
    blaschke-pick check --count 50 --seed 7

Reports go to stdout as JSON (CSV for ``trace``); errors go to stderr as a
JSON payload. Exit codes: 0 success, 2 not admissible, 3 invalid input,
4 no oriented triple, 1 any other failure.
"""
from __future__ import annotations

import argparse
import logging
import sys
from typing import Callable, Dict, List, Optional

from rich.console import Console
from rich.logging import RichHandler

from . import __version__
from .core import SolveConfig, mindegree, random_check, reduce_degree, solve, trace
from .errors import (
    BlaschkePickError,
    ConstantProblem,
    InvalidArgument,
    InvalidGamma,
    NoOrientedTriple,
    NotAdmissible,
    ValidationError,
)
from .report import format_error, format_json, format_trace_csv, summary_table
from .settings import Settings

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_NOT_ADMISSIBLE = 2
EXIT_INVALID = 3
EXIT_NO_TRIPLE = 4


def exit_code_for(error: Exception) -> int:
    """Map an exception to the frozen exit-code contract."""
    if isinstance(error, NotAdmissible):
        return EXIT_NOT_ADMISSIBLE
    if isinstance(error, NoOrientedTriple):
        return EXIT_NO_TRIPLE
    if isinstance(error, (ValidationError, InvalidGamma, InvalidArgument, ConstantProblem, FileNotFoundError)):
        return EXIT_INVALID
    return EXIT_FAILURE


def configure_logging(verbose: bool, settings: Settings) -> None:
    """RichHandler on stderr; --verbose wins over LOGLEVEL."""
    level = logging.DEBUG if verbose else settings.log_level
    logging.basicConfig(
        level=level,
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


# ------------------------------------------------------------------ #
# Parser
# ------------------------------------------------------------------ #
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blaschke-pick",
        description="Boundary interpolation by finite Blaschke products",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--verbose", "-v", action="store_true", help="Log at DEBUG level")
    common.add_argument("--summary", action="store_true", help="Print a summary table to stderr")
    common.add_argument("--delta-tol", type=float, default=None, help="Threshold for zero entries of delta")

    problem = argparse.ArgumentParser(add_help=False)
    problem.add_argument("problem", help="Path to a problem file (.json)")

    gamma = argparse.ArgumentParser(add_help=False)
    gamma.add_argument(
        "--gamma",
        default="auto",
        help="Comma-separated gamma_1..gamma_{n-1}, or 'auto' (default)",
    )

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("solve", parents=[common, problem, gamma], help="Interpolant for a given gamma")
    sub.add_parser("reduce", parents=[common, problem], help="Interpolant of degree at most n - 2")
    trace_parser = sub.add_parser("trace", parents=[common, problem, gamma], help="Circle trace as CSV")
    trace_parser.add_argument("--samples", type=int, default=None, help="Number of samples (default 1024)")
    sub.add_parser("mindegree", parents=[common, problem], help="Degree lower bound and candidate")
    check = sub.add_parser("check", parents=[common], help="Seeded randomized self-check")
    check.add_argument("--count", type=int, default=20, help="Number of random problems")
    check.add_argument("--seed", type=int, default=0, help="Random seed")
    check.add_argument("--max-nodes", type=int, default=8, help="Largest number of nodes")
    return parser


# ------------------------------------------------------------------ #
# Commands
# ------------------------------------------------------------------ #
def _config(args: argparse.Namespace, settings: Settings) -> SolveConfig:
    return SolveConfig(problem=args.problem, gamma=getattr(args, "gamma", None), settings=settings)


def cmd_solve(args: argparse.Namespace, settings: Settings) -> Dict:
    return solve(_config(args, settings)).to_dict()


def cmd_reduce(args: argparse.Namespace, settings: Settings) -> Dict:
    return reduce_degree(_config(args, settings)).to_dict()


def cmd_mindegree(args: argparse.Namespace, settings: Settings) -> Dict:
    return mindegree(_config(args, settings)).to_dict()


def cmd_trace(args: argparse.Namespace, settings: Settings) -> str:
    return format_trace_csv(trace(_config(args, settings), settings.samples))


def cmd_check(args: argparse.Namespace, settings: Settings) -> Dict:
    return random_check(args.count, args.seed, args.max_nodes, settings).to_dict()


COMMANDS: Dict[str, Callable[[argparse.Namespace, Settings], Dict]] = {
    "solve": cmd_solve,
    "reduce": cmd_reduce,
    "mindegree": cmd_mindegree,
    "check": cmd_check,
}


def run(args: argparse.Namespace, stdout=None) -> int:
    """Execute a parsed command, writing the report to ``stdout``."""
    stdout = stdout or sys.stdout
    settings = Settings.from_env().override(
        delta_tol=args.delta_tol, samples=getattr(args, "samples", None)
    )
    configure_logging(args.verbose, settings)

    if args.command == "trace":
        stdout.write(cmd_trace(args, settings))
        return EXIT_OK

    report = COMMANDS[args.command](args, settings)
    stdout.write(format_json(report) + "\n")
    if args.summary:
        Console(stderr=True).print(summary_table(report, title=f"blaschke-pick {args.command}"))
    if report.get("passed") is False:
        logger.error("self-check failed on %d instances", len(report["failures"]))
        return EXIT_FAILURE
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point of the ``blaschke-pick`` console script."""
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except (BlaschkePickError, FileNotFoundError, ValueError) as e:
        logger.debug("command %s failed", args.command, exc_info=True)
        sys.stderr.write(format_error(e) + "\n")
        return exit_code_for(e)


if __name__ == "__main__":
    sys.exit(main())
