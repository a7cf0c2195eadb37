"""
Command-line front end.

    python -m dedekind sum <M> <N> [--raw] [--naive] [--no-cap] [--digits D]
    python -m dedekind approx <x> <eps> [--m M] [--negate | --no-negate] [--digits D]
    python -m dedekind verify <suite> [--trials T] [--seed S] [--max-n N] [--workers W]

Global flags: --json, --log-level. Exit codes: 0 success, 1 verification
failure or internal inconsistency, 2 usage error.
"""

import argparse
import logging
import re
import sys
import time
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from pydantic import BaseModel

from dedekind.core.config import LOG_LEVELS, get_settings
from dedekind.core.exceptions import (
    ApproximationError,
    ArithmeticDomainError,
    DedekindError,
    OracleCapExceeded,
)
from dedekind.models.arguments import CoprimePair
from dedekind.schemas.records import (
    ApproxRecord,
    ErrorRecord,
    PlanRecord,
    SuiteRecord,
    SumRecord,
    VerifyRecord,
)
from dedekind.services.approximator import (
    build_plan,
    error_bound,
    evaluate_plan,
    predicted_error,
)
from dedekind.services.dedekind_core import dedekind_sum, descent_steps
from dedekind.services.exact_arith import format_rational, parse_rational, render_decimal
from dedekind.services.verification import SUITES, run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class CommandLineError(Exception):
    """An argument the parser rejected; carries the (sub)parser for its usage line."""

    def __init__(self, parser: argparse.ArgumentParser, message: str) -> None:
        super().__init__(message)
        self.parser = parser
        self.message = message


class RationalArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that reads ``-7/11`` as a negative positional, not a flag."""

    def __init__(self, *args, **kwargs) -> None:
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = re.compile(r"^-(\d+(/\d+)?|\d*\.\d+)$")

    def error(self, message: str):
        raise CommandLineError(self, message)


def _rational_arg(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ArithmeticDomainError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    """Construct the argument parser for all subcommands."""
    parser = RationalArgumentParser(
        prog="dedekind",
        description="Exact Dedekind sums and explicit rational approximation by them.",
    )
    parser.add_argument("--json", action="store_true", help="Print one JSON document instead of text.")
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=LOG_LEVELS,
        default=None,
        help="Logging level (default from settings).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sum = sub.add_parser("sum", help="Evaluate S(M, N) = 12 s(M, N).")
    p_sum.add_argument("M", type=int)
    p_sum.add_argument("N", type=int)
    p_sum.add_argument("--raw", action="store_true", help="Also print s(M, N).")
    p_sum.add_argument("--naive", action="store_true", help="Use the O(N) defining sum.")
    p_sum.add_argument("--no-cap", action="store_true", help="Lift the naive oracle cap.")
    p_sum.add_argument("--digits", type=int, default=None)

    p_approx = sub.add_parser("approx", help="Build a pair whose S-value is within eps of x.")
    p_approx.add_argument("x", type=_rational_arg)
    p_approx.add_argument("eps", type=_rational_arg)
    p_approx.add_argument("--m", type=int, default=None, help="Use this multiplier instead of the least one.")
    orientation = p_approx.add_mutually_exclusive_group()
    orientation.add_argument("--negate", dest="negate", action="store_true", default=None,
                             help="Approximate -x and report (-M, N).")
    orientation.add_argument("--no-negate", dest="negate", action="store_false")
    p_approx.set_defaults(negate=None)
    p_approx.add_argument("--digits", type=int, default=None)

    p_verify = sub.add_parser("verify", help="Run an exact-identity suite.")
    p_verify.add_argument("suite", choices=SUITES + ("all",))
    p_verify.add_argument("--trials", type=int, default=None)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--max-n", type=int, default=None, help="Exhaustive bound of the oracle suite.")
    p_verify.add_argument("--workers", type=int, default=None)

    return parser


# === Commands ===

def _digits(args: argparse.Namespace) -> int:
    digits = args.digits if args.digits is not None else get_settings().default_digits
    if digits < 0:
        raise ArithmeticDomainError(f"--digits must be >= 0, got {digits}")
    return digits


def cmd_sum(args: argparse.Namespace) -> Tuple[SumRecord, int]:
    """Evaluate S(M, N) (and s(M, N) with --raw)."""
    digits = _digits(args)
    pair = CoprimePair.from_values(args.M, args.N)
    method = "naive" if args.naive else "fast"

    started = time.perf_counter()
    s_value = dedekind_sum(pair, method=method, cap=0 if args.no_cap else None)
    elapsed_ms = (time.perf_counter() - started) * 1000
    big = 12 * s_value

    record = SumRecord(
        M=str(pair.m),
        N=str(pair.n),
        method=method,
        S=format_rational(big),
        S_decimal_truncated=render_decimal(big, digits),
        descent_steps=descent_steps(pair),
        elapsed_ms=round(elapsed_ms, 3),
    )
    if args.raw:
        record.s = format_rational(s_value)
        record.s_decimal_truncated = render_decimal(s_value, digits)
    return record, EXIT_OK


def cmd_approx(args: argparse.Namespace) -> Tuple[ApproxRecord, int]:
    """Build, evaluate and check an approximation plan."""
    digits = _digits(args)
    started = time.perf_counter()
    plan = build_plan(args.x, args.eps, m=args.m, negate=args.negate)
    evaluation = evaluate_plan(plan)
    elapsed_ms = (time.perf_counter() - started) * 1000

    dec = plan.decomposition
    holds = abs(evaluation.error) < plan.epsilon
    record = ApproxRecord(
        target=format_rational(plan.target),
        epsilon=format_rational(plan.epsilon),
        plan=PlanRecord(
            j=str(dec.j),
            k=str(dec.k),
            l=str(dec.l),
            m=str(plan.m),
            n=str(plan.n),
            t=str(plan.t),
            M=str(plan.M),
            N=str(plan.N),
            negated=plan.negated,
            pair=[str(plan.pair.m), str(plan.pair.n)],
            N_bit_length=plan.N.bit_length(),
        ),
        S=format_rational(evaluation.value),
        S_decimal_truncated=render_decimal(evaluation.value, digits),
        error=format_rational(evaluation.error),
        error_decimal_truncated=render_decimal(evaluation.error, digits),
        predicted_error=format_rational(predicted_error(plan)),
        error_bound=format_rational(error_bound(plan)),
        verdict="PASS" if holds else "FAIL",
        elapsed_ms=round(elapsed_ms, 3),
    )
    return record, EXIT_OK if holds else EXIT_FAILURE


def cmd_verify(args: argparse.Namespace) -> Tuple[VerifyRecord, int]:
    """Run the named suite(s) and summarise pass/fail counts."""
    if args.trials is not None and args.trials < 0:
        raise ArithmeticDomainError(f"--trials must be >= 0, got {args.trials}")
    reports = run_suite(
        args.suite,
        trials=args.trials,
        seed=args.seed,
        max_n=args.max_n,
        workers=args.workers,
    )
    suites = [
        SuiteRecord(
            suite=r.name,
            trials=r.trials,
            passed=r.passed,
            failed=r.failed,
            failures=r.failures,
            elapsed_ms=round(r.elapsed_ms, 3),
        )
        for r in reports
    ]
    ok = all(r.ok for r in reports)
    record = VerifyRecord(seed=args.seed, suites=suites, verdict="PASS" if ok else "FAIL")
    return record, EXIT_OK if ok else EXIT_FAILURE


COMMANDS = {"sum": cmd_sum, "approx": cmd_approx, "verify": cmd_verify}


# === Rendering ===

def render_text(record: BaseModel) -> str:
    """Human-readable rendering of a command record."""
    if isinstance(record, SumRecord):
        lines = [f"S = {record.S} ≈ {record.S_decimal_truncated}"]
        if record.s is not None:
            lines.append(f"s = {record.s} ≈ {record.s_decimal_truncated}")
        lines.append(f"method = {record.method}, descent steps = {record.descent_steps}, "
                     f"time = {record.elapsed_ms} ms")
        return "\n".join(lines)

    if isinstance(record, ApproxRecord):
        p = record.plan
        lines = [
            f"target   = {record.target}",
            f"epsilon  = {record.epsilon}",
            f"plan     : j={p.j} k={p.k} l={p.l} m={p.m} n={p.n} t={p.t}",
            f"           M={p.M} N={p.N} negated={p.negated} (N has {p.N_bit_length} bits)",
            f"pair     = ({p.pair[0]}, {p.pair[1]})",
            f"S        = {record.S} ≈ {record.S_decimal_truncated}",
            f"error    = {record.error} ≈ {record.error_decimal_truncated}",
            f"E bound  = {record.error_bound}",
            f"verdict  : |error| < epsilon {record.verdict}",
        ]
        if p.negated:
            lines.append("note     : negated plan, error lies in (-epsilon, 0)")
        return "\n".join(lines)

    if isinstance(record, VerifyRecord):
        lines = []
        for suite in record.suites:
            status = "ok" if suite.failed == 0 else "FAILED"
            lines.append(f"{suite.suite:<18} {suite.passed}/{suite.trials} exact  {status}")
            lines.extend(f"    {failure}" for failure in suite.failures)
        lines.append(f"verdict: {record.verdict}")
        return "\n".join(lines)

    if isinstance(record, ErrorRecord):
        return f"error: {record.message}"

    return record.model_dump_json(indent=2)


def _emit(record: BaseModel, as_json: bool, stream=None) -> None:
    stream = stream or sys.stdout
    print(record.model_dump_json(indent=2) if as_json else render_text(record), file=stream)


def _fail(command: str, exc: Exception, code: int, as_json: bool) -> int:
    record = ErrorRecord(command=command, error=type(exc).__name__, message=str(exc), exit_code=code)
    _emit(record, as_json, sys.stdout if as_json else sys.stderr)
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    """CLI entry point; returns the process exit code."""
    argv = list(sys.argv[1:] if argv is None else argv)
    as_json = "--json" in argv
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except CommandLineError as exc:
        command = next((a for a in argv if a in COMMANDS), parser.prog)
        if as_json:
            return _fail(command, exc, EXIT_USAGE, as_json=True)
        exc.parser.print_usage(sys.stderr)
        print(f"{exc.parser.prog}: error: {exc.message}", file=sys.stderr)
        return EXIT_USAGE

    try:
        settings = get_settings()
        logging.basicConfig(
            level=args.log_level or settings.log_level,
            format="%(asctime)s %(levelname)s %(name)s: %(message)s",
            stream=sys.stderr,
        )
        record, code = COMMANDS[args.command](args)
    except (ArithmeticDomainError, ApproximationError, OracleCapExceeded, ValueError) as exc:
        return _fail(args.command, exc, EXIT_USAGE, args.json)
    except DedekindError as exc:
        logger.error("internal inconsistency: %s", exc)
        return _fail(args.command, exc, EXIT_FAILURE, args.json)

    _emit(record, args.json)
    return code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
