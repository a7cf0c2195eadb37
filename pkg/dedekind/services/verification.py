"""
Randomised and exhaustive exact-identity suites.

Every trial draws from its own ``random.Random`` seeded by
(suite, seed, trial index), so a suite's verdicts do not depend on how trials
are spread over worker threads. Results are collected in trial order.
"""

import logging
import math
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from dedekind.core.config import get_settings
from dedekind.core.exceptions import DedekindError
from dedekind.models.arguments import CoprimePair
from dedekind.services.approximator import build_plan, evaluate_plan, predicted_error
from dedekind.services.dedekind_core import big_s, dedekind_sum_fast, dedekind_sum_naive
from dedekind.services.exact_arith import mod_inverse
from dedekind.services.identities import (
    theorem2_value,
    three_term_check,
    three_term_rhs,
)

logger = logging.getLogger(__name__)

SUITES = ("oracle", "theorem2", "three-term", "properties", "sweep")

DEFAULT_TRIALS: Dict[str, int] = {
    "oracle": 500,
    "theorem2": 200,
    "three-term": 1000,
    "properties": 1000,
    "sweep": 500,
}

MAX_REPORTED_FAILURES = 10

# A trial returns None on success or a short failure description.
Trial = Callable[[random.Random], Optional[str]]


@dataclass
class SuiteReport:
    """Outcome of one suite."""

    name: str
    trials: int
    passed: int = 0
    failed: int = 0
    failures: List[str] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failed == 0


# === Random generators ===

def trial_rng(suite: str, seed: int, index: int) -> random.Random:
    """Deterministic per-trial generator."""
    return random.Random(f"{suite}:{seed}:{index}")


def log_uniform_int(rng: random.Random, high: int, low: int = 1) -> int:
    """Integer in [low, high] whose bit length is uniform."""
    bits = rng.randint(low.bit_length(), high.bit_length())
    return rng.randint(max(low, 1 << (bits - 1)), min(high, (1 << bits) - 1))


def random_coprime(rng: random.Random, n: int, low: int = 1, high: Optional[int] = None) -> int:
    """Uniform m in [low, high] (default [1, n]) with gcd(m, n) = 1."""
    high = n if high is None else high
    while True:
        m = rng.randint(low, high)
        if math.gcd(m, n) == 1:
            return m


def random_pair(rng: random.Random, max_n: int) -> CoprimePair:
    n = log_uniform_int(rng, max_n)
    return CoprimePair(m=random_coprime(rng, n), n=n)


# === Trials ===

def _oracle_trial(max_n: int) -> Trial:
    def trial(rng: random.Random) -> Optional[str]:
        p = random_pair(rng, max_n)
        fast, naive = dedekind_sum_fast(p), dedekind_sum_naive(p, cap=0)
        if fast != naive:
            return f"s{p}: fast {fast} != naive {naive}"
        return None

    return trial


def _theorem2_trial(rng: random.Random) -> Optional[str]:
    n = log_uniform_int(rng, 10**4)
    m = random_coprime(rng, n)
    shift = rng.randint(1, 5)
    m_star = mod_inverse(m, n) - shift * n
    result = theorem2_value(m, n, m_star, verify=False)
    evaluated = big_s(result.pair)
    if evaluated != result.value:
        return f"S{result.pair} = {evaluated}, closed form {result.value}"
    if math.gcd(result.pair.m, result.pair.n) != 1:
        return f"gcd{result.pair} != 1"
    return None


def random_three_term_args(rng: random.Random, max_n: int = 10**4) -> tuple:
    """Random admissible (m, n, c, d) with q = md - nc > 0."""
    n = log_uniform_int(rng, max_n)
    m = random_coprime(rng, n, low=-n, high=2 * n)
    d = log_uniform_int(rng, max_n)
    c_max = (m * d - 1) // n  # largest c with q >= 1
    while True:
        c = c_max - rng.randint(0, 2 * d)
        if math.gcd(c, d) == 1:
            return m, n, c, d


def _three_term_trial(rng: random.Random) -> Optional[str]:
    m, n, c, d = random_three_term_args(rng)
    result = three_term_check(m, n, c, d)
    if not result.holds:
        return f"({m}, {n}; {c}, {d}): {result.lhs} != {result.rhs}"
    s = rng.randint(-3, 3)
    shifted = result.bezout.shifted(s)
    if big_s(CoprimePair(m=shifted.r, n=shifted.q)) != big_s(CoprimePair(m=result.bezout.r, n=result.bezout.q)):
        return f"({m}, {n}; {c}, {d}): S(r, q) changed under shift {s}"
    if three_term_rhs(n, c, d, shifted) != result.rhs:
        return f"({m}, {n}; {c}, {d}): verdict changed under shift {s}"
    return None


def _properties_trial(rng: random.Random) -> Optional[str]:
    p = random_pair(rng, 10**6)
    m, n = p.m, p.n
    value = big_s(p)
    if big_s(CoprimePair(m=m + n, n=n)) != value:
        return f"periodicity fails at {p}"
    if big_s(CoprimePair(m=-m, n=n)) != -value:
        return f"negation fails at {p}"
    if big_s(CoprimePair(m=mod_inverse(m, n), n=n)) != value:
        return f"inverse invariance fails at {p}"
    return None


def random_sweep_case(rng: random.Random) -> tuple:
    """Target in [-50, 50] with denominator <= 1000, eps in {10^-1, ..., 10^-8}."""
    den = rng.randint(1, 1000)
    x = Fraction(rng.randint(-50 * den, 50 * den), den)
    epsilon = Fraction(1, 10 ** rng.randint(1, 8))
    return x, epsilon


def _sweep_trial(rng: random.Random) -> Optional[str]:
    x, epsilon = random_sweep_case(rng)
    plan = build_plan(x, epsilon)
    evaluation = evaluate_plan(plan)
    if abs(evaluation.error) != predicted_error(plan) or not abs(evaluation.error) < epsilon:
        return f"x={x}, eps={epsilon}: error {evaluation.error}"
    return None


# === Runners ===

def _run_trials(name: str, trial: Trial, trials: int, seed: int, workers: int) -> SuiteReport:
    report = SuiteReport(name=name, trials=trials)

    def run_one(index: int) -> Optional[str]:
        try:
            return trial(trial_rng(name, seed, index))
        except DedekindError as exc:
            return f"trial {index}: {type(exc).__name__}: {exc}"

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(run_one, range(trials)))
    else:
        outcomes = [run_one(i) for i in range(trials)]

    for outcome in outcomes:
        if outcome is None:
            report.passed += 1
        else:
            report.failed += 1
            if len(report.failures) < MAX_REPORTED_FAILURES:
                report.failures.append(outcome)
    return report


def _exhaustive_oracle(max_n: int) -> SuiteReport:
    report = SuiteReport(name="oracle-exhaustive", trials=0)
    for n in range(1, max_n + 1):
        for m in range(1, n + 1):
            if math.gcd(m, n) != 1:
                continue
            report.trials += 1
            p = CoprimePair(m=m, n=n)
            fast, naive = dedekind_sum_fast(p), dedekind_sum_naive(p, cap=0)
            if fast != naive or n % (12 * fast).denominator != 0:
                report.failed += 1
                if len(report.failures) < MAX_REPORTED_FAILURES:
                    report.failures.append(f"s{p}: fast {fast}, naive {naive}")
            else:
                report.passed += 1
    return report


def run_suite(
    name: str,
    trials: Optional[int] = None,
    seed: int = 0,
    max_n: Optional[int] = None,
    workers: Optional[int] = None,
) -> List[SuiteReport]:
    """
    Run one named suite (or ``all``) and return its reports.

    The oracle suite yields two reports: the exhaustive sweep over
    1 <= m <= n <= max_n and the random pairs.

    Raises:
        ValueError: On an unknown suite name.
    """
    if name == "all":
        reports: List[SuiteReport] = []
        for suite in SUITES:
            reports.extend(run_suite(suite, trials, seed, max_n, workers))
        return reports
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES + ('all',))}")

    settings = get_settings()
    workers = workers or settings.verify_workers
    count = DEFAULT_TRIALS[name] if trials is None else trials
    logger.info("running suite %s: %d trials, seed %d", name, count, seed)

    started = time.perf_counter()
    if name == "oracle":
        exhaustive = _exhaustive_oracle(max_n or settings.oracle_max_n)
        exhaustive.elapsed_ms = (time.perf_counter() - started) * 1000
        started = time.perf_counter()
        randomised = _run_trials(name, _oracle_trial(settings.oracle_random_max_n), count, seed, workers)
        randomised.elapsed_ms = (time.perf_counter() - started) * 1000
        return [exhaustive, randomised]

    trial = {
        "theorem2": _theorem2_trial,
        "three-term": _three_term_trial,
        "properties": _properties_trial,
        "sweep": _sweep_trial,
    }[name]
    report = _run_trials(name, trial, count, seed, workers)
    report.elapsed_ms = (time.perf_counter() - started) * 1000
    logger.info("suite %s: %d/%d passed", name, report.passed, report.trials)
    return [report]
