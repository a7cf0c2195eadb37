"""
Sawtooth function and classical Dedekind sums.

Two evaluators of s(m, n):

- ``dedekind_sum_naive``: the defining sum over k = 1..n, O(n).
- ``dedekind_sum_fast``: reciprocity descent, O(log n) big-integer steps.

The naive evaluator is the oracle the fast one is tested against.
"""

import logging
from fractions import Fraction
from typing import Literal, Optional

import numpy as np

from dedekind.core.config import get_settings
from dedekind.core.exceptions import OracleCapExceeded
from dedekind.models.arguments import CoprimePair
from dedekind.services.exact_arith import floor_rational

logger = logging.getLogger(__name__)

SumMethod = Literal["fast", "naive"]

# Largest n for which every partial sum of the vectorised oracle fits in int64:
# each term is bounded by n**2 and there are n - 1 of them.
_INT64_SAFE_N = 2_000_000

_HALF = Fraction(1, 2)
_QUARTER = Fraction(1, 4)


def sawtooth(t: Fraction) -> Fraction:
    """((t)) = t - floor(t) - 1/2 for non-integers, 0 at integers."""
    t = Fraction(t)
    if t.denominator == 1:
        return Fraction(0)
    return t - floor_rational(t) - _HALF


def normalize_arg(p: CoprimePair) -> CoprimePair:
    """Reduce m into [1, n - 1] using periodicity; (0, 1) when n = 1."""
    return CoprimePair(m=p.m % p.n, n=p.n)


def dedekind_sum_naive(p: CoprimePair, cap: Optional[int] = None) -> Fraction:
    """
    s(m, n) by direct summation of sawtooth products.

    For 0 < k < n, ((k/n)) = (2k - n)/(2n) and ((mk/n)) = (2r - n)/(2n) with
    r = mk mod n (never 0 for coprime arguments), so the sum is one integer
    total over 4n**2.

    Args:
        p: Argument pair.
        cap: Largest admissible n; defaults to the configured oracle cap.
            Pass 0 to disable the guard.

    Raises:
        OracleCapExceeded: If n exceeds the cap.
    """
    if cap is None:
        cap = get_settings().oracle_cap
    n = p.n
    if cap and n > cap:
        raise OracleCapExceeded(n, cap)
    if n == 1:
        return Fraction(0)

    m = p.m % n
    if n <= _INT64_SAFE_N:
        k = np.arange(1, n, dtype=np.int64)
        r = (m * k) % n
        total = int(np.sum((2 * k - n) * (2 * r - n), dtype=np.int64))
    else:
        total = sum((2 * k - n) * (2 * (m * k % n) - n) for k in range(1, n))
    return Fraction(total, 4 * n * n)


def _descend(m: int, n: int) -> tuple[Fraction, int]:
    """Reciprocity descent; returns (s(m, n), number of swap steps)."""
    total = Fraction(0)
    sign = 1
    steps = 0
    m %= n
    # s(m, n) + s(n, m) = (m/n + n/m + 1/(mn))/12 - 1/4 and s(n, m) = s(n mod m, m)
    while m != 0 and n != 1:
        total += sign * (Fraction(m * m + n * n + 1, 12 * m * n) - _QUARTER)
        sign = -sign
        m, n = n % m, m
        steps += 1
    return total, steps


def dedekind_sum_fast(p: CoprimePair) -> Fraction:
    """s(m, n) in O(log n) steps via the classical reciprocity law."""
    value, steps = _descend(p.m, p.n)
    logger.debug("s%s: %d reciprocity steps", p, steps)
    return value


def descent_steps(p: CoprimePair) -> int:
    """Number of reciprocity swaps the fast evaluator performs for ``p``."""
    return _descend(p.m, p.n)[1]


def dedekind_sum(p: CoprimePair, method: SumMethod = "fast", cap: Optional[int] = None) -> Fraction:
    """Dispatch to the fast evaluator or the naive oracle."""
    if method == "naive":
        return dedekind_sum_naive(p, cap=cap)
    if method == "fast":
        return dedekind_sum_fast(p)
    raise ValueError(f"unknown method: {method!r}")


def big_s(p: CoprimePair) -> Fraction:
    """S(m, n) = 12 * s(m, n)."""
    return 12 * dedekind_sum_fast(p)
