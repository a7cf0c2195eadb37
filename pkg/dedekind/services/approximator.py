"""
Explicit Dedekind-sum approximation of rational targets.

Given x >= -3 and eps > 0, write x = l - 3 - j/k, pick the least integer
m >= 2/(k*eps) + 1 with m*j = 1 (mod k), and put

    n = k(m^2 + 1),  t = 2m + l*n - j(m^2 + 1),  M = m*t + 1,  N = n*t.

Then S(M, N) = x + E with E = 2m/n + 2/(nt) and 0 < E < eps. Targets below
-3 go through -x and the pair (-M, N).
"""

import logging
import math
from fractions import Fraction
from typing import Optional

from dedekind.core.exceptions import (
    BelowRange,
    InvalidEpsilon,
    InvalidMultiplier,
    PlanInconsistent,
)
from dedekind.models.plan import ApproximationPlan, Decomposition, PlanEvaluation
from dedekind.services.dedekind_core import big_s
from dedekind.services.exact_arith import ceil_rational, floor_rational, mod_inverse
from dedekind.services.identities import theorem2_from_plan

logger = logging.getLogger(__name__)

LOWEST_DIRECT_TARGET = -3


def decompose(x: Fraction) -> Decomposition:
    """
    Unique (l, j, k) with x = l - 3 - j/k, l >= 1, 0 < j <= k, gcd(j, k) = 1.

    Raises:
        BelowRange: If x < -3.
    """
    x = Fraction(x)
    if x < LOWEST_DIRECT_TARGET:
        raise BelowRange(f"{x} < {LOWEST_DIRECT_TARGET}")
    y = x + 3
    l = floor_rational(y) + 1  # noqa: E741
    frac = l - y
    return Decomposition(l=l, j=frac.numerator, k=frac.denominator)


def recompose(dec: Decomposition) -> Fraction:
    """The target l - 3 - j/k a decomposition represents."""
    return dec.value


def _multiplier_bound(k: int, epsilon: Fraction) -> Fraction:
    return 2 / (k * epsilon) + 1


def _check_epsilon(epsilon: Fraction) -> Fraction:
    epsilon = Fraction(epsilon)
    if epsilon <= 0:
        raise InvalidEpsilon(f"epsilon must be positive, got {epsilon}")
    return epsilon


def is_admissible_multiplier(dec: Decomposition, epsilon: Fraction, m: int) -> bool:
    """Both conditions on m: the size bound and m*j = 1 (mod k)."""
    return m >= _multiplier_bound(dec.k, epsilon) and (m * dec.j - 1) % dec.k == 0


def choose_m(dec: Decomposition, epsilon: Fraction) -> int:
    """Least m >= 2/(k*eps) + 1 with m*j = 1 (mod k)."""
    epsilon = _check_epsilon(epsilon)
    lowest = ceil_rational(_multiplier_bound(dec.k, epsilon))
    residue = mod_inverse(dec.j, dec.k)
    return lowest + (residue - lowest) % dec.k


def build_plan(
    x: Fraction,
    epsilon: Fraction,
    m: Optional[int] = None,
    negate: Optional[bool] = None,
) -> ApproximationPlan:
    """
    Construct the full parameter set approximating ``x`` within ``epsilon``.

    Args:
        x: Rational target.
        epsilon: Positive rational tolerance.
        m: Optional multiplier to use instead of the least admissible one.
        negate: Route through -x and the pair (-M, N). ``None`` negates exactly
            when x < -3.

    Raises:
        InvalidEpsilon: If epsilon <= 0.
        InvalidMultiplier: If ``m`` violates the bound or the congruence.
        BelowRange: If the chosen orientation has a target below -3.
        PlanInconsistent: If a structural check on the result fails.
    """
    x = Fraction(x)
    epsilon = _check_epsilon(epsilon)
    if negate is None:
        negate = x < LOWEST_DIRECT_TARGET
    base = -x if negate else x

    dec = decompose(base)
    if m is None:
        m = choose_m(dec, epsilon)
    elif not is_admissible_multiplier(dec, epsilon, m):
        raise InvalidMultiplier(
            f"m={m} needs m >= {_multiplier_bound(dec.k, epsilon)} and m*{dec.j} = 1 mod {dec.k}"
        )

    n = dec.k * (m * m + 1)
    closed = theorem2_from_plan(dec, m, verify=False)

    plan = ApproximationPlan(
        decomposition=dec,
        m=m,
        n=n,
        t=closed.t,
        M=closed.pair.m,
        N=closed.pair.n,
        negated=negate,
        target=x,
        epsilon=epsilon,
    )
    check_plan(plan)
    logger.debug(
        "plan for %s (eps=%s): l=%d j=%d k=%d m=%d n=%d t=%d",
        x, epsilon, dec.l, dec.j, dec.k, m, n, plan.t,
    )
    return plan


def check_plan(plan: ApproximationPlan) -> None:
    """
    Structural checks that need no Dedekind-sum evaluation.

    Covers the congruence, the size bound and coprimality on top of the
    model validator, and also plans produced by ``model_copy``.

    Raises:
        PlanInconsistent: On the first violated invariant.
    """
    dec = plan.decomposition
    m, n, t = plan.m, plan.n, plan.t
    failures = []
    if (m * dec.j - 1) % dec.k != 0:
        failures.append("m*j != 1 mod k")
    if m < _multiplier_bound(dec.k, plan.epsilon):
        failures.append("m below 2/(k*eps) + 1")
    if n != dec.k * (m * m + 1):
        failures.append("n != k(m^2+1)")
    if t != 2 * m + dec.l * n - dec.j * (m * m + 1) or t <= 0:
        failures.append("t != 2m + ln - j(m^2+1) or t <= 0")
    if plan.M != m * t + 1 or plan.N != n * t:
        failures.append("M, N inconsistent with m, n, t")
    if math.gcd(plan.M, plan.N) != 1:
        failures.append("gcd(M, N) != 1")
    if (m * inverse_of_m(plan) - 1) % n != 0:
        failures.append("-m + jn/k is not an inverse of m mod n")
    base = -plan.target if plan.negated else plan.target
    if dec.value != base:
        failures.append("decomposition does not represent the target")
    if failures:
        raise PlanInconsistent("; ".join(failures))


def inverse_of_m(plan: ApproximationPlan) -> int:
    """-m + j*n/k, an integer inverse of m modulo n."""
    dec = plan.decomposition
    return -plan.m + dec.j * (plan.m * plan.m + 1)


def predicted_error(plan: ApproximationPlan) -> Fraction:
    """E = 2m/n + 2/(nt), the exact surplus of S(M, N) over l - 3 - j/k."""
    return Fraction(2 * plan.m, plan.n) + Fraction(2, plan.N)


def error_bound(plan: ApproximationPlan) -> Fraction:
    """(2m^2 + 1)/(k m^3), a bound strictly above the predicted error."""
    m, k = plan.m, plan.decomposition.k
    return Fraction(2 * m * m + 1, k * m**3)


def evaluate_plan(plan: ApproximationPlan) -> PlanEvaluation:
    """
    Evaluate S(+-M, N) exactly and compare with the target.

    Raises:
        PlanInconsistent: If |error| differs from predicted_error, has the
            wrong sign, or is not below epsilon.
    """
    value = big_s(plan.pair)
    error = value - plan.target
    expected = predicted_error(plan)

    failures = []
    if abs(error) != expected:
        failures.append(f"|error| = {abs(error)} but 2m/n + 2/(nt) = {expected}")
    if (error < 0) != plan.negated or error == 0:
        failures.append(f"error {error} has the wrong sign")
    if not abs(error) < plan.epsilon:
        failures.append(f"|error| = {abs(error)} is not below {plan.epsilon}")
    if not expected < error_bound(plan):
        failures.append("error bound (2m^2+1)/(km^3) not respected")
    if failures:
        raise PlanInconsistent("; ".join(failures))

    return PlanEvaluation(value=value, error=error)
