"""
Exact identities between Dedekind sums.

- Closed form: for m > m_star with m*m_star = 1 (mod n) and t = m - m_star,
  S(mt+1, nt) = -3 + 2/(nt) + t/n.
- Three-term relation of Rademacher and Dieter: for q = md - nc > 0,
  S(m, n) = S(c, d) + S(r, q) + (n^2 + d^2 + q^2)/(ndq) - 3.
"""

import logging
import math
from fractions import Fraction
from typing import Optional

from dedekind.core.config import get_settings
from dedekind.core.exceptions import (
    IdentityViolation,
    NotCoprime,
    NotInverse,
    NotLess,
    NotPositiveQ,
)
from dedekind.models.arguments import BezoutData, CoprimePair
from dedekind.models.plan import ClosedFormResult, Decomposition, ThreeTermResult
from dedekind.services.dedekind_core import big_s
from dedekind.services.exact_arith import extended_gcd

logger = logging.getLogger(__name__)


def _require_coprime(a: int, b: int) -> None:
    if math.gcd(a, b) != 1:
        raise NotCoprime(a, b)


def theorem2_value(m: int, n: int, m_star: int, verify: Optional[bool] = None) -> ClosedFormResult:
    """
    Closed-form value of S(mt+1, nt) for t = m - m_star.

    Args:
        m: First argument, coprime to n.
        n: Modulus, n >= 1.
        m_star: Any inverse of m mod n below m (may be negative).
        verify: Cross-check against the fast evaluator. Defaults to the
            ``assert_closed_form`` setting.

    Raises:
        NotCoprime: If gcd(m, n) != 1.
        NotInverse: If m*m_star is not 1 mod n.
        NotLess: If m <= m_star.
        IdentityViolation: If the cross-check fails.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    _require_coprime(m, n)
    if (m * m_star - 1) % n != 0:
        raise NotInverse(f"{m} * {m_star} is not 1 mod {n}")
    if m <= m_star:
        raise NotLess(f"need m > m_star, got m={m}, m_star={m_star}")

    t = m - m_star
    big_m, big_n = m * t + 1, n * t
    if math.gcd(big_m, big_n) != 1:
        raise IdentityViolation(f"gcd({big_m}, {big_n}) != 1")
    pair = CoprimePair(m=big_m, n=big_n)
    value = -3 + Fraction(2, big_n) + Fraction(t, n)

    if verify is None:
        verify = get_settings().assert_closed_form
    if verify:
        evaluated = big_s(pair)
        if evaluated != value:
            raise IdentityViolation(f"S{pair} = {evaluated}, closed form gives {value}")

    return ClosedFormResult(t=t, pair=pair, value=value)


def theorem2_from_plan(dec: Decomposition, m: int, verify: Optional[bool] = None) -> ClosedFormResult:
    """
    Closed form for the approximation parameters (l, j, k) and m.

    With n = k(m^2 + 1), m_star = -m + j*n/k - l*n is an inverse of m mod n
    below m, so t = m - m_star and the value is (l - 3 - j/k) + 2m/n + 2/(nt).

    Raises:
        NotInverse: If m*j is not 1 mod k.
    """
    n = dec.k * (m * m + 1)
    m_star = -m + dec.j * (m * m + 1) - dec.l * n
    return theorem2_value(m, n, m_star, verify=verify)


def bezout_for_three_term(m: int, n: int, c: int, d: int) -> BezoutData:
    """
    Integers j, k with -c*j + d*k = 1, plus q and r for the source pair (m, n).

    The canonical choice reduces j into [0, d) when d > 1; any other choice is
    ``result.shifted(s)`` for some integer s.

    Raises:
        NotCoprime: On gcd(m, n) != 1 or gcd(c, d) != 1.
        NotPositiveQ: If q = m*d - n*c <= 0.
    """
    if n < 1 or d < 1:
        raise ValueError(f"n and d must be positive, got n={n}, d={d}")
    _require_coprime(m, n)
    _require_coprime(c, d)
    q = m * d - n * c
    if q <= 0:
        raise NotPositiveQ(f"q = {m}*{d} - {n}*{c} = {q}")

    _, u, v = extended_gcd(c, d)
    j, k = -u, v
    if d > 1:
        s, j = divmod(j, d)
        k -= c * s

    return BezoutData(c=c, d=d, j=j, k=k, q=q, r=-n * k + m * j)


def three_term_rhs(n: int, c: int, d: int, bezout: BezoutData) -> Fraction:
    """Right-hand side S(c, d) + S(r, q) + (n^2 + d^2 + q^2)/(ndq) - 3."""
    q, r = bezout.q, bezout.r
    return (
        big_s(CoprimePair(m=c, n=d))
        + big_s(CoprimePair(m=r, n=q))
        + Fraction(n * n + d * d + q * q, n * d * q)
        - 3
    )


def three_term_check(m: int, n: int, c: int, d: int) -> ThreeTermResult:
    """Evaluate both sides of the three-term relation exactly."""
    bezout = bezout_for_three_term(m, n, c, d)
    lhs = big_s(CoprimePair(m=m, n=n))
    rhs = three_term_rhs(n, c, d, bezout)
    if lhs != rhs:
        logger.warning("three-term relation failed for (%d, %d; %d, %d)", m, n, c, d)
    return ThreeTermResult(lhs=lhs, rhs=rhs, holds=lhs == rhs, bezout=bezout)
