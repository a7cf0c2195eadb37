"""
Exact integer and rational primitives.

Rationals are ``fractions.Fraction`` values: arbitrary precision, always
reduced, positive denominator. Everything here is a pure function.
"""

import math
import re
from fractions import Fraction
from typing import Tuple, Union

from dedekind.core.exceptions import DivisionByZero, NotCoprime, RationalParseError

# Type alias for clarity
Rational = Fraction

RationalLike = Union[int, Fraction]

CONTINUATION_MARKER = "…"

_RATIONAL_PATTERN = re.compile(
    r"""
    ^(?P<sign>[-+])?
    (?:
        (?P<num>\d+)(?:/(?P<den>\d+))?     # p or p/q
      | (?P<int>\d*)\.(?P<frac>\d+)        # d.ddd or .ddd
    )$
    """,
    re.VERBOSE,
)


def gcd(a: int, b: int) -> int:
    """Non-negative greatest common divisor; gcd(0, 0) is 0 by convention."""
    return math.gcd(a, b)


def extended_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """
    Extended Euclidean algorithm.

    Returns:
        (g, u, v) with g = gcd(a, b) >= 0 and u*a + v*b == g.
    """
    prev_u, u = 1, 0
    prev_v, v = 0, 1
    while b != 0:
        q = a // b
        a, b = b, a - q * b
        prev_u, u = u, prev_u - q * u
        prev_v, v = v, prev_v - q * v
    if a < 0:
        return -a, -prev_u, -prev_v
    return a, prev_u, prev_v


def mod_inverse(a: int, modulus: int) -> int:
    """
    Canonical inverse of ``a`` modulo ``modulus``, in [0, modulus).

    Every integer is invertible mod 1 and the representative is 0.

    Raises:
        ValueError: If modulus < 1.
        NotCoprime: If gcd(a, modulus) != 1.
    """
    if modulus < 1:
        raise ValueError(f"modulus must be >= 1, got {modulus}")
    if modulus == 1:
        return 0
    g, u, _ = extended_gcd(a, modulus)
    if g != 1:
        raise NotCoprime(a, modulus)
    return u % modulus


def exact_div(a: RationalLike, b: RationalLike) -> Fraction:
    """Exact quotient a/b."""
    if b == 0:
        raise DivisionByZero(f"division of {a} by zero")
    return Fraction(a) / Fraction(b)


def floor_rational(x: RationalLike) -> int:
    """Greatest integer <= x."""
    return math.floor(Fraction(x))


def ceil_rational(x: RationalLike) -> int:
    """Least integer >= x."""
    return math.ceil(Fraction(x))


def parse_rational(text: str) -> Fraction:
    """
    Parse an exact rational literal.

    Accepted forms: ``p/q``, ``p`` and ``d.ddd`` (optionally signed). Decimal
    digits become a power-of-ten denominator, so ``0.1`` is exactly 1/10.

    Raises:
        RationalParseError: On any other input or a zero denominator.
    """
    match = _RATIONAL_PATTERN.match(text.strip())
    if match is None:
        raise RationalParseError(f"not a rational literal: {text!r}")

    negative = match.group("sign") == "-"
    if match.group("num") is not None:
        den = int(match.group("den")) if match.group("den") is not None else 1
        if den == 0:
            raise RationalParseError(f"zero denominator in {text!r}")
        value = Fraction(int(match.group("num")), den)
    else:
        digits = match.group("frac")
        whole = int(match.group("int") or "0")
        value = whole + Fraction(int(digits), 10 ** len(digits))

    return -value if negative else value


def format_rational(x: RationalLike) -> str:
    """Render as ``p/q``, or ``p`` for integers; inverse of parse_rational."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def render_decimal(x: RationalLike, digits: int) -> str:
    """
    Truncated (toward zero) decimal rendering of an exact rational.

    Exactly ``digits`` digits follow the point; the continuation marker is
    appended when the expansion does not terminate there. With ``digits=0``
    no decimal point is printed.

    Examples:
        render_decimal(Fraction(-2, 3), 4) -> "-0.6666…"
        render_decimal(Fraction(1, 2), 3) -> "0.500"
    """
    if digits < 0:
        raise ValueError(f"digits must be >= 0, got {digits}")
    x = Fraction(x)
    magnitude = abs(x)
    scale = 10**digits
    scaled, remainder = divmod(magnitude.numerator * scale, magnitude.denominator)
    whole, frac = divmod(scaled, scale)

    text = str(whole)
    if digits:
        text += "." + str(frac).zfill(digits)
    if x < 0:
        text = "-" + text
    if remainder:
        text += CONTINUATION_MARKER
    return text
