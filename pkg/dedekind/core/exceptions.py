"""
Error hierarchy shared by every service module.

Usage errors (bad input) and consistency errors (an identity that must hold
did not) are kept apart so the CLI can map them to different exit codes.
"""


class DedekindError(Exception):
    """Base class for all library errors."""


# === Input / domain errors ===

class ArithmeticDomainError(DedekindError, ValueError):
    """Argument outside the domain of an arithmetic primitive."""


class NotCoprime(ArithmeticDomainError):
    """Two integers required to be coprime share a factor."""

    def __init__(self, a: int, b: int) -> None:
        self.a = a
        self.b = b
        super().__init__(f"gcd({a}, {b}) != 1")


class RationalParseError(ArithmeticDomainError):
    """Text is not a valid exact rational literal."""


class DivisionByZero(DedekindError, ZeroDivisionError):
    """Exact division by a zero rational."""


class OracleCapExceeded(DedekindError):
    """The naive summation oracle was asked for n above its cap."""

    def __init__(self, n: int, cap: int) -> None:
        self.n = n
        self.cap = cap
        super().__init__(f"n={n} exceeds the naive oracle cap {cap}")


class IdentityError(DedekindError, ValueError):
    """Preconditions of an identity constructor are not met."""


class NotInverse(IdentityError):
    """m * m_star is not congruent to 1 modulo n."""


class NotLess(IdentityError):
    """The closed form needs m > m_star."""


class NotPositiveQ(IdentityError):
    """The three-term relation needs q = m*d - n*c > 0."""


class ApproximationError(DedekindError, ValueError):
    """Invalid request to the approximation constructor."""


class BelowRange(ApproximationError):
    """Target lies below -3 and cannot be written as l - 3 - j/k."""


class InvalidEpsilon(ApproximationError):
    """Tolerance must be a positive rational."""


class InvalidMultiplier(ApproximationError):
    """A user-supplied m violates the bound or the congruence."""


# === Consistency errors (never expected on valid input) ===

class IdentityViolation(DedekindError):
    """An identity that is a theorem evaluated to False."""


class PlanInconsistent(DedekindError):
    """An approximation plan failed one of its exact checks."""
