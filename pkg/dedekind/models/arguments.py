"""
Dedekind-sum argument types.

Immutable pydantic models; construction validates the number-theoretic
invariants so downstream code never sees an inadmissible pair.
"""

import math

from pydantic import BaseModel, ConfigDict, model_validator

from dedekind.core.exceptions import NotCoprime


class CoprimePair(BaseModel):
    """A Dedekind-sum argument (m, n) with n >= 1 and gcd(m, n) = 1."""

    model_config = ConfigDict(frozen=True)

    m: int
    n: int

    @model_validator(mode="after")
    def _check_coprime(self) -> "CoprimePair":
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if math.gcd(self.m, self.n) != 1:
            raise ValueError(f"gcd({self.m}, {self.n}) != 1")
        return self

    @classmethod
    def from_values(cls, m: int, n: int) -> "CoprimePair":
        """
        Build a pair, raising the library's own errors instead of pydantic's.

        Raises:
            ValueError: If n < 1.
            NotCoprime: If gcd(m, n) != 1.
        """
        if n < 1:
            raise ValueError(f"n must be >= 1, got {n}")
        if math.gcd(m, n) != 1:
            raise NotCoprime(m, n)
        return cls(m=m, n=n)

    def __str__(self) -> str:
        return f"({self.m}, {self.n})"


class BezoutData(BaseModel):
    """
    Auxiliary integers of the three-term relation for a source pair (m, n).

    ``j`` and ``k`` satisfy -c*j + d*k = 1; q = m*d - n*c and r = -n*k + m*j.
    """

    model_config = ConfigDict(frozen=True)

    c: int
    d: int
    j: int
    k: int
    q: int
    r: int

    @model_validator(mode="after")
    def _check_bezout(self) -> "BezoutData":
        if self.d < 1 or self.q < 1:
            raise ValueError(f"d={self.d} and q={self.q} must be positive")
        if math.gcd(self.c, self.d) != 1:
            raise ValueError(f"gcd({self.c}, {self.d}) != 1")
        if -self.c * self.j + self.d * self.k != 1:
            raise ValueError("-c*j + d*k != 1")
        return self

    def shifted(self, s: int) -> "BezoutData":
        """The equivalent datum (j + d*s, k + c*s); r moves by q*s."""
        return BezoutData(
            c=self.c,
            d=self.d,
            j=self.j + self.d * s,
            k=self.k + self.c * s,
            q=self.q,
            r=self.r + self.q * s,
        )
