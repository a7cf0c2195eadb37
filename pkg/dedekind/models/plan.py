"""
Approximation and identity result models.
"""

from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field, model_validator

from dedekind.models.arguments import BezoutData, CoprimePair


class Decomposition(BaseModel):
    """A target written as l - 3 - j/k with l >= 1, 0 < j <= k, gcd(j, k) = 1."""

    model_config = ConfigDict(frozen=True)

    l: int = Field(ge=1)  # noqa: E741
    j: int = Field(ge=1)
    k: int = Field(ge=1)

    @model_validator(mode="after")
    def _check_fraction(self) -> "Decomposition":
        if self.j > self.k:
            raise ValueError(f"j={self.j} exceeds k={self.k}")
        if Fraction(self.j, self.k).denominator != self.k:
            raise ValueError(f"j/k={self.j}/{self.k} not in lowest terms")
        return self

    @property
    def value(self) -> Fraction:
        return self.l - 3 - Fraction(self.j, self.k)


class ApproximationPlan(BaseModel):
    """
    Every parameter of one approximation.

    The reported pair is (M, N), or (-M, N) when ``negated``; its S-value
    equals ``decomposition.value + E`` (sign flipped when negated).
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    decomposition: Decomposition
    m: int
    n: int
    t: int
    M: int
    N: int
    negated: bool
    target: Fraction
    epsilon: Fraction

    @model_validator(mode="after")
    def _check_parameters(self) -> "ApproximationPlan":
        dec = self.decomposition
        m, n, t = self.m, self.n, self.t
        if self.epsilon <= 0:
            raise ValueError(f"epsilon={self.epsilon} must be positive")
        if m < 1 or n != dec.k * (m * m + 1):
            raise ValueError(f"n={n} is not k(m^2+1) for k={dec.k}, m={m}")
        if t <= 0 or t != 2 * m + dec.l * n - dec.j * (m * m + 1):
            raise ValueError(f"t={t} is not 2m + ln - j(m^2+1)")
        if self.M != m * t + 1 or self.N != n * t:
            raise ValueError(f"(M, N)=({self.M}, {self.N}) is not (mt+1, nt)")
        if dec.value != (-self.target if self.negated else self.target):
            raise ValueError(f"decomposition {dec.value} does not represent the target {self.target}")
        return self

    @property
    def pair(self) -> CoprimePair:
        return CoprimePair(m=-self.M if self.negated else self.M, n=self.N)

    @property
    def m_star(self) -> int:
        """The inverse of m mod n used to build t (so that t = m - m_star)."""
        return self.m - self.t


class PlanEvaluation(BaseModel):
    """Exact S-value of a plan's pair and its signed distance to the target."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    value: Fraction
    error: Fraction


class ClosedFormResult(BaseModel):
    """Output of the closed-form identity for S(mt+1, nt)."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    t: int
    pair: CoprimePair
    value: Fraction


class ThreeTermResult(BaseModel):
    """Both sides of the three-term relation, evaluated exactly."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    lhs: Fraction
    rhs: Fraction
    holds: bool
    bezout: BezoutData
