"""
Output records printed by the CLI.

Exact quantities are serialized as "p/q" strings; decimal fields hold
truncated renderings and say so in their names.
"""

from typing import List, Optional

from pydantic import BaseModel, Field


class SumRecord(BaseModel):
    """Result of ``sum``."""

    command: str = "sum"
    M: str
    N: str
    method: str
    S: str
    S_decimal_truncated: str
    s: Optional[str] = None
    s_decimal_truncated: Optional[str] = None
    descent_steps: int
    elapsed_ms: float = Field(description="timing field, not reproducible")


class PlanRecord(BaseModel):
    """Parameters of an approximation plan."""

    j: str
    k: str
    l: str  # noqa: E741
    m: str
    n: str
    t: str
    M: str
    N: str
    negated: bool
    pair: List[str]
    N_bit_length: int


class ApproxRecord(BaseModel):
    """Result of ``approx``."""

    command: str = "approx"
    target: str
    epsilon: str
    plan: PlanRecord
    S: str
    S_decimal_truncated: str
    error: str
    error_decimal_truncated: str
    predicted_error: str
    error_bound: str
    verdict: str
    elapsed_ms: float = Field(description="timing field, not reproducible")


class SuiteRecord(BaseModel):
    """One verification suite outcome."""

    suite: str
    trials: int
    passed: int
    failed: int
    failures: List[str] = []
    elapsed_ms: float = Field(description="timing field, not reproducible")


class VerifyRecord(BaseModel):
    """Result of ``verify``."""

    command: str = "verify"
    seed: int
    suites: List[SuiteRecord]
    verdict: str


class ErrorRecord(BaseModel):
    """Usage or consistency error report."""

    command: str
    error: str
    message: str
    exit_code: int
