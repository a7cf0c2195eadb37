"""
Pydantic schemas for CLI output records.
"""

from .records import (
    ApproxRecord,
    ErrorRecord,
    PlanRecord,
    SuiteRecord,
    SumRecord,
    VerifyRecord,
)

__all__ = [
    "ApproxRecord",
    "ErrorRecord",
    "PlanRecord",
    "SuiteRecord",
    "SumRecord",
    "VerifyRecord",
]
