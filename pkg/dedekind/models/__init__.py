"""
Domain models - immutable value types passed between services.
"""

from .arguments import BezoutData, CoprimePair
from .plan import (
    ApproximationPlan,
    ClosedFormResult,
    Decomposition,
    PlanEvaluation,
    ThreeTermResult,
)

__all__ = [
    "BezoutData",
    "CoprimePair",
    "ApproximationPlan",
    "ClosedFormResult",
    "Decomposition",
    "PlanEvaluation",
    "ThreeTermResult",
]
