"""
Exact Dedekind sums and explicit approximation of rationals by them.
"""

from dedekind.models import ApproximationPlan, CoprimePair, Decomposition
from dedekind.services.approximator import build_plan, evaluate_plan
from dedekind.services.dedekind_core import big_s, dedekind_sum_fast, dedekind_sum_naive

__version__ = "0.1.0"

__all__ = [
    "ApproximationPlan",
    "CoprimePair",
    "Decomposition",
    "big_s",
    "build_plan",
    "dedekind_sum_fast",
    "dedekind_sum_naive",
    "evaluate_plan",
]
