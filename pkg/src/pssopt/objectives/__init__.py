"""Benchmark objective library: standard suite plus engineering problems."""

from pssopt.objectives import engineering, standard  # noqa: F401  (registration)
from pssopt.objectives.engineering import (
    CANTILEVER_BEAM,
    GEAR_TRAIN,
    THREE_BAR_TRUSS,
    ConstrainedProblem,
    PenalizedObjective,
    evaluate_constrained,
)
from pssopt.objectives.registry import ObjectiveSpec, evaluate, get, ids, true_optimum

__all__ = [
    "CANTILEVER_BEAM",
    "GEAR_TRAIN",
    "THREE_BAR_TRUSS",
    "ConstrainedProblem",
    "ObjectiveSpec",
    "PenalizedObjective",
    "evaluate",
    "evaluate_constrained",
    "get",
    "ids",
    "true_optimum",
]
