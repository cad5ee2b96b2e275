"""Constrained engineering design problems with static-penalty handling.

Three classic formulations: the five-segment cantilever beam, the
four-gear train ratio match (integer teeth counts), and the three-bar
truss.  Inequalities are expressed as g(x) <= 0; infeasibility is charged
as penalty_multiplier * sum(max(0, g)).  Best-known solutions are kept on
each problem as verification fixtures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from pssopt.domain import INTEGER, SearchDomain
from pssopt.objectives.registry import ObjectiveSpec, register

DEFAULT_PENALTY = 1e6


@dataclass(frozen=True)
class ConstrainedProblem:
    """An objective plus inequality constraints g_k(x) <= 0."""

    id: str
    objective: Callable[[np.ndarray], float]
    constraints: tuple[Callable[[np.ndarray], float], ...]
    domain: SearchDomain
    penalty_multiplier: float = DEFAULT_PENALTY
    best_known_x: Optional[np.ndarray] = None
    best_known_value: Optional[float] = None


def evaluate_constrained(problem: ConstrainedProblem, x: np.ndarray) -> tuple[float, float, float]:
    """Return (raw objective, total violation, penalized objective).

    Feasible points have zero violation, so the penalized value equals the
    raw one there.
    """
    x = np.asarray(x, dtype=np.float64)
    raw = float(problem.objective(x))
    violation = 0.0
    for g in problem.constraints:
        violation += max(0.0, float(g(x)))
    return raw, violation, raw + problem.penalty_multiplier * violation


@dataclass(frozen=True)
class PenalizedObjective:
    """Callable view of a constrained problem for the run engine."""

    problem: ConstrainedProblem

    def __call__(self, x: np.ndarray) -> float:
        return evaluate_constrained(self.problem, x)[2]


def cantilever_weight(x):
    return float(0.0624 * np.sum(x))


def cantilever_limit(x):
    return float(61.0 / x[0] ** 3 + 37.0 / x[1] ** 3 + 19.0 / x[2] ** 3
                 + 7.0 / x[3] ** 3 + 1.0 / x[4] ** 3 - 1.0)


def gear_ratio_error(x):
    # squared gap to the target ratio 1/6.931; teeth counts are integers
    return float((1.0 / 6.931 - (x[1] * x[2]) / (x[0] * x[3])) ** 2)


_TRUSS_LENGTH = 100.0
_TRUSS_LOAD = 2.0
_TRUSS_STRESS = 2.0
_SQRT2 = math.sqrt(2.0)


def truss_weight(x):
    return float((2.0 * _SQRT2 * x[0] + x[1]) * _TRUSS_LENGTH)


def truss_stress_1(x):
    denom = _SQRT2 * x[0] ** 2 + 2.0 * x[0] * x[1]
    if denom <= 0.0:
        return math.inf
    return float((_SQRT2 * x[0] + x[1]) / denom * _TRUSS_LOAD - _TRUSS_STRESS)


def truss_stress_2(x):
    denom = _SQRT2 * x[0] ** 2 + 2.0 * x[0] * x[1]
    if denom <= 0.0:
        return math.inf
    return float(x[1] / denom * _TRUSS_LOAD - _TRUSS_STRESS)


def truss_stress_3(x):
    denom = _SQRT2 * x[1] + x[0]
    if denom <= 0.0:
        return math.inf
    return float(1.0 / denom * _TRUSS_LOAD - _TRUSS_STRESS)


CANTILEVER_BEAM = ConstrainedProblem(
    id="cantilever_beam",
    objective=cantilever_weight,
    constraints=(cantilever_limit,),
    domain=SearchDomain.cube(0.01, 100.0, 5),
    best_known_x=np.array([6.01683010096092, 5.30655187659779, 4.49420948422588,
                           3.50272928517748, 2.15334341962752]),
    best_known_value=1.3399566439951907,
)

GEAR_TRAIN = ConstrainedProblem(
    id="gear_train",
    objective=gear_ratio_error,
    constraints=(),
    domain=SearchDomain.cube(12, 60, 4, kind=INTEGER),
    best_known_x=np.array([43.0, 19.0, 16.0, 49.0]),
    best_known_value=2.7008571488865134e-12,
)

THREE_BAR_TRUSS = ConstrainedProblem(
    id="three_bar_truss",
    objective=truss_weight,
    constraints=(truss_stress_1, truss_stress_2, truss_stress_3),
    domain=SearchDomain.cube(0.0, 1.0, 2),
    best_known_x=np.array([0.788683438026281, 0.408224806061712]),
    best_known_value=263.89584350133265,
)

PROBLEMS = (CANTILEVER_BEAM, GEAR_TRAIN, THREE_BAR_TRUSS)

_SUMMARIES = {
    "cantilever_beam": "five-segment beam weight, one stiffness limit",
    "gear_train": "integer teeth counts matching ratio 1/6.931",
    "three_bar_truss": "truss weight under three stress limits",
}

for _p in PROBLEMS:
    register(ObjectiveSpec(
        id=_p.id,
        evaluate=PenalizedObjective(_p),
        domain_for=lambda n, _d=_p.domain: _d,
        fixed_dims=_p.domain.dims,
        optimum_for=lambda n, _v=_p.best_known_value: _v,
        optimum_point_for=lambda n, _x=_p.best_known_x: _x.copy(),
        constrained=_p,
        summary=_SUMMARIES[_p.id],
    ))
