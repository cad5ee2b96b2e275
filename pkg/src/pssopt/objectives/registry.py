"""Problem registry shared by the library API and the CLI."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Callable, Optional

import numpy as np

from pssopt.domain import SearchDomain

if TYPE_CHECKING:
    from pssopt.objectives.engineering import ConstrainedProblem


@dataclass(frozen=True)
class ObjectiveSpec:
    """A registered benchmark problem.

    ``fixed_dims`` pins the dimensionality where the function only exists
    in one size; otherwise any n >= ``min_dims`` is accepted.  Optimum
    data is present only where a value is published; ``optimum_for``
    returns the published optimum for a dimensionality and the
    known point/value pair is the high-precision verification fixture.
    """

    id: str
    evaluate: Callable[[np.ndarray], float]
    domain_for: Callable[[int], SearchDomain]
    fixed_dims: Optional[int] = None
    min_dims: int = 1
    optimum_for: Optional[Callable[[int], float]] = None
    optimum_point_for: Optional[Callable[[int], np.ndarray]] = None
    # achievable minimum at optimum_point_for when it differs from the
    # published value (e.g. a rounded constant in the function definition)
    attained_for: Optional[Callable[[int], float]] = None
    constrained: Optional["ConstrainedProblem"] = None
    summary: str = ""

    def attained_optimum(self, dims: int) -> float:
        """Value the function actually reaches at its known minimizer."""
        source = self.attained_for or self.optimum_for
        if source is None:
            raise LookupError(f"no known optimum for {self.id!r}")
        return float(source(dims))

    def resolve_dims(self, dims: Optional[int]) -> int:
        if self.fixed_dims is not None:
            if dims is not None and dims != self.fixed_dims:
                raise ValueError(
                    f"{self.id} is defined for n={self.fixed_dims}, got n={dims}")
            return self.fixed_dims
        if dims is None:
            raise ValueError(f"{self.id} needs an explicit dimensionality")
        if dims < self.min_dims:
            raise ValueError(f"{self.id} requires n >= {self.min_dims}")
        return dims

    def domain(self, dims: Optional[int] = None) -> SearchDomain:
        return self.domain_for(self.resolve_dims(dims))


_REGISTRY: dict[str, ObjectiveSpec] = {}


def register(spec: ObjectiveSpec) -> ObjectiveSpec:
    if spec.id in _REGISTRY:
        raise ValueError(f"duplicate problem id {spec.id!r}")
    _REGISTRY[spec.id] = spec
    return spec


def ids() -> list[str]:
    return sorted(_REGISTRY)


def get(problem_id: str) -> ObjectiveSpec:
    try:
        return _REGISTRY[problem_id]
    except KeyError:
        known = ", ".join(ids())
        raise KeyError(f"unknown problem {problem_id!r}; known: {known}") from None


def evaluate(problem_id: str, x: np.ndarray) -> float:
    """Evaluate a registered problem, enforcing its dimensionality."""
    spec = get(problem_id)
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 1:
        raise ValueError("x must be a vector")
    spec.resolve_dims(x.size)
    return float(spec.evaluate(x))


def true_optimum(problem_id: str, dims: Optional[int] = None) -> float:
    """Published optimum value for the requested dimensionality."""
    spec = get(problem_id)
    if spec.optimum_for is None:
        raise LookupError(f"no published optimum for {problem_id!r}")
    return float(spec.optimum_for(spec.resolve_dims(dims)))
