"""The sequential-sampling run engine.

Each generation keeps only the incumbent best solution.  A tightened
"prominent" region is centered on it, its half-width shrinking linearly
with the iteration count; most solution components are drawn from that
region and the rest from the full box, which is what balances
intensification against a constant rate of exploration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from pssopt import _backend
from pssopt.domain import SearchDomain, quantize
from pssopt.sampling import MonteCarloSampler, RandomStream, Sampler


class EvaluationError(RuntimeError):
    """Raised when an objective returns NaN for a candidate."""

    def __init__(self, x: np.ndarray):
        self.x = np.array(x, dtype=np.float64)
        super().__init__(f"objective returned NaN at {self.x.tolist()}")


@dataclass(frozen=True)
class PssParams:
    """Run controls: iteration budget, acceptance probability, population size.

    ``accept_prob`` is the per-component probability of sampling from the
    tightened region instead of the whole box; ``pop_size`` candidates are
    drawn per generation for ``max_iters`` generations after the initial
    population.
    """

    max_iters: int
    accept_prob: float = 0.95
    pop_size: int = 30

    def __post_init__(self):
        if not 0.0 <= self.accept_prob <= 1.0:
            raise ValueError("accept_prob must lie in [0, 1]")
        if self.pop_size < 1:
            raise ValueError("pop_size must be >= 1")
        if self.max_iters < 1:
            raise ValueError("max_iters must be >= 1")


@dataclass(frozen=True)
class Candidate:
    """A solution vector and its fitness."""

    x: np.ndarray
    fitness: float


@dataclass(frozen=True)
class ProminentRegion:
    """Tightened bounds around a center point, clipped to the domain."""

    lower: np.ndarray
    upper: np.ndarray
    half_width: np.ndarray
    center: np.ndarray


@dataclass
class RunState:
    """Mutable per-run bookkeeping (iteration counter, incumbent, region)."""

    iteration: int
    best: Candidate
    region: Optional[ProminentRegion]
    evaluations: int


@dataclass(frozen=True)
class RunRecord:
    """Everything a finished run reports.

    ``history_fitness[i]`` / ``history_x[i]`` hold the best-so-far after
    generation ``i``; index 0 is the initial population, so the length is
    ``max_iters + 1`` and the fitness column is non-increasing.
    """

    seed: int
    params: PssParams
    history_fitness: np.ndarray
    history_x: np.ndarray
    final_best: Candidate
    evaluations: int

    def history(self) -> list[tuple[int, float, np.ndarray]]:
        return [
            (i, float(self.history_fitness[i]), self.history_x[i])
            for i in range(self.history_fitness.size)
        ]


def compute_bandwidth(params: PssParams, iteration: int, domain: SearchDomain) -> np.ndarray:
    """Per-dimension half-width of the tightened region at an iteration.

    Decays linearly from (1 - accept_prob)/2 of the box span down to
    exactly zero at the final iteration.
    """
    if not 0 <= iteration <= params.max_iters:
        raise ValueError(f"iteration {iteration} outside [0, {params.max_iters}]")
    factor = (1.0 - params.accept_prob) * (1.0 - iteration / params.max_iters) / 2.0
    return factor * domain.span


def update_prominent_region(best_x: np.ndarray, half_width: np.ndarray,
                            domain: SearchDomain) -> ProminentRegion:
    """Center the tightened region on best_x and clip it to the domain."""
    best_x = np.asarray(best_x, dtype=np.float64)
    half_width = np.asarray(half_width, dtype=np.float64)
    if not domain.contains(best_x):
        raise ValueError("region center must lie inside the domain")
    if np.any(half_width < 0.0):
        raise ValueError("half_width components must be >= 0")
    lower = np.maximum(domain.lower, best_x - half_width)
    upper = np.minimum(domain.upper, best_x + half_width)
    for arr in (lower, upper):
        arr.setflags(write=False)
    return ProminentRegion(lower=lower, upper=upper,
                           half_width=half_width, center=best_x.copy())


def sample_feature(j: int, region: ProminentRegion, domain: SearchDomain,
                   u: float, r: float, accept_prob: float) -> float:
    """Draw component j: from the tightened region when r <= accept_prob,
    otherwise from the full box.  Scalar twin of the vectorized kernels.
    """
    if not (0.0 <= u < 1.0 and 0.0 <= r < 1.0):
        raise ValueError("u and r must lie in [0, 1)")
    if r <= accept_prob:
        value = region.lower[j] + u * (region.upper[j] - region.lower[j])
    else:
        value = domain.lower[j] + u * (domain.upper[j] - domain.lower[j])
    return quantize(value, domain.kinds[j], domain.lower[j], domain.upper[j])


def initialize_population(domain: SearchDomain, params: PssParams,
                          stream: RandomStream,
                          sampler: Optional[Sampler] = None) -> np.ndarray:
    """Scale a fresh pop_size x dims coefficient matrix onto the box."""
    sampler = sampler or MonteCarloSampler()
    u = sampler.coefficients(stream, params.pop_size, domain.dims)
    x = _backend.scale_population(u, domain.lower, domain.upper,
                                  domain.integer_mask,
                                  domain.integer_lower, domain.integer_upper)
    x.setflags(write=False)
    return x


def sample_generation(stream: RandomStream, domain: SearchDomain,
                      accept_prob: float, region: ProminentRegion,
                      pop_size: int,
                      sampler: Optional[Sampler] = None) -> np.ndarray:
    """Build one generation of candidates.

    Consumes one pop_size x dims coefficient matrix and then one matrix of
    acceptance draws, in that order, so the stream layout is fixed.
    """
    sampler = sampler or MonteCarloSampler()
    u = sampler.coefficients(stream, pop_size, domain.dims)
    r = stream.uniform(pop_size * domain.dims).reshape(pop_size, domain.dims)
    x = _backend.mix_population(u, r, accept_prob, domain.lower, domain.upper,
                                region.lower, region.upper,
                                domain.integer_mask,
                                domain.integer_lower, domain.integer_upper)
    x.setflags(write=False)
    return x


def _evaluate_all(objective: Callable[[np.ndarray], float],
                  population: np.ndarray) -> np.ndarray:
    fitness = np.empty(population.shape[0], dtype=np.float64)
    for k in range(population.shape[0]):
        value = float(objective(population[k]))
        if math.isnan(value):
            raise EvaluationError(population[k])
        fitness[k] = value
    return fitness


def run(objective: Callable[[np.ndarray], float], domain: SearchDomain,
        params: PssParams, seed: int, *,
        sampler: Optional[Sampler] = None,
        callback: Optional[Callable[[int, float], None]] = None,
        retighten_on_stall: bool = False) -> RunRecord:
    """Execute one full optimization run.

    Parameters
    ----------
    objective:
        Deterministic function of a 1-D read-only array, returning a float.
        +inf is a legal (very bad) value; NaN aborts the run.
    domain, params, seed:
        Search box, run controls, and the stream seed.  Together with the
        objective these fully determine the returned record.
    sampler:
        Coefficient source; defaults to Monte Carlo.
    callback:
        Called as callback(iteration, best_fitness) after the initial
        population (iteration 0) and after every generation.
    retighten_on_stall:
        When True, the region half-width is re-shrunk every iteration even
        if the incumbent did not improve.  Default keeps the region frozen
        between improvements.

    Evaluations within a generation happen in candidate index order; ties
    on fitness keep the lowest index, and only a strict improvement moves
    the incumbent, so reruns with one seed are bit-identical.
    """
    sampler = sampler or MonteCarloSampler()
    stream = RandomStream(seed)
    n = domain.dims
    iters = params.max_iters

    population = initialize_population(domain, params, stream, sampler)
    fitness = _evaluate_all(objective, population)
    best_k = int(np.argmin(fitness))
    best = Candidate(x=population[best_k].copy(), fitness=float(fitness[best_k]))

    history_fitness = np.empty(iters + 1, dtype=np.float64)
    history_x = np.empty((iters + 1, n), dtype=np.float64)
    history_fitness[0] = best.fitness
    history_x[0] = best.x
    if callback is not None:
        callback(0, best.fitness)

    state = RunState(iteration=0, best=best, region=None, evaluations=params.pop_size)
    improved = True  # the initial population always (re)centers the region

    for i in range(1, iters + 1):
        state.iteration = i
        if improved or retighten_on_stall:
            half_width = compute_bandwidth(params, i, domain)
            state.region = update_prominent_region(state.best.x, half_width, domain)

        population = sample_generation(stream, domain, params.accept_prob,
                                       state.region, params.pop_size, sampler)
        fitness = _evaluate_all(objective, population)
        state.evaluations += params.pop_size

        best_k = int(np.argmin(fitness))
        improved = bool(fitness[best_k] < state.best.fitness)
        if improved:
            state.best = Candidate(x=population[best_k].copy(),
                                   fitness=float(fitness[best_k]))

        history_fitness[i] = state.best.fitness
        history_x[i] = state.best.x
        if callback is not None:
            callback(i, state.best.fitness)

    history_fitness.setflags(write=False)
    history_x.setflags(write=False)
    return RunRecord(seed=int(seed), params=params,
                     history_fitness=history_fitness, history_x=history_x,
                     final_best=state.best, evaluations=state.evaluations)
