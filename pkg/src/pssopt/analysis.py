"""Probability toolkit for parameter choices, plus run-statistics helpers.

The probabilities treat a 1-D landscape as N equally likely grid points,
n' of which fall inside the region that leads to the global optimum.
Multi-dimensional problems multiply the per-dimension probabilities
(independent variables); only the 1-D primitive is provided here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from pssopt.engine import RunRecord


@dataclass(frozen=True)
class OccupancyCount:
    """Grid points inside a target region (n_prime) out of all points."""

    n_prime: int
    n_total: int

    def __post_init__(self):
        if self.n_total < 1:
            raise ValueError("n_total must be >= 1")
        if not 0 <= self.n_prime <= self.n_total:
            raise ValueError("n_prime must lie in [0, n_total]")


@dataclass(frozen=True)
class StatsSummary:
    """Order statistics and moments of a sample."""

    min: float
    max: float
    median: float
    mean: float
    std: float
    count: int


def p_in_prominent(occ: OccupancyCount) -> float:
    """Probability that one uniform draw lands inside the target region."""
    return occ.n_prime / occ.n_total


def p_at_least_one(occ: OccupancyCount, draws: int) -> float:
    """Probability that at least one of ``draws`` uniform draws lands inside."""
    if draws < 1:
        raise ValueError("draws must be >= 1")
    return 1.0 - (1.0 - occ.n_prime / occ.n_total) ** draws


def exploration_probability(occ: OccupancyCount, draws: int, accept_prob: float) -> float:
    """Chance a full-box draw discovers the target region.

    Constant over the whole run by construction: nothing here depends on
    an iteration index, only on the landscape occupancy, the population
    size, and the acceptance probability.
    """
    _check_prob(accept_prob)
    return p_at_least_one(occ, draws) * (1.0 - accept_prob)


def intensification_probability(occ: OccupancyCount, draws: int, accept_prob: float) -> float:
    """Chance a tightened-region draw improves on the incumbent.

    ``occ`` must be measured over the current tightened region, so unlike
    exploration this quantity shifts as the region moves and shrinks.
    """
    _check_prob(accept_prob)
    return p_at_least_one(occ, draws) * accept_prob


def _check_prob(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise ValueError("accept_prob must lie in [0, 1]")


def discretize_occupancy(f: Callable[[float], float], lower: float, upper: float,
                         grid: int, threshold: float) -> OccupancyCount:
    """Count grid points with f(x) strictly below a threshold.

    Evaluates f on ``grid`` uniformly spaced points including both
    endpoints.  Strict inequality matches the convention that the
    threshold line itself is not an improvement.
    """
    if grid < 2:
        raise ValueError("grid must be >= 2")
    if not lower < upper:
        raise ValueError("lower must be strictly below upper")
    xs = np.linspace(lower, upper, grid)
    ys = np.array([float(f(x)) for x in xs])
    if not np.all(np.isfinite(ys)):
        bad = xs[~np.isfinite(ys)][0]
        raise ValueError(f"objective is not finite at x={bad}")
    return OccupancyCount(int(np.count_nonzero(ys < threshold)), grid)


def grid_local_minima(f: Callable[[float], float], lower: float, upper: float,
                      grid: int) -> np.ndarray:
    """Sorted values of strict interior local minima on a uniform grid.

    Candidate thresholds for :func:`discretize_occupancy`; picking which
    valley separates the global basin is left to the caller.
    """
    if grid < 3:
        raise ValueError("grid must be >= 3 to detect interior minima")
    xs = np.linspace(lower, upper, grid)
    ys = np.array([float(f(x)) for x in xs])
    inner = (ys[1:-1] < ys[:-2]) & (ys[1:-1] < ys[2:])
    return np.sort(ys[1:-1][inner])


def success_rate(runs: Sequence[RunRecord], region_lower, region_upper) -> float:
    """Fraction of runs whose final best lies inside a coordinate box."""
    region_lower = np.asarray(region_lower, dtype=np.float64)
    region_upper = np.asarray(region_upper, dtype=np.float64)
    if not runs:
        raise ValueError("need at least one run")
    hits = 0
    for record in runs:
        x = record.final_best.x
        if x.shape != region_lower.shape or x.shape != region_upper.shape:
            raise ValueError("region dimensionality must match the runs")
        if np.all(x >= region_lower) and np.all(x <= region_upper):
            hits += 1
    return hits / len(runs)


def aggregate_stats(values: Sequence[float]) -> StatsSummary:
    """Exact order statistics; sample (n-1) standard deviation.

    The even-count median is the midpoint of the two central values.  A
    single observation has zero standard deviation by convention.
    """
    arr = np.asarray(values, dtype=np.float64)
    if arr.size == 0:
        raise ValueError("cannot aggregate an empty sequence")
    std = 0.0 if arr.size == 1 else float(np.std(arr, ddof=1))
    return StatsSummary(
        min=float(np.min(arr)),
        max=float(np.max(arr)),
        median=float(np.median(arr)),
        mean=float(np.mean(arr)),
        std=std,
        count=int(arr.size),
    )
