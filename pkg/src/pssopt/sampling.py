"""Seedable uniform sampling used to drive the optimizer.

The stream algorithm is pinned so that a seed means the same thing on
every platform and in every release: SplitMix64 in counter mode (see
:mod:`pssopt._kernels` for the exact definition).  All draws are doubles
on the half-open interval [0, 1), which keeps interval scaling inside
its bounds.
"""

from __future__ import annotations

import abc

import numpy as np

from pssopt import _backend
from pssopt._kernels import MASK64, splitmix64_at


class RandomStream:
    """A deterministic uniform stream owned by a single run.

    Identical seeds replay identical draw sequences bit for bit.  The
    stream is counter-based: ``position`` counts doubles handed out so
    far, and replaying from any position is exact.  Instances are not
    thread-safe; concurrent replicates should each own a stream derived
    via :func:`replicate_seed`.
    """

    __slots__ = ("_seed", "_position")

    def __init__(self, seed: int, position: int = 0):
        if position < 0:
            raise ValueError("position must be non-negative")
        self._seed = int(seed) & MASK64
        self._position = int(position)

    @property
    def seed(self) -> int:
        return self._seed

    @property
    def position(self) -> int:
        """Number of doubles drawn so far."""
        return self._position

    def uniform(self, count: int) -> np.ndarray:
        """Draw ``count`` doubles in [0, 1), advancing the stream."""
        if count < 0:
            raise ValueError("count must be non-negative")
        block = _backend.uniform_block(self._seed, self._position, count)
        self._position += count
        return block

    def __repr__(self) -> str:
        return f"RandomStream(seed={self._seed}, position={self._position})"


def replicate_seed(base_seed: int, index: int) -> int:
    """Derive the seed for replicate ``index`` from a base seed.

    Splitting rule: replicate ``k`` uses raw SplitMix64 output ``k`` of
    the stream seeded with ``base_seed``.  The rule is a pure function of
    (base_seed, index), so replicates may run in any order or in parallel
    without affecting results.
    """
    if index < 0:
        raise ValueError("replicate index must be non-negative")
    return splitmix64_at(int(base_seed) & MASK64, index)


def uniform_matrix(stream: RandomStream, rows: int, cols: int) -> np.ndarray:
    """Draw a rows x cols matrix of i.i.d. uniforms on [0, 1).

    Consumes exactly ``rows * cols`` draws in row-major order.
    """
    if rows < 1 or cols < 1:
        raise ValueError("uniform_matrix requires rows >= 1 and cols >= 1")
    return stream.uniform(rows * cols).reshape(rows, cols)


def scale_to_interval(u: float, lower: float, upper: float) -> float:
    """Map u in [0, 1) onto [lower, upper) as lower + u * (upper - lower)."""
    if lower > upper:
        raise ValueError(f"lower bound {lower} exceeds upper bound {upper}")
    return lower + u * (upper - lower)


class Sampler(abc.ABC):
    """Source of coefficient matrices for population construction.

    Only the plain Monte Carlo implementation exists; the interface is
    kept so stratified designs can slot in without touching the engine.
    """

    @abc.abstractmethod
    def coefficients(self, stream: RandomStream, rows: int, cols: int) -> np.ndarray:
        """Return a rows x cols matrix with entries in [0, 1)."""


class MonteCarloSampler(Sampler):
    """I.i.d. uniform coefficients."""

    def coefficients(self, stream: RandomStream, rows: int, cols: int) -> np.ndarray:
        return uniform_matrix(stream, rows, cols)


class LatinHypercubeSampler(Sampler):
    """Placeholder slot for a stratified design; not implemented."""

    def coefficients(self, stream: RandomStream, rows: int, cols: int) -> np.ndarray:
        raise NotImplementedError("Latin hypercube sampling is not implemented")
