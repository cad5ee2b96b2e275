"""Search-space description: per-variable bounds and variable kinds."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

CONTINUOUS = "continuous"
INTEGER = "integer"
_KINDS = (CONTINUOUS, INTEGER)


def quantize(value: float, kind: str, lower: float, upper: float) -> float:
    """Snap a value to its variable kind.

    Continuous values pass through.  Integer values are rounded to the
    nearest whole number (ties to even, matching the vectorized kernels)
    and clamped into [ceil(lower), floor(upper)].
    """
    if kind == CONTINUOUS:
        return value
    if kind != INTEGER:
        raise ValueError(f"unknown variable kind {kind!r}")
    lo = math.ceil(lower)
    hi = math.floor(upper)
    if lo > hi:
        raise ValueError(f"no whole number inside [{lower}, {upper}]")
    return float(min(max(float(np.rint(value)), lo), hi))


@dataclass(frozen=True)
class SearchDomain:
    """Box bounds plus a continuous/integer kind per variable."""

    lower: np.ndarray
    upper: np.ndarray
    kinds: tuple[str, ...] = field(default=())

    def __post_init__(self):
        lower = np.asarray(self.lower, dtype=np.float64).copy()
        upper = np.asarray(self.upper, dtype=np.float64).copy()
        if lower.ndim != 1 or upper.ndim != 1:
            raise ValueError("bounds must be one-dimensional")
        if lower.size != upper.size or lower.size < 1:
            raise ValueError("lower and upper must share a positive length")
        kinds = self.kinds or (CONTINUOUS,) * lower.size
        if len(kinds) != lower.size:
            raise ValueError("kinds length must match bounds")
        for kind in kinds:
            if kind not in _KINDS:
                raise ValueError(f"unknown variable kind {kind!r}")
        if not np.all(np.isfinite(lower)) or not np.all(np.isfinite(upper)):
            raise ValueError("bounds must be finite")
        if np.any(lower > upper):
            raise ValueError("every lower bound must be <= its upper bound")
        for j, kind in enumerate(kinds):
            if kind == INTEGER and math.ceil(lower[j]) > math.floor(upper[j]):
                raise ValueError(f"dimension {j} admits no whole number")
        lower.setflags(write=False)
        upper.setflags(write=False)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        object.__setattr__(self, "kinds", tuple(kinds))

    @classmethod
    def cube(cls, lower: float, upper: float, dims: int, kind: str = CONTINUOUS) -> "SearchDomain":
        """Same bounds and kind in every dimension."""
        return cls(np.full(dims, float(lower)), np.full(dims, float(upper)), (kind,) * dims)

    @property
    def dims(self) -> int:
        return self.lower.size

    @cached_property
    def span(self) -> np.ndarray:
        out = self.upper - self.lower
        out.setflags(write=False)
        return out

    @cached_property
    def integer_mask(self) -> np.ndarray:
        out = np.array([k == INTEGER for k in self.kinds], dtype=np.uint8)
        out.setflags(write=False)
        return out

    @cached_property
    def integer_lower(self) -> np.ndarray:
        out = np.ceil(self.lower)
        out.setflags(write=False)
        return out

    @cached_property
    def integer_upper(self) -> np.ndarray:
        out = np.floor(self.upper)
        out.setflags(write=False)
        return out

    def contains(self, x: np.ndarray) -> bool:
        """True when x is inside the box with whole-number integer parts."""
        x = np.asarray(x, dtype=np.float64)
        if x.shape != (self.dims,):
            return False
        if np.any(x < self.lower) or np.any(x > self.upper):
            return False
        mask = self.integer_mask.astype(bool)
        return not mask.any() or bool(np.all(x[mask] == np.rint(x[mask])))
