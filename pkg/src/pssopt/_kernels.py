"""NumPy implementations of the hot kernels.

These are the fallback for :mod:`pssopt._speedups`; both backends must
produce bit-identical outputs.  Every kernel sticks to elementwise IEEE
double operations applied in the same order as the compiled loops, which
is what makes the equivalence exact rather than approximate.

The generator is SplitMix64 (Steele, Lea & Burton; the JDK 8
``SplittableRandom`` mixer) evaluated in counter mode: output ``i`` of a
stream seeded with ``s`` is ``mix64(s + (i + 1) * GOLDEN)`` with all
arithmetic modulo 2**64.  Doubles are formed as ``(out >> 11) * 2**-53``,
giving uniforms on [0, 1).
"""

import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB
_INV_2_53 = 1.0 / 9007199254740992.0

_U64_GOLDEN = np.uint64(GOLDEN)
_U64_MIX1 = np.uint64(_MIX1)
_U64_MIX2 = np.uint64(_MIX2)
_30 = np.uint64(30)
_27 = np.uint64(27)
_31 = np.uint64(31)
_11 = np.uint64(11)


def mix64(z: int) -> int:
    """SplitMix64 finalizer on a Python int, reduced modulo 2**64."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * _MIX1) & MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & MASK64
    return z ^ (z >> 31)


def splitmix64_at(seed: int, index: int) -> int:
    """Raw 64-bit output at stream position ``index`` (counter form)."""
    return mix64((seed + ((index + 1) * GOLDEN)) & MASK64)


def uniform_block(seed: int, position: int, count: int) -> np.ndarray:
    """Doubles in [0, 1) for stream positions position..position+count-1."""
    idx = np.arange(1, count + 1, dtype=np.uint64) + np.uint64(position & MASK64)
    z = np.uint64(seed & MASK64) + idx * _U64_GOLDEN
    z = (z ^ (z >> _30)) * _U64_MIX1
    z = (z ^ (z >> _27)) * _U64_MIX2
    z ^= z >> _31
    return (z >> _11).astype(np.float64) * _INV_2_53


def scale_population(u, lower, upper, int_mask, int_lower, int_upper):
    """Map a coefficient matrix onto the box [lower, upper] column-wise.

    Integer columns are rounded to the nearest whole number and clamped
    into [int_lower, int_upper].
    """
    x = lower + u * (upper - lower)
    mask = int_mask.astype(bool)
    if mask.any():
        q = np.rint(x[:, mask])
        np.clip(q, int_lower[mask], int_upper[mask], out=q)
        x[:, mask] = q
    return x


def mix_population(u, r, accept_prob, lower, upper, reg_lower, reg_upper,
                   int_mask, int_lower, int_upper):
    """Build one generation: each component comes from the tightened region
    when its acceptance draw r <= accept_prob, otherwise from the full box.
    """
    from_region = reg_lower + u * (reg_upper - reg_lower)
    from_domain = lower + u * (upper - lower)
    x = np.where(r <= accept_prob, from_region, from_domain)
    mask = int_mask.astype(bool)
    if mask.any():
        q = np.rint(x[:, mask])
        np.clip(q, int_lower[mask], int_upper[mask], out=q)
        x[:, mask] = q
    return x
