#!/usr/bin/env python3
"""Compare the compiled kernels against the NumPy fallback.

Times the two hot kernels (uniform block generation and population
construction) and a full optimizer run on a 30-dimensional landscape,
then verifies that both backends produced bit-identical results.

Usage: python benchmarks/bench_backends.py [--iters 500] [--repeat 5]
"""

import argparse
import time

import numpy as np

from pssopt import PssParams, SearchDomain, run
from pssopt import _backend, _kernels
from pssopt.objectives import get


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - start)
    return min(times), out


def with_backend(impl, fn):
    saved = (_backend.uniform_block, _backend.scale_population, _backend.mix_population)
    _backend.uniform_block = impl.uniform_block
    _backend.scale_population = impl.scale_population
    _backend.mix_population = impl.mix_population
    try:
        return fn()
    finally:
        (_backend.uniform_block, _backend.scale_population,
         _backend.mix_population) = saved


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--iters", type=int, default=500)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    try:
        from pssopt import _speedups
    except ImportError:
        raise SystemExit("compiled extension not built; nothing to compare")

    backends = [("compiled", _speedups), ("numpy", _kernels)]
    rows = []

    draws = 2 * 30 * 30 * args.iters  # one run's worth of uniforms
    for name, impl in backends:
        t, block = best_of(lambda: impl.uniform_block(42, 0, draws), args.repeat)
        rows.append((f"uniform_block ({draws} draws)", name, t, block))

    dom = SearchDomain.cube(-500, 500, 30)
    reg_lo, reg_hi = np.full(30, -20.0), np.full(30, 20.0)
    u = _kernels.uniform_block(1, 0, 900).reshape(30, 30)
    r = _kernels.uniform_block(2, 0, 900).reshape(30, 30)

    def mix(impl):
        out = None
        for _ in range(args.iters):
            out = impl.mix_population(u, r, 0.95, dom.lower, dom.upper, reg_lo, reg_hi,
                                      dom.integer_mask, dom.integer_lower,
                                      dom.integer_upper)
        return out

    for name, impl in backends:
        t, out = best_of(lambda impl=impl: mix(impl), args.repeat)
        rows.append((f"mix_population x{args.iters}", name, t, out))

    objective = get("schwefel_shifted").evaluate
    params = PssParams(max_iters=args.iters, pop_size=30)

    def full_run(impl):
        return with_backend(impl, lambda: run(objective, dom, params, seed=7))

    for name, impl in backends:
        t, rec = best_of(lambda impl=impl: full_run(impl), args.repeat)
        rows.append((f"full run (n=30, {args.iters} iters)", name, t, rec.history_fitness))

    print(f"{'benchmark':38s} {'backend':9s} {'best of ' + str(args.repeat):>12s}")
    for label, name, t, _ in rows:
        print(f"{label:38s} {name:9s} {t * 1e3:10.2f} ms")

    for i in range(0, len(rows), 2):
        a, b = rows[i][3], rows[i + 1][3]
        assert np.array_equal(np.asarray(a), np.asarray(b)), rows[i][0]
    print("\nbackends agree bit for bit on every benchmark output")


if __name__ == "__main__":
    main()
