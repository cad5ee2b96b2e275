"""The standard benchmark landscape suite.

Sixteen classic test functions plus the shifted Schwefel variant used in
30-dimensional comparisons.  Minimizer coordinates below are refined to
double precision (gradient polish of the textbook starting points), so
evaluating a stored point reproduces the stored value to ~1e-15.
"""

from __future__ import annotations

import numpy as np

from pssopt.domain import SearchDomain
from pssopt.objectives.registry import ObjectiveSpec, register

# max of t*sin(sqrt(t)) on [0, 500]; attained at SCHWEFEL_XSTAR
SCHWEFEL_XSTAR = 420.9687463599821
SCHWEFEL_PEAK = 418.98288727243374


def sphere(x):
    return float(np.sum(x * x))


def sum_squares(x):
    i = np.arange(1, x.size + 1)
    return float(np.sum(i * x * x))


def chung_reynolds(x):
    s = np.sum(x * x)
    return float(s * s)


def schwefel_2_21(x):
    return float(np.max(np.abs(x)))


def schwefel_2_22(x):
    a = np.abs(x)
    return float(np.sum(a) + np.prod(a))


def rosenbrock(x):
    return float(np.sum(100.0 * (x[1:] - x[:-1] ** 2) ** 2 + (1.0 - x[:-1]) ** 2))


def trid(x):
    return float(np.sum((x - 1.0) ** 2) - np.sum(x[1:] * x[:-1]))


def zakharov(x):
    s = np.sum(0.5 * np.arange(1, x.size + 1) * x)
    return float(np.sum(x * x) + s ** 2 + s ** 4)


def griewank(x):
    i = np.arange(1, x.size + 1)
    return float(1.0 + np.sum(x * x) / 4000.0 - np.prod(np.cos(x / np.sqrt(i))))


def ackley(x):
    n = x.size
    return float(-20.0 * np.exp(-0.2 * np.sqrt(np.sum(x * x) / n))
                 - np.exp(np.sum(np.cos(2.0 * np.pi * x)) / n) + 20.0 + np.e)


def schwefel(x):
    return float(418.9829 * x.size - np.sum(x * np.sin(np.sqrt(np.abs(x)))))


def schwefel_shifted(x):
    return float(-np.sum(x * np.sin(np.sqrt(np.abs(x)))))


def shubert(x):
    j = np.arange(1.0, 6.0)
    return float(np.prod([np.sum(np.cos((j + 1.0) * xi + j)) for xi in x]))


def six_hump_camel(x):
    x1, x2 = x
    return float((4.0 - 2.1 * x1 ** 2 + x1 ** 4 / 3.0) * x1 ** 2 + x1 * x2
                 + (-4.0 + 4.0 * x2 ** 2) * x2 ** 2)


def goldstein(x):
    x1, x2 = x
    a = 1.0 + (x1 + x2 + 1.0) ** 2 * (19.0 - 14.0 * x1 + 3.0 * x1 ** 2
                                      - 14.0 * x2 + 6.0 * x1 * x2 + 3.0 * x2 ** 2)
    b = 30.0 + (2.0 * x1 - 3.0 * x2) ** 2 * (18.0 - 32.0 * x1 + 12.0 * x1 ** 2
                                             + 48.0 * x2 - 36.0 * x1 * x2 + 27.0 * x2 ** 2)
    return float(a * b)


_DEJONG_A1 = np.tile(np.array([-32.0, -16.0, 0.0, 16.0, 32.0]), 5)
_DEJONG_A2 = np.repeat(np.array([-32.0, -16.0, 0.0, 16.0, 32.0]), 5)


def de_jong_5(x):
    denom = np.arange(1.0, 26.0) + (x[0] - _DEJONG_A1) ** 6 + (x[1] - _DEJONG_A2) ** 6
    return float(1.0 / (1.0 / 500.0 + np.sum(1.0 / denom)))


_HARTMANN_ALPHA = np.array([1.0, 1.2, 3.0, 3.2])
_HARTMANN_A = np.array([[3.0, 10.0, 30.0],
                        [0.1, 10.0, 35.0],
                        [3.0, 10.0, 30.0],
                        [0.1, 10.0, 35.0]])
_HARTMANN_P = 1e-4 * np.array([[3689.0, 1170.0, 2673.0],
                               [4699.0, 4387.0, 7470.0],
                               [1091.0, 8732.0, 5547.0],
                               [381.0, 5743.0, 8828.0]])


def hartmann_3(x):
    inner = np.sum(_HARTMANN_A * (x - _HARTMANN_P) ** 2, axis=1)
    return float(-np.sum(_HARTMANN_ALPHA * np.exp(-inner)))


def _box(lo, hi):
    return lambda n: SearchDomain.cube(lo, hi, n)


def _at_origin(n):
    return np.zeros(n)


def _zero(n):
    return 0.0


def _register_simple(pid, fn, lo, hi, summary, min_dims=1):
    """Any-n function whose published optimum is 0 at the origin."""
    register(ObjectiveSpec(
        id=pid, evaluate=fn, domain_for=_box(lo, hi), min_dims=min_dims,
        optimum_for=_zero, optimum_point_for=_at_origin, summary=summary))


_register_simple("sphere", sphere, -100, 100, "sum of squares")
_register_simple("sum_squares", sum_squares, -10, 10, "index-weighted sum of squares")
_register_simple("chung_reynolds", chung_reynolds, -100, 100, "squared sphere")
_register_simple("schwefel_2_21", schwefel_2_21, -100, 100, "max absolute component")
_register_simple("schwefel_2_22", schwefel_2_22, -10, 10, "abs sum plus abs product")
_register_simple("zakharov", zakharov, -5, 10, "sphere plus quartic cross term")
_register_simple("griewank", griewank, -600, 600, "sphere modulated by cosines")
_register_simple("ackley", ackley, -32, 32, "exponential well with cosine ripple")

register(ObjectiveSpec(
    id="rosenbrock", evaluate=rosenbrock, domain_for=_box(-30, 30), min_dims=2,
    optimum_for=_zero, optimum_point_for=lambda n: np.ones(n),
    summary="banana valley"))

register(ObjectiveSpec(
    id="trid", evaluate=trid, domain_for=lambda n: SearchDomain.cube(-(n ** 2), n ** 2, n),
    min_dims=2,
    optimum_for=lambda n: -n * (n + 4.0) * (n - 1.0) / 6.0,
    optimum_point_for=lambda n: np.arange(1.0, n + 1.0) * (n + 1.0 - np.arange(1.0, n + 1.0)),
    summary="coupled quadratic, optimum -50 at n=6"))

register(ObjectiveSpec(
    id="schwefel", evaluate=schwefel, domain_for=_box(-500, 500),
    optimum_for=_zero,
    optimum_point_for=lambda n: np.full(n, SCHWEFEL_XSTAR),
    # the 418.9829 offset is rounded, so the attained minimum is slightly > 0
    attained_for=lambda n: n * (418.9829 - SCHWEFEL_PEAK),
    summary="deceptive sine landscape, published optimum 0"))

register(ObjectiveSpec(
    id="schwefel_shifted", evaluate=schwefel_shifted, domain_for=_box(-500, 500),
    optimum_for=lambda n: -418.9829 * n,
    optimum_point_for=lambda n: np.full(n, SCHWEFEL_XSTAR),
    attained_for=lambda n: -n * SCHWEFEL_PEAK,
    summary="unshifted sine landscape, optimum -418.9829*n"))

register(ObjectiveSpec(
    id="shubert", evaluate=shubert, domain_for=_box(-10, 10),
    summary="product of cosine sums (no published optimum for this form)"))

register(ObjectiveSpec(
    id="six_hump_camel", evaluate=six_hump_camel, domain_for=_box(-5, 5), fixed_dims=2,
    optimum_for=lambda n: -1.0316284534898772,
    optimum_point_for=lambda n: np.array([0.0898420091418852, -0.7126564053924365]),
    summary="two global minima at -1.0316"))

register(ObjectiveSpec(
    id="goldstein", evaluate=goldstein, domain_for=_box(-2, 2), fixed_dims=2,
    optimum_for=lambda n: 3.0,
    optimum_point_for=lambda n: np.array([0.0, -1.0]),
    summary="quartic surface, optimum 3 at (0, -1)"))

register(ObjectiveSpec(
    id="de_jong_5", evaluate=de_jong_5, domain_for=_box(-65.536, 65.536), fixed_dims=2,
    optimum_for=lambda n: 0.9980038377944498,
    optimum_point_for=lambda n: np.array([-31.978334214983256, -31.97833392801104]),
    summary="foxholes grid, optimum 0.998004"))

register(ObjectiveSpec(
    id="hartmann_3", evaluate=hartmann_3, domain_for=_box(0, 1), fixed_dims=3,
    optimum_for=lambda n: -3.862779787332661,
    optimum_point_for=lambda n: np.array([0.11458887807015898, 0.5556488902630914,
                                          0.8525469812926446]),
    summary="four-peak exponential mixture, optimum -3.8628"))
