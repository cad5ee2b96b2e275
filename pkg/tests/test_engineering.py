import numpy as np
import pytest

from pssopt.objectives import (
    CANTILEVER_BEAM,
    GEAR_TRAIN,
    THREE_BAR_TRUSS,
    PenalizedObjective,
    evaluate_constrained,
)


def test_gear_train_table_point():
    raw, violation, penalized = evaluate_constrained(GEAR_TRAIN, np.array([43, 19, 16, 49]))
    assert raw == pytest.approx(2.7009e-12, rel=1e-4)
    assert raw == pytest.approx(2.7008571488865134e-12, rel=1e-12)
    assert violation == 0.0
    assert penalized == raw


def test_gear_train_pair_permutations_equivalent():
    base = evaluate_constrained(GEAR_TRAIN, np.array([43, 19, 16, 49]))[0]
    for x in ([43, 16, 19, 49], [49, 19, 16, 43], [49, 16, 19, 43]):
        assert evaluate_constrained(GEAR_TRAIN, np.array(x, dtype=float))[0] == base


def test_three_bar_truss_table_point():
    x = np.array([0.788683438026281, 0.408224806061712])
    raw, violation, penalized = evaluate_constrained(THREE_BAR_TRUSS, x)
    assert raw == pytest.approx(263.895843501333, abs=1e-9)
    assert violation == 0.0
    assert penalized == raw


def test_three_bar_truss_degenerate_point_is_infeasible_not_nan():
    raw, violation, penalized = evaluate_constrained(THREE_BAR_TRUSS, np.zeros(2))
    assert violation == np.inf
    assert penalized == np.inf
    assert not np.isnan(penalized)


def test_cantilever_table_point():
    x = np.array([6.01683010096092, 5.30655187659779, 4.49420948422588,
                  3.50272928517748, 2.15334341962752])
    raw, violation, penalized = evaluate_constrained(CANTILEVER_BEAM, x)
    assert raw == pytest.approx(1.33995664399519, abs=1e-5)
    assert violation == 0.0
    assert penalized == raw


def test_infeasible_point_is_penalized():
    thin = np.full(5, 0.5)  # stiffness limit badly violated
    raw, violation, penalized = evaluate_constrained(CANTILEVER_BEAM, thin)
    assert violation > 0.0
    assert penalized > raw
    assert penalized == pytest.approx(raw + CANTILEVER_BEAM.penalty_multiplier * violation)


def test_penalized_objective_view():
    fn = PenalizedObjective(THREE_BAR_TRUSS)
    x = THREE_BAR_TRUSS.best_known_x
    assert fn(x) == evaluate_constrained(THREE_BAR_TRUSS, x)[2]


def test_gear_domain_is_integer():
    dom = GEAR_TRAIN.domain
    assert dom.integer_mask.all()
    assert dom.lower[0] == 12.0 and dom.upper[0] == 60.0
