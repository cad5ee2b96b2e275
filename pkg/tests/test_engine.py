import math

import numpy as np
import pytest

from pssopt import (
    EvaluationError,
    INTEGER,
    PssParams,
    RandomStream,
    SearchDomain,
    compute_bandwidth,
    initialize_population,
    run,
    sample_feature,
    update_prominent_region,
)
from pssopt.engine import sample_generation

from conftest import sphere_objective


def test_params_validation():
    with pytest.raises(ValueError):
        PssParams(max_iters=0)
    with pytest.raises(ValueError):
        PssParams(max_iters=5, accept_prob=1.5)
    with pytest.raises(ValueError):
        PssParams(max_iters=5, pop_size=0)


class TestBandwidth:
    def test_hand_example(self):
        dom = SearchDomain.cube(-500, 500, 1)
        params = PssParams(max_iters=20, accept_prob=0.95)
        eta = compute_bandwidth(params, 10, dom)
        assert eta[0] == pytest.approx(12.5, rel=1e-12)

    def test_zero_at_final_iteration(self):
        dom = SearchDomain.cube(-3, 9, 4)
        params = PssParams(max_iters=7, accept_prob=0.6)
        assert np.all(compute_bandwidth(params, 7, dom) == 0.0)

    def test_zero_when_accept_prob_is_one(self):
        dom = SearchDomain.cube(-3, 9, 4)
        params = PssParams(max_iters=7, accept_prob=1.0)
        for i in range(8):
            assert np.all(compute_bandwidth(params, i, dom) == 0.0)

    def test_linear_decay_to_zero(self):
        dom = SearchDomain.cube(0, 10, 2)
        params = PssParams(max_iters=9, accept_prob=0.8)
        etas = np.array([compute_bandwidth(params, i, dom)[0] for i in range(10)])
        steps = np.diff(etas)
        assert np.all(steps < 0)
        assert np.allclose(steps, steps[0], rtol=1e-9)
        assert etas[-1] == 0.0

    def test_iteration_out_of_range(self):
        dom = SearchDomain.cube(0, 1, 1)
        params = PssParams(max_iters=5)
        with pytest.raises(ValueError):
            compute_bandwidth(params, 6, dom)
        with pytest.raises(ValueError):
            compute_bandwidth(params, -1, dom)


class TestProminentRegion:
    def test_hand_example(self):
        dom = SearchDomain.cube(-500, 500, 1)
        region = update_prominent_region(np.array([420.9687]), np.array([12.5]), dom)
        assert region.lower[0] == pytest.approx(408.4687, abs=1e-10)
        assert region.upper[0] == pytest.approx(433.4687, abs=1e-10)

    def test_clipping_at_domain_edge(self):
        dom = SearchDomain.cube(-500, 500, 1)
        region = update_prominent_region(np.array([495.0]), np.array([12.5]), dom)
        assert region.upper[0] == 500.0
        assert region.lower[0] == pytest.approx(482.5)

    def test_zero_bandwidth_degenerates(self):
        dom = SearchDomain.cube(-500, 500, 2)
        center = np.array([10.0, -20.0])
        region = update_prominent_region(center, np.zeros(2), dom)
        assert np.array_equal(region.lower, center)
        assert np.array_equal(region.upper, center)

    def test_center_outside_domain_rejected(self):
        dom = SearchDomain.cube(-1, 1, 2)
        with pytest.raises(ValueError):
            update_prominent_region(np.array([2.0, 0.0]), np.zeros(2), dom)

    def test_negative_bandwidth_rejected(self):
        dom = SearchDomain.cube(-1, 1, 1)
        with pytest.raises(ValueError):
            update_prominent_region(np.array([0.0]), np.array([-0.5]), dom)


class TestSampleFeature:
    def setup_method(self):
        self.dom = SearchDomain.cube(-500, 500, 1)
        self.region = update_prominent_region(
            np.array([420.9687]), np.array([12.5]), self.dom)

    def test_region_branch_midpoint(self):
        v = sample_feature(0, self.region, self.dom, u=0.5, r=0.0, accept_prob=0.95)
        assert v == pytest.approx(420.9687, abs=1e-10)

    def test_domain_branch_midpoint(self):
        v = sample_feature(0, self.region, self.dom, u=0.5, r=0.99, accept_prob=0.95)
        assert v == pytest.approx(0.0, abs=1e-10)

    def test_accept_prob_one_always_uses_region(self):
        for r in (0.0, 0.5, 0.999999):
            v = sample_feature(0, self.region, self.dom, u=0.25, r=r, accept_prob=1.0)
            assert self.region.lower[0] <= v <= self.region.upper[0]

    def test_draw_bounds_enforced(self):
        with pytest.raises(ValueError):
            sample_feature(0, self.region, self.dom, u=1.0, r=0.5, accept_prob=0.95)

    def test_matches_vectorized_kernel(self):
        from pssopt import _backend
        dom = SearchDomain(np.array([-5.0, 12.0]), np.array([5.0, 60.0]),
                           kinds=("continuous", INTEGER))
        region = update_prominent_region(np.array([1.0, 30.0]), np.array([2.0, 4.0]), dom)
        rng = np.random.default_rng(8)
        u = rng.random((40, 2))
        r = rng.random((40, 2))
        x = _backend.mix_population(u, r, 0.8, dom.lower, dom.upper,
                                    region.lower, region.upper, dom.integer_mask,
                                    dom.integer_lower, dom.integer_upper)
        for k in range(40):
            for j in range(2):
                assert x[k, j] == sample_feature(j, region, dom, u[k, j], r[k, j], 0.8)


class TestInitializePopulation:
    def test_degenerate_domain_forces_point(self):
        dom = SearchDomain.cube(0, 0, 3)
        pop = initialize_population(dom, PssParams(max_iters=1, pop_size=10), RandomStream(3))
        assert np.array_equal(pop, np.zeros((10, 3)))

    def test_population_inside_bounds(self):
        dom = SearchDomain.cube(-500, 500, 2)
        pop = initialize_population(dom, PssParams(max_iters=1, pop_size=30), RandomStream(4))
        assert pop.shape == (30, 2)
        assert np.all(pop >= -500) and np.all(pop <= 500)

    def test_same_seed_same_population(self):
        dom = SearchDomain.cube(-500, 500, 2)
        params = PssParams(max_iters=1, pop_size=30)
        a = initialize_population(dom, params, RandomStream(11))
        b = initialize_population(dom, params, RandomStream(11))
        assert np.array_equal(a, b)

    def test_integer_kind_quantized(self):
        dom = SearchDomain.cube(12, 60, 4, kind=INTEGER)
        pop = initialize_population(dom, PssParams(max_iters=1, pop_size=25), RandomStream(5))
        assert np.array_equal(pop, np.rint(pop))
        assert np.all(pop >= 12) and np.all(pop <= 60)


class TestRun:
    def test_bit_identical_reruns(self):
        dom = SearchDomain.cube(-10, 10, 3)
        params = PssParams(max_iters=15, pop_size=8)
        a = run(sphere_objective, dom, params, seed=77)
        b = run(sphere_objective, dom, params, seed=77)
        assert np.array_equal(a.history_fitness, b.history_fitness)
        assert np.array_equal(a.history_x, b.history_x)
        assert a.final_best.fitness == b.final_best.fitness
        assert np.array_equal(a.final_best.x, b.final_best.x)

    def test_history_shape_and_monotonicity(self):
        dom = SearchDomain.cube(-10, 10, 3)
        params = PssParams(max_iters=25, pop_size=6)
        rec = run(sphere_objective, dom, params, seed=3)
        assert rec.history_fitness.shape == (26,)
        assert rec.history_x.shape == (26, 3)
        assert np.all(np.diff(rec.history_fitness) <= 0)
        assert rec.evaluations == 6 * 26
        assert rec.final_best.fitness == rec.history_fitness[-1]
        assert len(rec.history()) == 26

    def test_callback_sees_every_iteration(self):
        dom = SearchDomain.cube(-1, 1, 2)
        seen = []
        run(sphere_objective, dom, PssParams(max_iters=5, pop_size=4), seed=1,
            callback=lambda i, f: seen.append((i, f)))
        assert [i for i, _ in seen] == list(range(6))
        fits = [f for _, f in seen]
        assert fits == sorted(fits, reverse=True) or np.all(np.diff(fits) <= 0)

    def test_nan_aborts_with_point(self):
        dom = SearchDomain.cube(-1, 1, 2)

        def bad(x):
            return math.nan if x[0] > 0 else float(np.sum(x * x))

        with pytest.raises(EvaluationError) as err:
            run(bad, dom, PssParams(max_iters=50, pop_size=10), seed=2)
        assert err.value.x.shape == (2,)
        assert err.value.x[0] > 0

    def test_infinite_fitness_is_legal(self):
        dom = SearchDomain.cube(-1, 1, 2)

        def spiky(x):
            return math.inf if x[0] > 0 else float(np.sum(x * x))

        rec = run(spiky, dom, PssParams(max_iters=10, pop_size=5), seed=2)
        assert math.isfinite(rec.final_best.fitness)

    def test_integer_candidates_stay_whole(self):
        dom = SearchDomain.cube(12, 60, 4, kind=INTEGER)
        rec = run(sphere_objective, dom, PssParams(max_iters=30, pop_size=10), seed=6)
        assert np.array_equal(rec.history_x, np.rint(rec.history_x))

    def test_retighten_toggle_changes_trajectory(self):
        dom = SearchDomain.cube(-500, 500, 4)
        params = PssParams(max_iters=60, pop_size=10)
        frozen = run(sphere_objective, dom, params, seed=12)
        eager = run(sphere_objective, dom, params, seed=12, retighten_on_stall=True)
        assert not np.array_equal(frozen.history_fitness, eager.history_fitness)


def test_acceptance_fraction_matches_rejection_rate():
    # with a zero-width region every full-box component differs from the
    # center almost surely, so the off-center fraction estimates 1 - accept_prob
    dom = SearchDomain.cube(-500, 500, 30)
    center = np.linspace(-400, 400, 30)
    region = update_prominent_region(center, np.zeros(30), dom)
    for accept_prob in (0.95, 0.7, 0.5):
        p = 1.0 - accept_prob
        sigma = math.sqrt(p * (1 - p) / 900.0)
        for seed in (101, 202, 303):
            pop = sample_generation(RandomStream(seed), dom, accept_prob, region, 30)
            fraction = float(np.mean(pop != center))
            assert abs(fraction - p) <= 4 * sigma
