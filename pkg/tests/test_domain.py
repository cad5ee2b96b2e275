import numpy as np
import pytest

from pssopt import CONTINUOUS, INTEGER, SearchDomain, quantize


def test_quantize_examples():
    assert quantize(16.4, INTEGER, 12, 60) == 16
    assert quantize(3.7, CONTINUOUS, 0, 10) == 3.7
    assert quantize(11.9, INTEGER, 12, 60) == 12


def test_quantize_no_integer_in_range():
    with pytest.raises(ValueError):
        quantize(0.5, INTEGER, 0.2, 0.8)


def test_quantize_rejects_unknown_kind():
    with pytest.raises(ValueError):
        quantize(1.0, "categorical", 0, 2)


def test_domain_validation():
    with pytest.raises(ValueError):
        SearchDomain(np.array([0.0, 1.0]), np.array([1.0]))
    with pytest.raises(ValueError):
        SearchDomain(np.array([2.0]), np.array([1.0]))
    with pytest.raises(ValueError):
        SearchDomain(np.array([0.0]), np.array([1.0]), kinds=("weird",))
    with pytest.raises(ValueError):
        SearchDomain(np.array([0.2]), np.array([0.8]), kinds=(INTEGER,))
    with pytest.raises(ValueError):
        SearchDomain(np.array([]), np.array([]))
    with pytest.raises(ValueError):
        SearchDomain(np.array([0.0]), np.array([np.inf]))


def test_cube_and_derived_arrays():
    dom = SearchDomain.cube(12, 60, 4, kind=INTEGER)
    assert dom.dims == 4
    assert np.array_equal(dom.span, np.full(4, 48.0))
    assert dom.integer_mask.all()
    assert np.array_equal(dom.integer_lower, np.full(4, 12.0))
    assert np.array_equal(dom.integer_upper, np.full(4, 60.0))


def test_contains_checks_bounds_and_integrality():
    dom = SearchDomain(np.array([0.0, 12.0]), np.array([1.0, 60.0]),
                       kinds=(CONTINUOUS, INTEGER))
    assert dom.contains(np.array([0.5, 13.0]))
    assert not dom.contains(np.array([0.5, 13.4]))
    assert not dom.contains(np.array([1.5, 13.0]))
    assert not dom.contains(np.array([0.5]))


def test_degenerate_bounds_allowed():
    dom = SearchDomain(np.array([3.0, -1.0]), np.array([3.0, 1.0]))
    assert dom.contains(np.array([3.0, 0.0]))
