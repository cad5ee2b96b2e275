import numpy as np
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "pkg", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("pkg")


@pytest.fixture
def schwefel_domain_2d():
    from pssopt import SearchDomain
    return SearchDomain.cube(-500, 500, 2)


def sphere_objective(x):
    return float(np.sum(x * x))
