import numpy as np
import pytest
from hypothesis import settings

from macfb.bounds import Region, RegionSpec, region_boundary
from macfb.symrate import solve_cl_symmetric, solve_db_symmetric

settings.register_profile("deterministic", derandomize=True, max_examples=200)
settings.load_profile("deterministic")


@pytest.fixture(scope="session")
def db_solution():
    return solve_db_symmetric()


@pytest.fixture(scope="session")
def cl_solution():
    return solve_cl_symmetric()


@pytest.fixture(scope="session")
def cl_curve():
    return region_boundary(RegionSpec(Region.COVER_LEUNG, 201))


@pytest.fixture(scope="session")
def dbpc_curve():
    return region_boundary(RegionSpec(Region.DBPC, 201))


@pytest.fixture(scope="session")
def cutset_curve():
    return region_boundary(RegionSpec(Region.CUTSET, 201))


@pytest.fixture()
def rng():
    return np.random.default_rng(20240817)
