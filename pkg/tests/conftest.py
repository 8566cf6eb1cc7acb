import numpy as np
import pytest

from polymg.dgcore import build_level
from polymg.polymesh import UNIT_SQUARE, build_hierarchy, cached_voronoi_mesh, structured_quad_mesh


@pytest.fixture(scope="session")
def mesh16():
    return cached_voronoi_mesh(UNIT_SQUARE, 16, 3)


@pytest.fixture(scope="session")
def mesh32():
    return cached_voronoi_mesh(UNIT_SQUARE, 32, 5)


@pytest.fixture(scope="session")
def quad_mesh():
    return structured_quad_mesh(3)


@pytest.fixture(scope="session")
def pair_meshes():
    """(coarse, fine) non-nested Voronoi meshes with 8 and 32 cells."""
    return build_hierarchy(UNIT_SQUARE, 32, 2, seed=11).levels


@pytest.fixture(scope="session")
def pair_levels(pair_meshes):
    coarse, fine = pair_meshes
    return build_level(fine, 2), build_level(coarse, 1)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
