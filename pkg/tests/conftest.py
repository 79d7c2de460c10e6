import random

import pytest
from hypothesis import settings

from barnette.catalog import catalog
from barnette.graphs import BipartiteGraph, with_colouring

settings.register_profile("default", deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def cube():
    return catalog("cube").graph


@pytest.fixture(scope="session")
def cube_rotation():
    return catalog("cube").rotation


@pytest.fixture(scope="session")
def k33():
    return catalog("k33").graph


@pytest.fixture(scope="session")
def heawood():
    return catalog("heawood").graph


@pytest.fixture(scope="session")
def asano():
    return catalog("asano")


@pytest.fixture(scope="session")
def c6():
    return with_colouring(
        BipartiteGraph(6, ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5)))
    )


@pytest.fixture(scope="session")
def generated_16():
    from barnette.generator import generate

    return list(generate(16))


def random_edge_pair(g: BipartiteGraph, rng: random.Random):
    """Two edges with four distinct endpoints, for the general expansion."""
    while True:
        e = rng.randrange(g.edge_count)
        f = rng.randrange(g.edge_count)
        if e != f and not set(g.edges[e]) & set(g.edges[f]):
            return e, f
