"""Pytest fixtures - the worked instances shared by every test module"""
import random

import pytest

from ksetlab.arrangement import build_arrangement
from ksetlab.instances import generate_instance
from ksetlab.ksets import Instance
from ksetlab.models import GenSpec

Q4_TEXT = "4\n0 0\n4 0\n2 3\n1 1\n"

# Point labels of Q4, also the indices of their dual lines
A, B, C, D = 0, 1, 2, 3

PROPERTY_SEED = 20240611
PROPERTY_TRIALS = 200


def pair(i, j):
    return (min(i, j), max(i, j))


@pytest.fixture(scope="session")
def q4():
    """A(0,0), B(4,0), C(2,3), D(1,1)"""
    return Instance.from_coords([(0, 0), (4, 0), (2, 3), (1, 1)])


@pytest.fixture(scope="session")
def q4_arrangement(q4):
    return build_arrangement(q4)


@pytest.fixture(scope="session")
def chain_end_instance():
    """Duals y = x, y = 5, y = -x: chain 1 does not end on the smallest slope at k = 2"""
    return Instance.from_coords([(1, 0), (0, -5), (-1, 0)])


@pytest.fixture(scope="session")
def triangle():
    return Instance.from_coords([(0, 0), (2, 0), (1, 1)])


@pytest.fixture(scope="session")
def convex_heptagon():
    """Points on y = x^2, so every k-set is cut off by a line below or above the parabola"""
    return generate_instance(GenSpec(shape="parabola", n=7, coord_range=10, seed=5))


@pytest.fixture(scope="session")
def random_instances():
    """The seeded property-suite population: n in [4, 25], uniform integer points"""
    master = random.Random(PROPERTY_SEED)
    instances = []
    for _ in range(PROPERTY_TRIALS):
        n = master.randint(4, 25)
        spec = GenSpec(shape="uniform", n=n, coord_range=1000, seed=master.randrange(2 ** 32))
        instances.append(generate_instance(spec))
    return instances
