from pathlib import Path

import pytest
from hypothesis import settings

from weylgroupoid.cartan_types import cartan_matrix, cartan_type_braiding
from weylgroupoid.scheme import BraidingMatrix, build_from_braiding, build_from_matrices

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

INPUTS = Path(__file__).resolve().parent.parent / "inputs"

THREE_OBJECT_OBJECTS = [
    ("X1", [[2, -1], [-3, 2]]),
    ("X2", [[2, -1], [-4, 2]]),
    ("X3", [[2, -1], [-4, 2]]),
]
THREE_OBJECT_MAPS = [
    {"X1": "X2", "X2": "X1", "X3": "X3"},
    {"X1": "X1", "X2": "X3", "X3": "X2"},
]


def cartan_braiding(letter, n):
    return BraidingMatrix(cartan_type_braiding(cartan_matrix(letter, n)))


def cartan_scheme(letter, n):
    return build_from_braiding(cartan_braiding(letter, n))


@pytest.fixture(scope="session")
def three_object():
    return build_from_matrices(THREE_OBJECT_OBJECTS, THREE_OBJECT_MAPS)


@pytest.fixture(scope="session")
def a2():
    return cartan_scheme("A", 2)


@pytest.fixture(scope="session")
def b2():
    return cartan_scheme("B", 2)


@pytest.fixture(scope="session")
def g2():
    return cartan_scheme("G", 2)


@pytest.fixture(scope="session")
def a1():
    return build_from_braiding(BraidingMatrix([["q^2"]]))


@pytest.fixture(scope="session")
def a1xa1():
    return build_from_matrices([("X", [[2, 0], [0, 2]])], [{"X": "X"}, {"X": "X"}])


@pytest.fixture(scope="session")
def super_a2():
    # three objects, all with the A2 Cartan matrix
    return build_from_braiding(BraidingMatrix([["-1", "z 1/3"], ["1", "-1"]]))


@pytest.fixture(scope="session")
def affine_a1():
    return build_from_matrices([("X", [[2, -2], [-2, 2]])], [{"X": "X"}, {"X": "X"}])
