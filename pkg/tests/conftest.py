from __future__ import annotations

import pytest

from ppd_recognizer.classical_groups import Family, GroupCase, Level, standard_generators
from ppd_recognizer.finite_field import field_make
from ppd_recognizer.matrices import matrix_from_rows
from ppd_recognizer.oracle import enumerate_group


@pytest.fixture(scope="session")
def gf2():
    return field_make(2)


@pytest.fixture(scope="session")
def gf3():
    return field_make(3)


@pytest.fixture(scope="session")
def gf4():
    return field_make(2, 2)


@pytest.fixture(scope="session")
def gf5():
    return field_make(5)


@pytest.fixture(scope="session")
def gl3_2(gf2):
    case = GroupCase(Family.LINEAR, 3, gf2)
    return enumerate_group(standard_generators(case, Level.DELTA))


@pytest.fixture(scope="session")
def gl2_4(gf4):
    case = GroupCase(Family.LINEAR, 2, gf4)
    return enumerate_group(standard_generators(case, Level.DELTA))


@pytest.fixture(scope="session")
def gl2_5(gf5):
    case = GroupCase(Family.LINEAR, 2, gf5)
    return enumerate_group(standard_generators(case, Level.DELTA))


@pytest.fixture
def companion_t3_t_1(gf2):
    """Companion matrix of t^3 + t + 1 over GF(2)."""
    return matrix_from_rows(gf2, [[0, 1, 0], [0, 0, 1], [1, 1, 0]])
