"""Shared fixtures: small fields and the benchmark configurations."""

import pytest

from mindist import (CartesianSpec, Ideal, ParameterizedSpec, PointSet,
                     field_make, normalize, parse_polynomial)


@pytest.fixture(scope="session")
def f2():
    return field_make(2)


@pytest.fixture(scope="session")
def f3():
    return field_make(3)


@pytest.fixture(scope="session")
def f4():
    return field_make(2, 2)


@pytest.fixture(scope="session")
def f5():
    return field_make(5)


EIGHT_POINTS_P3 = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1),
                   (1, 2, 2, 1), (1, 1, 1, 1), (2, 2, 1, 1), (2, 1, 2, 1)]

FIVE_POINTS_P2 = [(1, 1, 1), (1, 2, 0), (1, 0, 2), (0, 1, 2), (1, 0, 0)]

CYCLE4_EXPONENTS = [(1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1), (1, 0, 0, 1)]

STAIRCASE_GENS = ["t1^7", "t2^5", "t1^2*t2", "t1*t2^3"]


@pytest.fixture(scope="session")
def eight_points(f3):
    """8 points of P^3 over GF(3) whose vanishing ideal is binomial."""
    return PointSet(f3, [normalize(f3, p) for p in EIGHT_POINTS_P3])


@pytest.fixture(scope="session")
def eight_points_ideal(f3):
    gens = ["t1*t2 - t3*t4", "t1*t3 - t2*t4", "t2*t3 - t1*t4"]
    return Ideal(f3, 4, [parse_polynomial(s, f3, 4) for s in gens])


@pytest.fixture(scope="session")
def five_points(f3):
    """5 points of P^2 over GF(3) with regularity 3 but delta(1) = 1."""
    return PointSet(f3, [normalize(f3, p) for p in FIVE_POINTS_P2])


@pytest.fixture(scope="session")
def cycle_spec(f3):
    """Parameterization by the edge monomials of a 4-cycle, over GF(3)."""
    return ParameterizedSpec(f3, CYCLE4_EXPONENTS)


@pytest.fixture(scope="session")
def staircase_ideal(f5):
    """Zero-dimensional monomial ideal in GF(5)[t1,t2] with deg 13, reg 7."""
    return Ideal(f5, 2, [parse_polynomial(s, f5, 2) for s in STAIRCASE_GENS])


@pytest.fixture(scope="session")
def binary_cube(f2):
    """The nested cartesian configuration A_i = GF(2), s = 3."""
    return CartesianSpec(f2, [[0, 1]] * 3)
