import random
from fractions import Fraction

import pytest
from mpmath import mp

from awhecke.params import ParamSet


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture
def p_generic():
    """A generic exact tuple used across the exact-layer tests."""
    return ParamSet(Fraction(1, 2), Fraction(1, 3), Fraction(1, 5), Fraction(1, 7), Fraction(2, 5))


@pytest.fixture
def p_square():
    """Square-compatible tuple: q = (3/5)^2 and sqrt(abcd/q) = 3/2."""
    q = Fraction(9, 25)
    a, b, c, r = Fraction(1, 2), Fraction(1, 3), Fraction(1, 5), Fraction(3, 2)
    return ParamSet(a, b, c, q * r * r / (a * b * c), q)


@pytest.fixture
def workdps50():
    with mp.workdps(65):
        yield
