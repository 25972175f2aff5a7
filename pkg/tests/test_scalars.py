from fractions import Fraction

import mpmath
import pytest
from mpmath import mpc, mpf

from awhecke.errors import BranchCutError, NotASquareError
from awhecke.scalars import (
    is_exact,
    parse_scalar,
    recip,
    scalar_str,
    sqrt_exact,
    sqrt_scalar,
)


def test_sqrt_exact_perfect_squares():
    assert sqrt_exact(Fraction(9, 25)) == Fraction(3, 5)
    assert sqrt_exact(Fraction(240 * 240)) == 240


def test_sqrt_exact_rejects_non_squares():
    with pytest.raises(NotASquareError):
        sqrt_exact(Fraction(2))
    with pytest.raises(NotASquareError):
        sqrt_exact(Fraction(-9, 25))


def test_sqrt_scalar_principal_branch():
    v = sqrt_scalar(mpc(0, 4))
    assert mpmath.re(v) > 0  # principal: argument halved into the right half plane
    assert abs(v * v - mpc(0, 4)) < mpf("1e-12")


@pytest.mark.parametrize("bad", [mpf(-4), mpc(-1, 0), mpf(0)])
def test_sqrt_scalar_branch_cut(bad):
    with pytest.raises(BranchCutError):
        sqrt_scalar(bad)


def test_backend_detection_and_recip():
    assert is_exact(Fraction(1, 3)) and is_exact(7)
    assert not is_exact(mpf(1))
    assert recip(2) == Fraction(1, 2) and isinstance(recip(2), Fraction)


def test_parse_and_str_roundtrip():
    assert parse_scalar("3/7") == Fraction(3, 7)
    assert scalar_str(Fraction(3, 7)) == "3/7"
    assert scalar_str(Fraction(4, 2)) == "2"
    assert parse_scalar("1.5") == Fraction(3, 2)
