"""Scalar backends: exact rationals and arbitrary-precision complex numbers.

Exact values are plain ``int``/``fractions.Fraction``; numeric values are
mpmath ``mpf``/``mpc``.  The principal square root follows the convention
used throughout the library: the branch cut is (-inf, 0] and sqrt(x) > 0
for x > 0.  In the exact backend a square root is permitted only when the
radicand is a perfect square of a rational.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath
from mpmath import mp, mpc, mpf

from .errors import BranchCutError, NotASquareError

EXACT_TYPES = (int, Fraction)
DEFAULT_DIGITS = 50


def is_exact(x) -> bool:
    """True for the exact-rational backend, False for mpmath values."""
    return isinstance(x, EXACT_TYPES)


def all_exact(*xs) -> bool:
    return all(is_exact(x) for x in xs)


def sqrt_exact(x) -> Fraction:
    """Exact square root of a rational; raises NotASquareError otherwise."""
    x = Fraction(x)
    if x < 0:
        raise NotASquareError(f"negative rational {x} has no rational square root")
    pn = math.isqrt(x.numerator)
    pd = math.isqrt(x.denominator)
    if pn * pn != x.numerator or pd * pd != x.denominator:
        raise NotASquareError(f"{x} is not a perfect rational square")
    return Fraction(pn, pd)


def sqrt_scalar(x):
    """Principal square root in either backend.

    Raises BranchCutError when a numeric radicand lies on (-inf, 0] and
    NotASquareError when an exact radicand is not a perfect square.
    """
    if is_exact(x):
        return sqrt_exact(x)
    xc = mpmath.mpmathify(x)
    if mpmath.im(xc) == 0 and mpmath.re(xc) <= 0:
        raise BranchCutError(f"radicand {xc} lies on the branch cut (-inf, 0]")
    return mpmath.sqrt(xc)


def recip(x):
    """Reciprocal staying in the exact backend for exact input."""
    if is_exact(x):
        return Fraction(1, 1) / x
    return 1 / x


def to_numeric(x):
    """Convert any scalar to an mpmath value at the current precision."""
    if isinstance(x, Fraction):
        return mpf(x.numerator) / x.denominator
    return mpmath.mpmathify(x)


def parse_scalar(text: str):
    """Parse a command-line scalar: 'p/q' exact, decimal or 'x+yj' numeric."""
    text = text.strip()
    try:
        return Fraction(text)
    except ValueError:
        pass
    return mpmath.mpmathify(text.replace("i", "j"))


def scalar_str(x, digits: int = 17) -> str:
    """Deterministic string form used in JSON reports."""
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"
    xc = mpmath.mpmathify(x)
    if mpmath.im(xc) == 0:
        return mpmath.nstr(mpmath.re(xc), digits)
    return mpmath.nstr(xc, digits)


def real_part(x):
    if is_exact(x):
        return Fraction(x)
    return mpmath.re(x)


def imag_part(x):
    if is_exact(x):
        return Fraction(0)
    return mpmath.im(x)


def abs_scalar(x):
    if is_exact(x):
        return abs(Fraction(x))
    return mpmath.fabs(x)


def workdps(digits: int):
    """Context manager setting the mpmath working precision in digits."""
    return mp.workdps(digits)
