from fractions import Fraction

from awhecke.laurent import LaurentPoly
from awhecke.ratfunc import RationalFunc, gaussian_shift_ratio, poly_gcd


def P(*pairs):
    return LaurentPoly(dict(pairs))


def test_poly_gcd_basic():
    # (x-1)(x-2) and (x-1)(x-3) share the monic factor (x-1)
    A = [Fraction(2), Fraction(-3), Fraction(1)]
    B = [Fraction(3), Fraction(-4), Fraction(1)]
    assert poly_gcd(A, B) == [Fraction(-1), Fraction(1)]
    assert poly_gcd(A, [Fraction(5)]) == [Fraction(1)]


def test_reduction_cancels_common_factors():
    num = P((0, Fraction(1)), (1, Fraction(-3))) * P((0, Fraction(1)), (1, Fraction(2)))
    den = P((0, Fraction(1)), (1, Fraction(-3))) * P((0, Fraction(1)), (1, Fraction(5)))
    r = RationalFunc(num, den)
    assert r == RationalFunc(
        P((0, Fraction(1)), (1, Fraction(2))), P((0, Fraction(1)), (1, Fraction(5)))
    )


def test_canonical_form_is_unique():
    r1 = RationalFunc(P((1, Fraction(2))), P((0, Fraction(4)), (1, Fraction(2))))
    r2 = RationalFunc(P((2, Fraction(3))), P((1, Fraction(6)), (2, Fraction(3))))
    assert r1 == r2


def test_arithmetic_against_cross_multiplication():
    a = RationalFunc(P((1, Fraction(1))), P((0, Fraction(1)), (2, Fraction(-1))))
    b = RationalFunc(P((0, Fraction(2)), (-1, Fraction(1))), P((0, Fraction(3)), (1, Fraction(1))))
    s = a + b
    assert s.num * (a.den * b.den) == (a.num * b.den + b.num * a.den) * s.den
    prod = a * b
    assert prod.num * (a.den * b.den) == (a.num * b.num) * prod.den
    quot = a / b
    assert quot.num * (a.den * b.num) == (a.num * b.den) * quot.den


def test_laurent_roundtrip_and_eval():
    f = P((2, Fraction(7)), (-1, Fraction(-2)))
    r = RationalFunc.from_laurent(f) / RationalFunc.constant(Fraction(7))
    assert r.is_laurent()
    assert r.as_laurent() == f * Fraction(1, 7)
    assert r.eval(Fraction(2)) == f.eval(Fraction(2)) / 7


def test_gaussian_shift_ratio_matches_displays():
    # G_d(z)/G_d(q z^{-1}) = (1 - d z/q)/(1 - d/z)
    d, q = Fraction(1, 7), Fraction(2, 5)
    got = gaussian_shift_ratio(d, q, -1, 1)
    expect = RationalFunc(P((0, Fraction(1)), (1, -d / q)), P((0, Fraction(1)), (-1, -d)))
    assert got == expect
    # G_{q/d}(q z^{-1})/G_{q/d}(z) = (q/z^2) (1 - dz/q)/(1 - d/z)
    e = q / d
    got2 = gaussian_shift_ratio(e, q, -1, 1)
    lhs = RationalFunc.constant(Fraction(1)) / got2
    expect2 = RationalFunc(P((-2, q)), P((0, Fraction(1)))) * expect
    assert lhs == expect2


def test_gaussian_shift_ratio_identity_cases():
    d, q = Fraction(1, 7), Fraction(2, 5)
    one = RationalFunc.constant(Fraction(1))
    assert gaussian_shift_ratio(d, q, 1, 0) == one
    assert gaussian_shift_ratio(d, q, -1, 0) == one  # G is z <-> 1/z symmetric


def test_gaussian_shift_ratio_inverse_shifts():
    d, q = Fraction(3, 7), Fraction(1, 3)
    up = gaussian_shift_ratio(d, q, 1, 1)
    # R(z)/R(qz) times (R/R(q w))|_{w=qz->z} telescopes: check via substitution
    down = gaussian_shift_ratio(d, q, 1, -1)
    assert (up * down.subs_qk_eps(q, 1, 1)) == RationalFunc.constant(Fraction(1))
