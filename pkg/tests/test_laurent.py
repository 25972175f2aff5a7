import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from awhecke.errors import DegenerateParamsError, ZeroArgumentError
from awhecke.laurent import LaurentPoly, eval_poly, invol, t1_decompose
from awhecke.params import ParamSet

small_fracs = st.fractions(
    min_value=-5, max_value=5, max_denominator=6
)
polys = st.dictionaries(st.integers(-6, 6), small_fracs, max_size=8).map(LaurentPoly)


def test_invol_examples():
    z = LaurentPoly({1: Fraction(1)})
    assert invol(z) == LaurentPoly({-1: Fraction(1)})
    f = LaurentPoly({1: Fraction(1), -2: Fraction(3)})
    assert invol(f) == LaurentPoly({-1: Fraction(1), 2: Fraction(3)})


@given(polys)
def test_invol_is_involution(f):
    assert invol(invol(f)) == f


@given(polys, polys, polys)
@settings(max_examples=60)
def test_ring_axioms(f, g, h):
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)
    assert f + g == g + f


def test_eval_examples():
    assert eval_poly(LaurentPoly.one(), Fraction(17)) == 1
    f = LaurentPoly({1: Fraction(1), -1: Fraction(1)})
    assert eval_poly(f, Fraction(2)) == Fraction(5, 2)
    with pytest.raises(ZeroArgumentError):
        eval_poly(f, 0)


def test_eval_matches_naive_sum(rng):
    for _ in range(20):
        f = LaurentPoly({rng.randint(-6, 6): Fraction(rng.randint(-9, 9)) for _ in range(6)})
        z0 = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        naive = sum(c * z0**e for e, c in f.coeffs.items())
        assert f.eval(z0) == naive


def test_subs_and_scale():
    q = Fraction(1, 2)
    f = LaurentPoly({2: Fraction(3), -1: Fraction(1)})
    g = f.subs_qk_eps(q, 1, -1)  # z -> q/z
    assert g == LaurentPoly({-2: Fraction(3) * q**2, 1: Fraction(1) / q})
    h = f.scale_arg(Fraction(2))
    assert h == LaurentPoly({2: Fraction(12), -1: Fraction(1, 2)})


def test_exact_division():
    f = LaurentPoly({0: Fraction(1), 1: Fraction(-3)})
    g = LaurentPoly({-2: Fraction(5), 3: Fraction(2)})
    prod = f * g
    assert prod.exact_div(f) == g
    q, r = (prod + LaurentPoly.one()).divmod_exact(f)
    assert q * f + r == prod + LaurentPoly.one()


def test_json_roundtrip():
    f = LaurentPoly({3: Fraction(22, 7), -2: Fraction(-1, 3)})
    blob = json.dumps(f.to_json())
    assert LaurentPoly.from_json(json.loads(blob)) == f


def test_t1_decompose_symmetric_input(p_generic):
    g = LaurentPoly({2: Fraction(1), 0: Fraction(4), -2: Fraction(1)})
    g1, g2 = t1_decompose(g, p_generic)
    assert g1 == g and g2.is_zero()


def test_t1_decompose_pure_antisymmetric(p_generic):
    a, b = p_generic.a, p_generic.b
    bracket = (
        LaurentPoly({-1: Fraction(1)})
        * LaurentPoly({0: Fraction(1), 1: -a})
        * LaurentPoly({0: Fraction(1), 1: -b})
    )
    g1, g2 = t1_decompose(bracket, p_generic)
    assert g1.is_zero() and g2 == LaurentPoly.constant(Fraction(-1))


def test_t1_decompose_reconstruction(p_generic, rng):
    a, b = p_generic.a, p_generic.b
    bracket = (
        LaurentPoly({-1: Fraction(1)})
        * LaurentPoly({0: Fraction(1), 1: -a})
        * LaurentPoly({0: Fraction(1), 1: -b})
    )
    for _ in range(10):
        g = LaurentPoly({rng.randint(-5, 5): Fraction(rng.randint(-7, 7)) for _ in range(6)})
        g1, g2 = t1_decompose(g, p_generic)
        assert g1.is_symmetric() and g2.is_symmetric()
        assert g1 - bracket * g2 == g
        # uniqueness: decomposing the reconstruction returns the same parts
        h1, h2 = t1_decompose(g1 - bracket * g2, p_generic)
        assert (h1, h2) == (g1, g2)


def test_t1_decompose_needs_ab_generic():
    p = ParamSet(Fraction(2), Fraction(1, 2), Fraction(1, 5), Fraction(1, 7), Fraction(2, 5))
    with pytest.raises(DegenerateParamsError):
        t1_decompose(LaurentPoly({1: Fraction(1)}), p)
