import json
from fractions import Fraction

import mpmath
import pytest
from mpmath import mp, mpf

from awhecke.errors import BranchCutError, NotASquareError
from awhecke.params import (
    ParamSet,
    apply_param_map,
    check_generic,
    dual_params,
    from_hecke,
    hecke_parts_exact,
    parameter_orbit,
    to_hecke,
)
from awhecke.sampling import sample_generic_rational

SQRT240 = "15.49193338482966754071706159912959844333168682116636331"


def test_dual_abcd_equals_q():
    # pick d with abcd = q: then a~ = 1 and the rest collapse
    q = Fraction(1, 2)
    a, b, c = Fraction(2), Fraction(3), Fraction(5)
    p = ParamSet(a, b, c, q / (a * b * c), q)
    pd = dual_params(p)
    assert pd.a == 1 and pd.b == a * b and pd.c == a * c and pd.d == a * p.d


def test_dual_numeric_50_digits():
    with mp.workdps(60):
        p = ParamSet(mpf(2), mpf(3), mpf(4), mpf(5), mpf(1) / 2)
        pd = dual_params(p)
        assert mpmath.fabs(pd.a - mpf(SQRT240)) < mpf("1e-52")
        assert mpmath.fabs(pd.b - 6 / pd.a) < mpf("1e-52")
        assert mpmath.fabs(pd.c - 8 / pd.a) < mpf("1e-52")
        assert mpmath.fabs(pd.d - 10 / pd.a) < mpf("1e-52")


def test_dual_involution_and_products(p_square):
    pd = dual_params(p_square)
    assert dual_params(pd) == p_square
    p, q = p_square, p_square.q
    a, b, c, d = p.as_tuple()
    at, bt, ct, dt = pd.as_tuple()
    # the twelve product identities (radical ones squared)
    assert bt * bt == q * a * b / (c * d)
    assert ct * ct == q * a * c / (b * d)
    assert dt * dt == q * a * d / (b * c)
    assert bt * ct == q * a / d and bt * dt == q * a / c and ct * dt == q * a / b
    assert at / bt == c * d / q and at / ct == b * d / q and at / dt == b * c / q
    assert bt / ct == b / c and bt / dt == b / d and ct / dt == c / d


def test_dual_errors():
    with pytest.raises(NotASquareError):
        dual_params(ParamSet(Fraction(2), Fraction(3), Fraction(5), Fraction(7), Fraction(1, 2)))
    with mp.workdps(30):
        with pytest.raises(BranchCutError):
            dual_params(ParamSet(mpf(-2), mpf(3), mpf(4), mpf(5), mpf("0.5")))


def test_hecke_roundtrip_and_dual_coordinates():
    with mp.workdps(60):
        p = ParamSet(mpf(2), mpf(3), mpf(4), mpf(5), mpf(1) / 2)
        h = to_hecke(p)
        back = from_hecke(h, p.q)
        for x, y in zip(back.as_tuple(), p.as_tuple()):
            assert mpmath.fabs(x - y) < mpf("1e-55")
        # k1 k0 is the dual a-parameter
        assert mpmath.fabs(h.k1 * h.k0 - dual_params(p).a) < mpf("1e-52")
        # duality exchanges u1 and k0
        hd = to_hecke(dual_params(p))
        assert mpmath.fabs(hd.k1 - h.k1) < mpf("1e-52")
        assert mpmath.fabs(hd.u1 - h.k0) < mpf("1e-52")
        assert mpmath.fabs(hd.u0 - h.u0) < mpf("1e-52")
        assert mpmath.fabs(hd.k0 - h.u1) < mpf("1e-52")


def test_hecke_argument_window():
    with mp.workdps(40):
        # positive parameters: all four normalized coordinates sit in (pi/4, 3pi/4)
        p = ParamSet(mpf(2), mpf(3), mpf(4), mpf(5), mpf(1) / 2)
        h = to_hecke(p)
        quarter, three_quarters = mpmath.pi / 4, 3 * mpmath.pi / 4
        for w in (h.u0, -h.u1, -h.k0, h.k1):
            assert quarter < mpmath.arg(w) < three_quarters


def test_hecke_parts_exact_roundtrip(p_square):
    # needs the fully square-compatible family
    s = Fraction(1, 2)
    p = ParamSet(Fraction(4), Fraction(9, 4), s * Fraction(4, 9), s * Fraction(9), s * s)
    parts = hecke_parts_exact(p)
    assert parts.to_params() == p


@pytest.mark.parametrize(
    "name,expect",
    [
        ("t1", lambda p: (1 / p.b, 1 / p.a, p.c, p.d)),
        ("t2", lambda p: (p.b, p.a, p.c, p.d)),
        ("t3", lambda p: (p.a, p.b, p.d, p.c)),
        ("t4", lambda p: (p.a, p.b, p.q / p.d, p.q / p.c)),
        ("t0", lambda p: (p.q / p.d, p.b, p.c, p.q / p.a)),
        ("t0hat", lambda p: (p.a, p.c, p.b, p.d)),
        ("tau", lambda p: (p.a, p.b, p.c, p.q / p.d)),
        ("tau_inv", lambda p: (p.a, p.b, p.c, p.q / p.d)),
        ("swap_ab", lambda p: (p.b, p.a, p.c, p.d)),
        ("swap_cd", lambda p: (p.a, p.b, p.d, p.c)),
    ],
)
def test_param_map_catalog(p_generic, name, expect):
    img = apply_param_map(name, p_generic)
    assert img.as_tuple() == expect(p_generic)
    assert img.q == p_generic.q


def test_t_involutions(p_generic):
    for name in ("t1", "t2", "t3", "t4", "t0", "t0hat"):
        assert apply_param_map(name, apply_param_map(name, p_generic)) == p_generic


def test_eta_inverts_q(p_generic):
    img = apply_param_map("eta", p_generic)
    assert img.q == 1 / p_generic.q
    assert img.as_tuple() == tuple(1 / v for v in p_generic.as_tuple())
    assert apply_param_map("eta", img) == p_generic


def test_t0hat_is_conjugated_t0(p_generic):
    # t0hat = (t2 t4) t0 (t2 t4)^{-1} on parameter space
    p = p_generic

    def t2t4(x):
        return apply_param_map("t2", apply_param_map("t4", x))

    def t2t4_inv(x):
        return apply_param_map("t4", apply_param_map("t2", x))

    assert t2t4(apply_param_map("t0", t2t4_inv(p))) == apply_param_map("t0hat", p)


def test_beta2_display(p_square):
    p = ParamSet(Fraction(1, 2), Fraction(1, 3), Fraction(1, 5), p_square.d, Fraction(9, 25))
    # use the square-compatible tuple so the roots are rational
    p = p_square
    img = apply_param_map("beta2", p)
    from awhecke.scalars import sqrt_exact

    root = sqrt_exact(p.q) * dual_params(p).a
    assert img.as_tuple() == (-root / p.c, -root / p.d, -root / p.a, -root / p.b)


def test_sigma_is_duality(p_square):
    assert apply_param_map("sigma", p_square) == dual_params(p_square)


def test_check_generic_examples():
    good = ParamSet(Fraction(2), Fraction(3), Fraction(4), Fraction(5), Fraction(1, 2))
    assert check_generic(good).ok
    clash = ParamSet(Fraction(2), Fraction(1, 2), Fraction(4), Fraction(5), Fraction(1, 2))
    rows = {r.check: r.ok for r in check_generic(clash)}
    assert rows["distinct"] is False
    neg = ParamSet(Fraction(-2), Fraction(3), Fraction(4), Fraction(5), Fraction(1, 2))
    rows = {r.check: r.ok for r in check_generic(neg)}
    assert rows["assumption-positive-real"] is False
    blob = json.loads(check_generic(good).to_json())
    assert all(set(row) == {"check", "pass", "detail"} for row in blob)


def test_orbit_has_weyl_d4_order(rng):
    p = sample_generic_rational(rng)
    orbit = parameter_orbit(p)
    assert len(orbit) == 192
    assert len(set(orbit)) == 192


def test_orbit_alternative_generators(rng):
    # {t0, t2, t3, t4} generates the same group
    p = sample_generic_rational(rng)
    orbit = parameter_orbit(p, generators=("t0", "t2", "t3", "t4"))
    assert len(orbit) == 192
