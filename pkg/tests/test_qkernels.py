import json
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp, mpf

from awhecke.errors import (
    DivergenceError,
    DomainError,
    MaxTermsExceeded,
    PoleError,
    PoleInDenominatorError,
)
from awhecke.qkernels import (
    SeriesConfig,
    bhs,
    gaussian,
    qpoch,
    qpoch_inf,
    vwp_series,
    w87,
)

CFG = SeriesConfig(digits=50)
EULER_HALF_STR = "0.2887880950866024212788997219292307800889119048406857841"


def test_qpoch_finite_examples():
    q = Fraction(1, 3)
    assert qpoch(Fraction(5), q, 0) == 1
    assert qpoch(q, q, 2) == (1 - q) * (1 - q * q)
    assert qpoch([q, Fraction(2)], q, 2) == qpoch(q, q, 2) * qpoch(Fraction(2), q, 2)


@given(
    st.fractions(min_value=-3, max_value=3, max_denominator=5),
    st.integers(0, 6),
    st.integers(0, 6),
)
@settings(max_examples=40)
def test_qpoch_splitting_identity(x, n, m):
    q = Fraction(2, 7)
    assert qpoch(x, q, n + m) == qpoch(x, q, n) * qpoch(x * q**n, q, m)


def test_qpoch_inf_euler_value(workdps50):
    v = qpoch_inf(mpf(1) / 2, mpf(1) / 2, CFG)
    assert mpmath.fabs(v - mpf(EULER_HALF_STR)) < mpf("1e-50")


def test_qpoch_inf_against_mpmath_oracle(workdps50):
    for x, q in ((mpf("0.3"), mpf("0.55")), (mpmath.mpc("0.4", "0.7"), mpf("0.31"))):
        mine = qpoch_inf(x, q, CFG)
        oracle = mpmath.qp(x, q)
        assert mpmath.fabs(mine - oracle) < mpf("1e-45") * max(1, mpmath.fabs(oracle))


def test_qpoch_inf_splitting(workdps50):
    x, q = mpf("0.8"), mpf("0.45")
    full = qpoch_inf(x, q, CFG)
    assert mpmath.fabs(full - qpoch(x, q, 5) * qpoch_inf(x * q**5, q, CFG)) < mpf("1e-48")


def test_qpoch_inf_domain_and_budget():
    with pytest.raises(DomainError):
        qpoch_inf(mpf("0.5"), mpf("1.5"), CFG)
    tight = SeriesConfig(digits=50, max_terms=8)
    with pytest.raises(MaxTermsExceeded):
        qpoch_inf(mpf("0.9"), mpf("0.99"), tight)


def test_gaussian_symmetry_and_poles(workdps50):
    q = mpf("0.4")
    e = mpf("0.7")
    for z in (mpmath.mpc("1.2", "0.3"), mpf("0.8")):
        assert mpmath.fabs(gaussian(e, z, q, CFG) - gaussian(e, 1 / z, q, CFG)) < mpf("1e-45")
    with pytest.raises(PoleError):
        gaussian(e, 1 / e, q, CFG)
    with pytest.raises(PoleError):
        gaussian(e, e * q**3, q, CFG)  # 1/z on the lattice


def test_gaussian_ratio_identities(workdps50, rng):
    # G_d(z)/G_d(q/z) = (1 - dz/q)/(1 - d/z) at random numeric points
    q = mpf("0.37")
    d = mpf("0.62")
    for _ in range(25):
        z = mpf(rng.uniform(0.5, 1.8)) * mpmath.exp(mpmath.mpc(0, rng.uniform(-3, 3)))
        lhs = gaussian(d, z, q, CFG) / gaussian(d, q / z, q, CFG)
        rhs = (1 - d * z / q) / (1 - d / z)
        assert mpmath.fabs(lhs - rhs) < mpf("1e-44") * mpmath.fabs(rhs)
        e = q / d
        lhs2 = gaussian(e, q / z, q, CFG) / gaussian(e, z, q, CFG)
        rhs2 = (q / (z * z)) * (1 - d * z / q) / (1 - d / z)
        assert mpmath.fabs(lhs2 - rhs2) < mpf("1e-44") * mpmath.fabs(rhs2)


def test_bhs_trivial_and_terminating():
    q = Fraction(1, 4)
    # first numerator parameter 1 = q^0: the series is the single term 1
    assert bhs([Fraction(1), Fraction(2)], [Fraction(3)], q, Fraction(1, 2), CFG) == 1


def test_bhs_two_term_hand_oracle(p_generic):
    # n = 1 terminating 4phi3: 1 + (1-q^{-1})(1-abcd/q)(1-az)(1-a/z) q
    #                              / ((1-q)(1-ab)(1-ac)(1-ad))
    p, q = p_generic, p_generic.q
    a, b, c, d = p.a, p.b, p.c, p.d
    z = Fraction(3, 4)
    got = bhs([1 / q, p.abcd() / q, a * z, a / z], [a * b, a * c, a * d], q, q, CFG)
    hand = 1 + (1 - 1 / q) * (1 - p.abcd() / q) * (1 - a * z) * (1 - a / z) * q / (
        (1 - q) * (1 - a * b) * (1 - a * c) * (1 - a * d)
    )
    assert got == hand


def test_bhs_exact_terminating_matches_numeric(workdps50, p_generic):
    p, q = p_generic, p_generic.q
    a = p.a
    num = [q**-3, q**2 * p.abcd() / q, a * Fraction(5, 4), a / Fraction(5, 4)]
    den = [a * p.b, a * p.c, a * p.d]
    exact = bhs(num, den, q, q, CFG)

    def f(x):
        return mpf(x.numerator) / x.denominator

    numeric = bhs([f(x) for x in num], [f(x) for x in den], f(q), f(q), CFG)
    assert mpmath.fabs(numeric - f(exact)) < mpf("1e-40")


def test_bhs_errors():
    q = Fraction(1, 3)
    with pytest.raises(PoleInDenominatorError):
        bhs([q**-4, Fraction(2)], [q**-2], q, q, CFG)
    with pytest.raises(DivergenceError):
        bhs([Fraction(2), Fraction(7)], [Fraction(5)], q, Fraction(3, 2), CFG)  # |arg| > 1
    with pytest.raises(DivergenceError):
        bhs([Fraction(2), Fraction(7)], [Fraction(5)], q, Fraction(1, 2), CFG)  # exact non-terminating


def test_w87_termination_and_unit():
    q = Fraction(2, 5)
    A, b, c, d, f = Fraction(3), Fraction(2), Fraction(5), Fraction(7), Fraction(11)
    # e = q^0 = 1 terminates immediately with value 1
    assert w87(A, b, c, d, Fraction(1), f, q, CFG) == 1
    val = w87(A, b, c, d, q**-2, f, q, CFG)
    assert isinstance(val, Fraction)


def test_w87_permutation_symmetry(workdps50, rng):
    q = mpf("0.35")
    A = mpf("0.9")
    base = [mpf("0.7"), mpf("1.3"), mpf("0.8"), mpf("1.1"), mpf("0.6")]
    ref = w87(A, *base, q, CFG)
    import itertools

    perms = list(itertools.permutations(base))
    rng.shuffle(perms)
    for perm in perms[:20]:
        v = w87(A, *perm, q, CFG)
        assert mpmath.fabs(v - ref) < mpf("1e-40") * mpmath.fabs(ref)


def test_vwp_matches_w87_argument(workdps50):
    q = mpf("0.35")
    A = mpf("0.9")
    rest = [mpf("0.7"), mpf("1.3"), mpf("0.8"), mpf("1.1"), mpf("0.6")]
    arg = q * q * A * A / mpmath.fprod(rest)
    assert mpmath.fabs(w87(A, *rest, q, CFG) - vwp_series(A, rest, q, arg, CFG)) == 0


def test_series_config_contracts(tmp_path):
    with pytest.raises(ValueError):
        SeriesConfig(max_terms=4)
    with pytest.raises(ValueError):
        SeriesConfig(tail_guard=1)
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps({"digits": 30, "max_terms": 100, "tail_guard": 4}))
    cfg = SeriesConfig.from_file(path)
    assert cfg.digits == 30 and cfg.max_terms == 100
    assert cfg.tol() == mpf(10) ** (-35)
