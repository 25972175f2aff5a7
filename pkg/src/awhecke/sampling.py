"""Seeded parameter and point samplers for the verification suites.

Exact samplers draw small rationals with rejection on the denominators
the identities divide by (pairwise products near q-powers of 1, ab = 1,
and the abcd lattice).  The square-compatible sampler additionally makes
sqrt(abcd/q) rational, and the Hecke-exact sampler makes all four
coordinates k1 = i sqrt(ab), ... exactly representable, which the braid
suite needs.  Numeric samplers produce mpmath tuples satisfying the
positive-real-part assumption with margins that keep every evaluation
method of the function layer applicable.
"""

from __future__ import annotations

import random
from fractions import Fraction

import mpmath
from mpmath import mpc, mpf

from .params import HeckeParts, ParamSet, dual_params, hecke_parts_exact

#: |q^k abcd - 1| and pairwise-product guards are enforced for |k| <= this
LATTICE_GUARD = 20


def _distinct_with_inverses(p: ParamSet) -> bool:
    vals = list(p.as_tuple())
    if any(v == 0 for v in vals) or p.q == 0:
        return False
    full = vals + [1 / v for v in vals]
    for i in range(len(full)):
        for j in range(i + 1, len(full)):
            if full[i] == full[j]:
                return False
    return True


def genericity_ok(p: ParamSet, lattice: int = LATTICE_GUARD) -> bool:
    """Rejection predicate: parameters with inverses pairwise distinct
    (also after the t4 and tau parameter maps, whose target tuples the
    suites realize operators over) and all denominators appearing in the
    identity suites nonzero."""
    if any(v == 0 for v in p.as_tuple()) or p.q == 0:
        return False
    t4p = ParamSet(p.a, p.b, p.q / p.d, p.q / p.c, p.q)
    taup = ParamSet(p.a, p.b, p.c, p.q / p.d, p.q)
    if not all(_distinct_with_inverses(w) for w in (p, t4p, taup)):
        return False
    pairs = [
        p.a * p.b, p.a * p.c, p.a * p.d, p.b * p.c, p.b * p.d, p.c * p.d,
    ]
    for w in pairs + [p.abcd()]:
        x = w * p.q ** (-lattice)
        for _ in range(2 * lattice + 1):
            if x == 1:
                return False
            x = x * p.q
    return True


_POOL_NUM = (1, 2, 3, 4, 5, 6, 7, 9, 11)
_POOL_DEN = (1, 2, 3, 4, 5, 7, 8, 10)
_Q_POOL = (Fraction(1, 2), Fraction(2, 5), Fraction(1, 3), Fraction(3, 7), Fraction(5, 9))
_SQUARE_Q_POOL = (Fraction(9, 25), Fraction(1, 4), Fraction(4, 9), Fraction(9, 16), Fraction(25, 49))


def _draw_fraction(rng: random.Random) -> Fraction:
    f = Fraction(rng.choice(_POOL_NUM), rng.choice(_POOL_DEN))
    return f


def sample_generic_rational(rng: random.Random, q=None, max_tries=500) -> ParamSet:
    """A generic exact tuple with 0 < q < 1."""
    for _ in range(max_tries):
        qq = q if q is not None else rng.choice(_Q_POOL)
        p = ParamSet(
            _draw_fraction(rng), _draw_fraction(rng),
            _draw_fraction(rng), _draw_fraction(rng), qq,
        )
        if genericity_ok(p):
            return p
    raise RuntimeError("sampler failed to find a generic tuple")


def sample_square_compatible(rng: random.Random, q=None, square_q=False,
                             max_tries=500) -> ParamSet:
    """Exact tuple with sqrt(abcd/q) rational: d = q r^2/(abc).

    With square_q=True the base q is itself a perfect rational square, so
    q^(1/2)-shifted constructions stay exact as well.
    """
    for _ in range(max_tries):
        if q is not None:
            qq = q
        else:
            qq = rng.choice(_SQUARE_Q_POOL if square_q else _Q_POOL)
        a, b, c = (_draw_fraction(rng) for _ in range(3))
        r = _draw_fraction(rng) + 1
        p = ParamSet(a, b, c, qq * r * r / (a * b * c), qq)
        if genericity_ok(p):
            return p
    raise RuntimeError("sampler failed to find a square-compatible tuple")


def sample_hecke_exact(rng: random.Random, max_tries=500):
    """(HeckeParts, ParamSet) with a = alpha^2, b = beta^2, c = s gamma^2,
    d = s delta^2 and q = s^2, all positive: every Hecke coordinate is
    i times a rational."""
    for _ in range(max_tries):
        s2 = rng.choice(_SQUARE_Q_POOL)
        from .scalars import sqrt_exact

        s = sqrt_exact(s2)
        al, be, ga, de = (_draw_fraction(rng) for _ in range(4))
        p = ParamSet(al * al, be * be, s * ga * ga, s * de * de, s2)
        if genericity_ok(p):
            return hecke_parts_exact(p), p
    raise RuntimeError("sampler failed to find a Hecke-exact tuple")


def sample_t4_lattice(rng: random.Random, m: int, n: int, q=None, max_tries=500) -> ParamSet:
    """Exact tuple with cd = q^{m-n+1}, the degenerate locus on which the
    polynomial t4 identity lives."""
    for _ in range(max_tries):
        qq = q if q is not None else rng.choice(_Q_POOL)
        a, b, c = (_draw_fraction(rng) for _ in range(3))
        p = ParamSet(a, b, c, qq ** (m - n + 1) / c, qq)
        if any(v == 0 for v in p.as_tuple()):
            continue
        # full genericity is impossible on this locus; require just the
        # denominators that the two polynomial constructions divide by
        ok = True
        for w in (p.a * p.b, p.a * p.c, p.a * p.d):
            x = w
            for _ in range(LATTICE_GUARD):
                if x == 1:
                    ok = False
                x = x * qq
        if ok and len({p.a, p.b, p.c, p.d}) == 4:
            return p
    raise RuntimeError("sampler failed on the t4 lattice")


# ---------------------------------------------------------------------------
# numeric samplers
# ---------------------------------------------------------------------------

def _uniform(rng, lo, hi):
    return mpf(rng.uniform(float(lo), float(hi)))


def sample_numeric(rng: random.Random, complex_params=True, max_tries=500) -> ParamSet:
    """Numeric tuple with |q| in [0.2, 0.6], parameter moduli in [0.3, 3]
    and phases below pi/8, so all products required by the positive-real
    assumption stay in the right half plane with margin."""
    for _ in range(max_tries):
        q = _uniform(rng, "0.2", "0.6")
        vals = []
        for _ in range(4):
            r = _uniform(rng, "0.35", "2.8")
            if complex_params:
                phi = _uniform(rng, -0.37, 0.37)  # < pi/8
                vals.append(r * mpmath.exp(mpc(0, 1) * phi))
            else:
                vals.append(r)
        p = ParamSet(*vals, q)
        dp = dual_params(p)
        # keep the kernel/4phi3 prefactor denominators away from 1
        guard = [p.a * p.b, p.a * p.c, p.a * p.d / p.q, p.q * p.a * p.b * p.c / p.d]
        if all(mpmath.fabs(g - 1) > mpf("0.05") for g in guard):
            return p
    raise RuntimeError("numeric sampler failed")


def sample_point_pair(rng: random.Random, p: ParamSet, w87_margin=True, max_tries=500):
    """(gamma, z) admissible for all four symmetric-function methods:
    moduli near 1, away from the exclusion set z^2 in {1, q, 1/q}, and with
    |q/(d~ gamma)| < 0.85 when w87_margin is set (the gamma modulus window
    adapts to the tuple so that the margin is reachable)."""
    dt = dual_params(p).d
    glo = mpf("0.75")
    if w87_margin:
        glo = max(glo, mpmath.fabs(p.q / dt) / mpf("0.85"))
    for _ in range(max_tries):
        z = _uniform(rng, "0.75", "1.3") * mpmath.exp(mpc(0, 1) * _uniform(rng, "-3.0", "3.0"))
        gamma = glo * (1 + _uniform(rng, "0.01", "0.6")) * mpmath.exp(
            mpc(0, 1) * _uniform(rng, "-3.0", "3.0")
        )
        if w87_margin and mpmath.fabs(p.q / (dt * gamma)) > mpf("0.85"):
            continue
        bad = False
        for w in (1, p.q, 1 / p.q):
            for point in (z, gamma):
                if mpmath.fabs(point * point - w) < mpf("0.05"):
                    bad = True
        if not bad:
            return gamma, z
    raise RuntimeError("point sampler failed")
