"""Symmetric, anti-symmetric and non-symmetric Askey-Wilson polynomials.

Everything here is assembled by direct summation of the terminating
series (no three-term recurrence), producing exact Laurent polynomials on
exact input.  Constructions that shift parameters by q^(1/2) work in the
exact backend only when q is a perfect rational square; otherwise they
raise NotASquareError (use the numeric backend or a square q).
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DegenerateParamsError, InternalError, PoleInDenominatorError
from .laurent import LaurentPoly
from .params import ParamSet
from .qkernels import qpoch
from .scalars import recip, sqrt_scalar


def aw_eigenvalue(n: int, p: ParamSet):
    """lambda_n = q^{-n} + q^{n-1} abcd, the D/L eigenvalue of index n."""
    return p.q ** (-n) + p.q ** (n - 1) * p.abcd()


def shifted(p: ParamSet, fa=1, fb=1, fc=1, fd=1) -> ParamSet:
    """Multiply the parameters componentwise (the q-shift helper)."""
    return ParamSet(p.a * fa, p.b * fb, p.c * fc, p.d * fd, p.q)


def _check_lower(p: ParamSet, n: int):
    for name, prod in (("ab", p.a * p.b), ("ac", p.a * p.c), ("ad", p.a * p.d)):
        if qpoch(prod, p.q, n) == 0:
            raise PoleInDenominatorError(f"({name}; q)_{n} vanishes")


def _zfactors(x, q, k_from: int, k_to: int) -> LaurentPoly:
    """prod_{j=k_from}^{k_to-1} (1 - x q^j z)(1 - x q^j / z)."""
    out = LaurentPoly.one()
    for j in range(k_from, k_to):
        w = x * q**j
        out = out * LaurentPoly({0: Fraction(1) if isinstance(w, (int, Fraction)) else 1, 1: -w})
        out = out * LaurentPoly({0: Fraction(1) if isinstance(w, (int, Fraction)) else 1, -1: -w})
    return out


def aw_E_plus(n: int, p: ParamSet) -> LaurentPoly:
    """The symmetric Askey-Wilson polynomial normalized by E_n^+(a^{+-1}) = 1.

    Terminating series in (az; q)_k (a z^{-1}; q)_k with spectral datum
    (q^{-n}, q^{n-1} abcd); a symmetric Laurent polynomial of degree n.
    """
    if n < 0:
        raise ValueError("aw_E_plus needs n >= 0")
    _check_lower(p, n)
    a, q = p.a, p.q
    abcd = p.abcd()
    total = LaurentPoly.zero()
    coeff = Fraction(1) if p.is_exact() else 1
    zprod = LaurentPoly.one()
    for k in range(n + 1):
        total = total + zprod * coeff
        if k == n:
            break
        # ratio of successive scalar coefficients (z-independent part)
        num = (1 - q ** (k - n)) * (1 - q ** (n - 1 + k) * abcd) * q
        den = (1 - q ** (k + 1)) * (1 - a * p.b * q**k) * (1 - a * p.c * q**k) * (1 - a * p.d * q**k)
        coeff = coeff * num / den
        zprod = zprod * _zfactors(a, q, k, k + 1)
    return total


def aw_p(n: int, p: ParamSet) -> LaurentPoly:
    """The Askey-Wilson polynomial p_n((z+1/z)/2) in the classical
    normalization, symmetric in all four parameters."""
    if n < 0:
        raise ValueError("aw_p needs n >= 0")
    a, q = p.a, p.q
    abcd = p.abcd()
    total = LaurentPoly.zero()
    zprod = LaurentPoly.one()
    spec = Fraction(1) if p.is_exact() else 1
    for k in range(n + 1):
        tail = qpoch(
            [p.a * p.b * q**k, p.a * p.c * q**k, p.a * p.d * q**k], q, n - k
        )
        total = total + zprod * (spec * tail)
        if k == n:
            break
        spec = spec * (1 - q ** (k - n)) * (1 - q ** (n - 1 + k) * abcd) * q / (1 - q ** (k + 1))
        zprod = zprod * _zfactors(a, q, k, k + 1)
    return total * a ** (-n)


def aw_P_plus_monic(n: int, p: ParamSet) -> LaurentPoly:
    """The monic symmetric Askey-Wilson polynomial (coefficient of z^n is 1)."""
    norm = qpoch(p.abcd() * p.q ** (n - 1), p.q, n)
    if norm == 0:
        raise PoleInDenominatorError(f"(q^(n-1) abcd; q)_{n} vanishes")
    poly = aw_p(n, p) * recip(norm)
    if n >= 0 and poly.coeff(n) != 1 and p.is_exact():
        raise InternalError("monic normalization failed")
    return poly


# ---------------------------------------------------------------------------
# anti-symmetric and T0-(anti)symmetric variants
# ---------------------------------------------------------------------------

def _bracket_ab(p: ParamSet) -> LaurentPoly:
    """z^{-1}(1 - az)(1 - bz)."""
    one = Fraction(1)
    return (
        LaurentPoly({-1: one})
        * LaurentPoly({0: one, 1: -p.a})
        * LaurentPoly({0: one, 1: -p.b})
    )


def _bracket_cd(p: ParamSet) -> LaurentPoly:
    """z^{-1}(c - z)(d - z)."""
    one = Fraction(1)
    return (
        LaurentPoly({-1: one})
        * LaurentPoly({0: p.c, 1: -one})
        * LaurentPoly({0: p.d, 1: -one})
    )


ANTISYM_VARIANTS = ("P-", "E-", "Pdag-", "Pdag+")


def aw_antisym(n: int, p: ParamSet, variant: str) -> LaurentPoly:
    """Anti-symmetric / T0-(anti)symmetric Askey-Wilson polynomials.

    variant:
      "P-"    monic T1-anti-symmetric:  (ab)^{-1} z^{-1}(1-az)(1-bz) P^+_{n-1}(z; qa,qb,c,d)
      "E-"    z^{-1}(1-az)(1-bz) E^+_{n-1}(z; qa,qb,c,d)
      "Pdag+" q^{n/2} P^+_n(q^{-1/2} z; q^{1/2}a, q^{1/2}b, q^{-1/2}c, q^{-1/2}d)
      "Pdag-" q^{(n-1)/2} z^{-1}(c-z)(d-z) P^+_{n-1}(q^{-1/2}z; q^{1/2}(a,b,c,d))
    """
    if variant not in ANTISYM_VARIANTS:
        raise ValueError(f"variant must be one of {ANTISYM_VARIANTS}")
    if variant == "Pdag+":
        if n < 0:
            raise ValueError("needs n >= 0")
    elif n < 1:
        raise ValueError("anti-symmetric families need n >= 1")

    if variant == "P-":
        inner = aw_P_plus_monic(n - 1, shifted(p, fa=p.q, fb=p.q))
        return _bracket_ab(p) * inner * recip(p.a * p.b)
    if variant == "E-":
        inner = aw_E_plus(n - 1, shifted(p, fa=p.q, fb=p.q))
        return _bracket_ab(p) * inner
    s = sqrt_scalar(p.q)
    if variant == "Pdag+":
        inner = aw_P_plus_monic(n, shifted(p, fa=s, fb=s, fc=1 / s, fd=1 / s))
        return inner.scale_arg(1 / s) * s**n
    # "Pdag-"
    inner = aw_P_plus_monic(n - 1, shifted(p, fa=s, fb=s, fc=s, fd=s))
    return _bracket_cd(p) * inner.scale_arg(1 / s) * s ** (n - 1)


# ---------------------------------------------------------------------------
# non-symmetric polynomials
# ---------------------------------------------------------------------------

def aw_nonsym(n: int, p: ParamSet, route: str = "ab", normalized: bool = False) -> LaurentPoly:
    """Non-symmetric Askey-Wilson polynomial of integer index.

    Negative n selects the q^{-|n|} eigenspace of Y, nonnegative n the
    q^{n-1}abcd eigenspace.  route = "ab" builds from the (P^+, P^-) pair,
    route = "dagger" from the (P^+, Pdag-) pair; both give the same
    polynomial.  normalized=True rescales so the value at z = 1/a is 1.
    """
    if route not in ("ab", "dagger"):
        raise ValueError("route must be 'ab' or 'dagger'")
    a, b, c, d, q = p.a, p.b, p.c, p.d, p.q
    abcd = p.abcd()
    if n == 0:
        return LaurentPoly.one()
    m = abs(n)
    if (1 - a * b) == 0 or (1 - q ** (2 * m - 1) * abcd) == 0:
        raise DegenerateParamsError("non-symmetric construction needs ab != 1 and q^(2n-1)abcd != 1")
    Pp = aw_P_plus_monic(m, p)
    if route == "ab":
        Pm = aw_antisym(m, p, "P-")
        if n < 0:
            poly = (Pp - Pm) * (a * b * recip(a * b - 1))
        else:
            poly = (
                Pp * ((1 - q**m * a * b) * (1 - q ** (m - 1) * abcd))
                - Pm * (a * b * (1 - q**m) * (1 - q ** (m - 1) * c * d))
            ) * recip((1 - a * b) * (1 - q ** (2 * m - 1) * abcd))
    else:
        Pdm = aw_antisym(m, p, "Pdag-")
        if n < 0:
            if (1 - q ** (m - 1) * c * d) == 0:
                raise DegenerateParamsError("needs q^(n-1) cd != 1")
            poly = (Pp - Pdm) * recip(1 - q ** (m - 1) * c * d)
        else:
            denom = 1 - q ** (2 * m - 1) * abcd
            poly = Pp * (q**m * (1 - q ** (m - 1) * abcd) / denom) + Pdm * (
                (1 - q**m) / denom
            )
    if not normalized:
        return poly
    if n < 0:
        scale = (a * b / (a * b - 1)) * qpoch([a * b, a * c, a * d], q, m) / (
            qpoch(q ** (m - 1) * abcd, q, m) * a**m
        )
    else:
        scale = qpoch([q * a * b, a * c, a * d], q, m) / (qpoch(q**m * abcd, q, m) * a**m)
    if scale == 0:
        raise DegenerateParamsError("renormalization constant vanishes")
    return poly * recip(scale)


def aw_nonsym_E_direct(n: int, p: ParamSet) -> LaurentPoly:
    """Renormalized non-symmetric polynomial assembled directly from
    E^+_m and the anti-symmetric E^-_m (no detour through the monic pair)."""
    a, b, c, d, q = p.a, p.b, p.c, p.d, p.q
    if n == 0:
        return LaurentPoly.one()
    m = abs(n)
    Ep = aw_E_plus(m, p)
    Em = aw_antisym(m, p, "E-")
    base = (1 - a * b) * (1 - q * a * b) * (1 - a * c) * (1 - a * d) * q ** (m - 1)
    if base == 0:
        raise DegenerateParamsError("degenerate denominators in direct form")
    if n < 0:
        factor = (1 - q**m * a * b) * (1 - q ** (m - 1) * p.abcd()) / (b * base)
    else:
        factor = a * (1 - q**m) * (1 - q ** (m - 1) * c * d) / base
    return Ep - Em * factor


def delta_qz(f: LaurentPoly, q) -> LaurentPoly:
    """The divided q-shift f(q^{1/2} z) - f(q^{-1/2} z)."""
    s = sqrt_scalar(q)
    return f.scale_arg(s) - f.scale_arg(1 / s)
