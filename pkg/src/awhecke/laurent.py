"""Laurent polynomials in z with scalar coefficients.

Coefficients live in either scalar backend (exact rationals or mpmath
numbers).  Storage is sparse by exponent; zero coefficients are never
stored, so exact equality is plain coefficient comparison.  Numeric
comparison always takes an explicit tolerance -- there is no implicit
fuzzy equality.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath

from .errors import DegenerateParamsError, InternalError, ZeroArgumentError
from .scalars import abs_scalar, is_exact


class LaurentPoly:
    """Finitely supported map exponent -> coefficient, immutable by convention."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        d = {}
        if coeffs:
            for e, c in coeffs.items():
                if c != 0:
                    d[int(e)] = c
        self.coeffs = d

    # -- constructors -------------------------------------------------

    @classmethod
    def constant(cls, c):
        return cls({0: c} if c != 0 else {})

    @classmethod
    def z_power(cls, k, c=1):
        return cls({k: c})

    @classmethod
    def zero(cls):
        return cls({})

    @classmethod
    def one(cls):
        return cls({0: Fraction(1)})

    # -- basic queries ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return not self.coeffs or set(self.coeffs) == {0}

    def constant_value(self):
        return self.coeffs.get(0, Fraction(0))

    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return max(self.coeffs)

    def valuation(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no valuation")
        return min(self.coeffs)

    def coeff(self, e):
        return self.coeffs.get(e, Fraction(0))

    def is_symmetric(self) -> bool:
        """True when f(z) = f(1/z), i.e. coeff(k) == coeff(-k) for all k."""
        return all(self.coeffs.get(-e) == c for e, c in self.coeffs.items())

    def is_exact(self) -> bool:
        return all(is_exact(c) for c in self.coeffs.values())

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        d = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = d.get(e, 0) + c
            if s == 0:
                d.pop(e, None)
            else:
                d[e] = s
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = d
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = {e: -c for e, c in self.coeffs.items()}
        return out

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            if other == 0:
                return LaurentPoly.zero()
            out = LaurentPoly.__new__(LaurentPoly)
            out.coeffs = {e: c * other for e, c in self.coeffs.items()}
            return out
        d = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                s = d.get(e, 0) + c1 * c2
                if s == 0:
                    d.pop(e, None)
                else:
                    d[e] = s
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = {e: c for e, c in d.items() if c != 0}
        return out

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative powers of a general Laurent polynomial")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            other = _coerce(other)
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def eq_numeric(self, other, tol) -> bool:
        """Coefficientwise comparison with explicit absolute/relative tolerance."""
        other = _coerce(other)
        scale = max(
            [abs_scalar(c) for c in self.coeffs.values()]
            + [abs_scalar(c) for c in other.coeffs.values()]
            + [mpmath.mpf(1)]
        )
        for e in set(self.coeffs) | set(other.coeffs):
            d = abs_scalar(self.coeff(e) - other.coeff(e))
            if d > tol * scale:
                return False
        return True

    # -- structural maps -----------------------------------------------

    def invol(self):
        """The involution f(z) -> f(1/z)."""
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = {-e: c for e, c in self.coeffs.items()}
        return out

    def subs_qk_eps(self, q, k: int, eps: int):
        """Substitute z -> q^k z^eps with eps in {+1, -1}."""
        if eps not in (1, -1):
            raise ValueError("eps must be +1 or -1")
        d = {}
        for e, c in self.coeffs.items():
            d[eps * e] = c * q ** (k * e)
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = {e: c for e, c in d.items() if c != 0}
        return out

    def scale_arg(self, factor):
        """Substitute z -> factor * z."""
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = {e: c * factor**e for e, c in self.coeffs.items()}
        return out

    def eval(self, z0):
        """Evaluate at z0 != 0, Horner on the positive and negative parts."""
        if z0 == 0:
            raise ZeroArgumentError("Laurent polynomial evaluated at z = 0")
        pos = sorted((e for e in self.coeffs if e >= 0), reverse=True)
        neg = sorted((e for e in self.coeffs if e < 0))
        acc = 0
        if pos:
            acc = self.coeffs[pos[0]]
            for prev, e in zip(pos, pos[1:]):
                acc = acc * z0 ** (prev - e) + self.coeffs[e]
            acc = acc * z0 ** pos[-1]
        nacc = 0
        if neg:
            w = 1 / z0
            nacc = self.coeffs[neg[0]]
            for prev, e in zip(neg, neg[1:]):
                nacc = nacc * w ** (e - prev) + self.coeffs[e]
            nacc = nacc * w ** (-neg[-1])
        return acc + nacc

    # -- exact division -------------------------------------------------

    def divmod_exact(self, divisor):
        """Exact-backend division: returns (quotient, remainder) as Laurent polys.

        Works up to z-power shifts, so the divisor may be a genuine Laurent
        polynomial.  The remainder is a polynomial of degree < deg(divisor)
        after the shift.
        """
        divisor = _coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPoly.zero(), LaurentPoly.zero()
        sv, dv = self.valuation(), divisor.valuation()
        num = {e - sv: c for e, c in self.coeffs.items()}
        den = {e - dv: c for e, c in divisor.coeffs.items()}
        dn = max(num)
        dd = max(den)
        num_l = [num.get(i, Fraction(0)) for i in range(dn + 1)]
        den_l = [den.get(i, Fraction(0)) for i in range(dd + 1)]
        quot = [Fraction(0)] * max(dn - dd + 1, 0)
        for i in range(dn - dd, -1, -1):
            c = num_l[i + dd]
            if c == 0:
                continue
            f = c / den_l[dd]
            quot[i] = f
            for j in range(dd + 1):
                num_l[i + j] -= f * den_l[j]
        q_poly = LaurentPoly(
            {i + sv - dv: c for i, c in enumerate(quot) if c != 0}
        )
        r_poly = LaurentPoly({i + sv: c for i, c in enumerate(num_l) if c != 0})
        return q_poly, r_poly

    def exact_div(self, divisor):
        q, r = self.divmod_exact(divisor)
        if not r.is_zero():
            raise InternalError("exact Laurent division left a remainder")
        return q

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        """JSON object {exponent: coefficient-string}, rationals as 'p/q'."""
        from .scalars import scalar_str

        return {str(e): scalar_str(c) for e, c in sorted(self.coeffs.items())}

    @classmethod
    def from_json(cls, obj) -> "LaurentPoly":
        from .scalars import parse_scalar

        return cls({int(e): parse_scalar(str(c)) for e, c in obj.items()})

    def __repr__(self):
        if not self.coeffs:
            return "LaurentPoly(0)"
        parts = [f"({c})*z^{e}" if e else f"({c})" for e, c in sorted(self.coeffs.items())]
        return "LaurentPoly(" + " + ".join(parts) + ")"


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    return LaurentPoly.constant(x)


def invol(f: LaurentPoly) -> LaurentPoly:
    """f(z) -> f(1/z); an involution on Laurent polynomials."""
    return _coerce(f).invol()


def eval_poly(f: LaurentPoly, z0):
    return _coerce(f).eval(z0)


def t1_decompose(g: LaurentPoly, p):
    """Split g = g1 - z^{-1}(1-az)(1-bz) g2 with g1, g2 symmetric.

    Uses the projections g1 = (T1 g + g)/(1 - ab) and
    g2 = z (T1 g + ab g) / ((1-az)(1-bz)(1-ab)) coming from the
    quadratic relation of T1 in the basic representation.
    """
    from .daha import basic_op

    if p.a * p.b == 1:
        raise DegenerateParamsError("t1_decompose needs ab != 1")
    g = _coerce(g)
    t1g = basic_op("T1", p).apply(g)
    one = Fraction(1)
    g1 = (t1g + g) * (one / (1 - p.a * p.b))
    h2 = t1g + g * (p.a * p.b)
    bracket = LaurentPoly({-1: one}) * LaurentPoly({0: one, 1: -p.a}) * LaurentPoly(
        {0: one, 1: -p.b}
    )
    g2 = h2.exact_div(bracket) * (one / (1 - p.a * p.b))
    if not (g1.is_symmetric() and g2.is_symmetric()):
        raise InternalError("t1_decompose produced non-symmetric parts")
    if g1 - bracket * g2 != g:
        raise InternalError("t1_decompose does not reconstruct its input")
    return g1, g2
