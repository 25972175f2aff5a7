"""Rational functions of z over a scalar backend, in reduced normal form.

A RationalFunc is a pair (num, den) of Laurent polynomials.  In the exact
backend the pair is canonical: den is an ordinary polynomial with nonzero
constant term and leading coefficient 1, gcd(num, den) = 1 up to a power
of z which is absorbed into num.  This makes equality of operator
coefficients a structural comparison.  Numeric pairs are not reduced;
they are compared by cross-multiplication against a tolerance.
"""

from __future__ import annotations

import math
from fractions import Fraction

import mpmath

from .errors import InternalError, SingularPointError
from .laurent import LaurentPoly
from .scalars import abs_scalar


# ---------------------------------------------------------------------------
# dense polynomial gcd over the rationals (integer primitive-PRS underneath)
# ---------------------------------------------------------------------------

def _strip(lst):
    while lst and lst[-1] == 0:
        lst.pop()
    return lst


def _int_content(lst):
    g = 0
    for c in lst:
        g = math.gcd(g, abs(c))
        if g == 1:
            return 1
    return g or 1


def _to_int_poly(fracs):
    lcm = 1
    for c in fracs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in fracs]
    g = _int_content(ints)
    return [c // g for c in ints]


def _int_prem(A, B):
    """Pseudo-remainder of A by B in Z[x] (B nonzero, deg A >= deg B)."""
    A = list(A)
    db = len(B) - 1
    lb = B[-1]
    while len(A) - 1 >= db and A:
        da = len(A) - 1
        coef = A[-1]
        A = [c * lb for c in A]
        for j in range(db + 1):
            A[da - db + j] -= coef * B[j]
        _strip(A)
        if not A:
            break
    return A


def poly_gcd(A, B):
    """Monic gcd of two dense Fraction coefficient lists (constant term first)."""
    A = _strip([Fraction(c) for c in A])
    B = _strip([Fraction(c) for c in B])
    if not A:
        G = B
    elif not B:
        G = A
    else:
        a = _to_int_poly(A)
        b = _to_int_poly(B)
        if len(a) < len(b):
            a, b = b, a
        while b:
            r = _int_prem(a, b)
            g = _int_content(r)
            a, b = b, [c // g for c in r] if g > 1 else r
        G = [Fraction(c) for c in a]
    if not G:
        return []
    lead = G[-1]
    return [c / lead for c in G]


def _poly_divmod(A, B):
    """Exact-field division of dense Fraction lists: A = Q*B + R."""
    A = [Fraction(c) for c in A]
    B = _strip([Fraction(c) for c in B])
    if not B:
        raise ZeroDivisionError
    db = len(B) - 1
    Q = [Fraction(0)] * max(len(A) - db, 0)
    while _strip(A) and len(A) - 1 >= db:
        da = len(A) - 1
        f = A[-1] / B[-1]
        Q[da - db] = f
        for j in range(db + 1):
            A[da - db + j] -= f * B[j]
    return Q, A


def _laurent_to_dense(f: LaurentPoly):
    """(dense list, valuation): f = z^val * poly(list)."""
    if f.is_zero():
        return [], 0
    v = f.valuation()
    deg = f.degree() - v
    out = [Fraction(0)] * (deg + 1)
    for e, c in f.coeffs.items():
        out[e - v] = c
    return out, v


def _dense_to_laurent(lst, val=0) -> LaurentPoly:
    return LaurentPoly({i + val: c for i, c in enumerate(lst) if c != 0})


# ---------------------------------------------------------------------------


class RationalFunc:
    __slots__ = ("num", "den", "exact")

    def __init__(self, num, den=None, reduce=True):
        if not isinstance(num, LaurentPoly):
            num = LaurentPoly.constant(num)
        if den is None:
            den = LaurentPoly.one()
        elif not isinstance(den, LaurentPoly):
            den = LaurentPoly.constant(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        self.num = num
        self.den = den
        self.exact = num.is_exact() and den.is_exact()
        if reduce and self.exact:
            self._reduce()

    @classmethod
    def constant(cls, c):
        return cls(LaurentPoly.constant(c), LaurentPoly.one(), reduce=False)

    @classmethod
    def from_laurent(cls, f: LaurentPoly):
        return cls(f, LaurentPoly.one(), reduce=False)

    def _reduce(self):
        if self.num.is_zero():
            self.num = LaurentPoly.zero()
            self.den = LaurentPoly.one()
            return
        n_dense, n_val = _laurent_to_dense(self.num)
        d_dense, d_val = _laurent_to_dense(self.den)
        g = poly_gcd(n_dense, d_dense)
        if len(g) > 1:
            n_dense, _ = _poly_divmod(n_dense, g)
            d_dense, _ = _poly_divmod(d_dense, g)
        lead = d_dense[-1]
        if lead != 1:
            n_dense = [c / lead for c in n_dense]
            d_dense = [c / lead for c in d_dense]
        self.num = _dense_to_laurent(n_dense, n_val - d_val)
        self.den = _dense_to_laurent(d_dense, 0)

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        if self.exact:
            return self.den.is_constant()
        return self.den.is_constant()

    def as_laurent(self) -> LaurentPoly:
        if self.exact:
            if not self.den.is_constant():
                raise InternalError("rational function is not a Laurent polynomial")
            c = self.den.constant_value()
            return self.num * (Fraction(1) / c if isinstance(c, (int, Fraction)) else 1 / c)
        if not self.den.is_constant():
            raise InternalError("numeric rational function with non-constant denominator")
        return self.num * (1 / self.den.constant_value())

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _coerce_rf(other)
        return RationalFunc(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        out = RationalFunc.__new__(RationalFunc)
        out.num = -self.num
        out.den = self.den
        out.exact = self.exact
        return out

    def __sub__(self, other):
        return self + (-_coerce_rf(other))

    def __rsub__(self, other):
        return _coerce_rf(other) + (-self)

    def __mul__(self, other):
        other = _coerce_rf(other)
        if self.exact and other.exact:
            # cross-cancel before multiplying to keep degrees small
            a = RationalFunc(self.num, other.den)
            b = RationalFunc(other.num, self.den)
            return RationalFunc(a.num * b.num, a.den * b.den)
        return RationalFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_rf(other)
        if other.is_zero():
            raise ZeroDivisionError
        return self * RationalFunc(other.den, other.num)

    def __rtruediv__(self, other):
        return _coerce_rf(other) / self

    def __eq__(self, other):
        other = _coerce_rf(other)
        if self.exact and other.exact:
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def eq_numeric(self, other, tol) -> bool:
        other = _coerce_rf(other)
        lhs = self.num * other.den
        rhs = other.num * self.den
        return lhs.eq_numeric(rhs, tol)

    # -- maps ----------------------------------------------------------------

    def subs_qk_eps(self, q, k: int, eps: int) -> "RationalFunc":
        return RationalFunc(
            self.num.subs_qk_eps(q, k, eps), self.den.subs_qk_eps(q, k, eps)
        )

    def eval(self, z0):
        dv = self.den.eval(z0)
        if dv == 0:
            raise SingularPointError(f"denominator vanishes at z = {z0}")
        if not self.exact and abs_scalar(dv) < mpmath.mpf(10) ** (-mpmath.mp.dps // 2):
            raise SingularPointError(f"denominator nearly vanishes at z = {z0}")
        return self.num.eval(z0) / dv

    def __repr__(self):
        return f"RationalFunc({self.num!r} / {self.den!r})"


def _coerce_rf(x) -> RationalFunc:
    if isinstance(x, RationalFunc):
        return x
    if isinstance(x, LaurentPoly):
        return RationalFunc.from_laurent(x)
    return RationalFunc.constant(x)


# ---------------------------------------------------------------------------
# rational Gaussian shift ratios
# ---------------------------------------------------------------------------

def _ratio_inf(x: LaurentPoly, q, m: int) -> RationalFunc:
    """(x q^m; q)_inf / (x; q)_inf as a rational function of z.

    Equals 1/(x;q)_m for m >= 0 and (x q^m; q)_{-m} for m < 0, where x is a
    monomial in z.
    """
    one = LaurentPoly.one()
    if m >= 0:
        den = one
        for j in range(m):
            den = den * (one - x * q**j)
        return RationalFunc(one, den)
    num = one
    for j in range(-m):
        num = num * (one - x * q ** (m + j))
    return RationalFunc(num, one)


def gaussian_shift_ratio(e, q, eps: int, k: int) -> RationalFunc:
    """G_e(z) / G_e(q^k z^eps) as a rational function of z.

    G_e(z) = 1/((e z; q)_inf (e z^{-1}; q)_inf); for integer shifts and a
    possible reflection the ratio of the two infinite products is finite.
    """
    ez = LaurentPoly({1: e})
    ezi = LaurentPoly({-1: e})
    if eps == 1:
        return _ratio_inf(ez, q, k) * _ratio_inf(ezi, q, -k)
    if eps == -1:
        return _ratio_inf(ezi, q, k) * _ratio_inf(ez, q, -k)
    raise ValueError("eps must be +1 or -1")
