"""The basic representation as an exact operator calculus.

A DiffRefOp is a finite sum of maps f(z) |-> r(z) f(q^k z^eps) with
rational-function coefficients r, stored in normal form: at most one term
per (eps, k) key, each coefficient reduced.  Composition substitutes the
inner shift into the outer coefficients, so algebra relations can be
verified exactly: a relation holds iff its normal form has no terms.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath

from .errors import (
    DegenerateParamsError,
    InternalError,
    UnsupportedShiftError,
)
from .laurent import LaurentPoly
from .params import ParamSet, require_generic
from .ratfunc import RationalFunc, gaussian_shift_ratio

GENERATORS = ("Z", "Zi", "T1", "T1i", "T0", "T0i", "Y", "Yi", "D", "X", "e")


class DiffRefOp:
    """q-difference-reflection operator in normal form."""

    __slots__ = ("q", "terms")

    def __init__(self, q, terms=None):
        self.q = q
        self.terms = {}
        if terms:
            for key, r in terms.items():
                if not r.is_zero():
                    self.terms[key] = r

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, q):
        return cls(q, {})

    @classmethod
    def identity(cls, q):
        return cls(q, {(1, 0): RationalFunc.constant(Fraction(1))})

    @classmethod
    def multiplication(cls, q, f):
        """Multiplication operator g |-> f*g for a Laurent polynomial f."""
        return cls(q, {(1, 0): RationalFunc.from_laurent(f)})

    # -- algebra ------------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for key, r in other.terms.items():
            s = terms[key] + r if key in terms else r
            if s.is_zero():
                terms.pop(key, None)
            else:
                terms[key] = s
        return DiffRefOp(self.q, terms)

    __radd__ = __add__

    def __neg__(self):
        return DiffRefOp(self.q, {k: -r for k, r in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def scale(self, c):
        if c == 0:
            return DiffRefOp.zero(self.q)
        return DiffRefOp(self.q, {k: r * c for k, r in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, DiffRefOp):
            return compose(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def _coerce(self, x):
        if isinstance(x, DiffRefOp):
            if x.q != self.q:
                raise InternalError("operators over different base q")
            return x
        return DiffRefOp.identity(self.q).scale(x)

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def residual_terms(self) -> int:
        return len(self.terms)

    def is_exact(self) -> bool:
        return all(r.exact for r in self.terms.values())

    def __eq__(self, other):
        if not isinstance(other, DiffRefOp):
            return NotImplemented
        return self.q == other.q and self.terms == other.terms

    def __hash__(self):
        return hash((self.q, frozenset(self.terms.items())))

    def eq_numeric(self, other, tol) -> bool:
        other = self._coerce(other)
        for key in set(self.terms) | set(other.terms):
            a = self.terms.get(key)
            b = other.terms.get(key)
            if a is None:
                a = RationalFunc.constant(0)
            if b is None:
                b = RationalFunc.constant(0)
            if not a.eq_numeric(b, tol):
                return False
        return True

    # -- action ----------------------------------------------------------------

    def apply(self, f: LaurentPoly) -> LaurentPoly:
        """Apply to a Laurent polynomial; the result must again be one."""
        if not isinstance(f, LaurentPoly):
            f = LaurentPoly.constant(f)
        acc = RationalFunc.constant(0)
        for (eps, k), r in self.terms.items():
            acc = acc + r * RationalFunc.from_laurent(f.subs_qk_eps(self.q, k, eps))
        return acc.as_laurent()

    def apply_rational(self, f: LaurentPoly) -> RationalFunc:
        """Apply without requiring the image to be polynomial."""
        if not isinstance(f, LaurentPoly):
            f = LaurentPoly.constant(f)
        acc = RationalFunc.constant(0)
        for (eps, k), r in self.terms.items():
            acc = acc + r * RationalFunc.from_laurent(f.subs_qk_eps(self.q, k, eps))
        return acc

    def apply_at(self, fn, z):
        """Apply to a function given as a callable, evaluated at the point z."""
        total = 0
        for (eps, k), r in self.terms.items():
            total += r.eval(z) * fn(self.q**k * z**eps)
        return total

    def __repr__(self):
        keys = sorted(self.terms, key=lambda t: (t[0], t[1]))
        return f"DiffRefOp({len(keys)} terms: {keys})"


def compose(A: DiffRefOp, B: DiffRefOp) -> DiffRefOp:
    """Operator composition (A o B) f = A(B f), result in normal form."""
    if A.q != B.q:
        raise InternalError("composition of operators over different base q")
    terms = {}
    for (d_eps, l), s in A.terms.items():
        for (b_eps, k), r in B.terms.items():
            key = (b_eps * d_eps, k + b_eps * l)
            contrib = s * r.subs_qk_eps(A.q, l, d_eps)
            if key in terms:
                acc = terms[key] + contrib
                if acc.is_zero():
                    del terms[key]
                else:
                    terms[key] = acc
            elif not contrib.is_zero():
                terms[key] = contrib
    return DiffRefOp(A.q, terms)


def op_equal(A: DiffRefOp, B: DiffRefOp, tol=None) -> bool:
    """Exact normal-form equality, or tolerance comparison when tol given."""
    if tol is not None:
        return A.eq_numeric(B, tol)
    return A == B


# ---------------------------------------------------------------------------
# basic representation
# ---------------------------------------------------------------------------

_ONE = Fraction(1)
_BASIC_CACHE: dict = {}


def _poly(*pairs) -> LaurentPoly:
    return LaurentPoly(dict(pairs))


def basic_op(gen: str, p: ParamSet) -> DiffRefOp:
    """The image of a generator (or derived element) under the basic
    representation on Laurent polynomials.

    Z is multiplication by z; T1 combines f(z) and f(1/z); T0 combines
    f(z) and f(q/z); Y = T1 T0, D = Y + (abcd/q) Y^{-1}, X = Z + Z^{-1},
    and e = (T1 + 1)/(1 - ab) is the symmetrizing idempotent.
    """
    key = (gen, p)
    cached = _BASIC_CACHE.get(key)
    if cached is not None:
        return cached
    a, b, c, d, q = p.a, p.b, p.c, p.d, p.q
    one = _ONE

    if gen == "Z":
        op = DiffRefOp(q, {(1, 0): RationalFunc.from_laurent(_poly((1, one)))})
    elif gen == "Zi":
        op = DiffRefOp(q, {(1, 0): RationalFunc.from_laurent(_poly((-1, one)))})
    elif gen == "T1":
        den = _poly((0, one), (2, -one))  # 1 - z^2
        num_id = _poly((1, a + b), (0, -(1 + a * b)))
        num_ref = _poly((0, one), (1, -a)) * _poly((0, one), (1, -b))
        op = DiffRefOp(
            q,
            {
                (1, 0): RationalFunc(num_id, den),
                (-1, 0): RationalFunc(num_ref, den),
            },
        )
    elif gen == "T0":
        den = _poly((0, q), (2, -one))  # q - z^2
        num_id = _poly((2, c * d / q + 1), (1, -(c + d)))
        num_ref = _poly((0, c), (1, -one)) * _poly((0, d), (1, -one))
        op = DiffRefOp(
            q,
            {
                (1, 0): RationalFunc(num_id, den),
                (-1, 1): RationalFunc(-num_ref, den),
            },
        )
    elif gen == "T1i":
        if a * b == 0:
            raise DegenerateParamsError("T1 inverse needs ab != 0")
        t1 = basic_op("T1", p)
        op = t1.scale(-1 / (a * b)) - DiffRefOp.identity(q).scale(1 + 1 / (a * b))
    elif gen == "T0i":
        if c * d == 0:
            raise DegenerateParamsError("T0 inverse needs cd != 0")
        t0 = basic_op("T0", p)
        op = t0.scale(-q / (c * d)) - DiffRefOp.identity(q).scale(1 + q / (c * d))
    elif gen == "Y":
        op = compose(basic_op("T1", p), basic_op("T0", p))
    elif gen == "Yi":
        op = compose(basic_op("T0i", p), basic_op("T1i", p))
    elif gen == "D":
        op = basic_op("Y", p) + basic_op("Yi", p).scale(a * b * c * d / q)
    elif gen == "X":
        op = basic_op("Z", p) + basic_op("Zi", p)
    elif gen == "e":
        if a * b == 1:
            raise DegenerateParamsError("idempotent e needs ab != 1")
        op = (basic_op("T1", p) + DiffRefOp.identity(q)).scale(1 / (1 - a * b))
    else:
        raise KeyError(f"unknown generator {gen!r}")
    _BASIC_CACHE[key] = op
    return op


def aw_operator(p: ParamSet) -> DiffRefOp:
    """The Askey-Wilson second-order q-difference operator L.

    Restricted to symmetric Laurent polynomials it agrees with D in the
    basic representation.
    """
    require_generic(p)
    a, b, c, d, q = p.a, p.b, p.c, p.d, p.q
    one = _ONE
    A = RationalFunc(
        _poly((0, one), (1, -a))
        * _poly((0, one), (1, -b))
        * _poly((0, one), (1, -c))
        * _poly((0, one), (1, -d)),
        _poly((0, one), (2, -one)) * _poly((0, one), (2, -q)),
    )
    B = RationalFunc(
        _poly((0, a), (1, -one))
        * _poly((0, b), (1, -one))
        * _poly((0, c), (1, -one))
        * _poly((0, d), (1, -one)),
        _poly((0, one), (2, -one)) * _poly((0, q), (2, -one)),
    )
    const = RationalFunc.constant(1 + a * b * c * d / q)
    return DiffRefOp(
        q,
        {
            (1, 1): A,
            (1, -1): B,
            (1, 0): const - A - B,
        },
    )


def conjugate_by_gaussian_ratio(A: DiffRefOp, numer_e=None, denom_e=None) -> DiffRefOp:
    """Conjugate A by the ratio R = G_{numer_e}/G_{denom_e} of Gaussians
    (either side may be omitted): returns R * A * R^{-1}.

    The term with shift (eps, k) picks up the rational factor
    R(z)/R(q^k z^eps); for integer shifts this is always a finite product
    of linear factors, computed exactly.
    """
    q = A.q
    terms = {}
    for (eps, k), r in A.terms.items():
        factor = RationalFunc.constant(Fraction(1))
        try:
            if numer_e is not None:
                factor = factor * gaussian_shift_ratio(numer_e, q, eps, k)
            if denom_e is not None:
                factor = factor / gaussian_shift_ratio(denom_e, q, eps, k)
        except ValueError as exc:
            raise UnsupportedShiftError(str(exc)) from exc
        terms[(eps, k)] = r * factor
    return DiffRefOp(q, terms)


# ---------------------------------------------------------------------------
# relation residuals
# ---------------------------------------------------------------------------

def quadratic_residual(U: DiffRefOp, alpha, beta) -> DiffRefOp:
    """(U + alpha)(U + beta) as an operator; zero iff the Hecke-type
    quadratic relation holds."""
    ident = DiffRefOp.identity(U.q)
    return compose(U + ident.scale(alpha), U + ident.scale(beta))


def commutator(A: DiffRefOp, B: DiffRefOp) -> DiffRefOp:
    return compose(A, B) - compose(B, A)


def defining_relation_residuals(images: dict, p: ParamSet) -> dict:
    """Residual operators of the four defining relations (and the two
    rewritten ones) for generator images realized over the target tuple.

    `images` maps the six letters T1, T1i, T0, T0i, Z, Zi to operators.
    The scalar coefficients use the source tuple p, which is what makes
    the images an isomorphism onto the target algebra.
    """
    a, b, c, d, q = p.a, p.b, p.c, p.d, p.q
    T1, T1i = images["T1"], images["T1i"]
    T0, T0i = images["T0"], images["T0i"]
    Z, Zi = images["Z"], images["Zi"]
    return {
        "t1-quadratic": quadratic_residual(T1, a * b, 1),
        "t1z-quadratic": quadratic_residual(compose(T1, Z), a, b),
        "t0zi-quadratic": quadratic_residual(compose(T0, Zi).scale(q), c, d),
        "t0-quadratic": quadratic_residual(T0, c * d / q, 1),
        "zit1i-quadratic": quadratic_residual(compose(Zi, T1i), 1 / a, 1 / b),
        "t0iz-quadratic": quadratic_residual(compose(T0i, Z), q / c, q / d),
    }


def basic_images(p: ParamSet) -> dict:
    return {gen: basic_op(gen, p) for gen in ("T1", "T1i", "T0", "T0i", "Z", "Zi")}
