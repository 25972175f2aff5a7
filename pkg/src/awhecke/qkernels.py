"""Scalar q-analysis kernels: q-shifted factorials, the Gaussian, basic
hypergeometric series and very-well-poised series.

Finite objects (finite q-shifted factorials, terminating series) work in
both backends and are exact on rational input.  Infinite products and
non-terminating series require the numeric backend, |q| < 1, and follow
an explicit truncation contract controlled by SeriesConfig: summation
stops once `tail_guard` consecutive terms are below rel_tol relative to
the running value AND a geometric tail bound computed from the observed
term ratio is also below that threshold.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, replace

import mpmath
from mpmath import mp

from .errors import (
    DivergenceError,
    DomainError,
    MaxTermsExceeded,
    PoleError,
    PoleInDenominatorError,
)
from .scalars import abs_scalar, is_exact, to_numeric

log = logging.getLogger(__name__)

#: extra working digits used inside numeric evaluations
GUARD_DIGITS = 10


@dataclass(frozen=True)
class SeriesConfig:
    """Truncation contract for infinite products and series.

    rel_tol defaults to 10**-(digits+5), leaving headroom below the
    identity-check tolerance 10**-(digits-10).
    """

    digits: int = 50
    rel_tol: object = None
    max_terms: int = 4000
    tail_guard: int = 5

    def __post_init__(self):
        if self.max_terms < 8:
            raise ValueError("max_terms must be >= 8")
        if self.tail_guard < 3:
            raise ValueError("tail_guard must be >= 3")

    def tol(self):
        if self.rel_tol is not None:
            return mpmath.mpf(self.rel_tol)
        return mpmath.mpf(10) ** (-(self.digits + 5))

    def check_tol(self):
        """Default tolerance for analytic identity checks at this precision."""
        return mpmath.mpf(10) ** (-(self.digits - 10))

    def workdps(self):
        return mp.workdps(self.digits + GUARD_DIGITS)

    @classmethod
    def from_dict(cls, obj) -> "SeriesConfig":
        known = {k: obj[k] for k in ("digits", "rel_tol", "max_terms", "tail_guard") if k in obj}
        return cls(**known)

    @classmethod
    def from_file(cls, path) -> "SeriesConfig":
        text = open(path).read()
        if str(path).endswith(".toml"):
            import tomllib

            return cls.from_dict(tomllib.loads(text))
        return cls.from_dict(json.loads(text))

    def with_digits(self, digits: int) -> "SeriesConfig":
        return replace(self, digits=digits)


DEFAULT_CONFIG = SeriesConfig()


def _as_list(x):
    if isinstance(x, (list, tuple)):
        return list(x)
    return [x]


# ---------------------------------------------------------------------------
# q-shifted factorials
# ---------------------------------------------------------------------------

def qpoch(x, q, n: int):
    """Finite q-shifted factorial (x; q)_n = prod_{j<n} (1 - x q^j).

    x may be a single scalar or a sequence, in which case the product of
    the individual factorials is returned.  Exact on exact input.
    """
    if n < 0:
        raise ValueError("qpoch needs n >= 0")
    xs = _as_list(x)
    from fractions import Fraction

    result = Fraction(1) if all(is_exact(v) for v in xs + [q]) else 1
    for xi in xs:
        acc = 1
        w = xi
        for _ in range(n):
            acc *= 1 - w
            w *= q
        result *= acc
    return result


def qpoch_inf(x, q, cfg: SeriesConfig = DEFAULT_CONFIG):
    """Infinite product (x; q)_inf, numeric backend, |q| < 1.

    Truncates once |x q^j| < rel_tol for tail_guard consecutive j; the
    remaining tail is bounded by exp(sum |x| |q|^j) - 1 and logged.
    """
    xs = _as_list(x)
    with cfg.workdps():
        qn = to_numeric(q)
        if mpmath.fabs(qn) >= 1:
            raise DomainError("(x; q)_inf requires |q| < 1")
        tol = cfg.tol()
        result = mpmath.mpf(1)
        for xi in xs:
            w = to_numeric(xi)
            acc = mpmath.mpf(1)
            small = 0
            for j in range(cfg.max_terms):
                acc *= 1 - w
                w *= qn
                if mpmath.fabs(w) < tol:
                    small += 1
                    if small >= cfg.tail_guard:
                        break
                else:
                    small = 0
            else:
                raise MaxTermsExceeded("(x; q)_inf did not meet the truncation rule")
            tail_bound = mpmath.fabs(w) / (1 - mpmath.fabs(qn))
            log.debug("qpoch_inf tail bound %s after %s factors", mpmath.nstr(tail_bound, 5), j + 1)
            result *= acc
        return +result


def gaussian(e, z, q, cfg: SeriesConfig = DEFAULT_CONFIG):
    """The Gaussian G_e(z) = 1/((e z; q)_inf (e z^{-1}; q)_inf).

    Raises PoleError when z or 1/z collides with the pole lattice
    e^{-1} q^{-Z>=0} within working tolerance.
    """
    with cfg.workdps():
        en, zn, qn = to_numeric(e), to_numeric(z), to_numeric(q)
        cut = mpmath.mpf(10) ** (-(cfg.digits // 2))
        for w in (en * zn, en / zn):
            v = w
            for _ in range(cfg.max_terms):
                if mpmath.fabs(v - 1) < cut:
                    raise PoleError(f"Gaussian pole: {w} in q^(-Z>=0)")
                v *= qn
                if mpmath.fabs(v) < cut:
                    break
        denom = qpoch_inf([en * zn, en / zn], q, cfg)
        return 1 / denom


# ---------------------------------------------------------------------------
# series summation core
# ---------------------------------------------------------------------------

#: terminating indices are scanned only up to this bound
TERMINATION_SCAN = 512


def _terminating_index(num, q, cfg, exact):
    """Smallest n with some numerator parameter equal to q^{-n}, else None."""
    best = None
    bound = min(cfg.max_terms, TERMINATION_SCAN)
    if exact:
        for a in num:
            w = a
            for n in range(bound + 1):
                if w == 1:
                    best = n if best is None else min(best, n)
                    break
                w *= q
    else:
        cut = mpmath.mpf(10) ** (-(cfg.digits // 2))
        qn = to_numeric(q)
        for a in num:
            w = to_numeric(a)
            for n in range(bound + 1):
                if mpmath.fabs(w - 1) < cut:
                    best = n if best is None else min(best, n)
                    break
                w *= qn
                if mpmath.fabs(w) < cut:
                    break
    return best


def _check_denominator(den, q, cfg, exact, n_terms):
    """Raise PoleInDenominatorError if a lower parameter hits q^{-m} for an
    m that the summation range actually reaches."""
    limit = n_terms if n_terms is not None else cfg.max_terms
    if exact:
        for b in den:
            w = b
            for m in range(limit):
                if w == 1:
                    raise PoleInDenominatorError(f"lower parameter {b} = q^-{m}")
                w *= q
    else:
        cut = mpmath.mpf(10) ** (-(cfg.digits // 2))
        qn = to_numeric(q)
        for b in den:
            w = to_numeric(b)
            for m in range(limit):
                if mpmath.fabs(w - 1) < cut:
                    raise PoleInDenominatorError(f"lower parameter {b} ~ q^-{m}")
                w *= qn
                if mpmath.fabs(w) < cut:
                    break


def _sum_series(term_ratio, cfg, exact, n_terms, what):
    """Sum 1 + t1 + t2 + ... with t_{k+1} = t_k * term_ratio(k).

    For non-terminating numeric series applies the SeriesConfig rule:
    stop after tail_guard consecutive terms below rel_tol * |sum| once a
    geometric bound with the observed ratio also clears that threshold.
    """
    total = 1 if exact else mpmath.mpf(1)
    term = total
    if n_terms is not None:
        for k in range(n_terms):
            term = term * term_ratio(k)
            total = total + term
        return total
    if exact:
        raise DivergenceError(f"non-terminating {what} requires the numeric backend")
    tol = cfg.tol()
    small = 0
    for k in range(cfg.max_terms):
        ratio = term_ratio(k)
        term = term * ratio
        total = total + term
        scale = max(mpmath.fabs(total), mpmath.mpf(1))
        if mpmath.fabs(term) < tol * scale:
            small += 1
            if small >= cfg.tail_guard:
                r = mpmath.fabs(ratio)
                if r < 1 and mpmath.fabs(term) * r / (1 - r) < tol * scale:
                    return +total
        else:
            small = 0
    raise MaxTermsExceeded(f"{what} did not meet the truncation rule")


# ---------------------------------------------------------------------------
# basic hypergeometric series
# ---------------------------------------------------------------------------

def bhs(num, den, q, arg, cfg: SeriesConfig = DEFAULT_CONFIG):
    """The basic hypergeometric series r+1_phi_r (general r_phi_s).

    sum_k  (num; q)_k / ((q; q)_k (den; q)_k) * ((-1)^k q^(k(k-1)/2))^(1+s-r) * arg^k.

    Terminating series (a numerator parameter in q^{-Z>=0}) are summed
    exactly in the exact backend; otherwise |arg| < 1 is required.
    """
    num = _as_list(num)
    den = _as_list(den)
    exact = all(is_exact(x) for x in num + den + [q, arg])
    extra = 1 + len(den) - len(num)

    def run():
        n_terms = _terminating_index(num, q, cfg, exact)
        _check_denominator(den, q, cfg, exact, n_terms)
        if n_terms is None and not exact:
            if extra < 0:
                raise DivergenceError("r_phi_s with r > s+1 requires termination")
            if extra == 0 and mpmath.fabs(to_numeric(arg)) >= 1:
                raise DivergenceError("non-terminating series with |arg| >= 1")
        if exact:
            nums = list(num)
            dens = list(den)
            qq, x = q, arg
        else:
            nums = [to_numeric(v) for v in num]
            dens = [to_numeric(v) for v in den]
            qq, x = to_numeric(q), to_numeric(arg)

        qk = [1]  # q^k cache

        def ratio(k):
            w = qk[0]
            r = x
            for a in nums:
                r = r * (1 - a * w)
            r = r / (1 - qq * w)
            for b in dens:
                r = r / (1 - b * w)
            if extra:
                r = r * (-w) ** extra
            qk[0] = w * qq
            return r

        return _sum_series(ratio, cfg, exact, n_terms, "bhs")

    if exact:
        return run()
    with cfg.workdps():
        return +run()


def vwp_series(a, rest, q, arg, cfg: SeriesConfig = DEFAULT_CONFIG):
    """Very-well-poised series r+2_W_r+1 (a; rest; q, arg) at explicit argument:

    sum_k (1 - a q^{2k})/(1 - a) * (a; q)_k / (q; q)_k *
          prod_i (rest_i; q)_k / (q a / rest_i; q)_k * arg^k.

    The square-root pair of the underlying phi-series is folded into the
    (1 - a q^{2k}) factor, so no square roots are needed.
    """
    rest = _as_list(rest)
    exact = all(is_exact(x) for x in rest + [a, q, arg])

    def run():
        n_terms = _terminating_index(rest + [a], q, cfg, exact)
        upper = [a] + rest
        lower = [q * a / r for r in rest]
        _check_denominator(lower, q, cfg, exact, n_terms)
        if n_terms is None:
            if exact:
                raise DivergenceError("non-terminating series requires the numeric backend")
            if mpmath.fabs(to_numeric(arg)) >= 1:
                raise DivergenceError("very-well-poised series with |arg| >= 1")
        if exact:
            ups, lows, qq, x, aa = upper, lower, q, arg, a
        else:
            ups = [to_numeric(v) for v in upper]
            lows = [to_numeric(v) for v in lower]
            qq, x, aa = to_numeric(q), to_numeric(arg), to_numeric(a)

        state = [1]  # q^k

        def ratio(k):
            w = state[0]
            pivot = 1 - aa * w * w
            if pivot == 0:
                raise PoleInDenominatorError("very-well-poised parameter a in q^(-2Z)")
            r = x * (1 - aa * qq * qq * w * w) / pivot
            for u in ups:
                r = r * (1 - u * w)
            r = r / (1 - qq * w)
            for l in lows:
                r = r / (1 - l * w)
            state[0] = w * qq
            return r

        return _sum_series(ratio, cfg, exact, n_terms, "vwp_series")

    if exact:
        return run()
    with cfg.workdps():
        return +run()


def w87(A, b, c, d, e, f, q, cfg: SeriesConfig = DEFAULT_CONFIG):
    """The 8W7 shorthand: very-well-poised-balanced series with argument
    q^2 A^2/(bcdef); requires that argument in the unit disc or termination."""
    arg = q * q * A * A / (b * c * d * e * f)
    return vwp_series(A, [b, c, d, e, f], q, arg, cfg)
