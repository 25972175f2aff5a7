"""High-precision evaluation of symmetric and non-symmetric Askey-Wilson
functions, the Cherednik-type kernel coefficients, and numeric operator
application for eigen-equation checks.

The symmetric function E+(gamma; z) has four evaluation routes:

  "w87"       prefactor times the very-well-poised 8W7 series; needs
              |q / (d~ gamma)| < 1,
  "sum4phi3"  sum of two 4phi3 blocks with an infinite-product prefactor,
  "suslov"    the same split expressed through the terminating-type series
              R(gamma; z; .) at (a,b,c,d) and (q/d, b, c, q/a),
  "kernel"    the polynomial kernel expansion, valid for all (gamma, z)
              off the explicit pole lattices (the default).

The non-symmetric function E(gamma; z) has the kernel route "ns_kernel"
and the symmetric-plus-antisymmetric split "ns_decomp".
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath

from .errors import (
    DegenerateParamsError,
    MaxTermsExceeded,
    MethodDomainError,
    SingularPointError,
)
from .params import ParamSet, dual_params
from .qkernels import DEFAULT_CONFIG, SeriesConfig, bhs, qpoch, qpoch_inf, w87
from .scalars import is_exact, sqrt_scalar, to_numeric

METHODS_SYMMETRIC = ("w87", "sum4phi3", "suslov", "kernel")
METHODS_NONSYM = ("ns_kernel", "ns_decomp")


def _numeric_params(p: ParamSet) -> ParamSet:
    return p.map_values(to_numeric)


# ---------------------------------------------------------------------------
# scalar evaluation of the terminating polynomials (no Laurent assembly)
# ---------------------------------------------------------------------------

def _cancellation_digits(n: int, q) -> int:
    """Digits lost to cancellation when summing the terminating series of
    index n: the (q^{-n}; q)_k factors peak near q^{-n(n+1)/2}."""
    if n <= 0:
        return 0
    L = mpmath.log10(1 / mpmath.fabs(to_numeric(q)))
    return int(mpmath.ceil(n * (n + 1) / 2 * L)) + 10


def aw_Eplus_value(n: int, x, p: ParamSet):
    """E_n^+(x; a,b,c,d) as a scalar, by the terminating series.

    Numeric input is evaluated at a precision boosted by the cancellation
    estimate, then rounded back to the ambient precision.
    """
    exact = p.is_exact() and is_exact(x)
    boost = 0 if exact else _cancellation_digits(n, p.q)
    with mpmath.mp.workdps(mpmath.mp.dps + boost):
        a, b, c, d, q = p.a, p.b, p.c, p.d, p.q
        abcd = p.abcd()
        total = 1
        term = 1
        for k in range(n):
            num = (1 - q ** (k - n)) * (1 - q ** (n - 1 + k) * abcd)
            num *= (1 - a * x * q**k) * (1 - a / x * q**k) * q
            den = (1 - q ** (k + 1)) * (1 - a * b * q**k) * (1 - a * c * q**k) * (1 - a * d * q**k)
            term = term * num / den
            total = total + term
    if exact:
        return total
    return +to_numeric(total)


def nonsym_E_value(n: int, x, p: ParamSet):
    """Renormalized non-symmetric polynomial value E_n(x; a,b,c,d)."""
    if n == 0:
        return 1
    exact = p.is_exact() and is_exact(x)
    m = abs(n)
    boost = 0 if exact else _cancellation_digits(m, p.q)
    with mpmath.mp.workdps(mpmath.mp.dps + boost):
        a, b, c, d, q = p.a, p.b, p.c, p.d, p.q
        Ep = aw_Eplus_value(m, x, p)
        shift = ParamSet(q * a, q * b, c, d, q)
        Em = (1 / x) * (1 - a * x) * (1 - b * x) * aw_Eplus_value(m - 1, x, shift)
        base = (1 - a * b) * (1 - q * a * b) * (1 - a * c) * (1 - a * d) * q ** (m - 1)
        if n < 0:
            factor = (1 - q**m * a * b) * (1 - q ** (m - 1) * p.abcd()) / (b * base)
        else:
            factor = a * (1 - q**m) * (1 - q ** (m - 1) * c * d) / base
        total = Ep - factor * Em
    if exact:
        return total
    return +to_numeric(total)


# ---------------------------------------------------------------------------
# kernel coefficients and the weight-assembly breakdown
# ---------------------------------------------------------------------------

def kernel_coefficient(m: int, p: ParamSet, which: str = "symmetric"):
    """Coefficient of the m-th kernel term.

    "symmetric": the scalar multiplying E_m^+ (x) E_m^+ (x'); "nonsym": the
    pair multiplying E_{-m} (x) E_{-m} (x') and E_m (x) E_m (x').  Exact on
    exact input.
    """
    a, b, c, d, q = p.a, p.b, p.c, p.d, p.q
    r = a * b * c / d
    lower = qpoch([q * b / d, q * c / d, q], q, m)
    if lower == 0 or (1 - r) == 0:
        raise DegenerateParamsError("kernel coefficient denominator vanishes")
    common = (
        (-1) ** m
        * (a * d) ** (-m)
        * q ** (m * (m + 1) // 2)
        * qpoch([a * b, a * c, r], q, m)
        / lower
    )
    if which == "symmetric":
        return common * (1 - q ** (2 * m) * r) / (1 - r)
    if which == "nonsym":
        if (1 - a * b) == 0:
            raise DegenerateParamsError("kernel coefficient needs ab != 1")
        base = common / ((1 - a * b) * (1 - r))
        minus = base * (-a * b * (1 - q**m) * (1 - q**m * c / d))
        plus = base * ((1 - q**m * a * b) * (1 - q**m * r))
        return minus, plus
    raise ValueError("which must be 'symmetric' or 'nonsym'")


@dataclass
class WeightBreakdown:
    """The kernel weight split into its construction pieces: the Gaussian
    ratio along the spectral lattice, the quadratic-norm factor, and the
    two c-function ratios selecting the +-branches."""

    gaussian_ratio: object
    n_plus: object
    c_ratio_minus: object
    c_ratio_plus: object

    @property
    def symmetric_part(self):
        return self.gaussian_ratio * self.n_plus

    @property
    def assembled_minus(self):
        return self.symmetric_part * self.c_ratio_minus

    @property
    def assembled_plus(self):
        return self.symmetric_part * self.c_ratio_plus


def appendix_weight(m: int, p: ParamSet) -> WeightBreakdown:
    """Assemble the kernel weight from its construction pieces and verify,
    exactly on exact input, that they reproduce kernel_coefficient."""
    a, b, c, d, q = p.a, p.b, p.c, p.d, p.q
    r = a * b * c / d
    low1 = qpoch(q * a / d, q, m)
    low2 = qpoch([b * c, q * b / d, q * c / d, q], q, m)
    if 0 in (low1, low2) or (1 - r) == 0 or (1 - q ** (2 * m) * r) == 0 or (1 - a * b) == 0:
        raise DegenerateParamsError("weight breakdown denominator vanishes")
    gaussian_ratio = qpoch(b * c, q, m) / low1 * (-a / d) ** m * q ** (m * (m + 1) // 2)
    n_plus = (
        a ** (-2 * m)
        * (1 - q ** (2 * m) * r)
        / (1 - r)
        * qpoch([a * b, a * c, q * a / d, r], q, m)
        / low2
    )
    c_minus = -a * b * (1 - q**m) * (1 - q**m * c / d) / ((1 - a * b) * (1 - q ** (2 * m) * r))
    c_plus = (1 - q**m * a * b) * (1 - q**m * r) / ((1 - a * b) * (1 - q ** (2 * m) * r))
    bd = WeightBreakdown(gaussian_ratio, n_plus, c_minus, c_plus)
    if p.is_exact():
        from .errors import InternalError

        if bd.symmetric_part != kernel_coefficient(m, p, "symmetric"):
            raise InternalError("weight pieces do not assemble the symmetric coefficient")
        minus, plus = kernel_coefficient(m, p, "nonsym")
        if bd.assembled_minus != minus or bd.assembled_plus != plus:
            raise InternalError("weight pieces do not assemble the kernel pair")
    return bd


# ---------------------------------------------------------------------------
# the symmetric Askey-Wilson function
# ---------------------------------------------------------------------------

def _domain_check_w87(gamma, p, pd):
    arg = p.q / (pd.d * gamma)
    if mpmath.fabs(arg) >= 1:
        raise MethodDomainError(
            f"8W7 route needs |q/(d~ gamma)| < 1, got {mpmath.nstr(mpmath.fabs(arg), 5)}"
        )


def _aw_w87(gamma, z, p, cfg):
    pd = dual_params(p)
    a, b, c, d, q = p.a, p.b, p.c, p.d, p.q
    at = pd.a
    _domain_check_w87(gamma, p, pd)
    num = qpoch_inf(
        [q * gamma * at * z / d, q * gamma * at / (d * z), q * a / d, q / (a * d)],
        q,
        cfg,
    )
    den = qpoch_inf(
        [q * gamma * at * a / d, gamma * b * c / at, q * z / d, q / (d * z)], q, cfg
    )
    series = w87(gamma * at * a / d, a * z, a / z, gamma * at, gamma * a * b / at,
                 gamma * a * c / at, q, cfg)
    return num / den * series


def _aw_sum4phi3(gamma, z, p, cfg):
    pd = dual_params(p)
    a, b, c, d, q = p.a, p.b, p.c, p.d, p.q
    at, dt = pd.a, pd.d
    term1 = bhs([a * z, a / z, at * gamma, at / gamma], [a * b, a * c, a * d], q, q, cfg)
    pref_num = qpoch_inf(
        [a * z, a / z, at * gamma, at / gamma, q * b / d, q * c / d, q / (a * d)], q, cfg
    )
    pref_den = qpoch_inf(
        [q * z / d, q / (d * z), q * gamma * at / (a * d), q * at / (gamma * a * d),
         a * b, a * c, a * d / q],
        q,
        cfg,
    )
    term2 = bhs(
        [q * z / d, q / (d * z), q * gamma / dt, q / (dt * gamma)],
        [q * b / d, q * c / d, q * q / (a * d)],
        q,
        q,
        cfg,
    )
    return term1 + pref_num / pref_den * term2


def aw_series_r(gamma, z, p: ParamSet, cfg: SeriesConfig = DEFAULT_CONFIG):
    """The eigenfunction series R(gamma; z) = 4phi3(az, a/z, a~ gamma,
    a~/gamma; ab, ac, ad; q, q) with a~ computed from the given tuple."""
    with cfg.workdps():
        pn = _numeric_params(p)
        at = dual_params(pn).a
        return bhs(
            [pn.a * z, pn.a / z, at * gamma, at / gamma],
            [pn.a * pn.b, pn.a * pn.c, pn.a * pn.d],
            pn.q,
            pn.q,
            cfg,
        )


def _aw_suslov(gamma, z, p, cfg):
    pd = dual_params(p)
    a, b, c, d, q = p.a, p.b, p.c, p.d, p.q
    at = pd.a
    term1 = bhs([a * z, a / z, at * gamma, at / gamma], [a * b, a * c, a * d], q, q, cfg)
    pref_spec = qpoch_inf([at * gamma, at / gamma, q * b / d, q * c / d, q / (a * d)], q, cfg) / qpoch_inf(
        [q * gamma * at / (a * d), q * at / (gamma * a * d), a * b, a * c, a * d / q], q, cfg
    )
    pref_geom = qpoch_inf([a * z, a / z], q, cfg) / qpoch_inf([q * z / d, q / (d * z)], q, cfg)
    shifted = ParamSet(q / d, b, c, q / a, q)
    at2 = dual_params(shifted).a
    term2 = bhs(
        [q * z / d, q / (d * z), at2 * gamma, at2 / gamma],
        [q * b / d, q * c / d, q * q / (a * d)],
        q,
        q,
        cfg,
    )
    return term1 + pref_spec * pref_geom * term2


def _aw_kernel(gamma, z, p, cfg, nonsym=False):
    pd = dual_params(p)
    a, b, c, d, q = p.a, p.b, p.c, p.d, p.q
    r = a * b * c / d
    pref = qpoch_inf([b * c, q * a / d, q * b / d, q * c / d, q / (a * d)], q, cfg) / (
        qpoch_inf(q * r, q, cfg)
        * qpoch_inf([q * z / d, q / (d * z), q * gamma / pd.d, q / (pd.d * gamma)], q, cfg)
    )
    pz = ParamSet(a, b, c, q / d, q)
    pg = ParamSet(pd.a, pd.b, pd.c, q / pd.d, q)
    tol = cfg.tol()
    total = mpmath.mpc(0)
    small = 0
    # running parts of the coefficient recurrence
    base = mpmath.mpc(1)  # (-1)^m (ad)^-m q^(m(m+1)/2) (ab,ac,r;q)_m/((qb/d,qc/d,q;q)_m)
    for m in range(cfg.max_terms):
        if nonsym:
            factor = base / ((1 - a * b) * (1 - r))
            minus = factor * (-a * b * (1 - q**m) * (1 - q**m * c / d))
            plus = factor * ((1 - q**m * a * b) * (1 - q**m * r))
            term = plus * nonsym_E_value(m, z, pz) * nonsym_E_value(m, gamma, pg)
            if m > 0:
                term += minus * nonsym_E_value(-m, z, pz) * nonsym_E_value(-m, gamma, pg)
        else:
            coeff = base * (1 - q ** (2 * m) * r) / (1 - r)
            term = coeff * aw_Eplus_value(m, z, pz) * aw_Eplus_value(m, gamma, pg)
        total += term
        scale = max(mpmath.fabs(total), mpmath.mpf(1))
        if mpmath.fabs(term) < tol * scale:
            small += 1
            if small >= cfg.tail_guard:
                break
        else:
            small = 0
        base *= (
            -(q ** (m + 1))
            / (a * d)
            * (1 - a * b * q**m)
            * (1 - a * c * q**m)
            * (1 - r * q**m)
            / ((1 - q * b / d * q**m) * (1 - q * c / d * q**m) * (1 - q ** (m + 1)))
        )
    else:
        raise MaxTermsExceeded("kernel expansion did not converge")
    return pref * total


def aw_function(gamma, z, p: ParamSet, method: str = "kernel",
                cfg: SeriesConfig = DEFAULT_CONFIG):
    """The symmetric Askey-Wilson function E+(gamma; z; a,b,c,d)."""
    if method not in METHODS_SYMMETRIC:
        raise ValueError(f"method must be one of {METHODS_SYMMETRIC}")
    with cfg.workdps():
        pn = _numeric_params(p)
        gamma = to_numeric(gamma)
        z = to_numeric(z)
        if method == "w87":
            return +_aw_w87(gamma, z, pn, cfg)
        if method == "sum4phi3":
            return +_aw_sum4phi3(gamma, z, pn, cfg)
        if method == "suslov":
            return +_aw_suslov(gamma, z, pn, cfg)
        return +_aw_kernel(gamma, z, pn, cfg)


def phi_gamma(gamma, z, p: ParamSet, method: str = "kernel",
              cfg: SeriesConfig = DEFAULT_CONFIG):
    """The Koelink-Stokman normalization: E+ divided by
    (bc, qa/d, q/(ad); q)_inf."""
    with cfg.workdps():
        pn = _numeric_params(p)
        scale = qpoch_inf(
            [pn.b * pn.c, pn.q * pn.a / pn.d, pn.q / (pn.a * pn.d)], pn.q, cfg
        )
        return +(aw_function(gamma, z, pn, method, cfg) / scale)


def phi_S(gamma, z, p: ParamSet, method: str = "kernel",
          cfg: SeriesConfig = DEFAULT_CONFIG):
    """Stokman's scaling (qabc/d; q)_inf / ((qb/d, qc/d; q)_inf) of phi."""
    with cfg.workdps():
        pn = _numeric_params(p)
        scale = qpoch_inf(pn.q * pn.a * pn.b * pn.c / pn.d, pn.q, cfg) / qpoch_inf(
            [pn.q * pn.b / pn.d, pn.q * pn.c / pn.d], pn.q, cfg
        )
        return +(phi_gamma(gamma, z, pn, method, cfg) * scale)


def nonsym_aw_function(gamma, z, p: ParamSet, method: str = "ns_kernel",
                       cfg: SeriesConfig = DEFAULT_CONFIG):
    """The non-symmetric Askey-Wilson function E(gamma; z; a,b,c,d)."""
    if method not in METHODS_NONSYM:
        raise ValueError(f"method must be one of {METHODS_NONSYM}")
    with cfg.workdps():
        pn = _numeric_params(p)
        gamma = to_numeric(gamma)
        z = to_numeric(z)
        if method == "ns_kernel":
            return +_aw_kernel(gamma, z, pn, cfg, nonsym=True)
        a, b, c, d, q = pn.a, pn.b, pn.c, pn.d, pn.q
        pd = dual_params(pn)
        root = sqrt_scalar(q * a * c * d / b)
        coeff = root / ((1 - a * b) * (1 - q * a * b) * (1 - a * c) * (1 - a * d))
        anti = (
            (1 / gamma) * (1 - pd.a * gamma) * (1 - pd.b * gamma)
            * (1 / z) * (1 - a * z) * (1 - b * z)
        )
        shifted = ParamSet(q * a, q * b, c, d, q)
        return +(
            aw_function(gamma, z, pn, "kernel", cfg)
            - coeff * anti * aw_function(gamma, z, shifted, "kernel", cfg)
        )


def f_function(gamma, z, p: ParamSet, cfg: SeriesConfig = DEFAULT_CONFIG):
    """The companion non-symmetric eigenfunction built from the
    (c-z)(d-z)-type anti-symmetric term with q^(1/2)-shifted parameters."""
    with cfg.workdps():
        pn = _numeric_params(p)
        gamma = to_numeric(gamma)
        z = to_numeric(z)
        a, b, c, d, q = pn.a, pn.b, pn.c, pn.d, pn.q
        at = dual_params(pn).a
        s = sqrt_scalar(q)
        coeff = a * (1 - at * gamma) / ((1 - a * b) * (1 - a * c) * (1 - a * d))
        shifted = ParamSet(s * a, s * b, s * c, s * d, q)
        return +(
            aw_function(gamma, z, pn, "kernel", cfg)
            - coeff * (1 / z) * (c - z) * (d - z)
            * aw_function(gamma, z / s, shifted, "kernel", cfg)
        )


def inverse_gaussian_expansion(z, p: ParamSet, M: int,
                               cfg: SeriesConfig = DEFAULT_CONFIG):
    """Order-M partial sum of the expansion of (dz, d/z; q)_inf = 1/G_d(z)
    in the polynomials E_m^+(z; a,b,c,d)."""
    with cfg.workdps():
        pn = _numeric_params(p)
        z = to_numeric(z)
        a, b, c, d, q = pn.a, pn.b, pn.c, pn.d, pn.q
        abcd = pn.abcd()
        pref = qpoch_inf([a * d, b * d, c * d], q, cfg) / qpoch_inf(abcd, q, cfg)
        total = mpmath.mpc(1)  # the m = 0 term
        for m in range(1, M + 1):
            low = qpoch([b * d, c * d, q], q, m)
            if low == 0:
                raise DegenerateParamsError("(bd; q)_m or (cd; q)_m vanishes")
            # (abcd/q; q)_m / (1 - abcd/q) written in the cancelled form
            # (abcd; q)_{m-1}, which stays finite when abcd = q
            coeff = (
                (-d / a) ** m
                * q ** (m * (m - 1) // 2)
                * (1 - q ** (2 * m - 1) * abcd)
                * qpoch(abcd, q, m - 1)
                * qpoch([a * b, a * c], q, m)
                / low
            )
            total += coeff * aw_Eplus_value(m, z, pn)
        return pref * total


# ---------------------------------------------------------------------------
# numeric operator application
# ---------------------------------------------------------------------------

POINT_KEYS = ("z", "qz", "q_inv_z", "z_inv", "qz_inv")


@dataclass
class FuncSample:
    """Function values at the shift points needed by the operators:
    z, qz, q^{-1}z, z^{-1}, q z^{-1}."""

    values: dict

    @classmethod
    def from_callable(cls, fn, z, q) -> "FuncSample":
        return cls(
            {
                "z": fn(z),
                "qz": fn(q * z),
                "q_inv_z": fn(z / q),
                "z_inv": fn(1 / z),
                "qz_inv": fn(q / z),
            }
        )

    def at(self, key: str):
        if key not in self.values:
            raise SingularPointError(f"FuncSample lacks the point {key!r}")
        return self.values[key]


def _resolve(f, z, q) -> FuncSample:
    if isinstance(f, FuncSample):
        return f
    return FuncSample.from_callable(f, z, q)


def _check_z(z, q, cfg):
    cut = mpmath.mpf(10) ** (-(cfg.digits // 2))
    for w in (1, q, 1 / q):
        if mpmath.fabs(z * z - w) < cut:
            raise SingularPointError("z^2 too close to {1, q, 1/q}")


def apply_Y_numeric(p: ParamSet, f, z, cfg: SeriesConfig = DEFAULT_CONFIG):
    """(Y f)(z) from the explicit four-point formula (points z, qz, 1/z, q/z)."""
    with cfg.workdps():
        pn = _numeric_params(p)
        a, b, c, d, q = pn.a, pn.b, pn.c, pn.d, pn.q
        z = to_numeric(z)
        _check_z(z, q, cfg)
        s = _resolve(f, z, q)
        z2 = z * z
        t_id = z * (1 + a * b - (a + b) * z) * ((c + d) * q - (c * d + q) * z) / (
            q * (1 - z2) * (q - z2)
        )
        t_qz = (1 - a * z) * (1 - b * z) * (1 - c * z) * (1 - d * z) / ((1 - z2) * (1 - q * z2))
        t_inv = (1 - a * z) * (1 - b * z) * ((c + d) * q * z - (c * d + q)) / (
            q * (1 - z2) * (1 - q * z2)
        )
        t_qinv = (c - z) * (d - z) * (1 + a * b - (a + b) * z) / ((1 - z2) * (q - z2))
        return (
            t_id * s.at("z")
            + t_qz * s.at("qz")
            + t_inv * s.at("z_inv")
            + t_qinv * s.at("qz_inv")
        )


def apply_L_numeric(p: ParamSet, f, z, cfg: SeriesConfig = DEFAULT_CONFIG):
    """(L f)(z) for symmetric f (points z, qz, q^{-1}z)."""
    with cfg.workdps():
        pn = _numeric_params(p)
        a, b, c, d, q = pn.a, pn.b, pn.c, pn.d, pn.q
        z = to_numeric(z)
        _check_z(z, q, cfg)
        s = _resolve(f, z, q)
        z2 = z * z
        A = (1 - a * z) * (1 - b * z) * (1 - c * z) * (1 - d * z) / ((1 - z2) * (1 - q * z2))
        B = (a - z) * (b - z) * (c - z) * (d - z) / ((1 - z2) * (q - z2))
        fz = s.at("z")
        return (1 + pn.abcd() / q) * fz + A * (s.at("qz") - fz) + B * (s.at("q_inv_z") - fz)


def apply_T1_numeric(p: ParamSet, f, z, cfg: SeriesConfig = DEFAULT_CONFIG):
    """(T1 f)(z) (points z and 1/z)."""
    with cfg.workdps():
        pn = _numeric_params(p)
        a, b, q = pn.a, pn.b, pn.q
        z = to_numeric(z)
        cut = mpmath.mpf(10) ** (-(cfg.digits // 2))
        if mpmath.fabs(z * z - 1) < cut:
            raise SingularPointError("z^2 too close to 1")
        s = _resolve(f, z, q)
        z2 = z * z
        return ((a + b) * z - (1 + a * b)) / (1 - z2) * s.at("z") + (1 - a * z) * (
            1 - b * z
        ) / (1 - z2) * s.at("z_inv")


def apply_Y_symmetric(p: ParamSet, f, z, cfg: SeriesConfig = DEFAULT_CONFIG):
    """(Y f)(z) for symmetric f, using only the points z, qz, q^{-1}z."""
    with cfg.workdps():
        pn = _numeric_params(p)
        a, b, c, d, q = pn.a, pn.b, pn.c, pn.d, pn.q
        z = to_numeric(z)
        _check_z(z, q, cfg)
        s = _resolve(f, z, q)
        z2 = z * z
        fz = s.at("z")
        first = (c - z) * (d - z) * (1 + a * b - (a + b) * z) / ((1 - z2) * (q - z2))
        second = (1 - a * z) * (1 - b * z) * (1 - c * z) * (1 - d * z) / ((1 - z2) * (1 - q * z2))
        return first * (s.at("q_inv_z") - fz) + second * (s.at("qz") - fz) + pn.abcd() / q * fz


def y_on_cdz_product(p: ParamSet, h, z, cfg: SeriesConfig = DEFAULT_CONFIG):
    """(Y g)(z) for g(z) = z^{-1}(c-z)(d-z) h(q^{-1/2} z) with h symmetric,
    from the closed two-point formula in h."""
    with cfg.workdps():
        pn = _numeric_params(p)
        a, b, c, d, q = pn.a, pn.b, pn.c, pn.d, pn.q
        z = to_numeric(z)
        _check_z(z, q, cfg)
        s = sqrt_scalar(q)
        z2 = z * z
        first = (c - z) * (d - z) * (1 + a * b - (a + b) * z) / (z * (1 - z2))
        second = (1 - a * z) * (1 - b * z) * (1 - c * z) * (1 - d * z) / (z * (1 - z2))
        return first * h(z / s) - second * h(s * z)


def y_on_abz_product(p: ParamSet, k, z, cfg: SeriesConfig = DEFAULT_CONFIG):
    """(Y l)(z) for l(z) = z^{-1}(1-az)(1-bz) k(z) with k symmetric, from
    the closed three-point formula in k."""
    with cfg.workdps():
        pn = _numeric_params(p)
        a, b, c, d, q = pn.a, pn.b, pn.c, pn.d, pn.q
        z = to_numeric(z)
        _check_z(z, q, cfg)
        z2 = z * z
        bracket = (
            a + b + (-1 / a - 1 / b + c + d) / q
            + pn.abcd() * (z + 1 / z - 1 / a - 1 / b - 1 / c - 1 / d)
            + (1 / (q * a * b) + c * d * (1 - 1 / q) - 1) / z
        )
        t_down = (q * a - z) * (q * b - z) * (c - z) * (d - z) * (1 + a * b - (a + b) * z) / (
            q * a * b * z * (1 - z2) * (q - z2)
        )
        t_up = (1 - a * z) * (1 - b * z) * (1 - c * z) * (1 - d * z) * (1 - q * a * z) * (
            1 - q * b * z
        ) / (q * a * b * z * (1 - z2) * (1 - q * z2))
        kz = k(z)
        return a * b * (
            bracket * kz + t_down * (k(z / q) - kz) + t_up * (k(q * z) - kz)
        )


def regularity_probe(p: ParamSet, gamma, steps: int = 6,
                     cfg: SeriesConfig = DEFAULT_CONFIG):
    """Magnitudes of E+/(G_{q/d}(z) G_{q/d~}(gamma)) along a sequence of z
    approaching the nearest Gaussian pole z = d/q (heuristic, logged by
    the caller; no assertion here)."""
    with cfg.workdps():
        pn = _numeric_params(p)
        pd = dual_params(pn)
        q = pn.q
        gamma = to_numeric(gamma)
        g_side = qpoch_inf([q * gamma / pd.d, q / (pd.d * gamma)], q, cfg)
        out = []
        pole = pn.d / q
        for k in range(1, steps + 1):
            z = pole * (1 + mpmath.mpf(10) ** (-k))
            val = aw_function(gamma, z, pn, "kernel", cfg)
            h = val * qpoch_inf([q * z / pn.d, q / (pn.d * z)], q, cfg) * g_side
            out.append(mpmath.fabs(h))
        return out
