"""Parameter tuples (a,b,c,d;q), dual parameters, Hecke-style coordinates
and the catalog of parameter-space maps of the automorphism family.

The exact backend keeps everything in rationals; square roots are taken
only when the radicand is a perfect rational square (see the samplers in
``sampling`` for how to stay inside that regime).  The numeric backend
uses mpmath with the principal square-root convention.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .errors import DegenerateParamsError
from .scalars import (
    abs_scalar,
    imag_part,
    is_exact,
    real_part,
    sqrt_scalar,
)


@dataclass(frozen=True)
class ParamSet:
    """Askey-Wilson parameter tuple (a, b, c, d) with base q."""

    a: object
    b: object
    c: object
    d: object
    q: object

    def __post_init__(self):
        for name in ("a", "b", "c", "d", "q"):
            v = getattr(self, name)
            if isinstance(v, int):
                object.__setattr__(self, name, Fraction(v))

    def as_tuple(self):
        return (self.a, self.b, self.c, self.d)

    def abcd(self):
        return self.a * self.b * self.c * self.d

    def is_exact(self) -> bool:
        return all(is_exact(x) for x in (self.a, self.b, self.c, self.d, self.q))

    def replace(self, **kw) -> "ParamSet":
        vals = {"a": self.a, "b": self.b, "c": self.c, "d": self.d, "q": self.q}
        vals.update(kw)
        return ParamSet(**vals)

    def map_values(self, fn) -> "ParamSet":
        return ParamSet(fn(self.a), fn(self.b), fn(self.c), fn(self.d), fn(self.q))

    def __str__(self):
        from .scalars import scalar_str

        vals = ",".join(scalar_str(x) for x in self.as_tuple())
        return f"({vals}; q={scalar_str(self.q)})"


@dataclass(frozen=True)
class HeckeParams:
    """The (k1, u1, u0, k0) coordinates of the second presentation."""

    k1: object
    u1: object
    u0: object
    k0: object


@dataclass(frozen=True)
class HeckeParts:
    """Exact Hecke coordinates stored as imaginary parts: k1 = i*kappa1 etc.

    q = s**2.  All five fields are rationals, so compositions of the
    braid-type maps (swaps, inversions, sign changes) stay exact and
    branch-free.
    """

    kappa1: Fraction
    upsilon1: Fraction
    upsilon0: Fraction
    kappa0: Fraction
    s: Fraction

    def to_params(self) -> ParamSet:
        # a = u1 k1 = (i u1')(i k1') = -u1' k1', and analogously for b, c, d
        a = -self.upsilon1 * self.kappa1
        b = -self.kappa1 / self.upsilon1
        c = -self.s * self.upsilon0 * self.kappa0
        d = -self.s * self.kappa0 / self.upsilon0
        return ParamSet(a, b, c, d, self.s * self.s)


def dual_params(p: ParamSet) -> ParamSet:
    """The dual tuple (a~, ab/a~, ac/a~, ad/a~) with a~ = sqrt(abcd/q).

    Raises NotASquareError (exact backend) or BranchCutError (numeric
    backend with the radicand on (-inf, 0]).
    """
    radicand = p.abcd() / p.q
    at = sqrt_scalar(radicand)
    return ParamSet(at, p.a * p.b / at, p.a * p.c / at, p.a * p.d / at, p.q)


def to_hecke(p: ParamSet) -> HeckeParams:
    """Numeric map to (k1, u1, u0, k0): k1 = i sqrt(ab), u1 = -i sqrt(a/b),
    u0 = i sqrt(c/d), k0 = -i sqrt(cd/q)."""
    i = mpmath.mpc(0, 1)
    return HeckeParams(
        k1=i * sqrt_scalar(p.a * p.b),
        u1=-i * sqrt_scalar(p.a / p.b),
        u0=i * sqrt_scalar(p.c / p.d),
        k0=-i * sqrt_scalar(p.c * p.d / p.q),
    )


def from_hecke(h: HeckeParams, q) -> ParamSet:
    """Inverse of to_hecke: a = u1 k1, b = -k1/u1, c = sqrt(q) u0 k0,
    d = -sqrt(q) k0/u0."""
    sq = sqrt_scalar(q)
    return ParamSet(
        a=h.u1 * h.k1,
        b=-h.k1 / h.u1,
        c=sq * h.u0 * h.k0,
        d=-sq * h.k0 / h.u0,
        q=q,
    )


def hecke_parts_exact(p: ParamSet) -> HeckeParts:
    """Exact Hecke coordinates; requires ab, a/b, c/d, cd/q and q to be
    perfect rational squares (see sampling.sample_hecke_exact)."""
    from .scalars import sqrt_exact

    return HeckeParts(
        kappa1=sqrt_exact(p.a * p.b),
        upsilon1=-sqrt_exact(p.a / p.b),
        upsilon0=sqrt_exact(p.c / p.d),
        kappa0=-sqrt_exact(p.c * p.d / p.q),
        s=sqrt_exact(p.q),
    )


# ---------------------------------------------------------------------------
# parameter-map catalog
# ---------------------------------------------------------------------------

def _map_t1(p):
    return ParamSet(1 / p.b, 1 / p.a, p.c, p.d, p.q)


def _map_t2(p):
    return ParamSet(p.b, p.a, p.c, p.d, p.q)


def _map_t3(p):
    return ParamSet(p.a, p.b, p.d, p.c, p.q)


def _map_t4(p):
    return ParamSet(p.a, p.b, p.q / p.d, p.q / p.c, p.q)


def _map_t0(p):
    return ParamSet(p.q / p.d, p.b, p.c, p.q / p.a, p.q)


def _map_t0hat(p):
    return ParamSet(p.a, p.c, p.b, p.d, p.q)


def _map_tau(p):
    return ParamSet(p.a, p.b, p.c, p.q / p.d, p.q)


def _map_eta(p):
    return ParamSet(1 / p.a, 1 / p.b, 1 / p.c, 1 / p.d, 1 / p.q)


def _map_beta2(p):
    root = sqrt_scalar(p.q) * dual_params(p).a
    return ParamSet(-root / p.c, -root / p.d, -root / p.a, -root / p.b, p.q)


PARAM_MAPS = {
    "t1": _map_t1,
    "t2": _map_t2,
    "t3": _map_t3,
    "t4": _map_t4,
    "t0": _map_t0,
    "t0hat": _map_t0hat,
    "sigma": dual_params,
    "tau": _map_tau,
    "tau_inv": _map_tau,  # same parameter map; the generator images differ
    "eta": _map_eta,
    "beta1": _map_tau,
    "beta2": _map_beta2,
    "swap_ab": _map_t2,
    "swap_cd": _map_t3,
}

PARAM_MAP_NAMES = tuple(PARAM_MAPS)


def apply_param_map(name: str, p: ParamSet) -> ParamSet:
    """Apply a named parameter map; eta also inverts the base q."""
    try:
        fn = PARAM_MAPS[name]
    except KeyError:
        raise KeyError(f"unknown parameter map {name!r}") from None
    return fn(p)


# ---------------------------------------------------------------------------
# genericity diagnostics
# ---------------------------------------------------------------------------

@dataclass
class DiagnosticRow:
    check: str
    ok: bool
    detail: str

    def to_dict(self):
        return {"check": self.check, "pass": self.ok, "detail": self.detail}


class Diagnostics(list):
    """List of DiagnosticRow with JSON serialization."""

    @property
    def ok(self) -> bool:
        return all(row.ok for row in self)

    def to_json(self) -> str:
        return json.dumps([row.to_dict() for row in self], sort_keys=True)


def _distinct(values) -> bool:
    seen = []
    for v in values:
        for w in seen:
            if v == w:
                return False
        seen.append(v)
    return True


def check_generic(p: ParamSet) -> Diagnostics:
    """Diagnostics for genericity, the positive-real-part assumption and
    the duality branch condition.  Never raises."""
    diags = Diagnostics()
    vals = list(p.as_tuple())
    names = ["a", "b", "c", "d"]

    nonzero = all(v != 0 for v in vals) and p.q != 0
    diags.append(
        DiagnosticRow("nonzero", nonzero, "a,b,c,d,q all nonzero" if nonzero else "zero entry")
    )
    if not nonzero:
        return diags

    full = vals + [1 / v for v in vals]
    labels = names + [f"1/{n}" for n in names]
    ok = True
    bad = ""
    for i in range(len(full)):
        for j in range(i + 1, len(full)):
            if full[i] == full[j]:
                ok = False
                bad = f"{labels[i]} = {labels[j]}"
                break
        if not ok:
            break
    diags.append(
        DiagnosticRow(
            "distinct",
            ok,
            "parameters and inverses pairwise distinct" if ok else bad,
        )
    )

    qok = (imag_part(p.q) == 0) and 0 < real_part(p.q) < 1 if is_exact(p.q) else abs_scalar(p.q) < 1
    diags.append(
        DiagnosticRow(
            "q-domain",
            bool(qok),
            "0 < q < 1 (or |q| < 1 numeric)" if qok else f"q out of range",
        )
    )

    pos = []
    for label, v in (
        ("ab", p.a * p.b),
        ("a/b", p.a / p.b),
        ("cd", p.c * p.d),
        ("c/d", p.c / p.d),
    ):
        if real_part(v) <= 0:
            pos.append(label)
    diags.append(
        DiagnosticRow(
            "assumption-positive-real",
            not pos,
            "Re(ab), Re(a/b), Re(cd), Re(c/d) > 0"
            if not pos
            else "non-positive real part: " + ", ".join(pos),
        )
    )

    rad = p.abcd() / p.q
    on_cut = imag_part(rad) == 0 and real_part(rad) <= 0
    diags.append(
        DiagnosticRow(
            "duality-branch",
            not on_cut,
            "abcd/q off the branch cut" if not on_cut else "abcd/q on (-inf, 0]",
        )
    )
    return diags


def require_generic(p: ParamSet, checks=("nonzero", "distinct")):
    """Raise DegenerateParamsError if one of the named diagnostics fails."""
    for row in check_generic(p):
        if row.check in checks and not row.ok:
            raise DegenerateParamsError(f"{row.check}: {row.detail}")


# ---------------------------------------------------------------------------
# orbit enumeration
# ---------------------------------------------------------------------------

def parameter_orbit(p: ParamSet, generators=("t0hat", "t2", "t3", "t4"), max_size=2048):
    """Closure of {p} under the named parameter maps (base q fixed by all
    of the defaults).  Returns the orbit as a list of tuples in BFS order."""
    maps = [PARAM_MAPS[name] for name in generators]
    seen = {p.as_tuple(): None}
    frontier = [p]
    order = [p.as_tuple()]
    while frontier:
        nxt = []
        for cur in frontier:
            for fn in maps:
                img = fn(cur)
                key = img.as_tuple()
                if key not in seen:
                    if len(seen) >= max_size:
                        raise DegenerateParamsError(
                            f"orbit exceeded max_size={max_size}; tuple not generic?"
                        )
                    seen[key] = None
                    order.append(key)
                    nxt.append(img)
        frontier = nxt
    return order
