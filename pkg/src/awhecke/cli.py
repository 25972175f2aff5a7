"""Command-line front end: run verification suites, evaluate functions,
and emit coefficient/orbit tables.

Exit codes: 0 all checks passed / value printed, 1 check failure or
evaluation domain error, 2 usage or configuration error.  Reports are
deterministic for fixed (seed, digits, params); per-check timings are
included only with --timing.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

import mpmath
from mpmath import mp

from . import awfunc, awpoly
from .errors import AwheckeError
from .laurent import LaurentPoly
from .params import ParamSet, check_generic, parameter_orbit
from .qkernels import SeriesConfig
from .sampling import genericity_ok
from .scalars import parse_scalar, scalar_str
from .suites import SUITE_NAMES, run_suite


class UsageError(Exception):
    pass


def _parse_params(spec: str, q, seed: int) -> ParamSet:
    """Parse 'a,b,c,d' where each slot is a rational 'p/q', a decimal, or
    the token r-square (completing the tuple so sqrt(abcd/q) is rational)."""
    parts = [s.strip() for s in spec.split(",")]
    if len(parts) != 4:
        raise UsageError("--params needs four comma-separated values")
    if q is None:
        raise UsageError("--params requires --q")
    tokens = [i for i, s in enumerate(parts) if s == "r-square"]
    vals = [None if s == "r-square" else parse_scalar(s) for s in parts]
    if len(tokens) > 1:
        raise UsageError("at most one r-square slot is allowed")
    if tokens:
        i = tokens[0]
        known = [v for v in vals if v is not None]
        if not all(isinstance(v, (int, Fraction)) for v in known) or not isinstance(
            q, (int, Fraction)
        ):
            raise UsageError("r-square needs exact rational values elsewhere")
        rng = random.Random(seed)
        r = Fraction(rng.randint(2, 9), rng.randint(1, 5))
        prod = Fraction(1)
        for v in known:
            prod *= v
        vals[i] = Fraction(q) * r * r / prod
    return ParamSet(vals[0], vals[1], vals[2], vals[3], q)


def _emit(obj, args):
    text = obj if isinstance(obj, str) else json.dumps(obj, sort_keys=True, indent=1)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_verify(args) -> int:
    if args.suite not in SUITE_NAMES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITE_NAMES)}")
    params = None
    if args.params:
        params = _parse_params(args.params, args.q, args.seed)
        diags = check_generic(params)
        if not diags.ok or not genericity_ok(params):
            detail = "; ".join(f"{r.check}: {r.detail}" for r in diags if not r.ok)
            raise UsageError(f"parameter tuple fails genericity ({detail or 'lattice collision'})")
    report = run_suite(
        args.suite,
        samples=args.samples,
        seed=args.seed,
        digits=args.digits,
        params=params,
        tol=args.tol,
    )
    if args.format == "json":
        _emit(report.to_json(timing=args.timing), args)
    else:
        _emit(report.to_text(timing=args.timing), args)
    return 0 if report.ok else 1


EVAL_FNS = ("Eplus", "E", "F", "phi", "Eplus_poly", "nonsym_poly", "kernel_coeff")


def cmd_eval(args) -> int:
    if args.fn not in EVAL_FNS:
        raise UsageError(f"unknown --fn {args.fn!r}; choose from {', '.join(EVAL_FNS)}")
    if not args.params:
        raise UsageError("eval requires --params")
    p = _parse_params(args.params, args.q, args.seed)
    cfg = SeriesConfig(digits=args.digits)
    gamma = parse_scalar(args.gamma) if args.gamma else None
    z = parse_scalar(args.z) if args.z else None

    def need(value, flag):
        if value is None:
            raise UsageError(f"--fn {args.fn} requires {flag}")
        return value

    try:
        with mp.workdps(args.digits + 10):
            est = None
            if args.fn == "Eplus":
                val = awfunc.aw_function(need(gamma, "--gamma"), need(z, "--z"), p,
                                         args.method, cfg)
            elif args.fn == "E":
                method = args.method if args.method in awfunc.METHODS_NONSYM else "ns_kernel"
                val = awfunc.nonsym_aw_function(need(gamma, "--gamma"), need(z, "--z"),
                                                p, method, cfg)
            elif args.fn == "F":
                val = awfunc.f_function(need(gamma, "--gamma"), need(z, "--z"), p, cfg)
            elif args.fn == "phi":
                val = awfunc.phi_gamma(need(gamma, "--gamma"), need(z, "--z"), p,
                                       args.method, cfg)
            elif args.fn == "Eplus_poly":
                if args.n is None:
                    raise UsageError("--fn Eplus_poly requires --n")
                val = awfunc.aw_Eplus_value(args.n, need(z, "--z"), p)
            elif args.fn == "nonsym_poly":
                if args.n is None:
                    raise UsageError("--fn nonsym_poly requires --n")
                val = awfunc.nonsym_E_value(args.n, need(z, "--z"), p)
            else:  # kernel_coeff
                if args.m is None:
                    raise UsageError("--fn kernel_coeff requires --m")
                which = args.which or "symmetric"
                val = awfunc.kernel_coefficient(args.m, p, which)
            if est is None:
                est = mpmath.mpf(10) ** (-(args.digits - 10))
    except UsageError:
        raise
    except AwheckeError as exc:
        _emit({"error": type(exc).__name__, "detail": str(exc)}, args)
        return 1

    def _split(v):
        if isinstance(v, (int, Fraction)):
            return scalar_str(v), "0", "0"
        vc = mpmath.mpmathify(v)
        return (
            mpmath.nstr(mpmath.re(vc), args.digits),
            mpmath.nstr(mpmath.im(vc), args.digits),
            mpmath.nstr(est * max(mpmath.fabs(vc), mpmath.mpf(1)), 3),
        )

    row = {
        "fn": args.fn,
        "method": args.method,
        "gamma": scalar_str(gamma, args.digits) if gamma is not None else None,
        "z": scalar_str(z, args.digits) if z is not None else None,
        "params": [scalar_str(v, args.digits) for v in p.as_tuple()] + [scalar_str(p.q)],
    }
    if isinstance(val, tuple):
        rows = [_split(v) for v in val]
        row["value_re"] = [r[0] for r in rows]
        row["value_im"] = [r[1] for r in rows]
        row["est_error"] = rows[0][2]
    else:
        row["value_re"], row["value_im"], row["est_error"] = _split(val)
    _emit(row, args)
    return 0


def _parse_range(text) -> tuple:
    for sep in (":", ".."):
        if sep in text:
            lo, hi = text.split(sep, 1)
            lo, hi = int(lo), int(hi)
            if hi < lo or lo < 0:
                raise UsageError(f"bad --range {text!r}")
            return lo, hi
    value = int(text)
    if value < 0:
        raise UsageError(f"bad --range {text!r}")
    return 0, value


TABLE_KINDS = ("kernel-coefficients", "poly-coeffs", "orbit")


def cmd_table(args) -> int:
    if args.kind not in TABLE_KINDS:
        raise UsageError(f"unknown --kind {args.kind!r}; choose from {', '.join(TABLE_KINDS)}")
    if not args.params:
        raise UsageError("table requires --params")
    p = _parse_params(args.params, args.q, args.seed)
    rows = []
    if args.kind == "kernel-coefficients":
        lo, hi = _parse_range(args.range or "0:10")
        which = args.which or "symmetric"
        for m in range(lo, hi + 1):
            val = awfunc.kernel_coefficient(m, p, which)
            if which == "nonsym":
                rows.append({"m": m, "minus": scalar_str(val[0], args.digits),
                             "plus": scalar_str(val[1], args.digits)})
            else:
                rows.append({"m": m, "value": scalar_str(val, args.digits)})
    elif args.kind == "poly-coeffs":
        if args.n is None:
            raise UsageError("poly-coeffs requires --n")
        fam = args.family
        if fam == "Eplus":
            poly = awpoly.aw_E_plus(args.n, p)
        elif fam == "monic":
            poly = awpoly.aw_P_plus_monic(args.n, p)
        elif fam == "nonsym":
            poly = awpoly.aw_nonsym(args.n, p)
        else:
            raise UsageError("family must be Eplus, monic or nonsym")
        for e, c in sorted(poly.coeffs.items()):
            rows.append({"exp": e, "coeff": scalar_str(c, args.digits)})
    else:  # orbit
        if not p.is_exact():
            raise UsageError("orbit enumeration needs exact rational parameters")
        orbit = parameter_orbit(p)
        for i, tup in enumerate(orbit):
            rows.append({"index": i, "a": scalar_str(tup[0]), "b": scalar_str(tup[1]),
                         "c": scalar_str(tup[2]), "d": scalar_str(tup[3])})
    if args.format == "csv":
        header = list(rows[0].keys())
        lines = [",".join(header)]
        lines += [",".join(str(r[k]) for k in header) for r in rows]
        _emit("\n".join(lines), args)
    else:
        _emit(rows, args)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="awhecke",
        description="Verify rank-one double affine Hecke algebra and "
        "Askey-Wilson identities; evaluate the associated special functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--params", help="a,b,c,d (rationals 'p/q', decimals, or one r-square slot)")
        sp.add_argument("--q", type=parse_scalar, help="base q")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--digits", type=int, default=50)
        sp.add_argument("--format", choices=("json", "text", "csv"), default="json")
        sp.add_argument("--out", help="write the report to a file")

    sp = sub.add_parser("verify", help="run a verification suite")
    common(sp)
    sp.add_argument("--suite", required=True)
    sp.add_argument("--samples", type=int)
    sp.add_argument("--tol", type=float)
    sp.add_argument("--timing", action="store_true", help="include runtime_ms per check")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("eval", help="evaluate a function or coefficient")
    common(sp)
    sp.add_argument("--fn", required=True)
    sp.add_argument("--gamma")
    sp.add_argument("--z")
    sp.add_argument("--m", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--which", choices=("symmetric", "nonsym"))
    sp.add_argument("--method", default="kernel")
    sp.set_defaults(func=cmd_eval)

    sp = sub.add_parser("table", help="emit a coefficient or orbit table")
    common(sp)
    sp.add_argument("--kind", required=True)
    sp.add_argument("--range")
    sp.add_argument("--n", type=int)
    sp.add_argument("--m", type=int)
    sp.add_argument("--which", choices=("symmetric", "nonsym"))
    sp.add_argument("--family", default="Eplus")
    sp.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(json.dumps({"error": "usage", "detail": str(exc)}), file=sys.stderr)
        return 2
    except AwheckeError as exc:
        print(json.dumps({"error": type(exc).__name__, "detail": str(exc)}), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
