"""Automorphisms of the parametrized algebra family and their verification.

An automorphism is a parameter-space map together with images of the three
generators.  Every image in the catalog is a scalar multiple of a single
word in the generators and their inverses, which keeps composition closed:
substituting scaled words into a scaled word yields a scaled word.  Scalar
coefficients are functions of the *source* state and are never rewritten
when parameters move (they are frozen at composition time).

Two kinds of state are supported: plain ParamSet tuples, and exact
Hecke-coordinate states (HeckeParts) used for the braid-group suite where
iterating the square-root parameter maps needs branch tracking.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .daha import (
    DiffRefOp,
    basic_op,
    compose,
    defining_relation_residuals,
    op_equal,
)
from .errors import DegenerateParamsError
from .params import (
    HeckeParts,
    ParamSet,
    apply_param_map,
    dual_params,
)
from .scalars import sqrt_scalar

#: letters are (generator, power) with power +1 or -1
Letter = tuple
Word = tuple

_GEN_TO_OP = {("T1", 1): "T1", ("T1", -1): "T1i", ("T0", 1): "T0", ("T0", -1): "T0i",
              ("Z", 1): "Z", ("Z", -1): "Zi"}


def _invert_word(word: Word) -> Word:
    return tuple((g, -e) for g, e in reversed(word))


def realize_word(coeff, word: Word, p: ParamSet) -> DiffRefOp:
    """Realize coeff * word in the basic representation over p."""
    op = DiffRefOp.identity(p.q)
    for letter in word:
        op = compose(op, basic_op(_GEN_TO_OP[letter], p))
    return op.scale(coeff)


@dataclass
class Automorphism:
    """A parametrized-family automorphism with scaled-word generator images."""

    name: str
    state_map: object  # state -> state
    images: dict  # gen -> (coeff_fn(state), word)
    to_params: object = None  # state -> ParamSet; identity for ParamSet states

    def params_of(self, state) -> ParamSet:
        if self.to_params is None:
            return state
        return self.to_params(state)

    def target_state(self, state):
        return self.state_map(state)

    def image(self, gen: str, state):
        """(coeff, word) for a generator at the given source state."""
        coeff_fn, word = self.images[gen]
        return coeff_fn(state), word

    def letter_image(self, letter: Letter, state):
        gen, e = letter
        coeff, word = self.image(gen, state)
        if e == 1:
            return coeff, word
        return 1 / coeff, _invert_word(word)

    def realized_images(self, state) -> dict:
        """Operators for all six letters, realized over the target tuple."""
        target = self.params_of(self.target_state(state))
        out = {}
        for gen in ("T1", "T0", "Z"):
            coeff, word = self.image(gen, state)
            out[gen] = realize_word(coeff, word, target)
            coeff_i, word_i = self.letter_image((gen, -1), state)
            out[gen + "i"] = realize_word(coeff_i, word_i, target)
        return {
            "T1": out["T1"], "T1i": out["T1i"],
            "T0": out["T0"], "T0i": out["T0i"],
            "Z": out["Z"], "Zi": out["Zi"],
        }


def identity_automorphism(name="id", to_params=None) -> Automorphism:
    return Automorphism(
        name=name,
        state_map=lambda s: s,
        images={g: ((lambda s: Fraction(1)), ((g, 1),)) for g in ("T1", "T0", "Z")},
        to_params=to_params,
    )


def compose_automorphisms(s: Automorphism, t: Automorphism) -> Automorphism:
    """The automorphism 'first t, then s'; state maps compose accordingly."""

    def state_map(state):
        return s.state_map(t.state_map(state))

    def make_image(gen):
        def coeff_fn(state):
            c, word = t.image(gen, state)
            mid = t.state_map(state)
            acc = c
            for letter in word:
                lc, _ = s.letter_image(letter, mid)
                acc = acc * lc
            return acc

        def word_fn(state):
            _, word = t.image(gen, state)
            mid = t.state_map(state)
            out = []
            for letter in word:
                _, w = s.letter_image(letter, mid)
                out.extend(w)
            return tuple(out)

        return coeff_fn, word_fn

    images = {}
    for gen in ("T1", "T0", "Z"):
        coeff_fn, word_fn = make_image(gen)
        images[gen] = (coeff_fn, word_fn)

    return _ComposedAutomorphism(
        name=f"{s.name}*{t.name}",
        state_map=state_map,
        images=images,
        to_params=t.to_params if t.to_params is not None else s.to_params,
    )


class _ComposedAutomorphism(Automorphism):
    """Composition result: image words are computed per state."""

    def image(self, gen: str, state):
        coeff_fn, word_fn = self.images[gen]
        return coeff_fn(state), word_fn(state)


def compose_chain(*autos: Automorphism) -> Automorphism:
    """compose_chain(f, g, h) applies h first, then g, then f."""
    result = autos[-1]
    for a in reversed(autos[:-1]):
        result = compose_automorphisms(a, result)
    return result


# ---------------------------------------------------------------------------
# catalog on ParamSet states
# ---------------------------------------------------------------------------

def _const_one(_):
    return Fraction(1)


def _ident_images():
    return {g: (_const_one, ((g, 1),)) for g in ("T1", "T0", "Z")}


def auto_t2() -> Automorphism:
    return Automorphism("t2", lambda p: apply_param_map("t2", p), _ident_images())


def auto_t3() -> Automorphism:
    return Automorphism("t3", lambda p: apply_param_map("t3", p), _ident_images())


def auto_t4() -> Automorphism:
    imgs = _ident_images()
    imgs["T0"] = (lambda p: p.c * p.d / p.q, (("T0", 1),))
    return Automorphism("t4", lambda p: apply_param_map("t4", p), imgs)


def auto_sigma() -> Automorphism:
    """(T1, T0, Z) -> (T1, a~ T1^{-1} Z^{-1}, a T1^{-1} T0^{-1})."""
    imgs = {
        "T1": (_const_one, (("T1", 1),)),
        "T0": (lambda p: dual_params(p).a, (("T1", -1), ("Z", -1))),
        "Z": (lambda p: p.a, (("T1", -1), ("T0", -1))),
    }
    return Automorphism("sigma", dual_params, imgs)


def auto_tau() -> Automorphism:
    """(T1, T0, Z) -> (T1, q^{-1} c Z T0^{-1}, Z)."""
    imgs = {
        "T1": (_const_one, (("T1", 1),)),
        "T0": (lambda p: p.c / p.q, (("Z", 1), ("T0", -1))),
        "Z": (_const_one, (("Z", 1),)),
    }
    return Automorphism("tau", lambda p: apply_param_map("tau", p), imgs)


def auto_tau_inv() -> Automorphism:
    """(T1, T0, Z) -> (T1, q^{-1} c T0^{-1} Z, Z)."""
    imgs = {
        "T1": (_const_one, (("T1", 1),)),
        "T0": (lambda p: p.c / p.q, (("T0", -1), ("Z", 1))),
        "Z": (_const_one, (("Z", 1),)),
    }
    return Automorphism("tau_inv", lambda p: apply_param_map("tau_inv", p), imgs)


def auto_eta() -> Automorphism:
    """(T1, T0, Z) -> (T1^{-1}, T0^{-1}, Z^{-1}); q is inverted as well."""
    imgs = {
        "T1": (_const_one, (("T1", -1),)),
        "T0": (_const_one, (("T0", -1),)),
        "Z": (_const_one, (("Z", -1),)),
    }
    return Automorphism("eta", lambda p: apply_param_map("eta", p), imgs)


def auto_beta2() -> Automorphism:
    """(T1, T0, Z) -> (T1, T0, -q sqrt(ab/(cd)) T1^{-1} Z^{-1} T0)."""
    imgs = {
        "T1": (_const_one, (("T1", 1),)),
        "T0": (_const_one, (("T0", 1),)),
        "Z": (
            lambda p: -p.q * sqrt_scalar(p.a * p.b / (p.c * p.d)),
            (("T1", -1), ("Z", -1), ("T0", 1)),
        ),
    }
    return Automorphism("beta2", lambda p: apply_param_map("beta2", p), imgs)


CATALOG = {
    "t2": auto_t2,
    "t3": auto_t3,
    "t4": auto_t4,
    "sigma": auto_sigma,
    "tau": auto_tau,
    "tau_inv": auto_tau_inv,
    "beta1": auto_tau,
    "eta": auto_eta,
    "beta2": auto_beta2,
}


def get_automorphism(name: str) -> Automorphism:
    try:
        return CATALOG[name]()
    except KeyError:
        raise KeyError(
            f"no generator images available for {name!r} "
            "(t0 and t0hat act on parameters only)"
        ) from None


# ---------------------------------------------------------------------------
# catalog on exact Hecke states (braid suite)
# ---------------------------------------------------------------------------

def _hecke_to_params(state: HeckeParts) -> ParamSet:
    return state.to_params()


def hecke_beta1() -> Automorphism:
    """beta1 = tau on Hecke coordinates: swap upsilon0 <-> kappa0."""

    def smap(st: HeckeParts) -> HeckeParts:
        return HeckeParts(st.kappa1, st.upsilon1, st.kappa0, st.upsilon0, st.s)

    imgs = {
        "T1": (_const_one, (("T1", 1),)),
        # q^{-1} c with c = -s*upsilon0*kappa0
        "T0": (lambda st: -st.upsilon0 * st.kappa0 / st.s, (("Z", 1), ("T0", -1))),
        "Z": (_const_one, (("Z", 1),)),
    }
    return Automorphism("beta1", smap, imgs, to_params=_hecke_to_params)


def hecke_beta2() -> Automorphism:
    """beta2 on Hecke coordinates: (k1,u1,u0,k0) -> (k1,-1/u0,-1/u1,k0)."""

    def smap(st: HeckeParts) -> HeckeParts:
        return HeckeParts(
            st.kappa1, 1 / st.upsilon0, 1 / st.upsilon1, st.kappa0, st.s
        )

    imgs = {
        "T1": (_const_one, (("T1", 1),)),
        "T0": (_const_one, (("T0", 1),)),
        # -q sqrt(ab/(cd)) = q*kappa1/(s*kappa0)
        "Z": (
            lambda st: st.s * st.kappa1 / st.kappa0,
            (("T1", -1), ("Z", -1), ("T0", 1)),
        ),
    }
    return Automorphism("beta2", smap, imgs, to_params=_hecke_to_params)


def hecke_sigma() -> Automorphism:
    """sigma on Hecke coordinates: swap upsilon1 <-> kappa0."""

    def smap(st: HeckeParts) -> HeckeParts:
        return HeckeParts(st.kappa1, st.kappa0, st.upsilon0, st.upsilon1, st.s)

    imgs = {
        "T1": (_const_one, (("T1", 1),)),
        # a~ = k1 k0 = -kappa1*kappa0
        "T0": (lambda st: -st.kappa1 * st.kappa0, (("T1", -1), ("Z", -1))),
        # a = -upsilon1*kappa1
        "Z": (lambda st: -st.upsilon1 * st.kappa1, (("T1", -1), ("T0", -1))),
    }
    return Automorphism("sigma", smap, imgs, to_params=_hecke_to_params)


def hecke_t2() -> Automorphism:
    """t2 (exchange of a and b) on Hecke coordinates: u1 -> -1/u1."""

    def smap(st: HeckeParts) -> HeckeParts:
        return HeckeParts(st.kappa1, 1 / st.upsilon1, st.upsilon0, st.kappa0, st.s)

    return Automorphism("t2", smap, _ident_images(), to_params=_hecke_to_params)


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

@dataclass
class ReportEntry:
    relation: str
    params: str
    ok: bool
    residual_terms: int

    def to_dict(self):
        return {
            "relation": self.relation,
            "params": self.params,
            "pass": self.ok,
            "residual_terms": self.residual_terms,
        }


@dataclass
class Report:
    entries: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    def add(self, relation, params, residual_op):
        n = residual_op.residual_terms()
        self.entries.append(ReportEntry(relation, str(params), n == 0, n))

    def add_bool(self, relation, params, ok):
        self.entries.append(ReportEntry(relation, str(params), ok, 0 if ok else -1))

    def to_json(self) -> str:
        return json.dumps([e.to_dict() for e in self.entries], sort_keys=True)


def _conjugation_matches(auto, state, conj_word, power=1) -> bool:
    """Does `auto` act as U |-> W^{-power} U W^{power} with W the realized
    conjugator word over the source tuple?"""
    p = auto.params_of(state)
    W = realize_word(Fraction(1), conj_word, p)
    Wi = realize_word(Fraction(1), _invert_word(conj_word), p)
    if power < 0:
        W, Wi = Wi, W
    left = W
    right = Wi
    for _ in range(abs(power) - 1):
        left = compose(left, W)
        right = compose(right, Wi)
    imgs = auto.realized_images(state)
    for gen in ("T1", "T0", "Z"):
        expected = compose(compose(right, basic_op(_GEN_TO_OP[(gen, 1)], p)), left)
        if imgs[gen] != expected:
            return False
    return True


def automorphisms_agree(x: Automorphism, y: Automorphism, state) -> bool:
    """Same parameter image and identical realized generator images at state."""
    if x.params_of(x.target_state(state)) != y.params_of(y.target_state(state)):
        return False
    xi = x.realized_images(state)
    yi = y.realized_images(state)
    return all(xi[g] == yi[g] for g in ("T1", "T0", "Z"))


def is_identity_automorphism(auto: Automorphism, state) -> bool:
    if auto.params_of(auto.target_state(state)) != auto.params_of(state):
        return False
    p = auto.params_of(state)
    imgs = auto.realized_images(state)
    return all(imgs[g] == basic_op(_GEN_TO_OP[(g, 1)], p) for g in ("T1", "T0", "Z"))


def verify_automorphism(auto: Automorphism, state, include_group_relations=True) -> Report:
    """Check that the realized images satisfy the defining relations of the
    source tuple over the target tuple, plus the named group relations.

    Raises nothing; failures are recorded in the report.
    """
    report = Report()
    p = auto.params_of(state)
    imgs = auto.realized_images(state)
    for relation, residual in defining_relation_residuals(imgs, p).items():
        report.add(f"{auto.name}:{relation}", p, residual)

    if not include_group_relations:
        return report

    name = auto.name
    if name == "sigma":
        sigma2 = compose_automorphisms(auto, auto)
        report.add_bool(
            "sigma^2 = conj(T1)", p, _conjugation_matches(sigma2, state, (("T1", 1),))
        )
        tau = auto_tau() if auto.to_params is None else hecke_beta1()
        st3 = compose_chain(auto, tau, auto, tau, auto, tau)
        report.add_bool(
            "(sigma tau)^3 = conj(T1^2)",
            p,
            _conjugation_matches(st3, state, (("T1", 1),), power=2),
        )
    elif name in ("tau", "beta1") and auto.to_params is None:
        both = compose_automorphisms(auto_tau_inv(), auto)
        report.add_bool("tau_inv tau = id", p, is_identity_automorphism(both, state))
        t4_chain = compose_chain(auto_tau(), auto_t3(), auto_tau_inv())
        report.add_bool(
            "t4 = tau t3 tau^{-1}", p, automorphisms_agree(t4_chain, auto_t4(), state)
        )
    elif name == "eta":
        report.add_bool(
            "eta^2 = id",
            p,
            is_identity_automorphism(compose_automorphisms(auto, auto), state),
        )
        for other_name, other in (("sigma", auto_sigma()), ("tau", auto_tau())):
            pair = compose_automorphisms(other, auto)
            sq = compose_automorphisms(pair, pair)
            report.add_bool(
                f"({other_name} eta)^2 = id", p, is_identity_automorphism(sq, state)
            )
    elif name == "beta2" and auto.to_params is not None:
        b1, b2 = hecke_beta1(), hecke_beta2()
        lhs = compose_chain(b1, b2, b1)
        rhs = compose_chain(b2, b1, b2)
        report.add_bool("beta1 beta2 beta1 = beta2 beta1 beta2", p,
                        automorphisms_agree(lhs, rhs, state))
        # the braid word realizes sigma up to the a,b-swap on both sides
        t2s = compose_chain(hecke_t2(), hecke_sigma(), hecke_t2())
        report.add_bool("beta1 beta2 beta1 = t2 sigma t2", p,
                        automorphisms_agree(lhs, t2s, state))
        # the Coxeter element is a global conjugation (by T1 on this
        # presentation), i.e. it acts like the identity modulo conjugation
        coxeter = compose_chain(b1, b2, b1, b2, b1, b2)
        report.add_bool(
            "(beta1 beta2)^3 = conj(T1)",
            p,
            _conjugation_matches(coxeter, state, (("T1", 1),)),
        )
    return report
