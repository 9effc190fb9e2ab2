from hypothesis import settings, strategies as st

from omegalab import formula as F
from omegalab.ordinal import Ordinal, nat

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


def _ordinal_from(exps_and_coefs):
    terms = sorted({e: c for e, c in exps_and_coefs}.items(), key=lambda t: t[0], reverse=True)
    return Ordinal(tuple(terms))


def ordinals(depth: int = 2, max_coef: int = 6, max_terms: int = 3):
    """CNF ordinals with exponents nested ``depth`` levels."""
    if depth == 0:
        return st.integers(0, max_coef).map(nat)
    pieces = st.lists(st.tuples(ordinals(depth - 1, max_coef, max_terms), st.integers(1, max_coef)),
                      max_size=max_terms)
    return pieces.map(_ordinal_from)


def below_omega_omega(max_exp: int = 4, max_coef: int = 6):
    return st.dictionaries(st.integers(0, max_exp), st.integers(1, max_coef), max_size=4).map(
        lambda d: Ordinal(tuple((nat(e), c) for e, c in sorted(d.items(), reverse=True))))


_names = st.sampled_from(["x", "y", "z", "u", "v"])


def terms(names=_names):
    base = st.one_of(names.map(F.Var), st.integers(0, 9).map(F.Num))
    return st.recursive(base, lambda t: st.one_of(
        t.map(F.Succ), st.builds(F.Add, t, t), st.builds(F.Mul, t, t)), max_leaves=5)


@st.composite
def _quantified(draw, body):
    var = draw(_names)
    # bounds stay small so bounded evaluation is quick
    small = st.one_of(_names.filter(lambda n: n != var).map(F.Var), st.integers(0, 5).map(F.Num))
    bound = draw(st.none() | small | small.map(F.Succ))
    cls = draw(st.sampled_from([F.Exists, F.Forall]))
    return cls(var, draw(body), bound)


def formulas():
    atom = st.one_of(st.builds(F.Eq, terms(), terms()), st.builds(F.Lt, terms(), terms()))
    return st.recursive(atom, lambda f: st.one_of(
        f.map(F.Not), st.builds(F.And, f, f), st.builds(F.Or, f, f), st.builds(F.Implies, f, f),
        _quantified(f)), max_leaves=6)
