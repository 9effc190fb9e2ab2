"""Cantor normal form ordinals below epsilon_0.

An :class:`Ordinal` is a finite tree: a tuple of ``(exponent, coefficient)``
pairs with strictly decreasing exponents and positive coefficients. The empty
tuple is zero. Natural numbers are single terms with exponent zero.

Text form (ASCII)::

    ordinal := "0" | term (" + " term)*
    term    := nat | "w" power? coeff?
    power   := "^" (nat | "w" | "(" ordinal ")")
    coeff   := "*" nat
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import lru_cache, total_ordering
from typing import Iterator, Union

__all__ = [
    "Ordinal", "OrdinalKind", "CNFSyntaxError", "NormalFormError",
    "ZERO", "ONE", "OMEGA", "OMEGA_OMEGA",
    "nat", "parse_cnf", "render", "compare", "add", "mul", "omega_pow",
    "omega_tower", "kind", "predecessor", "below_omega_omega",
    "below_omega_tower", "norm", "check_cnf", "enumerate_below",
]

IntoOrdinal = Union["Ordinal", int]


class CNFSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


class NormalFormError(ValueError):
    """Raised for input that is grammatical but not in Cantor normal form."""


class OrdinalKind(enum.Enum):
    ZERO = "zero"
    SUCCESSOR = "successor"
    LIMIT = "limit"


@total_ordering
@dataclass(frozen=True, repr=False)
class Ordinal:
    terms: tuple[tuple["Ordinal", int], ...] = ()

    @classmethod
    def from_terms(cls, terms) -> "Ordinal":
        """Build from ``(exponent, coefficient)`` pairs, validating normal form."""
        a = cls(tuple((_coerce(e), int(c)) for e, c in terms))
        check_cnf(a)
        return a

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __lt__(self, other):
        if isinstance(other, int):
            other = nat(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return _cmp(self, other) < 0

    def __eq__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return other >= 0 and self == nat(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self.is_finite():
            return hash(self.to_int())
        return hash(self.terms)

    def __add__(self, other):
        if isinstance(other, (Ordinal, int)):
            return add(self, other)
        return NotImplemented

    def __radd__(self, other):
        if isinstance(other, int):
            return add(other, self)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (Ordinal, int)):
            return mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return mul(other, self)
        return NotImplemented

    def __repr__(self) -> str:
        return f"Ordinal({render(self)!r})"

    def __str__(self) -> str:
        return render(self)

    def is_finite(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not self.terms[0][0].terms)

    def to_int(self) -> int:
        if not self.is_finite():
            raise ValueError(f"{self} is not a natural number")
        return self.terms[0][1] if self.terms else 0

    @property
    def leading_exponent(self) -> "Ordinal":
        return self.terms[0][0] if self.terms else ZERO


def nat(n: int) -> Ordinal:
    if n < 0:
        raise ValueError("ordinals are non-negative")
    return Ordinal(((ZERO, n),)) if n else ZERO


def _coerce(a: IntoOrdinal) -> Ordinal:
    if isinstance(a, Ordinal):
        return a
    if isinstance(a, int) and not isinstance(a, bool):
        return nat(a)
    raise TypeError(f"cannot interpret {a!r} as an ordinal")


ZERO = Ordinal()
ONE = Ordinal(((ZERO, 1),))
OMEGA = Ordinal(((ONE, 1),))
OMEGA_OMEGA = Ordinal(((OMEGA, 1),))


# -- order -------------------------------------------------------------------

def _cmp(a: Ordinal, b: Ordinal) -> int:
    if a is b:
        return 0
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = _cmp(ea, eb)
        if c:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    return (len(a.terms) > len(b.terms)) - (len(a.terms) < len(b.terms))


def compare(a: IntoOrdinal, b: IntoOrdinal) -> str:
    """Return ``"LT"``, ``"EQ"`` or ``"GT"``."""
    return ("LT", "EQ", "GT")[_cmp(_coerce(a), _coerce(b)) + 1]


# -- arithmetic --------------------------------------------------------------

def add(a: IntoOrdinal, b: IntoOrdinal) -> Ordinal:
    a, b = _coerce(a), _coerce(b)
    if not b.terms:
        return a
    lead, lead_c = b.terms[0]
    kept = []
    for e, c in a.terms:
        d = _cmp(e, lead)
        if d > 0:
            kept.append((e, c))
        elif d == 0:
            kept.append((e, c + lead_c))
            return Ordinal(tuple(kept) + b.terms[1:])
        else:
            break
    return Ordinal(tuple(kept) + b.terms)


def mul(a: IntoOrdinal, b: IntoOrdinal) -> Ordinal:
    a, b = _coerce(a), _coerce(b)
    if not a.terms or not b.terms:
        return ZERO
    lead, lead_c = a.terms[0]
    out = ZERO
    for e, c in b.terms:
        if e.terms:
            piece = Ordinal(((add(lead, e), c),))
        else:
            piece = Ordinal(((lead, lead_c * c),) + a.terms[1:])
        out = add(out, piece)
    return out


def omega_pow(a: IntoOrdinal) -> Ordinal:
    return Ordinal(((_coerce(a), 1),))


def omega_tower(k: int) -> Ordinal:
    """omega_1 = w, omega_{k+1} = w^(omega_k)."""
    if k < 1:
        raise ValueError("tower height must be positive")
    a = OMEGA
    for _ in range(k - 1):
        a = omega_pow(a)
    return a


def kind(a: Ordinal) -> OrdinalKind:
    if not a.terms:
        return OrdinalKind.ZERO
    if not a.terms[-1][0].terms:
        return OrdinalKind.SUCCESSOR
    return OrdinalKind.LIMIT


def predecessor(a: Ordinal) -> Ordinal:
    if kind(a) is not OrdinalKind.SUCCESSOR:
        raise ValueError(f"{a} is not a successor")
    e, c = a.terms[-1]
    return Ordinal(a.terms[:-1] + (((e, c - 1),) if c > 1 else ()))


def below_omega_omega(a: Ordinal) -> bool:
    return all(e.is_finite() for e, _ in a.terms)


def below_omega_tower(a: Ordinal, k: int) -> bool:
    return _cmp(a, omega_tower(k)) < 0


def _stats(a: Ordinal) -> tuple[int, int]:
    biggest, count = 0, 0
    for e, c in a.terms:
        b, n = _stats(e)
        biggest = max(biggest, b, c)
        count += 1 + n
    return biggest, count


def norm(a: Ordinal) -> int:
    """Largest integer occurring anywhere in ``a`` plus its total term count."""
    biggest, count = _stats(a)
    return biggest + count


def check_cnf(a: Ordinal) -> None:
    """Raise :class:`NormalFormError` unless every level is in normal form."""
    if not isinstance(a, Ordinal) or not isinstance(a.terms, tuple):
        raise NormalFormError(f"not an ordinal tree: {a!r}")
    prev = None
    for term in a.terms:
        if not (isinstance(term, tuple) and len(term) == 2):
            raise NormalFormError(f"malformed term {term!r}")
        e, c = term
        if not isinstance(c, int) or isinstance(c, bool) or c < 1:
            raise NormalFormError(f"coefficient must be a positive integer, got {c!r}")
        check_cnf(e)
        if prev is not None and _cmp(e, prev) >= 0:
            raise NormalFormError("exponents must strictly decrease")
        prev = e


# -- enumeration -------------------------------------------------------------

@lru_cache(maxsize=None)
def _trees(budget: int, max_coef: int) -> tuple[tuple[Ordinal, int], ...]:
    """All ordinals using at most ``budget`` terms, with their term counts."""
    out: list[tuple[Ordinal, int]] = [(ZERO, 0)]
    if budget <= 0:
        return tuple(out)
    exps = sorted(_trees(budget - 1, max_coef), key=lambda p: p[0], reverse=True)

    def extend(start: int, left: int, acc: tuple):
        for i in range(start, len(exps)):
            e, cost = exps[i]
            if cost + 1 > left:
                continue
            for c in range(1, max_coef + 1):
                terms = acc + ((e, c),)
                out.append((Ordinal(terms), budget - left + cost + 1))
                extend(i + 1, left - cost - 1, terms)

    extend(0, budget, ())
    return tuple(out)


def enumerate_below(bound: Ordinal, max_norm: int) -> list[Ordinal]:
    """Every ordinal ``a < bound`` with ``norm(a) <= max_norm``, ascending."""
    found = {ZERO} if max_norm >= 0 and _cmp(ZERO, bound) < 0 else set()
    # split by largest coefficient m: term count is then at most max_norm - m
    for m in range(1, max_norm):
        for a, _ in _trees(max_norm - m, m):
            if _cmp(a, bound) < 0 and norm(a) <= max_norm:
                found.add(a)
    return sorted(found)


# -- text --------------------------------------------------------------------

def render(a: Ordinal) -> str:
    if not a.terms:
        return "0"
    return " + ".join(_render_term(e, c) for e, c in a.terms)


def _render_term(e: Ordinal, c: int) -> str:
    if not e.terms:
        return str(c)
    if e == ONE:
        base = "w"
    elif e.is_finite():
        base = f"w^{e.to_int()}"
    elif e == OMEGA:
        base = "w^w"
    else:
        base = f"w^({render(e)})"
    return base if c == 1 else f"{base}*{c}"


_TOKEN = re.compile(r"\s*(?:(\d+)|(.))", re.DOTALL)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(0).strip() == "":
            break
        start = m.start(1) if m.group(1) else m.start(2)
        if m.group(1):
            toks.append(("nat", m.group(1), start))
        elif m.group(2) in "w^*+()":
            toks.append((m.group(2), m.group(2), start))
        else:
            raise CNFSyntaxError(f"unexpected character {m.group(2)!r}", text, start)
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.toks[self.i][0]

    def take(self, kind_: str) -> str:
        k, v, pos = self.toks[self.i]
        if k != kind_:
            want = "number" if kind_ == "nat" else repr(kind_)
            got = "end of input" if k == "end" else repr(v)
            raise CNFSyntaxError(f"expected {want}, got {got}", self.text, pos)
        self.i += 1
        return v

    def ordinal(self) -> Ordinal:
        pos = self.toks[self.i][2]
        if self.peek() == "nat" and self.toks[self.i][1].lstrip("0") == "" \
                and self.toks[self.i + 1][0] != "+":
            self.i += 1
            return ZERO
        terms = [self.term()]
        while self.peek() == "+":
            self.i += 1
            terms.append(self.term())
        for k in range(1, len(terms)):
            if _cmp(terms[k][0], terms[k - 1][0]) >= 0:
                raise NormalFormError(
                    f"exponents out of order in {self.text!r} near position {pos}")
        return Ordinal(tuple(terms))

    def term(self) -> tuple[Ordinal, int]:
        pos = self.toks[self.i][2]
        if self.peek() == "nat":
            c = int(self.take("nat"))
            if c == 0:
                raise NormalFormError(f"zero coefficient at position {pos} in {self.text!r}")
            return ZERO, c
        self.take("w")
        e = ONE
        if self.peek() == "^":
            self.i += 1
            if self.peek() == "nat":
                e = nat(int(self.take("nat")))
            elif self.peek() == "w":
                self.i += 1
                e = OMEGA
            else:
                self.take("(")
                e = self.ordinal()
                self.take(")")
        c = 1
        if self.peek() == "*":
            self.i += 1
            cpos = self.toks[self.i][2]
            c = int(self.take("nat"))
            if c == 0:
                raise NormalFormError(f"zero coefficient at position {cpos} in {self.text!r}")
        return e, c


def parse_cnf(text: str) -> Ordinal:
    p = _Parser(text)
    a = p.ordinal()
    p.take("end")
    return a


def iter_subterms(a: Ordinal) -> Iterator[Ordinal]:
    """Yield ``a`` and every exponent tree nested inside it."""
    yield a
    for e, _ in a.terms:
        yield from iter_subterms(e)
