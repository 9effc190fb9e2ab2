"""First-order arithmetic formulas: syntax, arithmetic-hierarchy levels,
bounded-model evaluation and uniformization with respect to a variable.

Concrete syntax (ASCII)::

    formula := unary | formula "&" formula | formula "|" formula
             | formula "->" formula            (-> is right associative)
    unary   := "~" unary | Q var unary | Q var "<" term unary
             | "(" formula ")" | term "=" term | term "<" term
    term    := term "+" term | term "*" term | "S(" term ")" | var | nat
    Q       := "E" | "A"     (written against the variable: "Ex", "Ay<z")

Variables are lower-case identifiers.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from math import isqrt
from typing import Callable, Mapping, Optional, Union

__all__ = [
    "Var", "Num", "Succ", "Add", "Mul", "Term",
    "Eq", "Lt", "Not", "And", "Or", "Implies", "Exists", "Forall", "Formula",
    "Level", "FormulaSyntaxError", "UnboundVariable", "UnassignedVariable",
    "NotSigma", "NotDelta0", "VariableNotFree", "InsufficientBound",
    "parse_formula", "parse_term", "render_formula", "render_term", "free_vars",
    "all_vars", "substitute", "levels", "classify", "pair", "proj1", "proj2",
    "pair_graph", "uniformize", "eval_bounded", "eval_term", "compile_formula",
    "UniformizationReport", "check_uniformization", "sufficient_bound",
    "induction_instance", "bounding_instance",
]


# -- AST ---------------------------------------------------------------------

@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Succ:
    arg: "Term"


@dataclass(frozen=True)
class Add:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Mul:
    left: "Term"
    right: "Term"


Term = Union[Var, Num, Succ, Add, Mul]


@dataclass(frozen=True)
class Eq:
    left: Term
    right: Term


@dataclass(frozen=True)
class Lt:
    left: Term
    right: Term


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"
    bound: Optional[Term] = None


@dataclass(frozen=True)
class Forall:
    var: str
    body: "Formula"
    bound: Optional[Term] = None


Formula = Union[Eq, Lt, Not, And, Or, Implies, Exists, Forall]
_Quant = (Exists, Forall)
_Binary = (And, Or, Implies)


class FormulaSyntaxError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos


class UnboundVariable(ValueError):
    pass


class UnassignedVariable(KeyError):
    pass


class NotSigma(ValueError):
    pass


class NotDelta0(ValueError):
    pass


class VariableNotFree(ValueError):
    pass


class InsufficientBound(ValueError):
    pass


# -- variables and substitution ----------------------------------------------

def _term_vars(t: Term) -> set[str]:
    if isinstance(t, Var):
        return {t.name}
    if isinstance(t, Num):
        return set()
    if isinstance(t, Succ):
        return _term_vars(t.arg)
    return _term_vars(t.left) | _term_vars(t.right)


def free_vars(f: Formula) -> set[str]:
    if isinstance(f, (Eq, Lt)):
        return _term_vars(f.left) | _term_vars(f.right)
    if isinstance(f, Not):
        return free_vars(f.body)
    if isinstance(f, _Binary):
        return free_vars(f.left) | free_vars(f.right)
    inner = free_vars(f.body) - {f.var}
    return inner | (_term_vars(f.bound) if f.bound is not None else set())


def all_vars(f: Formula) -> set[str]:
    if isinstance(f, (Eq, Lt)):
        return _term_vars(f.left) | _term_vars(f.right)
    if isinstance(f, Not):
        return all_vars(f.body)
    if isinstance(f, _Binary):
        return all_vars(f.left) | all_vars(f.right)
    out = all_vars(f.body) | {f.var}
    return out | (_term_vars(f.bound) if f.bound is not None else set())


def fresh(base: str, avoid: set[str]) -> str:
    if base not in avoid:
        return base
    i = 1
    while f"{base}{i}" in avoid:
        i += 1
    return f"{base}{i}"


def _subst_term(t: Term, m: Mapping[str, Term]) -> Term:
    if isinstance(t, Var):
        return m.get(t.name, t)
    if isinstance(t, Num):
        return t
    if isinstance(t, Succ):
        return Succ(_subst_term(t.arg, m))
    return type(t)(_subst_term(t.left, m), _subst_term(t.right, m))


def substitute(f: Formula, mapping: Mapping[str, Term]) -> Formula:
    """Capture-avoiding substitution of terms for free variables."""
    mapping = {k: v for k, v in mapping.items() if k in free_vars(f)}
    if not mapping:
        return f
    if isinstance(f, (Eq, Lt)):
        return type(f)(_subst_term(f.left, mapping), _subst_term(f.right, mapping))
    if isinstance(f, Not):
        return Not(substitute(f.body, mapping))
    if isinstance(f, _Binary):
        return type(f)(substitute(f.left, mapping), substitute(f.right, mapping))
    bound = _subst_term(f.bound, mapping) if f.bound is not None else None
    inner = {k: v for k, v in mapping.items() if k != f.var}
    var, body = f.var, f.body
    incoming = set().union(*(_term_vars(t) for t in inner.values())) if inner else set()
    if var in incoming:
        var = fresh(var, incoming | all_vars(body) | set(inner))
        body = substitute(body, {f.var: Var(var)})
    return type(f)(var, substitute(body, inner), bound)


# -- parsing -----------------------------------------------------------------

_TOKENS = re.compile(r"""
    \s*(?:
      (?P<quant>[EA])(?P<qvar>[a-z][a-z0-9_]*)
    | (?P<succ>S)\s*(?=\()
    | (?P<var>[a-z][a-z0-9_]*)
    | (?P<num>\d+)
    | (?P<sym>->|[+*=<~&|()])
    )""", re.VERBOSE)


def _tokenize(text: str):
    toks, pos = [], 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKENS.match(text, pos)
        if not m or m.end() == pos:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        start = pos
        if m.group("quant"):
            toks.append(("quant", (m.group("quant"), m.group("qvar")), start))
        elif m.group("succ"):
            toks.append(("S", "S", start))
        elif m.group("var"):
            toks.append(("var", m.group("var"), start))
        elif m.group("num"):
            toks.append(("num", int(m.group("num")), start))
        else:
            toks.append((m.group("sym"), m.group("sym"), start))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self, ahead: int = 0) -> str:
        return self.toks[min(self.i + ahead, len(self.toks) - 1)][0]

    def fail(self, message: str):
        raise FormulaSyntaxError(message, self.text, self.toks[self.i][2])

    def take(self, kind: str):
        if self.peek() != kind:
            got = self.toks[self.i]
            self.fail(f"expected {kind!r}, got {'end of input' if got[0] == 'end' else repr(got[1])}")
        tok = self.toks[self.i]
        self.i += 1
        return tok[1]

    # formulas
    def formula(self) -> Formula:
        left = self.disj()
        if self.peek() == "->":
            self.i += 1
            return Implies(left, self.formula())
        return left

    def disj(self) -> Formula:
        f = self.conj()
        while self.peek() == "|":
            self.i += 1
            f = Or(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.unary()
        while self.peek() == "&":
            self.i += 1
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        k = self.peek()
        if k == "~":
            self.i += 1
            return Not(self.unary())
        if k == "quant":
            q, var = self.take("quant")
            bound = None
            if self.peek() == "<":
                self.i += 1
                bound = self.term()
                if var in _term_vars(bound):
                    self.fail(f"bound of {q}{var} mentions {var}")
            body = self.unary()
            return (Exists if q == "E" else Forall)(var, body, bound)
        if k == "(":
            save = self.i
            try:
                return self.atom()
            except FormulaSyntaxError:
                self.i = save
            self.take("(")
            f = self.formula()
            self.take(")")
            return f
        return self.atom()

    def atom(self) -> Formula:
        left = self.term()
        k = self.peek()
        if k not in ("=", "<"):
            self.fail("expected '=' or '<'")
        self.i += 1
        right = self.term()
        return Eq(left, right) if k == "=" else Lt(left, right)

    # terms
    def term(self) -> Term:
        t = self.product()
        while self.peek() == "+":
            self.i += 1
            t = Add(t, self.product())
        return t

    def product(self) -> Term:
        t = self.primary()
        while self.peek() == "*":
            self.i += 1
            t = Mul(t, self.primary())
        return t

    def primary(self) -> Term:
        k = self.peek()
        if k == "var":
            return Var(self.take("var"))
        if k == "num":
            return Num(self.take("num"))
        if k == "S":
            self.i += 1
            self.take("(")
            t = self.term()
            self.take(")")
            return Succ(t)
        if k == "(":
            self.i += 1
            t = self.term()
            self.take(")")
            return t
        self.fail("expected a term")


def parse_formula(text: str, closed: bool = False, free: Optional[set[str]] = None) -> Formula:
    """Parse ``text``. With ``closed`` (or an explicit ``free`` set) any other
    free variable raises :class:`UnboundVariable`."""
    p = _Parser(text)
    f = p.formula()
    p.take("end")
    allowed = set() if closed else free
    if allowed is not None:
        extra = free_vars(f) - set(allowed)
        if extra:
            raise UnboundVariable(f"unbound variables {sorted(extra)} in {text!r}")
    return f


def parse_term(text: str) -> Term:
    p = _Parser(text)
    t = p.term()
    p.take("end")
    return t


# -- rendering ---------------------------------------------------------------

def render_term(t: Term, prec: int = 0) -> str:
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Num):
        return str(t.value)
    if isinstance(t, Succ):
        return f"S({render_term(t.arg)})"
    if isinstance(t, Add):
        s, mine = f"{render_term(t.left, 1)} + {render_term(t.right, 2)}", 1
    else:
        s, mine = f"{render_term(t.left, 2)} * {render_term(t.right, 3)}", 2
    return f"({s})" if prec > mine else s


def render_formula(f: Formula, prec: int = 0) -> str:
    if isinstance(f, (Eq, Lt)):
        s = f"{render_term(f.left)} {'=' if isinstance(f, Eq) else '<'} {render_term(f.right)}"
        return f"({s})" if prec >= 5 else s
    if isinstance(f, Not):
        return "~" + render_formula(f.body, 5)
    if isinstance(f, _Quant):
        q = ("E" if isinstance(f, Exists) else "A") + f.var
        if f.bound is not None:
            q += "<" + render_term(f.bound)
        return f"{q} {render_formula(f.body, 5)}"
    if isinstance(f, Implies):
        s, mine = f"{render_formula(f.left, 2)} -> {render_formula(f.right, 1)}", 1
    elif isinstance(f, Or):
        s, mine = f"{render_formula(f.left, 2)} | {render_formula(f.right, 3)}", 2
    else:
        s, mine = f"{render_formula(f.left, 3)} & {render_formula(f.right, 4)}", 3
    return f"({s})" if prec > mine else s


# -- arithmetic hierarchy ----------------------------------------------------

@dataclass(frozen=True)
class Level:
    kind: str          # "Delta0", "Sigma" or "Pi"
    k: int = 0

    def __str__(self) -> str:
        return "Delta0" if self.kind == "Delta0" else f"{self.kind}({self.k})"

    @classmethod
    def parse(cls, text: str) -> "Level":
        if text == "Delta0":
            return cls("Delta0")
        m = re.fullmatch(r"(Sigma|Pi)\((\d+)\)", text)
        if not m:
            raise ValueError(f"not a level: {text!r}")
        return cls(m.group(1), int(m.group(2)))


def levels(f: Formula) -> tuple[int, int]:
    """Least ``(s, p)`` with ``f`` in Sigma(s) and Pi(p); ``(0, 0)`` is Delta0.

    Bounded quantifiers are transparent and adjacent like quantifiers merge.
    """
    if isinstance(f, (Eq, Lt)):
        return 0, 0
    if isinstance(f, Not):
        s, p = levels(f.body)
        return p, s
    if isinstance(f, (And, Or)):
        s1, p1 = levels(f.left)
        s2, p2 = levels(f.right)
        return max(s1, s2), max(p1, p2)
    if isinstance(f, Implies):
        s1, p1 = levels(f.left)
        s2, p2 = levels(f.right)
        return max(p1, s2), max(s1, p2)
    s, p = levels(f.body)
    if f.bound is not None or f.var not in free_vars(f.body):
        return s, p
    if isinstance(f, Exists):
        s2 = min(max(s, 1), p + 1)
        return s2, s2 + 1
    p2 = min(max(p, 1), s + 1)
    return p2 + 1, p2


def classify(f: Formula) -> Level:
    """Minimal level. A formula minimal in both Sigma(n) and Pi(n) reports Sigma(n)."""
    s, p = levels(f)
    if s == 0 and p == 0:
        return Level("Delta0")
    if p < s:
        return Level("Pi", p)
    return Level("Sigma", s)


# -- pairing -----------------------------------------------------------------

def pair(a: int, b: int) -> int:
    """Cantor pairing ``(a + b)(a + b + 1)/2 + b``."""
    if a < 0 or b < 0:
        raise ValueError("pairing is defined on natural numbers")
    return (a + b) * (a + b + 1) // 2 + b


def _unpair(z: int) -> tuple[int, int]:
    if z < 0:
        raise ValueError("pairing is defined on natural numbers")
    s = (isqrt(8 * z + 1) - 1) // 2
    b = z - s * (s + 1) // 2
    return s - b, b


def proj1(z: int) -> int:
    return _unpair(z)[0]


def proj2(z: int) -> int:
    return _unpair(z)[1]


def pair_graph(a: Term, b: Term, z: Term) -> Formula:
    """Delta0 formula for ``pair(a, b) = z``: (a+b)*S(a+b) + b + b = z + z."""
    s = Add(a, b)
    return Eq(Add(Add(Mul(s, Succ(s)), b), b), Add(z, z))


# -- uniformization ----------------------------------------------------------

def _pull_exists(f: Formula, avoid: set[str]) -> tuple[list[str], Formula]:
    """Move unbounded existentials to the front where that is an equivalence."""
    if isinstance(f, Exists) and f.bound is None:
        vs, body = _pull_exists(f.body, avoid | {f.var})
        return [f.var] + vs, body
    if isinstance(f, Not):
        if isinstance(f.body, Forall) and f.body.bound is None:
            return _pull_exists(Exists(f.body.var, Not(f.body.body)), avoid)
        if isinstance(f.body, Not):
            return _pull_exists(f.body.body, avoid)
        return [], f
    if isinstance(f, (And, Or)):
        va, ma = _pull_exists(f.left, avoid)
        taken = avoid | set(va) | all_vars(ma)
        vb, mb = _pull_exists(f.right, taken)
        renamed = {}
        for v in vb:
            if v in taken or v in free_vars(ma):
                new = fresh(v, taken | set(vb) | all_vars(mb) | set(renamed.values()))
                renamed[v] = Var(new)
        if renamed:
            mb = substitute(mb, renamed)
            vb = [renamed[v].name if v in renamed else v for v in vb]
        # pulled right-hand variables must not be captured by the left matrix
        return va + vb, type(f)(ma, mb)
    return [], f


def uniformize(phi: Formula, x: str) -> Formula:
    """Return the formula satisfied exactly by the first coordinate of the
    least code ``z = pair(x, y)`` whose pair satisfies the matrix of ``phi``.
    """
    if x not in free_vars(phi):
        raise VariableNotFree(f"{x} is not free in {render_formula(phi)}")
    lvl = classify(phi)
    if lvl.kind != "Sigma":
        raise NotSigma(f"{render_formula(phi)} is {lvl}, not Sigma")
    n = lvl.k
    avoid = all_vars(phi)
    evars, matrix = _pull_exists(phi, avoid - {x})
    if not evars:
        raise NotSigma(f"no leading existential can be exposed in {render_formula(phi)}")
    if x in evars:
        raise VariableNotFree(f"{x} is bound in {render_formula(phi)}")
    s, p = levels(matrix)
    if p > n - 1 or (n == 1 and s > 0):
        raise NotSigma(f"matrix {render_formula(matrix)} is not Pi({n - 1})")
    avoid |= all_vars(matrix)
    y, theta = _contract(evars, matrix, avoid)
    avoid |= all_vars(theta)
    names: set[str] = set()
    z, a, b, w, c, d = (_take(v, avoid, names) for v in "zabwcd")
    hit = Exists(a, Exists(b, And(And(pair_graph(Var(a), Var(b), Var(z)), Eq(Var(a), Var(x))),
                                  substitute(theta, {x: Var(a), y: Var(b)})),
                           Succ(Var(z))), Succ(Var(z)))
    earlier = Exists(w, Exists(c, Exists(d, And(pair_graph(Var(c), Var(d), Var(w)),
                                                substitute(theta, {x: Var(c), y: Var(d)})),
                                         Succ(Var(w))), Succ(Var(w))), Var(z))
    return Exists(z, And(hit, Not(earlier)))


def _take(v: str, avoid: set[str], names: set[str]) -> str:
    v = fresh(v, avoid | names)
    names.add(v)
    return v


def _contract(evars: list[str], matrix: Formula, avoid: set[str]) -> tuple[str, Formula]:
    """Merge an existential block into one variable coding a nested pair."""
    if len(evars) == 1:
        return evars[0], matrix
    rest_var, rest = _contract(evars[1:], matrix, avoid)
    y = fresh("y", avoid | set(evars) | all_vars(rest))
    avoid.add(y)
    head = evars[0]
    body = And(pair_graph(Var(head), Var(rest_var), Var(y)), rest)
    return y, Exists(head, Exists(rest_var, body, Succ(Var(y))), Succ(Var(y)))


# -- bounded semantics -------------------------------------------------------

Env = dict


def _compile_term(t: Term) -> Callable[[Env], int]:
    if isinstance(t, Var):
        name = t.name

        def get(env):
            try:
                return env[name]
            except KeyError:
                raise UnassignedVariable(name) from None
        return get
    if isinstance(t, Num):
        v = t.value
        return lambda env: v
    if isinstance(t, Succ):
        g = _compile_term(t.arg)
        return lambda env: g(env) + 1
    left, right = _compile_term(t.left), _compile_term(t.right)
    if isinstance(t, Add):
        return lambda env: left(env) + right(env)
    return lambda env: left(env) * right(env)


def compile_formula(f: Formula, N: int) -> Callable[[Env], bool]:
    """Evaluator with unbounded quantifiers ranging over ``0..N-1``."""
    if isinstance(f, (Eq, Lt)):
        left, right = _compile_term(f.left), _compile_term(f.right)
        if isinstance(f, Eq):
            return lambda env: left(env) == right(env)
        return lambda env: left(env) < right(env)
    if isinstance(f, Not):
        g = compile_formula(f.body, N)
        return lambda env: not g(env)
    if isinstance(f, _Binary):
        a, b = compile_formula(f.left, N), compile_formula(f.right, N)
        if isinstance(f, And):
            return lambda env: a(env) and b(env)
        if isinstance(f, Or):
            return lambda env: a(env) or b(env)
        return lambda env: (not a(env)) or b(env)
    body = compile_formula(f.body, N)
    bound = _compile_term(f.bound) if f.bound is not None else (lambda env: N)
    var = f.var
    want = isinstance(f, Exists)

    def quant(env):
        top = bound(env)
        saved = env.get(var, _MISSING)
        try:
            for v in range(top):
                env[var] = v
                if body(env) == want:
                    return want
            return not want
        finally:
            if saved is _MISSING:
                env.pop(var, None)
            else:
                env[var] = saved
    return quant


_MISSING = object()


def eval_term(t: Term, assignment: Mapping[str, int]) -> int:
    return _compile_term(t)(dict(assignment))


def eval_bounded(f: Formula, assignment: Mapping[str, int], N: int) -> bool:
    missing = free_vars(f) - set(assignment)
    if missing:
        raise UnassignedVariable(", ".join(sorted(missing)))
    return compile_formula(f, N)(dict(assignment))


# -- finite check of the uniformization properties ---------------------------

@dataclass(frozen=True)
class UniformizationReport:
    item1: bool
    item2: bool
    item3: bool
    X: int
    N: int
    theta: str
    selected: tuple[int, ...] = ()       # every x < N with the uniformized property
    least_code: Optional[int] = None

    @property
    def ok(self) -> bool:
        return self.item1 and self.item2 and self.item3

    def to_json(self) -> dict:
        return {"item1": self.item1, "item2": self.item2, "item3": self.item3,
                "X": self.X, "N": self.N, "theta": self.theta,
                "selected": list(self.selected), "least_code": self.least_code}

    @classmethod
    def from_json(cls, doc) -> "UniformizationReport":
        if isinstance(doc, str):
            doc = json.loads(doc)
        return cls(bool(doc["item1"]), bool(doc["item2"]), bool(doc["item3"]),
                   int(doc["X"]), int(doc["N"]), str(doc["theta"]),
                   tuple(doc.get("selected", ())), doc.get("least_code"))


def _delta0_matrix(theta: Formula, x: str, y: str) -> None:
    if classify(theta) != Level("Delta0"):
        raise NotDelta0(f"{render_formula(theta)} is {classify(theta)}")
    extra = free_vars(theta) - {x, y}
    if extra:
        raise UnboundVariable(f"matrix has free variables {sorted(extra)} besides {x}, {y}")


def _least_witnesses(holds, X: int, N: int) -> list[Optional[int]]:
    out = []
    for a in range(X):
        out.append(next((b for b in range(N) if holds(a, b)), None))
    return out


def check_uniformization(theta: Formula, X: int, N: int, x: str = "x", y: str = "y",
                         method: str = "table") -> UniformizationReport:
    """Evaluate the three uniformization properties in the model ``{0..N-1}``.

    With ``Phi(x) = Ey theta`` and ``Phibar`` its uniformization:
    item 1 is ``Ax<X (Phibar(x) -> Phi(x))``, item 2 is uniqueness of ``Phibar``
    among ``x, x' < X``, item 3 is ``(Ex<X Phi(x)) -> Ex Phibar(x)``. If any
    ``x < X`` has a witness, the least code ``pair(x, y)`` among those must lie
    below ``N``; otherwise the least code overall might be cut off and
    :class:`InsufficientBound` is raised instead of a report.

    ``method="table"`` evaluates ``theta`` once per code; ``method="formula"``
    evaluates the uniformized formula itself (slow, small ``N`` only).
    """
    if isinstance(theta, str):
        theta = parse_formula(theta)
    _delta0_matrix(theta, x, y)
    matrix = compile_formula(theta, N)

    def holds(a: int, b: int) -> bool:
        return matrix({x: a, y: b})

    if X > N:
        raise InsufficientBound(f"X = {X} exceeds the model size N = {N}")
    least = _least_witnesses(holds, X, N)
    codes = [pair(a, w) for a, w in enumerate(least) if w is not None]
    if codes and min(codes) >= N:
        raise InsufficientBound(
            f"least witness code {min(codes)} for x < {X} is not below N = {N}")
    has = [w is not None for w in least]

    if method == "table":
        least_code = next((z for z in range(N) if holds(*_unpair(z))), None)
        selected = () if least_code is None else (proj1(least_code),)

        def phibar(a: int) -> bool:
            return a in selected
    elif method == "formula":
        phi = Exists(y, theta) if y in free_vars(theta) else theta
        bar = compile_formula(uniformize(phi, x) if x in free_vars(phi)
                              else _constant_uniformization(theta, x, y), N)
        selected = tuple(a for a in range(N) if bar({x: a}))
        codes = [z for z in range(N) if holds(*_unpair(z))]
        least_code = codes[0] if codes else None

        def phibar(a: int) -> bool:
            return a in selected
    else:
        raise ValueError(f"unknown method {method!r}")

    item1 = all(has[a] for a in range(X) if phibar(a))
    item2 = all(a == b for a in range(X) for b in range(X) if phibar(a) and phibar(b))
    item3 = (not any(has)) or bool(selected)
    return UniformizationReport(item1, item2, item3, X, N, render_formula(theta),
                                tuple(selected), least_code)


def _constant_uniformization(theta: Formula, x: str, y: str) -> Formula:
    # theta ignores x: uniformize with x added as a dummy conjunct
    dummy = And(theta, Eq(Var(x), Var(x)))
    return uniformize(Exists(y, dummy) if y in free_vars(theta) else dummy, x)


def sufficient_bound(theta: Formula, X: int, start: int = 64, rounds: int = 8,
                     x: str = "x", y: str = "y") -> int:
    """Smallest ``N >= start`` found by iteration that meets the code bound."""
    if isinstance(theta, str):
        theta = parse_formula(theta)
    _delta0_matrix(theta, x, y)
    N = max(start, 1)
    matrix = compile_formula(theta, N)
    for _ in range(rounds):
        least = _least_witnesses(lambda a, b: matrix({x: a, y: b}), X, N)
        top = max((w for w in least if w is not None), default=0)
        need = pair(max(X - 1, 0), top) + 1
        if need <= N:
            return N
        N = need
    raise InsufficientBound(f"no sufficient N found after {rounds} rounds (last {N})")


# -- scheme instances --------------------------------------------------------

def _closure(f: Formula, keep: set[str] = frozenset()) -> Formula:
    for v in sorted(free_vars(f) - set(keep), reverse=True):
        f = Forall(v, f)
    return f


def induction_instance(phi: Formula, var: str, close: bool = True) -> Formula:
    """(phi(0) & Avar (phi -> phi(S(var)))) -> Avar phi."""
    base = substitute(phi, {var: Num(0)})
    step = Forall(var, Implies(phi, substitute(phi, {var: Succ(Var(var))})))
    f = Implies(And(base, step), Forall(var, phi))
    return _closure(f) if close else f


def bounding_instance(phi: Formula, i: str, j: str, close: bool = True) -> Formula:
    """(Ai Ej phi) -> Am En (Ai<m)(Ej<n) phi."""
    taken = all_vars(phi)
    m = fresh("m", taken)
    n = fresh("n", taken | {m})
    hyp = Forall(i, Exists(j, phi))
    concl = Forall(m, Exists(n, Forall(i, Exists(j, phi, Var(n)), Var(m))))
    f = Implies(hyp, concl)
    return _closure(f) if close else f
