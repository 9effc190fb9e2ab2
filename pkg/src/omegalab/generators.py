"""Seeded random ordinals and formulas for experiments and round-trip tests."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .formula import (
    free_vars, Add, And, Eq, Exists, Forall, Formula, Implies, Lt, Mul, Not, Num, Or, Succ, Term, Var,
)
from .ordinal import ZERO, Ordinal, nat


@dataclass(frozen=True)
class OrdinalGen:
    height: int = 3        # exponent nesting depth; height 1 gives naturals
    max_terms: int = 3
    max_coef: int = 5

    def draw(self, rng: random.Random) -> Ordinal:
        return self._draw(rng, self.height)

    def _draw(self, rng: random.Random, height: int) -> Ordinal:
        if height <= 1:
            return nat(rng.randint(0, self.max_coef))
        exps = {self._draw(rng, height - 1) for _ in range(rng.randint(0, self.max_terms))}
        terms = [(e, rng.randint(1, self.max_coef)) for e in sorted(exps, reverse=True)]
        return Ordinal(tuple(terms)) if terms else ZERO


@dataclass(frozen=True)
class FormulaGen:
    """Random formulas over a fixed pool of variable names.

    With ``delta0`` every quantifier gets a bound, so the output is Delta0.
    Bounds never mention ``y``, which ranges over witnesses.
    """

    variables: tuple[str, ...] = ("x", "y")
    bound_vars: tuple[str, ...] = ("u", "v", "w")
    depth: int = 3
    term_depth: int = 2
    max_num: int = 4
    delta0: bool = False

    def draw(self, rng: random.Random) -> Formula:
        return self._formula(rng, self.depth, list(self.variables))

    def term(self, rng: random.Random, depth: int, scope: list[str]) -> Term:
        if depth <= 0 or rng.random() < 0.35:
            if scope and rng.random() < 0.7:
                return Var(rng.choice(scope))
            return Num(rng.randint(0, self.max_num))
        op = rng.randrange(3)
        if op == 0:
            return Succ(self.term(rng, depth - 1, scope))
        cls = Add if op == 1 else Mul
        return cls(self.term(rng, depth - 1, scope), self.term(rng, depth - 1, scope))

    def _bound(self, rng: random.Random, scope: list[str]) -> Term:
        # small bounds keep bounded evaluation cheap: a numeral or S^i(var)
        if not scope or rng.random() < 0.3:
            return Num(rng.randint(0, self.max_num))
        t: Term = Var(rng.choice(scope))
        return Succ(t) if rng.random() < 0.5 else t

    def _formula(self, rng: random.Random, depth: int, scope: list[str]) -> Formula:
        if depth <= 0 or rng.random() < 0.25:
            cls = Eq if rng.random() < 0.5 else Lt
            return cls(self.term(rng, self.term_depth, scope), self.term(rng, self.term_depth, scope))
        op = rng.randrange(6)
        if op == 0:
            return Not(self._formula(rng, depth - 1, scope))
        if op <= 3:
            cls = (And, Or, Implies)[op - 1]
            return cls(self._formula(rng, depth - 1, scope), self._formula(rng, depth - 1, scope))
        v = rng.choice(self.bound_vars)
        bounded = self.delta0 or rng.random() < 0.4
        bound = self._bound(rng, [s for s in scope if s not in (v, "y")]) if bounded else None
        body = self._formula(rng, depth - 1, scope + [v])
        return (Exists if op == 4 else Forall)(v, body, bound)


def delta0_corpus(count: int, seed: int = 0, depth: int = 3) -> list[Formula]:
    """Distinct Delta0 matrices whose free variables are exactly ``x, y``."""
    rng = random.Random(seed)
    gen = FormulaGen(depth=depth, delta0=True)
    seen: dict[Formula, None] = {}
    while len(seen) < count:
        f = gen.draw(rng)
        if free_vars(f) == {"x", "y"}:
            seen.setdefault(f)
    return list(seen)
