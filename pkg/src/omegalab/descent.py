"""Descending sequences of ordinals: validation, window search, fundamental
sequences and canonical walks down to zero."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .ordinal import (
    OMEGA_OMEGA, ZERO, Ordinal, OrdinalKind, _cmp, add, kind, mul, nat, omega_pow,
    omega_tower, parse_cnf, predecessor, render,
)

__all__ = [
    "DescentTrace", "NoWitness", "NotALimit", "StepsExhausted",
    "check_strict_descent", "least_m", "least_m_cap", "fundamental",
    "canonical_walk", "default_bound",
]


class NoWitness(ValueError):
    pass


class NotALimit(ValueError):
    pass


class StepsExhausted(RuntimeError):
    """The step sequence ran out before the walk reached zero."""

    def __init__(self, trace: "DescentTrace"):
        super().__init__(f"steps exhausted after {len(trace.entries)} entries at {trace.entries[-1]}")
        self.trace = trace


@dataclass(frozen=True)
class DescentTrace:
    entries: tuple[Ordinal, ...]
    bound: Ordinal = OMEGA_OMEGA
    violation_at: Optional[int] = None

    @property
    def valid(self) -> bool:
        return self.violation_at is None

    def __len__(self) -> int:
        return len(self.entries)

    def to_json(self) -> dict:
        return {
            "bound": render(self.bound),
            "entries": [render(a) for a in self.entries],
            "status": "valid" if self.valid else {"violation_at": self.violation_at},
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, doc) -> "DescentTrace":
        """Parse a trace document. The stored status is re-checked, not trusted."""
        if isinstance(doc, str):
            doc = json.loads(doc)
        bound = parse_cnf(doc["bound"])
        entries = [parse_cnf(s) for s in doc["entries"]]
        trace = check_strict_descent(entries, bound)
        status = doc.get("status", "valid")
        claimed = None if status == "valid" else status["violation_at"]
        if claimed != trace.violation_at:
            raise ValueError(
                f"status {status!r} does not match entries (recomputed {trace.to_json()['status']!r})")
        return trace


def check_strict_descent(seq: Sequence[Ordinal], bound: Ordinal = OMEGA_OMEGA) -> DescentTrace:
    entries = tuple(seq)
    for i, a in enumerate(entries):
        if _cmp(a, bound) >= 0 or (i and _cmp(a, entries[i - 1]) >= 0):
            return DescentTrace(entries, bound, i)
    return DescentTrace(entries, bound)


def _coefficient_at(a: Ordinal, n: Ordinal) -> int:
    for e, c in a.terms:
        if e == n:
            return c
    return 0


def least_m_cap(f: Sequence[Ordinal], n: int) -> int:
    """Largest ``m`` the search in :func:`least_m` needs to try.

    Let ``g`` be the smallest entry. If ``g >= alpha`` write ``g = alpha + d``;
    a window ``alpha + w^n*m`` contains ``g`` iff ``d < w^n*m``, so the least
    such ``m`` is one more than the ``w^n`` coefficient of ``d`` (or does not
    exist when ``d`` has a term above ``w^n``). That coefficient never exceeds
    the ``w^n`` coefficient of ``g`` itself, so ``coeff + 2`` bounds the search
    independently of ``alpha``.
    """
    if not f:
        return 0
    g = min(f)
    return _coefficient_at(g, nat(n)) + 2


def least_m(f: Sequence[Ordinal], alpha: Ordinal, n: int) -> int:
    """Least ``m`` with some ``f[i] < alpha + w^n * m``.

    ``m == 0`` means some entry already lies below ``alpha``.
    Raises :class:`NoWitness` when no ``m`` works.
    """
    window = omega_pow(n)
    for m in range(least_m_cap(f, n) + 1):
        top = add(alpha, mul(window, m))
        if any(_cmp(a, top) < 0 for a in f):
            return m
    raise NoWitness(f"no entry lies below {render(alpha)} + w^{n}*m for any finite m")


def fundamental(a: Ordinal, n: int) -> Ordinal:
    """``a[n]`` for limit ``a``.

    (g + w^(b+1))[n] = g + w^b * n and (g + w^l)[n] = g + w^(l[n]) for limit l.
    """
    if kind(a) is not OrdinalKind.LIMIT:
        raise NotALimit(f"{render(a)} is not a limit ordinal")
    e, c = a.terms[-1]
    head = Ordinal(a.terms[:-1] + (((e, c - 1),) if c > 1 else ()))
    if kind(e) is OrdinalKind.SUCCESSOR:
        return add(head, mul(omega_pow(predecessor(e)), n))
    return add(head, omega_pow(fundamental(e, n)))


def default_bound(start: Ordinal) -> Ordinal:
    """Smallest of w^w, w^(w^w), ... lying above ``start``."""
    k = 2
    bound = OMEGA_OMEGA
    while _cmp(start, bound) >= 0:
        k += 1
        bound = omega_tower(k)
    return bound


def canonical_walk(start: Ordinal, steps: Iterable[int] = (),
                   bound: Optional[Ordinal] = None) -> DescentTrace:
    """Walk from ``start`` to zero: successors step to their predecessor,
    limits ``a`` consume the next step ``n`` and move to ``a[n]``. A start at or
    above ``bound`` gives a one-entry trace violated at 0."""
    bound = default_bound(start) if bound is None else bound
    if _cmp(start, bound) >= 0:
        return check_strict_descent([start], bound)
    it = iter(steps)
    entries = [start]
    a = start
    while a.terms:
        if kind(a) is OrdinalKind.SUCCESSOR:
            a = predecessor(a)
        else:
            try:
                n = next(it)
            except StopIteration:
                raise StepsExhausted(check_strict_descent(entries, bound)) from None
            a = fundamental(a, n)
        entries.append(a)
    return check_strict_descent(entries, bound)
