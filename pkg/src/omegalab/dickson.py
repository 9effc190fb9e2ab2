"""Bad sequences in N^k under the componentwise (divisibility) order.

A bad sequence never has an earlier element below a later one. Each prefix
leaves a residual set ``D = N^k minus the up-closure of the prefix``; its rank
is the maximal order type of ``D``, an ordinal below ``w^k`` once the prefix is
non-empty. Adding an element of ``D`` removes at least that element, and the
rank drops strictly.

The rank is computed from the *essential fibres* of ``D``: axis-parallel
copies of ``N^d`` (all coordinates in a set ``S`` of size ``d`` free, the rest
fixed) contained in ``D`` and in no larger such fibre. ``D`` is their finite
union and its rank is ``sum_d w^d * (number of essential d-fibres)``.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

from .ordinal import ZERO, Ordinal, _cmp, nat, parse_cnf, render

__all__ = [
    "Monomial", "DimensionMismatch", "NotAntichain", "NotBad", "Rejected",
    "MonomialState", "product_leq", "minimal_basis", "essential_counts",
    "residual_order_type", "extend_bad", "rank_bad_sequence",
    "parse_monomial", "format_monomial", "parse_sequence",
]

Monomial = tuple[int, ...]


class DimensionMismatch(ValueError):
    pass


class NotAntichain(ValueError):
    pass


class NotBad(ValueError):
    def __init__(self, i: int, j: int, seq):
        super().__init__(f"element {i} {format_monomial(seq[i])} divides "
                         f"element {j} {format_monomial(seq[j])}")
        self.pair = (i, j)


def _dim(vectors: Iterable[Monomial], k: int | None = None) -> int | None:
    for v in vectors:
        if k is None:
            k = len(v)
        elif len(v) != k:
            raise DimensionMismatch(f"{format_monomial(v)} is not of dimension {k}")
    return k


def product_leq(u: Monomial, v: Monomial) -> bool:
    """True iff ``u`` divides ``v``, i.e. ``u[i] <= v[i]`` everywhere."""
    if len(u) != len(v):
        raise DimensionMismatch(f"{format_monomial(u)} vs {format_monomial(v)}")
    return all(a <= b for a, b in zip(u, v))


def minimal_basis(vectors: Sequence[Monomial]) -> tuple[Monomial, ...]:
    _dim(vectors)
    distinct = sorted(set(map(tuple, vectors)))
    return tuple(v for v in distinct
                 if not any(u != v and product_leq(u, v) for u in distinct))


def _check_antichain(minimal: Sequence[Monomial]) -> None:
    for u, v in itertools.combinations(minimal, 2):
        if product_leq(u, v) or product_leq(v, u):
            raise NotAntichain(f"{format_monomial(u)} and {format_monomial(v)} are comparable")


def essential_counts(minimal: Sequence[Monomial], k: int) -> tuple[int, ...]:
    """Number of essential fibres of each dimension ``0..k``.

    A fibre fixes coordinates outside ``S`` to ``t``. It lies inside ``D``
    iff every generator exceeds ``t`` somewhere outside ``S``; it is essential
    iff freeing any further coordinate ``j`` breaks that, which forces
    ``t[j] < max generator[j]`` and keeps the enumeration finite.
    """
    minimal = [tuple(v) for v in minimal]
    _dim(minimal, k)
    counts = [0] * (k + 1)
    if not minimal:
        counts[k] = 1
        return tuple(counts)
    tops = [max(v[j] for v in minimal) for j in range(k)]
    for d in range(k):
        for free in itertools.combinations(range(k), d):
            fixed = [j for j in range(k) if j not in free]
            for t in itertools.product(*(range(tops[j]) for j in fixed)):
                point = dict(zip(fixed, t))
                if not all(any(a[j] > point[j] for j in fixed) for a in minimal):
                    continue
                # every one-step widening must leave D
                if all(any(all(a[i] <= point[i] for i in fixed if i != j) for a in minimal)
                       for j in fixed):
                    counts[d] += 1
    return tuple(counts)


def counts_to_ordinal(counts: Sequence[int]) -> Ordinal:
    return Ordinal(tuple((nat(d), c) for d, c in reversed(list(enumerate(counts))) if c))


def residual_order_type(minimal: Sequence[Monomial], k: int) -> Ordinal:
    """Rank of ``N^k`` minus the up-closure of the antichain ``minimal``."""
    minimal = [tuple(v) for v in minimal]
    if k < 1:
        raise DimensionMismatch("dimension must be at least 1")
    _dim(minimal, k)
    _check_antichain(minimal)
    return counts_to_ordinal(essential_counts(minimal, k))


@dataclass(frozen=True)
class MonomialState:
    k: int
    sequence: tuple[Monomial, ...] = ()
    minimal: tuple[Monomial, ...] = ()
    ranks: tuple[Ordinal, ...] = ()

    @property
    def rank(self) -> Ordinal:
        """Current rank; ``w^k`` before anything has been played."""
        return self.ranks[-1] if self.ranks else residual_order_type((), self.k)

    def to_json(self) -> dict:
        return {
            "dim": self.k,
            "sequence": [format_monomial(v) for v in self.sequence],
            "minimal": [format_monomial(v) for v in self.minimal],
            "ranks": [render(r) for r in self.ranks],
        }

    @classmethod
    def from_json(cls, doc) -> "MonomialState":
        """Rebuild by replaying the sequence; stored ranks must agree."""
        if isinstance(doc, str):
            doc = json.loads(doc)
        k = int(doc["dim"])
        ranks = rank_bad_sequence([parse_monomial(s) for s in doc["sequence"]], k)
        state = cls(k)
        for v in doc["sequence"]:
            state = extend_bad(state, parse_monomial(v))
        stored = [parse_cnf(s) for s in doc.get("ranks", [render(r) for r in ranks])]
        if stored != list(state.ranks):
            raise ValueError("stored ranks do not match the sequence")
        if "minimal" in doc and [parse_monomial(s) for s in doc["minimal"]] != list(state.minimal):
            raise ValueError("stored minimal basis does not match the sequence")
        return state


@dataclass(frozen=True)
class Rejected:
    index: int
    state: MonomialState


def extend_bad(state: MonomialState, v: Monomial) -> Union[MonomialState, Rejected]:
    v = tuple(v)
    if len(v) != state.k:
        raise DimensionMismatch(f"{format_monomial(v)} is not of dimension {state.k}")
    for i, u in enumerate(state.sequence):
        if product_leq(u, v):
            return Rejected(i, state)
    minimal = minimal_basis(state.minimal + (v,))
    return MonomialState(state.k, state.sequence + (v,), minimal,
                         state.ranks + (residual_order_type(minimal, state.k),))


def rank_bad_sequence(seq: Sequence[Monomial], k: int) -> list[Ordinal]:
    seq = [tuple(v) for v in seq]
    _dim(seq, k)
    for j, v in enumerate(seq):
        for i in range(j):
            if product_leq(seq[i], v):
                raise NotBad(i, j, seq)
    return [residual_order_type(minimal_basis(seq[:j + 1]), k) for j in range(len(seq))]


# -- text --------------------------------------------------------------------

_MONO = re.compile(r"\s*\(\s*(\d+(?:\s*,\s*\d+)*)\s*,?\s*\)\s*$")


def parse_monomial(text: str) -> Monomial:
    m = _MONO.match(text)
    if not m:
        raise ValueError(f"not an exponent tuple: {text!r}")
    return tuple(int(x) for x in m.group(1).split(","))


def format_monomial(v: Monomial) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def parse_sequence(text: str) -> list[Monomial]:
    """``"(1,1);(0,2)"`` -> ``[(1, 1), (0, 2)]``; empty text is the empty list."""
    return [parse_monomial(part) for part in text.split(";") if part.strip()]
