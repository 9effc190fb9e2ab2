"""Ackermann with an ordinal termination witness, plus the Hardy and
fast-growing hierarchies.

Every Ackermann call ``A(m, n)`` is labelled with the measure ``w*m + n``.
Both recursive shapes strictly lower it: ``(m+1, n+1) -> (m+1, n)`` drops the
finite part, ``-> (m, A(m+1, n))`` drops the coefficient of ``w``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .descent import fundamental
from .ordinal import (
    OMEGA, Ordinal, OrdinalKind, _cmp, add, below_omega_omega, kind, mul, nat,
    parse_cnf, predecessor, render,
)

__all__ = [
    "Caps", "CapExceeded", "NotBelowOmegaOmega", "CallTree", "Verdict",
    "ackermann", "ackermann_traced", "validate_trace", "measure", "hardy",
    "fast_growing", "DEFAULT_CAPS",
]


class CapExceeded(ValueError):
    """Input lies outside the configured desk-scale range."""


class NotBelowOmegaOmega(ValueError):
    pass


@dataclass(frozen=True)
class Caps:
    """Desk-scale guards. ``None`` disables a limit."""

    ack_m: int = 3              # m <= ack_m requires n <= ack_n ...
    ack_n: int = 12
    ack_free_m: int = 2         # ... unless m <= ack_free_m
    trace_nodes: int = 2_000_000
    hardy_steps: int = 10_000_000
    fgh_k: int = 2              # any n for k <= fgh_k
    fgh_top_k: int = 3          # k == fgh_top_k needs n <= fgh_top_n
    fgh_top_n: int = 2

    def check_ackermann(self, m: int, n: int) -> None:
        if m < 0 or n < 0:
            raise ValueError("Ackermann arguments are natural numbers")
        if m <= self.ack_free_m:
            return
        if m > self.ack_m or n > self.ack_n:
            raise CapExceeded(
                f"A({m}, {n}) outside desk range (m <= {self.ack_free_m}, "
                f"or m <= {self.ack_m} with n <= {self.ack_n})")

    def check_fast_growing(self, k: int, n: int) -> None:
        if k < 0 or n < 0:
            raise ValueError("fast-growing arguments are natural numbers")
        if k <= self.fgh_k or (k == self.fgh_top_k and n <= self.fgh_top_n):
            return
        raise CapExceeded(f"F_{k}({n}) outside desk range")


DEFAULT_CAPS = Caps()


# -- Ackermann ---------------------------------------------------------------

def ackermann(m: int, n: int, caps: Caps = DEFAULT_CAPS) -> int:
    caps.check_ackermann(m, n)
    memo: dict[tuple[int, int], int] = {}
    # explicit stack; memo keeps A(3, 12) around 10^5 evaluations
    stack = [(m, n)]
    while stack:
        a, b = stack[-1]
        if (a, b) in memo:
            stack.pop()
            continue
        if a == 0:
            memo[a, b] = b + 1
            stack.pop()
        elif b == 0:
            if (a - 1, 1) in memo:
                memo[a, b] = memo[a - 1, 1]
                stack.pop()
            else:
                stack.append((a - 1, 1))
        elif (a, b - 1) not in memo:
            stack.append((a, b - 1))
        else:
            inner = memo[a, b - 1]
            if (a - 1, inner) in memo:
                memo[a, b] = memo[a - 1, inner]
                stack.pop()
            else:
                stack.append((a - 1, inner))
    return memo[m, n]


def measure(m: int, n: int) -> Ordinal:
    return add(mul(OMEGA, m), n)


@dataclass(frozen=True)
class CallTree:
    m: int
    n: int
    value: int
    measure: Ordinal
    children: tuple["CallTree", ...] = ()

    def size(self) -> int:
        count, stack = 0, [self]
        while stack:
            t = stack.pop()
            count += 1
            stack.extend(t.children)
        return count

    def edges(self):
        """Yield ``(parent, child)`` pairs in preorder."""
        stack = [self]
        while stack:
            t = stack.pop()
            for c in t.children:
                yield t, c
            stack.extend(reversed(t.children))

    def to_json(self) -> dict:
        # iterative so deep trees do not hit the recursion limit
        root: dict = {}
        stack = [(self, root)]
        while stack:
            t, doc = stack.pop()
            doc.update(m=t.m, n=t.n, value=t.value, measure=render(t.measure), children=[])
            for c in t.children:
                sub: dict = {}
                doc["children"].append(sub)
                stack.append((c, sub))
        return root

    @classmethod
    def from_json(cls, doc) -> "CallTree":
        if isinstance(doc, str):
            doc = json.loads(doc)
        # post-order rebuild without recursion
        order, stack = [], [doc]
        while stack:
            d = stack.pop()
            order.append(d)
            stack.extend(d.get("children", []))
        built: dict[int, CallTree] = {}
        for d in reversed(order):
            kids = tuple(built[id(c)] for c in d.get("children", []))
            built[id(d)] = cls(int(d["m"]), int(d["n"]), int(d["value"]),
                               parse_cnf(d["measure"]), kids)
        return built[id(doc)]


def ackermann_traced(m: int, n: int, caps: Caps = DEFAULT_CAPS) -> CallTree:
    """Full call tree of ``A(m, n)``, without memoisation."""
    caps.check_ackermann(m, n)
    nodes = 0
    # frames: [m, n, children built so far]
    stack: list[list] = [[m, n, []]]
    result: Optional[CallTree] = None
    while stack:
        frame = stack[-1]
        a, b, kids = frame
        if result is not None:
            kids.append(result)
            result = None
        if a == 0:
            want = 0
        elif b == 0:
            want = 1
        else:
            want = 2
        if len(kids) < want:
            if a == 0:
                pass
            elif b == 0:
                stack.append([a - 1, 1, []])
                continue
            elif not kids:
                stack.append([a, b - 1, []])
                continue
            else:
                stack.append([a - 1, kids[0].value, []])
                continue
        nodes += 1
        if caps.trace_nodes is not None and nodes > caps.trace_nodes:
            raise CapExceeded(f"call tree of A({m}, {n}) exceeds {caps.trace_nodes} nodes")
        value = b + 1 if a == 0 else kids[-1].value
        result = CallTree(a, b, value, measure(a, b), tuple(kids))
        stack.pop()
    return result


@dataclass(frozen=True)
class Verdict:
    kind: str = "valid"          # valid | bad_edge | bad_value | bad_measure
    path: tuple[int, ...] = ()
    detail: str = ""

    @property
    def valid(self) -> bool:
        return self.kind == "valid"

    def to_json(self) -> dict:
        doc = {"valid": self.valid, "kind": self.kind}
        if not self.valid:
            doc["path"] = list(self.path)
            doc["detail"] = self.detail
        return doc


def validate_trace(t: CallTree) -> Verdict:
    """Check measures, strict edge descent and the recurrence, in preorder."""
    stack: list[tuple[CallTree, tuple[int, ...]]] = [(t, ())]
    while stack:
        node, path = stack.pop()
        if node.m < 0 or node.n < 0 or node.measure != measure(node.m, node.n):
            return Verdict("bad_measure", path,
                           f"measure {render(node.measure)} at ({node.m}, {node.n})")
        for i, c in enumerate(node.children):
            if _cmp(c.measure, node.measure) >= 0:
                return Verdict("bad_edge", path + (i,),
                               f"{render(c.measure)} does not descend from {render(node.measure)}")
        problem = _recurrence_problem(node)
        if problem:
            return Verdict("bad_value", path, problem)
        for i in reversed(range(len(node.children))):
            stack.append((node.children[i], path + (i,)))
    return Verdict()


def _recurrence_problem(node: CallTree) -> str:
    m, n, kids = node.m, node.n, node.children
    if m == 0:
        expected_args: list[tuple[int, int]] = []
    elif n == 0:
        expected_args = [(m - 1, 1)]
    else:
        expected_args = [(m, n - 1)]
        if kids:
            expected_args.append((m - 1, kids[0].value))
    got = [(c.m, c.n) for c in kids]
    if got != expected_args:
        return f"children {got} do not match recurrence {expected_args}"
    expected = n + 1 if m == 0 else kids[-1].value
    if node.value != expected:
        return f"value {node.value} != {expected}"
    return ""


# -- Hardy and fast-growing --------------------------------------------------

def hardy(a: Ordinal, n: int, caps: Caps = DEFAULT_CAPS) -> int:
    """H_0(n) = n, H_{a+1}(n) = H_a(n+1), H_l(n) = H_{l[n]}(n)."""
    if not below_omega_omega(a):
        raise NotBelowOmegaOmega(f"{render(a)} is not below w^w")
    steps = 0
    while a.terms:
        steps += 1
        if caps.hardy_steps is not None and steps > caps.hardy_steps:
            raise CapExceeded(f"Hardy evaluation exceeded {caps.hardy_steps} steps")
        if kind(a) is OrdinalKind.SUCCESSOR:
            # peel the whole finite tail at once
            k = a.terms[-1][1]
            a = Ordinal(a.terms[:-1])
            n += k
        else:
            a = fundamental(a, n)
    return n


def _fgh_naive(k: int, n: int) -> int:
    if k == 0:
        return n + 1
    x = n
    for _ in range(n + 1):
        x = _fgh_naive(k - 1, x)
    return x


def fast_growing(k: int, n: int, caps: Caps = DEFAULT_CAPS) -> int:
    """F_0(n) = n + 1, F_{k+1}(n) = F_k iterated n + 1 times on n.

    Levels 1 and 2 use their closed forms 2n + 1 and (n + 1) * 2^(n+1) - 1;
    higher levels iterate.
    """
    caps.check_fast_growing(k, n)
    if k == 0:
        return n + 1
    if k == 1:
        return 2 * n + 1
    if k == 2:
        return ((n + 1) << (n + 1)) - 1
    x = n
    for _ in range(n + 1):
        x = fast_growing(k - 1, x, Caps(fgh_k=k - 1))
    return x
