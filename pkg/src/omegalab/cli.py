"""Command-line front end.

``run(argv)`` returns ``(exit_code, text)``: 0 on success, 1 for a domain
failure reported as JSON, 2 for malformed input.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import itertools
import json
import sys

from .descent import StepsExhausted, canonical_walk
from .dickson import DimensionMismatch, NotBad, MonomialState, extend_bad, parse_sequence, Rejected
from .formula import (
    FormulaSyntaxError, InsufficientBound, NotDelta0, NotSigma, UnboundVariable,
    VariableNotFree, check_uniformization, classify, parse_formula, render_formula,
    sufficient_bound, uniformize,
)
from .hierarchies import Caps, CapExceeded, NotBelowOmegaOmega, ackermann, ackermann_traced, hardy, validate_trace
from .ordinal import CNFSyntaxError, NormalFormError, add, compare, mul, parse_cnf, render

__all__ = ["run", "main"]


class _Usage(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _Usage(f"{self.format_usage()}{self.prog}: error: {message}")


def _steps(text: str) -> list[int]:
    try:
        steps = [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of naturals: {text!r}")
    if any(s < 0 for s in steps):
        raise argparse.ArgumentTypeError("steps must be natural numbers")
    return steps


def _natural(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a natural number: {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"not a natural number: {text!r}")
    return v


def _build() -> argparse.ArgumentParser:
    p = _Parser(prog="omegalab", description="Ordinals below epsilon_0 and friends.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    o = sub.add_parser("ord", help="compare, add or multiply CNF ordinals")
    o.add_argument("op", choices=["cmp", "add", "mul"])
    o.add_argument("a")
    o.add_argument("b")

    w = sub.add_parser("walk", help="canonical descent from START to zero")
    w.add_argument("start")
    w.add_argument("--steps", type=_steps, default=[])
    w.add_argument("--cycle", action="store_true", help="repeat the step list forever")
    w.add_argument("--bound", default=None)
    w.add_argument("--json", action="store_true")

    a = sub.add_parser("ack", help="Ackermann value, call tree and its validation")
    a.add_argument("m", type=_natural)
    a.add_argument("n", type=_natural)
    a.add_argument("--trace", action="store_true")
    a.add_argument("--validate", action="store_true")
    a.add_argument("--cap-m", type=_natural, default=Caps.ack_m)
    a.add_argument("--cap-n", type=_natural, default=Caps.ack_n)
    a.add_argument("--cap-nodes", type=_natural, default=Caps.trace_nodes)

    h = sub.add_parser("hardy", help="Hardy function H_alpha(n), alpha below w^w")
    h.add_argument("alpha")
    h.add_argument("n", type=_natural)

    d = sub.add_parser("dickson", help="rank a bad sequence in N^k")
    d.add_argument("action", choices=["rank"])
    d.add_argument("sequence")
    d.add_argument("--dim", type=_natural, required=True)

    u = sub.add_parser("uniformize", help="check or print the uniformized formula")
    u.add_argument("--theta", help="Delta0 matrix in x, y")
    u.add_argument("--phi", help="Sigma formula to transform")
    u.add_argument("--var", default="x")
    u.add_argument("--X", type=_natural, default=10)
    u.add_argument("--N", type=_natural, default=None)
    return p


def _dump(doc) -> str:
    return json.dumps(doc)


def _failure(kind: str, **fields) -> tuple[int, str]:
    return 1, _dump({"error": kind, **fields})


def _ord(args) -> tuple[int, str]:
    a, b = parse_cnf(args.a), parse_cnf(args.b)
    if args.op == "cmp":
        return 0, compare(a, b)
    return 0, render(add(a, b) if args.op == "add" else mul(a, b))


def _walk(args) -> tuple[int, str]:
    start = parse_cnf(args.start)
    bound = parse_cnf(args.bound) if args.bound is not None else None
    steps = itertools.cycle(args.steps) if args.cycle and args.steps else args.steps
    try:
        trace = canonical_walk(start, steps, bound)
    except StepsExhausted as exc:
        return _failure("StepsExhausted", trace=exc.trace.to_json())
    code = 0 if trace.valid else 1
    if args.json:
        return code, trace.dumps()
    text = " > ".join(render(e) for e in trace.entries)
    if not trace.valid:
        text += f"\nviolation at {trace.violation_at}"
    return code, text


def _ack(args) -> tuple[int, str]:
    caps = Caps(ack_m=args.cap_m, ack_n=args.cap_n, trace_nodes=args.cap_nodes)
    try:
        if not (args.trace or args.validate):
            return 0, str(ackermann(args.m, args.n, caps))
        tree = ackermann_traced(args.m, args.n, caps)
    except CapExceeded as exc:
        return _failure("CapExceeded", detail=str(exc))
    doc = tree.to_json()
    if args.validate:
        verdict = validate_trace(tree)
        doc.update(verdict.to_json())
        return (0 if verdict.valid else 1), _dump(doc)
    return 0, _dump(doc)


def _hardy(args) -> tuple[int, str]:
    try:
        return 0, str(hardy(parse_cnf(args.alpha), args.n))
    except NotBelowOmegaOmega as exc:
        return _failure("NotBelowOmegaOmega", detail=str(exc))
    except CapExceeded as exc:
        return _failure("CapExceeded", detail=str(exc))


def _dickson(args) -> tuple[int, str]:
    seq = parse_sequence(args.sequence)
    state = MonomialState(args.dim)
    for v in seq:
        step = extend_bad(state, v)
        if isinstance(step, Rejected):
            return _failure("Rejected", index=step.index, element="(" + ",".join(map(str, v)) + ")",
                            state=step.state.to_json())
        state = step
    return 0, _dump(state.to_json())


def _uniformize(args) -> tuple[int, str]:
    if (args.theta is None) == (args.phi is None):
        raise _Usage("uniformize: give exactly one of --theta or --phi")
    if args.phi is not None:
        phi = parse_formula(args.phi)
        try:
            bar = uniformize(phi, args.var)
        except (NotSigma, VariableNotFree) as exc:
            return _failure(type(exc).__name__, detail=str(exc))
        return 0, _dump({"phi": render_formula(phi), "uniformized": render_formula(bar),
                         "level": str(classify(bar))})
    theta = parse_formula(args.theta)
    try:
        N = args.N if args.N is not None else sufficient_bound(theta, args.X)
        report = check_uniformization(theta, args.X, N)
    except (InsufficientBound, NotDelta0, UnboundVariable) as exc:
        return _failure(type(exc).__name__, detail=str(exc))
    return (0 if report.ok else 1), _dump(report.to_json())


_HANDLERS = {"ord": _ord, "walk": _walk, "ack": _ack, "hardy": _hardy,
             "dickson": _dickson, "uniformize": _uniformize}

_BAD_INPUT = (CNFSyntaxError, NormalFormError, FormulaSyntaxError, DimensionMismatch, NotBad, ValueError)


def run(argv) -> tuple[int, str]:
    parser = _build()
    out = io.StringIO()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(out):
            args = parser.parse_args(list(argv))
    except _Usage as exc:
        return 2, str(exc)
    except SystemExit as exc:          # --help
        return int(exc.code or 0), out.getvalue().rstrip("\n")
    try:
        return _HANDLERS[args.cmd](args)
    except _Usage as exc:
        return 2, str(exc)
    except NotBad as exc:
        return _failure("NotBad", pair=list(exc.pair), detail=str(exc))
    except _BAD_INPUT as exc:
        return 2, f"{parser.prog} {args.cmd}: error: {exc}"


def main() -> None:
    code, text = run(sys.argv[1:])
    if text:
        print(text, file=sys.stderr if code == 2 else sys.stdout)
    sys.exit(code)


if __name__ == "__main__":
    main()
