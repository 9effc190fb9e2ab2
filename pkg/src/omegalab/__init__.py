"""Executable ordinal arithmetic below epsilon_0, descent machinery,
subrecursive hierarchies, Dickson ranks and a uniformization lab."""

from .ordinal import (
    OMEGA, OMEGA_OMEGA, ONE, ZERO, CNFSyntaxError, NormalFormError, Ordinal, OrdinalKind,
    add, below_omega_omega, compare, enumerate_below, kind, mul, nat, norm, omega_pow,
    omega_tower, parse_cnf, predecessor, render,
)
from .descent import DescentTrace, NoWitness, StepsExhausted, canonical_walk, check_strict_descent, fundamental, least_m
from .hierarchies import Caps, CallTree, CapExceeded, ackermann, ackermann_traced, fast_growing, hardy, validate_trace
from .dickson import MonomialState, Rejected, extend_bad, minimal_basis, rank_bad_sequence, residual_order_type
from .formula import (
    Level, check_uniformization, classify, eval_bounded, pair, parse_formula, proj1, proj2,
    render_formula, uniformize,
)
