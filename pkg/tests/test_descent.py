import itertools
import json

import pytest
from hypothesis import given, strategies as st

from conftest import below_omega_omega, ordinals
from oracles import from_vec, to_vec, vec_fundamental, vec_hardy
from omegalab.descent import (
    DescentTrace, NoWitness, NotALimit, StepsExhausted, canonical_walk, check_strict_descent,
    default_bound, fundamental, least_m, least_m_cap,
)
from omegalab.hierarchies import hardy
from omegalab.ordinal import (
    OMEGA, OMEGA_OMEGA, ZERO, OrdinalKind, add, compare, kind, mul, nat, omega_pow, omega_tower,
    parse_cnf,
)

P = parse_cnf


def test_strict_descent_examples():
    assert check_strict_descent([P(s) for s in ["w*2", "w + 3", "w", "5", "0"]], OMEGA_OMEGA).valid
    assert check_strict_descent([OMEGA, OMEGA]).violation_at == 1
    assert check_strict_descent([OMEGA_OMEGA], OMEGA_OMEGA).violation_at == 0
    assert check_strict_descent([]).valid


def test_least_m_examples():
    f = [P("w*3 + 1"), nat(5)]
    assert least_m(f, ZERO, 1) == 1
    assert least_m(f, nat(6), 0) == 0
    with pytest.raises(NoWitness):
        least_m([P("w^2")], ZERO, 1)


def _brute_least_m(f, alpha, n, limit=60):
    for m in range(limit):
        top = add(alpha, mul(omega_pow(n), m))
        if any(compare(a, top) == "LT" for a in f):
            return m
    return None


@given(st.lists(below_omega_omega(3, 4), min_size=1, max_size=4), below_omega_omega(3, 4),
       st.integers(0, 3))
def test_least_m_matches_unbounded_search(f, alpha, n):
    expected = _brute_least_m(f, alpha, n)
    assert expected is None or expected <= least_m_cap(f, n)
    if expected is None:
        with pytest.raises(NoWitness):
            least_m(f, alpha, n)
    else:
        assert least_m(f, alpha, n) == expected


def test_fundamental_examples():
    for n in range(6):
        assert fundamental(OMEGA, n) == nat(n)
    assert fundamental(OMEGA_OMEGA, 3) == P("w^3")
    assert fundamental(P("w^2*2"), 4) == P("w^2 + w*4")
    with pytest.raises(NotALimit):
        fundamental(P("w + 1"), 2)
    with pytest.raises(NotALimit):
        fundamental(ZERO, 2)


@given(below_omega_omega(4, 4), st.integers(0, 8))
def test_fundamental_matches_vector_rule(a, n):
    if kind(a) is OrdinalKind.LIMIT:
        assert fundamental(a, n) == from_vec(vec_fundamental(to_vec(a), n))


@given(ordinals(depth=3, max_coef=3), st.integers(0, 6))
def test_fundamental_below_and_increasing(a, n):
    if kind(a) is OrdinalKind.LIMIT:
        assert compare(fundamental(a, n), a) == "LT"
        assert compare(fundamental(a, n), fundamental(a, n + 1)) == "LT"


def test_walk_examples():
    assert [str(e) for e in canonical_walk(nat(3)).entries] == ["3", "2", "1", "0"]
    t = canonical_walk(OMEGA, [2])
    assert t.entries == (OMEGA, nat(2), nat(1), ZERO)
    t = canonical_walk(P("w^2"), itertools.repeat(2))
    assert [str(e) for e in t.entries] == ["w^2", "w*2", "w + 2", "w + 1", "w", "2", "1", "0"]
    assert t.valid and len(t) == 8


def test_walk_length_cross_checks_hardy():
    # H_a(n) - n counts successor moves when the step grows with each move;
    # a constant step never walks further
    for text in ["w", "w*2", "w^2", "w^2 + w*3 + 1"]:
        a = P(text)
        t = canonical_walk(a, itertools.repeat(2))
        assert t.valid
        assert len(t) - 1 <= hardy(a, 2)


def test_steps_exhausted_keeps_partial_trace():
    with pytest.raises(StepsExhausted) as info:
        canonical_walk(P("w^2"), [2])
    assert [str(e) for e in info.value.trace.entries] == ["w^2", "w*2"]
    assert info.value.trace.valid


def test_walk_start_outside_bound():
    t = canonical_walk(OMEGA_OMEGA, [], bound=OMEGA_OMEGA)
    assert t.violation_at == 0


def test_default_bound():
    assert default_bound(P("w^5")) == OMEGA_OMEGA
    assert default_bound(OMEGA_OMEGA) == omega_tower(3)
    t = canonical_walk(P("w^(w^2)"), itertools.repeat(1))
    assert t.valid and t.bound == omega_tower(3)


@given(below_omega_omega(3, 3), st.integers(0, 3))
def test_walks_terminate_valid(a, n):
    t = canonical_walk(a, itertools.repeat(n))
    assert t.valid and t.entries[-1] == ZERO


@given(st.lists(below_omega_omega(3, 3), max_size=6))
def test_trace_json_roundtrip(seq):
    t = check_strict_descent(seq)
    doc = json.loads(t.dumps())
    assert set(doc) == {"bound", "entries", "status"}
    assert DescentTrace.from_json(doc) == t


def test_trace_json_status_is_rechecked():
    doc = check_strict_descent([OMEGA, OMEGA]).to_json()
    doc["status"] = "valid"
    with pytest.raises(ValueError):
        DescentTrace.from_json(doc)


def test_hardy_oracle_agrees_on_small_values():
    for text in ["w", "w*2", "w^2", "w^2 + w + 3", "w^3"]:
        for n in range(3):
            assert hardy(P(text), n) == vec_hardy(to_vec(P(text)), n)
