import itertools
import json
import random

import pytest
from hypothesis import given, strategies as st

from conftest import formulas
from oracles import interp
from omegalab.formula import (
    Add, And, Eq, Exists, FormulaSyntaxError, Implies, InsufficientBound, Level, Lt, Mul, Not,
    NotDelta0,
    NotSigma, Num, Or, Succ, UnassignedVariable, UnboundVariable, UniformizationReport, Var,
    VariableNotFree, bounding_instance, check_uniformization, classify, eval_bounded, free_vars,
    induction_instance, levels, pair, pair_graph, parse_formula, parse_term, proj1, proj2,
    render_formula, substitute, sufficient_bound, uniformize,
)
from omegalab.generators import FormulaGen, delta0_corpus

x, y, z = Var("x"), Var("y"), Var("z")


def test_parse_examples():
    f = parse_formula("Ex (x = 0)")
    assert f == Exists("x", Eq(x, Num(0)))
    assert classify(f) == Level("Sigma", 1)
    assert classify(parse_formula("Ay Ex (y < x)")) == Level("Pi", 2)
    g = parse_formula("Ax<z (x < z)")
    assert classify(g) == Level("Delta0") and free_vars(g) == {"z"}


def test_precedence():
    f = parse_formula("~x = 0 & y = 1 | x < y -> y < x -> x = x")
    assert f == Implies(Or(And(Not(Eq(x, Num(0))), Eq(y, Num(1))), Lt(x, y)),
                        Implies(Lt(y, x), Eq(x, x)))
    assert parse_term("S(x) + y * 2 + 1") == Add(Add(Succ(x), Mul(y, Num(2))), Num(1))
    assert parse_formula("Ex x = 0 & y = 0") == And(Exists("x", Eq(x, Num(0))), Eq(y, Num(0)))


@pytest.mark.parametrize("text,pos", [("Ex", 2), ("x = ", 4), ("x ! y", 2), ("(x = 0", 6),
                                      ("x + y", 5), ("Ex<x (x = 0)", 5)])
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(FormulaSyntaxError) as info:
        parse_formula(text)
    assert info.value.pos == pos


def test_closed_request():
    assert parse_formula("Ax (x = x)", closed=True)
    with pytest.raises(UnboundVariable):
        parse_formula("Ax (x = y)", closed=True)
    assert parse_formula("x = y", free={"x", "y"})


def test_classify_examples():
    theta = parse_formula("x + x = y")
    assert classify(Exists("y", theta)) == Level("Sigma", 1)
    s2 = parse_formula("Ey Az (x + y < z | z = 0)")
    assert classify(s2) == Level("Sigma", 2)
    assert classify(Not(s2)) == Level("Pi", 2)
    assert classify(parse_formula("Ex<y Ez (x = z)")) == Level("Sigma", 1)
    # vacuous quantifiers do not count
    assert classify(parse_formula("Ax (y = 0)")) == Level("Delta0")
    # like quantifiers merge
    assert classify(parse_formula("Ex Ey Ez (x + y = z)")) == Level("Sigma", 1)
    assert classify(parse_formula("Ex (x = 0) & Ay (y = y + 0)")) == Level("Sigma", 2)
    assert classify(parse_formula("Ex (x = 0) -> Ay (y = y)")) == Level("Pi", 1)


@given(formulas())
def test_levels_are_consistent(f):
    s, p = levels(f)
    assert abs(s - p) <= 1
    assert levels(Not(f)) == (p, s)


def test_pair_examples():
    assert pair(0, 0) == 0
    assert (proj1(pair(3, 5)), proj2(pair(3, 5))) == (3, 5)
    codes = {pair(a, b) for a in range(21) for b in range(21)}
    assert len(codes) == 21 * 21
    assert all(0 <= c for c in codes)
    # the triangle a + b <= 20 fills 0..230 exactly
    assert {pair(a, b) for a in range(21) for b in range(21) if a + b <= 20} == set(range(231))


def test_pair_roundtrip_up_to_1000():
    for a in range(0, 1001, 7):
        for b in range(0, 1001, 3):
            c = pair(a, b)
            assert proj1(c) == a and proj2(c) == b and c >= a and c >= b
    for c in range(5000):
        assert pair(proj1(c), proj2(c)) == c


def test_pair_graph_defines_pairing():
    g = pair_graph(Var("a"), Var("b"), Var("c"))
    assert classify(g) == Level("Delta0")
    for a, b, c in itertools.product(range(8), range(8), range(40)):
        assert eval_bounded(g, {"a": a, "b": b, "c": c}, 1) == (pair(a, b) == c)


def test_eval_examples():
    f = parse_formula("Ey (y = x + 1)")
    assert eval_bounded(f, {"x": 3}, 5)
    assert not eval_bounded(f, {"x": 4}, 5)
    with pytest.raises(UnassignedVariable):
        eval_bounded(f, {}, 5)


@given(formulas(), st.integers(1, 5), st.lists(st.integers(0, 4), min_size=5, max_size=5))
def test_eval_matches_recursive_interpreter(f, N, values):
    env = dict(zip(["x", "y", "z", "u", "v"], values))
    assert eval_bounded(f, env, N) == interp(f, env, N)


def test_eval_sigma1_monotone_in_n():
    rng = random.Random(3)
    gen = FormulaGen(variables=("u",), bound_vars=("v", "w"), depth=3, delta0=True)
    checked = 0
    while checked < 150:
        body = gen.draw(rng)
        if free_vars(body) != {"u"}:
            continue
        sentence = Exists("u", body)
        values = [eval_bounded(sentence, {}, N) for N in range(1, 12)]
        assert values == sorted(values)
        checked += 1


def test_induction_instances_hold():
    rng = random.Random(5)
    gen = FormulaGen(variables=("x", "p"), bound_vars=("u",), depth=2, delta0=True)
    n = 0
    while n < 60:
        phi = gen.draw(rng)
        if "x" not in free_vars(phi):
            continue
        # parameters are instantiated, x is the induction variable
        inst = induction_instance(phi, "x", close=False)
        for N in (4, 7):
            for pval in range(4):
                # only the quantifier over x is truncated; a true Delta0 instance
                # holds in every initial segment
                assert eval_bounded(inst, {"p": pval}, N) == interp(inst, {"p": pval}, N)
                assert eval_bounded(inst, {"p": pval}, N)
        n += 1


def test_bounding_instance_shape():
    f = bounding_instance(parse_formula("i < j"), "i", "j")
    assert render_formula(f) == "Ai Ej (i < j) -> Am En Ai<m Ej<n (i < j)"
    assert eval_bounded(f, {}, 6)


@given(formulas())
def test_render_parse_roundtrip(f):
    assert parse_formula(render_formula(f)) == f


def test_substitute_avoids_capture():
    f = parse_formula("Ey (x < y)")
    g = substitute(f, {"x": y})
    assert free_vars(g) == {"y"}
    assert render_formula(g) != "Ey (y < y)"
    assert eval_bounded(g, {"y": 2}, 5) and not eval_bounded(g, {"y": 4}, 5)


def test_uniformize_shape_and_level():
    phi = parse_formula("Ey (x + x = y)")
    bar = uniformize(phi, "x")
    assert classify(bar) == Level("Sigma", 1)
    assert free_vars(bar) == {"x"}
    for N in (20, 40):
        selected = [a for a in range(N) if eval_bounded(bar, {"x": a}, N)]
        assert selected == [0]
    s2 = parse_formula("Ey Az (x + y < z | z < 5)")
    assert classify(uniformize(s2, "x")) == Level("Sigma", 2)


def test_uniformize_selects_least_code():
    phi = parse_formula("Ey (x = y + 3 & 1 < y)")
    bar = uniformize(phi, "x")
    # witnesses (x, x - 3) for x >= 5; the least code is pair(5, 2)
    assert [a for a in range(12) if eval_bounded(bar, {"x": a}, 40)] == [5]


def test_uniformize_errors():
    with pytest.raises(VariableNotFree):
        uniformize(parse_formula("Ey (y = 0)"), "x")
    with pytest.raises(NotSigma):
        uniformize(parse_formula("Ay (x < y)"), "x")
    with pytest.raises(NotSigma):
        uniformize(parse_formula("x = 0"), "x")


def test_uniformize_multiple_existentials():
    phi = parse_formula("Ey Ez (x = y + z + 1)")
    bar = uniformize(phi, "x")
    assert classify(bar) == Level("Sigma", 1)
    # x = 1 with y = z = 0 has the least nested code pair(1, pair(0, 0)) = 1
    assert [a for a in range(6) if eval_bounded(bar, {"x": a}, 8)] == [1]


def test_uniformize_avoids_name_clashes():
    phi = parse_formula("Ez (x < z & Ew<z (w = x))")
    bar = uniformize(phi, "x")
    assert free_vars(bar) == {"x"}
    assert [a for a in range(5) if eval_bounded(bar, {"x": a}, 12)] == [0]


@pytest.mark.parametrize("text,count", [("x + x = y", 1), ("y = y", 1), ("x < y & y < x", 0)])
def test_check_examples(text, count):
    r = check_uniformization(parse_formula(text), 10, 300)
    assert (r.item1, r.item2, r.item3) == (True, True, True)
    assert len(r.selected) == count


def test_check_report_json():
    r = check_uniformization("x + x = y", 10, 300)
    doc = json.loads(json.dumps(r.to_json()))
    assert {"item1", "item2", "item3", "X", "N", "theta"} <= set(doc)
    assert UniformizationReport.from_json(doc) == r


def test_check_refuses_small_models():
    with pytest.raises(InsufficientBound):
        check_uniformization("y = x + 20", 10, 30)
    assert check_uniformization("y = x + 20", 10, 231).ok


def test_check_requires_delta0():
    with pytest.raises(NotDelta0):
        check_uniformization("Ez (x + z = y)", 5, 50)
    with pytest.raises(UnboundVariable):
        check_uniformization("x + z = y", 5, 50)


def test_table_and_formula_routes_agree():
    for theta in delta0_corpus(25, seed=11, depth=2):
        try:
            a = check_uniformization(theta, 3, 14, method="table")
        except InsufficientBound:
            continue
        b = check_uniformization(theta, 3, 14, method="formula")
        assert a == b


def test_sufficient_bound_is_sufficient():
    for theta in delta0_corpus(40, seed=2):
        N = sufficient_bound(theta, 10)
        assert check_uniformization(theta, 10, N).ok
