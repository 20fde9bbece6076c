# tests/test_direct.py
import sys
import os
from fractions import Fraction
import pytest

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from app.direct import (
    CLOSED,
    DOMINATING,
    EFFICIENT,
    FULL,
    INDEPENDENT,
    MINUS,
    PARTIAL,
    POSITIVE_INFLUENCE,
    POSITIVE_INFLUENCE_OUTSIDE,
    ROBUST,
    TOTAL,
    SignedFunction,
    ThresholdMap,
    check_alpha,
    check_monopoly,
    check_signed,
    check_threshold_set,
    is_dmaj_set,
    maj_step,
    parse_rational,
    partition_of,
    propagate,
)
from app.errors import BadParams, BadThreshold, ParseError, ZeroValueOutsideMinusMode
from app.graph import VertexSet, generate, parse_edge_list

C4 = generate("cycle", [4])
P3 = generate("path", [3])
K1 = parse_edge_list("1 0")


def test_check_signed():
    assert check_signed(generate("cycle", [3]), SignedFunction((1, 1, 1)), 1, CLOSED)
    assert not check_signed(P3, SignedFunction((-1, 1, -1)), 1, CLOSED)
    assert check_signed(P3, SignedFunction((0, 1, 0)), 1, MINUS)
    assert check_signed(K1, SignedFunction((1,)), 1, EFFICIENT)
    # open neighborhoods: the middle vertex sees -1 + -1
    assert not check_signed(P3, SignedFunction((1, 1, 1)), 3, CLOSED)
    assert not check_signed(P3, SignedFunction((-1, 1, -1)), 1, TOTAL)


def test_zero_only_in_minus_mode():
    with pytest.raises(ZeroValueOutsideMinusMode):
        check_signed(P3, SignedFunction((0, 1, 0)), 1, CLOSED)
    with pytest.raises(BadParams):
        SignedFunction((2, 1, 0))


def test_signed_function_forms():
    f = SignedFunction.parse("+1,-1,0")
    assert f.values == (1, -1, 0)
    assert str(f) == "+1,-1,0"
    assert f.weight == 0
    g = SignedFunction.from_sets(VertexSet.of(3, [1]), VertexSet.of(3, [2]))
    assert g.values == (-1, 1, 0)


def test_partition_of():
    s, n, m = partition_of(P3, SignedFunction((0, 1, 0)))
    assert (s.members(), n.members(), m.members()) == ((1,), (0, 2), ())
    s, n, m = partition_of(P3, SignedFunction((1, 1, 1)))
    assert s == VertexSet.full(3) and not len(n) and not len(m)
    s, n, m = partition_of(P3, SignedFunction((-1, 1, -1)))
    assert (s.members(), n.members(), m.members()) == ((1,), (), (0, 2))


def test_check_monopoly():
    x = VertexSet.of(4, [0, 2])
    assert check_monopoly(C4, x, PARTIAL)
    assert not check_monopoly(C4, x, FULL)
    assert check_monopoly(C4, VertexSet.full(4), FULL)
    with pytest.raises(BadParams):
        check_monopoly(C4, x, "most")


def test_check_monopoly_in_power():
    c6 = generate("cycle", [6])
    x = VertexSet.of(6, [0, 1, 2])
    assert not check_monopoly(c6, x, PARTIAL, 1)
    # in C6^2 vertex 3 sees only 2 of X among its 5 closed neighbors
    assert not check_monopoly(c6, x, PARTIAL, 2)
    assert check_monopoly(c6, VertexSet.of(6, [0, 1, 2, 3]), PARTIAL, 2)


def test_check_alpha():
    k4 = generate("complete", [4])
    x = VertexSet.of(4, [0, 1])
    assert check_alpha(k4, x, Fraction(2, 3), DOMINATING)
    assert not check_alpha(k4, x, Fraction(7, 10), DOMINATING)
    assert check_alpha(C4, VertexSet.of(4, [0, 1]), Fraction(1, 2), INDEPENDENT)
    assert check_alpha(C4, VertexSet.empty(4), Fraction(1, 3), INDEPENDENT)
    assert not check_alpha(C4, VertexSet.of(4, [0, 1]), Fraction(1, 2), INDEPENDENT, strict=True)
    with pytest.raises(BadParams):
        check_alpha(C4, x, Fraction(0), DOMINATING)


def test_q_domination_variants():
    star = generate("star", [2])
    x = VertexSet.of(3, [0])
    # leaves have their single neighbor in X: 1 > 1/2
    assert check_alpha(star, x, Fraction(1, 2), DOMINATING, strict=True)
    # total also asks the center, whose neighbors are all outside X
    assert not check_alpha(star, x, Fraction(1, 2), DOMINATING, strict=True, total=True)


def test_parse_rational():
    assert parse_rational("2/3") == Fraction(2, 3)
    assert parse_rational(" 1 ") == 1
    with pytest.raises(ParseError):
        parse_rational("x")
    with pytest.raises(ParseError):
        parse_rational("1/0")


def test_check_threshold_set():
    assert check_threshold_set(C4, VertexSet.of(4, [0, 1]), POSITIVE_INFLUENCE)
    assert not check_threshold_set(C4, VertexSet.of(4, [0, 2]), POSITIVE_INFLUENCE)
    assert check_threshold_set(C4, VertexSet.of(4, [0, 2]), POSITIVE_INFLUENCE_OUTSIDE)
    assert check_threshold_set(C4, VertexSet.empty(4), ROBUST)
    assert not check_threshold_set(C4, VertexSet.of(4, [0]), ROBUST)


def test_maj_step():
    star = generate("star", [3])
    assert maj_step(star, VertexSet.of(4, [0])) == VertexSet.full(4)
    assert maj_step(C4, VertexSet.full(4)) == VertexSet.full(4)
    assert maj_step(C4, VertexSet.of(4, [0])).members() == (0, 1, 3)
    assert maj_step(C4, VertexSet.of(4, [0]), strict=True).members() == (0,)


def test_propagate_majority():
    run = propagate(C4, VertexSet.of(4, [0]), 2)
    assert run.final == VertexSet.full(4)
    assert run.rounds_used == 2
    assert run.activation_round == (0, 1, 2, 1)
    assert run.to_dict() == {"final": [0, 1, 2, 3], "rounds_used": 2, "activation_round": [0, 1, 2, 1]}


def test_propagate_thresholds_blocked():
    t = ThresholdMap.of(P3, {0: 1, 1: 2, 2: 1})
    run = propagate(P3, VertexSet.of(3, [0]), None, t)
    assert run.final.members() == (0,)
    assert run.rounds_used == 0


def test_propagate_zero_rounds():
    seeds = VertexSet.of(4, [0])
    assert propagate(C4, seeds, 0).final == seeds
    with pytest.raises(BadParams):
        propagate(C4, seeds, -1)


def test_threshold_map():
    assert str(ThresholdMap.majority(C4)) == "0:1,1:1,2:1,3:1"
    assert ThresholdMap.parse(P3, "0:1 1:2, 2:1").t == (1, 2, 1)
    with pytest.raises(BadThreshold):
        ThresholdMap.of(P3, {0: 2, 1: 1, 2: 1})
    with pytest.raises(BadThreshold):
        ThresholdMap.of(K1, {0: 1})
    with pytest.raises(BadThreshold):
        ThresholdMap.of(P3, {0: 1, 1: 1})
    with pytest.raises(BadThreshold):
        ThresholdMap.parse(P3, "0:1 0:1 1:1 2:1")
    with pytest.raises(ParseError):
        ThresholdMap.parse(P3, "0=1")


def test_is_dmaj_set():
    assert is_dmaj_set(C4, VertexSet.of(4, [0]), 2)
    assert not is_dmaj_set(C4, VertexSet.of(4, [0]), 1)
    assert is_dmaj_set(C4, VertexSet.full(4), 1)
    with pytest.raises(BadParams):
        is_dmaj_set(C4, VertexSet.full(4), 0)
