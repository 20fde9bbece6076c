# tests/test_intset.py
import sys
import os
import numpy as np
import pytest

sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from app.errors import ParseError
from app.intset import all_ints, at_least, at_most, contains, contains_array, finite, format_intset, is_subset, negate, parse_intset


@pytest.mark.parametrize(
    "text, expected",
    [
        ("all", all_ints()),
        ("Z", all_ints()),
        (">=1", at_least(1)),
        (">1", at_least(2)),
        ("<=-1", at_most(-1)),
        ("<0", at_most(-1)),
        ("{0}", finite([0])),
        ("{2, 0, 2}", finite([0, 2])),
        ("{}", finite([])),
    ],
)
def test_parse_intset(text, expected):
    assert parse_intset(text) == expected


@pytest.mark.parametrize("text", ["", "=>3", "{a}", "between 1 and 2"])
def test_parse_intset_rejects(text):
    with pytest.raises(ParseError):
        parse_intset(text)


def test_contains():
    assert contains(at_least(-2), -2)
    assert not contains(at_least(-2), -3)
    assert contains(all_ints(), 7)
    assert not contains(finite([0]), 1)
    assert contains(at_most(-1), -1)
    assert 3 in finite([1, 3])


def test_contains_array():
    d = np.array([-2, -1, 0, 1, 2])
    assert contains_array(at_least(0), d).tolist() == [False, False, True, True, True]
    assert contains_array(at_most(-1), d).tolist() == [True, True, False, False, False]
    assert contains_array(finite([-2, 2]), d).tolist() == [True, False, False, False, True]
    assert contains_array(finite([]), d).tolist() == [False] * 5
    assert contains_array(all_ints(), d).all()


def test_negate():
    assert negate(at_least(3)) == at_most(-3)
    assert negate(at_most(-1)) == at_least(1)
    assert negate(all_ints()) == all_ints()
    assert negate(finite([2])) == finite([-2])


def test_format_intset():
    assert format_intset(at_least(0)) == ">=0"
    assert format_intset(at_most(-1)) == "<=-1"
    assert format_intset(finite([2, -1])) == "{-1,2}"
    assert str(all_ints()) == "all"


def test_is_subset():
    assert is_subset(finite([1, 2]), at_least(0))
    assert not is_subset(finite([-1, 2]), at_least(0))
    assert is_subset(at_least(2), at_least(0))
    assert not is_subset(at_least(0), at_least(2))
    assert is_subset(at_most(-3), at_most(-1))
    assert not is_subset(all_ints(), at_least(0))
    assert not is_subset(at_least(0), finite([0, 1]))
    assert is_subset(at_most(5), all_ints())
