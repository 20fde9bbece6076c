# app/intset.py
"""Symbolic integer sets for the D and O conditions.

Only the shapes the alliance catalog needs: everything, a half-line in
either direction, or an explicit finite set.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Tuple

import numpy as np

from app.errors import ParseError

ALL = "all"
AT_LEAST = "at-least"
AT_MOST = "at-most"
FINITE = "finite"


@dataclass(frozen=True)
class IntSet:
    variant: str
    bound: int = 0
    values: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.variant not in (ALL, AT_LEAST, AT_MOST, FINITE):
            raise ParseError(f"unknown IntSet variant {self.variant!r}")
        if self.variant == FINITE and list(self.values) != sorted(set(self.values)):
            object.__setattr__(self, "values", tuple(sorted(set(self.values))))

    def __contains__(self, d: int) -> bool:
        return contains(self, d)

    def __str__(self) -> str:
        return format_intset(self)


def all_ints() -> IntSet:
    return IntSet(ALL)


def at_least(k: int) -> IntSet:
    return IntSet(AT_LEAST, bound=int(k))


def at_most(k: int) -> IntSet:
    return IntSet(AT_MOST, bound=int(k))


def finite(values: Iterable[int]) -> IntSet:
    return IntSet(FINITE, values=tuple(sorted({int(v) for v in values})))


_INT = r"[+-]?\d+"
_HALF_LINE = re.compile(rf"^(>=|<=|<|>)\s*({_INT})$")
_FINITE = re.compile(rf"^\{{\s*((?:{_INT}\s*(?:,\s*{_INT}\s*)*)?)\}}$")


def parse_intset(spec: str) -> IntSet:
    """'all' | 'Z' | '>=k' | '>k' | '<=k' | '<k' | '{a,b,...}'."""
    text = spec.strip()
    if text.lower() in ("all", "z"):
        return all_ints()
    m = _HALF_LINE.match(text)
    if m:
        op, k = m.group(1), int(m.group(2))
        if op == ">=":
            return at_least(k)
        if op == ">":
            return at_least(k + 1)
        if op == "<=":
            return at_most(k)
        return at_most(k - 1)
    m = _FINITE.match(text)
    if m:
        body = m.group(1).strip()
        return finite(int(tok) for tok in body.split(",")) if body else finite(())
    raise ParseError(f"cannot parse condition set {spec!r}; expected all, >=k, <=k, <k or {{a,b,...}}")


def format_intset(s: IntSet) -> str:
    if s.variant == ALL:
        return "all"
    if s.variant == AT_LEAST:
        return f">={s.bound}"
    if s.variant == AT_MOST:
        return f"<={s.bound}"
    return "{" + ",".join(str(v) for v in s.values) + "}"


def contains(s: IntSet, d: int) -> bool:
    if s.variant == ALL:
        return True
    if s.variant == AT_LEAST:
        return d >= s.bound
    if s.variant == AT_MOST:
        return d <= s.bound
    return d in s.values


def contains_array(s: IntSet, values: np.ndarray) -> np.ndarray:
    if s.variant == ALL:
        return np.ones(values.shape, dtype=bool)
    if s.variant == AT_LEAST:
        return values >= s.bound
    if s.variant == AT_MOST:
        return values <= s.bound
    return np.isin(values, s.values)


def negate(s: IntSet) -> IntSet:
    if s.variant == ALL:
        return s
    if s.variant == AT_LEAST:
        return at_most(-s.bound)
    if s.variant == AT_MOST:
        return at_least(-s.bound)
    return finite(-v for v in s.values)


def is_subset(a: IntSet, b: IntSet) -> bool:
    """a ⊆ b as sets of integers."""
    if b.variant == ALL:
        return True
    if a.variant == FINITE:
        return all(contains(b, v) for v in a.values)
    if a.variant == ALL or b.variant == FINITE:
        return False
    if a.variant != b.variant:
        return False
    return a.bound >= b.bound if a.variant == AT_LEAST else a.bound <= b.bound
