# app/direct.py
"""Every named parameter checked straight from its own definition.

Nothing here goes through the alliance framework, so the harness can
compare the two sides instead of assuming they agree. Fractions are
compared cross-multiplied; no predicate touches a float.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Tuple

from app.errors import BadParams, BadThreshold, ParseError, VertexOutOfRange, ZeroValueOutsideMinusMode
from app.graph import Graph, VertexSet, graph_power

LOG = logging.getLogger("app.direct")

CLOSED = "closed"
TOTAL = "total"
MINUS = "minus"
MINUS_K = "minus-k"
EFFICIENT = "efficient"
EFFICIENT_K = "efficient-k"
SIGNED_VARIANTS = (CLOSED, TOTAL, MINUS, MINUS_K, EFFICIENT, EFFICIENT_K)
ZERO_ALLOWED = (MINUS, MINUS_K)

PARTIAL = "partial"
FULL = "full"

DOMINATING = "dominating"
INDEPENDENT = "independent"

POSITIVE_INFLUENCE = "positive-influence"
POSITIVE_INFLUENCE_OUTSIDE = "positive-influence-outside"
ROBUST = "robust"
THRESHOLD_MODES = (POSITIVE_INFLUENCE, POSITIVE_INFLUENCE_OUTSIDE, ROBUST)

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class SignedFunction:
    values: Tuple[int, ...]

    def __post_init__(self) -> None:
        bad = [x for x in self.values if x not in (-1, 0, 1)]
        if bad:
            raise BadParams(f"signed function values must be -1, 0 or +1, got {bad}")

    @classmethod
    def parse(cls, text: str) -> "SignedFunction":
        """'+1,-1,0,...' indexed by vertex."""
        tokens = [tok.strip() for tok in text.split(",") if tok.strip()]
        try:
            return cls(tuple(int(tok) for tok in tokens))
        except ValueError:
            raise ParseError(f"signed function must be comma-separated +1/-1/0, got {text!r}")

    @classmethod
    def from_sets(cls, plus: VertexSet, zero: Optional[VertexSet] = None) -> "SignedFunction":
        zero_mask = zero.mask if zero is not None else 0
        if plus.mask & zero_mask:
            raise BadParams("a vertex cannot be both +1 and 0")
        return cls(tuple(1 if v in plus else 0 if zero_mask >> v & 1 else -1 for v in range(plus.n)))

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def weight(self) -> int:
        return sum(self.values)

    def total(self, vertices: Iterable[int]) -> int:
        return sum(self.values[v] for v in vertices)

    def __str__(self) -> str:
        return ",".join(f"{x:+d}" if x else "0" for x in self.values)


def check_signed(g: Graph, f: SignedFunction, k: int, variant: str) -> bool:
    if variant not in SIGNED_VARIANTS:
        raise BadParams(f"unknown signed variant {variant!r}; known: {', '.join(SIGNED_VARIANTS)}")
    if f.n != g.n:
        raise VertexOutOfRange(f"signed function covers {f.n} vertices, graph has {g.n}")
    if variant not in ZERO_ALLOWED and 0 in f.values:
        raise ZeroValueOutsideMinusMode(f"value 0 is only allowed in minus mode, not {variant!r}")
    for v in range(g.n):
        open_sum = f.total(g.adjacency[v])
        closed_sum = open_sum + f.values[v]
        if variant == CLOSED:
            ok = closed_sum >= k
        elif variant == TOTAL:
            ok = open_sum >= k
        elif variant == MINUS:
            ok = closed_sum >= 1
        elif variant == MINUS_K:
            ok = closed_sum >= k
        elif variant == EFFICIENT:
            ok = closed_sum == 1
        else:
            ok = closed_sum == k
        if not ok:
            return False
    return True


def partition_of(g: Graph, f: SignedFunction) -> Tuple[VertexSet, VertexSet, VertexSet]:
    """(f^-1(+1), f^-1(0), f^-1(-1))."""
    if f.n != g.n:
        raise VertexOutOfRange(f"signed function covers {f.n} vertices, graph has {g.n}")
    by_value: Dict[int, List[int]] = {1: [], 0: [], -1: []}
    for v, x in enumerate(f.values):
        by_value[x].append(v)
    return tuple(VertexSet.of(g.n, by_value[x]) for x in (1, 0, -1))


def check_monopoly(g: Graph, x: VertexSet, scope: str, r: int = 1) -> bool:
    """|N[v] & X| >= |N[v]| / 2 in the r-th power, for v outside X (partial) or every v (full)."""
    if scope not in (PARTIAL, FULL):
        raise BadParams(f"monopoly scope must be {PARTIAL!r} or {FULL!r}, got {scope!r}")
    h = graph_power(g, r)
    for v in range(g.n):
        if scope == PARTIAL and v in x:
            continue
        closed = h.masks[v] | 1 << v
        if 2 * (closed & x.mask).bit_count() < closed.bit_count():
            return False
    return True


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"cannot parse rational {text!r}; expected a/b")


def _check_alpha_range(alpha: Fraction) -> None:
    if not 0 < alpha <= 1:
        raise BadParams(f"alpha must satisfy 0 < alpha <= 1, got {alpha}")


def check_alpha(
    g: Graph,
    x: VertexSet,
    alpha: Fraction,
    mode: str = DOMINATING,
    strict: bool = False,
    total: bool = False,
) -> bool:
    """alpha-domination (v outside X) or alpha-independence (v inside X).

    `strict` switches >= / <= to > / <, `total` extends the quantifier to
    every vertex; strict + total dominating is total q-domination.
    """
    alpha = Fraction(alpha)
    _check_alpha_range(alpha)
    if mode not in (DOMINATING, INDEPENDENT):
        raise BadParams(f"alpha mode must be {DOMINATING!r} or {INDEPENDENT!r}, got {mode!r}")
    num, den = alpha.numerator, alpha.denominator
    for v in range(g.n):
        member = v in x
        if not total and member != (mode == INDEPENDENT):
            continue
        lhs = (g.masks[v] & x.mask).bit_count() * den
        rhs = num * len(g.adjacency[v])
        if mode == DOMINATING:
            ok = lhs > rhs if strict else lhs >= rhs
        else:
            ok = lhs < rhs if strict else lhs <= rhs
        if not ok:
            return False
    return True


def check_threshold_set(g: Graph, x: VertexSet, mode: str) -> bool:
    if mode not in THRESHOLD_MODES:
        raise BadParams(f"unknown threshold-set mode {mode!r}; known: {', '.join(THRESHOLD_MODES)}")
    for v in range(g.n):
        half_up = (len(g.adjacency[v]) + 1) // 2
        inside = (g.masks[v] & x.mask).bit_count()
        if mode == ROBUST:
            if inside >= half_up:
                return False
        elif mode == POSITIVE_INFLUENCE_OUTSIDE and v in x:
            continue
        elif inside < half_up:
            return False
    return True


def maj_step(g: Graph, p: VertexSet, strict: bool = False) -> VertexSet:
    """P plus every vertex with at least half (strict: more than half) of its neighbors in P."""
    mask = p.mask
    for v in range(g.n):
        inside = 2 * (g.masks[v] & p.mask).bit_count()
        deg = len(g.adjacency[v])
        if inside > deg or (not strict and inside == deg):
            mask |= 1 << v
    return VertexSet(g.n, mask)


@dataclass(frozen=True)
class ThresholdMap:
    """t(v) for every non-isolated vertex; isolated vertices carry None."""

    t: Tuple[Optional[int], ...]

    @classmethod
    def of(cls, g: Graph, thresholds: Mapping[int, int]) -> "ThresholdMap":
        values: List[Optional[int]] = [None] * g.n
        for v, t in thresholds.items():
            if not 0 <= v < g.n:
                raise BadThreshold(f"threshold given for vertex {v} outside 0..{g.n - 1}")
            deg = len(g.adjacency[v])
            if deg == 0:
                raise BadThreshold(f"vertex {v} is isolated and takes no threshold")
            if not 1 <= t <= deg:
                raise BadThreshold(f"threshold t({v})={t} outside 1..{deg}")
            values[v] = int(t)
        missing = [v for v in range(g.n) if values[v] is None and g.adjacency[v]]
        if missing:
            raise BadThreshold(f"no threshold for vertices {missing}")
        return cls(tuple(values))

    @classmethod
    def majority(cls, g: Graph) -> "ThresholdMap":
        return cls.of(g, {v: (len(a) + 1) // 2 for v, a in enumerate(g.adjacency) if a})

    @classmethod
    def parse(cls, g: Graph, text: str) -> "ThresholdMap":
        """'v:t' pairs separated by commas or whitespace."""
        pairs: Dict[int, int] = {}
        for tok in text.replace(",", " ").split():
            try:
                v, t = (int(part) for part in tok.split(":"))
            except ValueError:
                raise ParseError(f"threshold entries must look like 'v:t', got {tok!r}")
            if v in pairs:
                raise BadThreshold(f"vertex {v} given two thresholds")
            pairs[v] = t
        return cls.of(g, pairs)

    def __str__(self) -> str:
        return ",".join(f"{v}:{t}" for v, t in enumerate(self.t) if t is not None)


@dataclass(frozen=True)
class PropagationResult:
    final: VertexSet
    rounds_used: int
    activation_round: Tuple[Optional[int], ...]  # 0 for seeds, None if never activated

    def to_dict(self) -> Dict:
        return {
            "final": list(self.final),
            "rounds_used": self.rounds_used,
            "activation_round": list(self.activation_round),
        }


def _threshold_step(g: Graph, active: VertexSet, thresholds: ThresholdMap) -> VertexSet:
    mask = active.mask
    for v in range(g.n):
        t = thresholds.t[v]
        if t is not None and (g.masks[v] & active.mask).bit_count() >= t:
            mask |= 1 << v
    return VertexSet(g.n, mask)


def propagate(
    g: Graph,
    seeds: VertexSet,
    d: Optional[int],
    thresholds: Optional[ThresholdMap] = None,
    strict: bool = False,
) -> PropagationResult:
    """Synchronous rounds from `seeds`, at most d of them (None: until nothing changes).

    Without thresholds each round is maj_step; with thresholds an inactive
    vertex turns active once t(v) neighbors are active.
    """
    if d is not None and d < 0:
        raise BadParams(f"round budget must be >= 0, got {d}")
    if thresholds is not None and len(thresholds.t) != g.n:
        raise BadThreshold(f"threshold map covers {len(thresholds.t)} vertices, graph has {g.n}")

    activation: List[Optional[int]] = [0 if v in seeds else None for v in range(g.n)]
    active, rounds = seeds, 0
    # a round that changes anything adds a vertex, so n rounds always reach the fixpoint
    limit = g.n if d is None else d
    while rounds < limit:
        nxt = _threshold_step(g, active, thresholds) if thresholds is not None else maj_step(g, active, strict)
        if nxt == active:
            break
        rounds += 1
        for v in nxt.difference(active):
            activation[v] = rounds
        active = nxt
    LOG.debug(f"propagation from {seeds} stopped after {rounds} rounds with {len(active)}/{g.n} active")
    return PropagationResult(active, rounds, tuple(activation))


def is_dmaj_set(g: Graph, p: VertexSet, d: int) -> bool:
    if d < 1:
        raise BadParams(f"d-MAJ sets need d >= 1, got {d}")
    return len(propagate(g, p, d).final) == g.n
