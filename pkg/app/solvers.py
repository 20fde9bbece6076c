# app/solvers.py
"""Exact extremal-set search.

solve_extremal is the brute-force oracle: it evaluates a predicate over
all 2^n subsets (in numpy chunks) and returns the optimum whose sorted
member list is lexicographically least. bb_min_alliance is a
branch-and-bound for global alliance specs that must agree with it.
"""
from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional

import numpy as np

from app.alliance import AllianceSpec, NEUTRALS_REDUCED, alliance_table, check_alliance
from app.catalog import CATALOG, CatalogEntry, catalog_entry
from app.direct import (
    CLOSED,
    DOMINATING,
    EFFICIENT,
    FULL,
    INDEPENDENT,
    PARTIAL,
    POSITIVE_INFLUENCE,
    POSITIVE_INFLUENCE_OUTSIDE,
    ROBUST,
    THRESHOLD_MODES,
    TOTAL,
    ZERO_ALLOWED,
    SignedFunction,
    ThresholdMap,
    check_alpha,
    check_monopoly,
    check_signed,
    check_threshold_set,
    parse_rational,
    propagate,
)
from app.errors import BadParams, GraphTooLargeForExhaustive, NonGlobalSpecUnsupported, UnknownParameter
from app.graph import Graph, VertexSet, graph_power, popcount

LOG = logging.getLogger("app.solvers")

EXHAUSTIVE_MAX_N = 24
ENUMERATE_MAX_N = 20
CHUNK_SIZE = 1 << 16

MIN = "min"
MAX = "max"


@dataclass(frozen=True)
class SolveResult:
    feasible: bool
    size: Optional[int]
    witness: Optional[VertexSet]
    subsets_examined: int
    elapsed: float

    def __post_init__(self) -> None:
        if self.feasible != (self.size is not None and self.witness is not None):
            raise ValueError("feasible results carry size and witness, infeasible ones neither")

    def to_dict(self, stats: bool = False) -> Dict:
        out = {
            "feasible": self.feasible,
            "size": self.size,
            "witness": list(self.witness) if self.witness is not None else None,
        }
        if stats:
            out["subsets_examined"] = self.subsets_examined
            out["elapsed"] = round(self.elapsed, 6)
        return out


class SetPredicate:
    """A property of vertex sets. `table` must agree with `holds` pointwise."""

    name = "predicate"

    def holds(self, g: Graph, s: VertexSet) -> bool:
        raise NotImplementedError

    def table(self, g: Graph, masks: np.ndarray) -> np.ndarray:
        return np.fromiter((self.holds(g, VertexSet(g.n, int(m))) for m in masks), dtype=bool, count=len(masks))


class AlliancePredicate(SetPredicate):
    def __init__(self, spec: AllianceSpec, name: Optional[str] = None):
        self.spec = spec
        self.name = name or spec.describe()

    def holds(self, g: Graph, s: VertexSet) -> bool:
        return check_alliance(g, s, self.spec)

    def table(self, g: Graph, masks: np.ndarray) -> np.ndarray:
        return alliance_table(g, self.spec, masks)


class ComplementPredicate(SetPredicate):
    def __init__(self, inner: SetPredicate):
        self.inner = inner
        self.name = f"complement of {inner.name}"

    def holds(self, g: Graph, s: VertexSet) -> bool:
        return self.inner.holds(g, s.complement())

    def table(self, g: Graph, masks: np.ndarray) -> np.ndarray:
        return self.inner.table(g, ((1 << g.n) - 1) ^ np.asarray(masks, dtype=np.int64))


class NeutralSearchPredicate(SetPredicate):
    """S qualifies when some N disjoint from S makes the spec hold with neutrals N."""

    def __init__(self, spec: AllianceSpec, name: Optional[str] = None):
        self.spec = spec
        self.name = name or f"{spec.describe()} with some neutral set"

    def witness_neutrals(self, g: Graph, s: VertexSet) -> Optional[VertexSet]:
        rest = ((1 << g.n) - 1) & ~s.mask
        sub = rest
        while True:
            neutrals = VertexSet(g.n, sub)
            if check_alliance(g, s, self.spec.with_neutrals(neutrals)):
                return neutrals
            if sub == 0:
                return None
            sub = (sub - 1) & rest

    def holds(self, g: Graph, s: VertexSet) -> bool:
        return self.witness_neutrals(g, s) is not None


class AlphaPredicate(SetPredicate):
    def __init__(self, alpha: Fraction, mode: str = DOMINATING, strict: bool = False, total: bool = False):
        self.alpha, self.mode, self.strict, self.total = Fraction(alpha), mode, strict, total
        self.name = f"alpha-{mode}({self.alpha}{', strict' if strict else ''}{', total' if total else ''})"

    def holds(self, g: Graph, s: VertexSet) -> bool:
        return check_alpha(g, s, self.alpha, self.mode, self.strict, self.total)

    def table(self, g: Graph, masks: np.ndarray) -> np.ndarray:
        masks = np.asarray(masks, dtype=np.int64)
        num, den = self.alpha.numerator, self.alpha.denominator
        ok = np.ones(masks.shape, dtype=bool)
        for v in range(g.n):
            member = (masks >> v & 1).astype(bool)
            lhs = popcount(masks & g.masks[v], g.n) * den
            rhs = num * len(g.adjacency[v])
            if self.mode == DOMINATING:
                cond = lhs > rhs if self.strict else lhs >= rhs
                quantified = ~member
            else:
                cond = lhs < rhs if self.strict else lhs <= rhs
                quantified = member
            if self.total:
                quantified = np.ones(masks.shape, dtype=bool)
            ok &= ~quantified | cond
        return ok


class ThresholdSetPredicate(SetPredicate):
    def __init__(self, mode: str):
        if mode not in THRESHOLD_MODES:
            raise BadParams(f"unknown threshold-set mode {mode!r}")
        self.mode = mode
        self.name = mode

    def holds(self, g: Graph, s: VertexSet) -> bool:
        return check_threshold_set(g, s, self.mode)

    def table(self, g: Graph, masks: np.ndarray) -> np.ndarray:
        masks = np.asarray(masks, dtype=np.int64)
        ok = np.ones(masks.shape, dtype=bool)
        for v in range(g.n):
            half_up = (len(g.adjacency[v]) + 1) // 2
            inside = popcount(masks & g.masks[v], g.n)
            if self.mode == ROBUST:
                ok &= inside < half_up
            elif self.mode == POSITIVE_INFLUENCE:
                ok &= inside >= half_up
            else:
                ok &= (masks >> v & 1).astype(bool) | (inside >= half_up)
        return ok


class MonopolyPredicate(SetPredicate):
    def __init__(self, scope: str = FULL, r: int = 1):
        self.scope, self.r = scope, r
        self.name = f"{'partial-' if scope == PARTIAL else ''}monopoly-direct(r={r})"

    def holds(self, g: Graph, s: VertexSet) -> bool:
        return check_monopoly(g, s, self.scope, self.r)

    def table(self, g: Graph, masks: np.ndarray) -> np.ndarray:
        masks = np.asarray(masks, dtype=np.int64)
        h = graph_power(g, self.r)
        ok = np.ones(masks.shape, dtype=bool)
        for v in range(g.n):
            closed = h.masks[v] | 1 << v
            cond = 2 * popcount(masks & closed, g.n) >= closed.bit_count()
            if self.scope == PARTIAL:
                cond |= (masks >> v & 1).astype(bool)
            ok &= cond
        return ok


class DMajPredicate(SetPredicate):
    """d-MAJ sets: d majority rounds from P activate every vertex."""

    def __init__(self, d: int, strict: bool = False):
        if d < 1:
            raise BadParams(f"d-MAJ sets need d >= 1, got {d}")
        self.d, self.strict = d, strict
        self.name = f"dmaj({d})"

    def holds(self, g: Graph, s: VertexSet) -> bool:
        return len(propagate(g, s, self.d, strict=self.strict).final) == g.n

    def table(self, g: Graph, masks: np.ndarray) -> np.ndarray:
        if self.d != 1:
            return super().table(g, masks)
        masks = np.asarray(masks, dtype=np.int64)
        ok = np.ones(masks.shape, dtype=bool)
        for v in range(g.n):
            inside = 2 * popcount(masks & g.masks[v], g.n)
            deg = len(g.adjacency[v])
            ok &= (masks >> v & 1).astype(bool) | (inside > deg if self.strict else inside >= deg)
        return ok


class SignedPredicate(SetPredicate):
    """S = f^-1(+1) of a two-valued signed function (every other vertex is -1)."""

    def __init__(self, k: int, variant: str = CLOSED):
        if variant in ZERO_ALLOWED:
            raise BadParams(f"variant {variant!r} allows zeros; it has no set form")
        self.k, self.variant = k, variant
        self.name = f"signed-{variant}({k})"

    def holds(self, g: Graph, s: VertexSet) -> bool:
        return check_signed(g, SignedFunction.from_sets(s), self.k, self.variant)

    def table(self, g: Graph, masks: np.ndarray) -> np.ndarray:
        masks = np.asarray(masks, dtype=np.int64)
        ok = np.ones(masks.shape, dtype=bool)
        for v in range(g.n):
            hood = g.masks[v] if self.variant == TOTAL else g.masks[v] | 1 << v
            weight = 2 * popcount(masks & hood, g.n) - hood.bit_count()
            if self.variant in (CLOSED, TOTAL):
                ok &= weight >= self.k
            elif self.variant == EFFICIENT:
                ok &= weight == 1
            else:
                ok &= weight == self.k
        return ok


class TargetSetPredicate(SetPredicate):
    """Target sets: threshold propagation (majority thresholds by default) activates V."""

    def __init__(self, thresholds: Optional[Mapping[int, int]] = None, rounds: Optional[int] = None):
        self.thresholds, self.rounds = thresholds, rounds
        self.name = f"target-set(rounds={'unbounded' if rounds is None else rounds})"

    def holds(self, g: Graph, s: VertexSet) -> bool:
        tmap = ThresholdMap.of(g, self.thresholds) if self.thresholds is not None else ThresholdMap.majority(g)
        return len(propagate(g, s, self.rounds, tmap).final) == g.n


def entry_predicate(entry: CatalogEntry) -> SetPredicate:
    if entry.neutral_search:
        predicate: SetPredicate = NeutralSearchPredicate(entry.spec, entry.name)
    else:
        predicate = AlliancePredicate(entry.spec, entry.name)
    return ComplementPredicate(predicate) if entry.complement else predicate


def _rational(params: Mapping[str, object], key: str) -> Fraction:
    if key not in params:
        raise BadParams(f"missing parameter {key!r}")
    value = params[key]
    return value if isinstance(value, Fraction) else parse_rational(str(value))


def _int_param(params: Mapping[str, object], key: str, default: Optional[int]) -> Optional[int]:
    if key not in params:
        return default
    try:
        return int(params[key])
    except (TypeError, ValueError):
        raise BadParams(f"parameter {key!r} must be an integer, got {params[key]!r}")


DIRECT_PREDICATES = (
    "signed-direct",
    "alpha-dominating",
    "alpha-independent",
    "q-dominating",
    "monopoly-direct",
    "partial-monopoly-direct",
    "positive-influence-direct",
    "positive-influence-outside-direct",
    "robust-direct",
    "dmaj",
    "target-set",
)


def predicate_for(name: str, params: Optional[Mapping[str, object]] = None) -> SetPredicate:
    """Resolve a catalog name (alliance form) or a direct-definition name."""
    params = params or {}
    if name in CATALOG:
        return entry_predicate(catalog_entry(name, params))
    if name == "signed-direct":
        return SignedPredicate(_int_param(params, "k", 1), str(params.get("variant", CLOSED)))
    if name == "alpha-dominating":
        return AlphaPredicate(_rational(params, "alpha"), DOMINATING)
    if name == "alpha-independent":
        return AlphaPredicate(_rational(params, "alpha"), INDEPENDENT)
    if name == "q-dominating":
        return AlphaPredicate(_rational(params, "q"), DOMINATING, strict=True, total=bool(_int_param(params, "total", 0)))
    if name == "monopoly-direct":
        return MonopolyPredicate(FULL, _int_param(params, "r", 1))
    if name == "partial-monopoly-direct":
        return MonopolyPredicate(PARTIAL, _int_param(params, "r", 1))
    if name == "positive-influence-direct":
        return ThresholdSetPredicate(POSITIVE_INFLUENCE)
    if name == "positive-influence-outside-direct":
        return ThresholdSetPredicate(POSITIVE_INFLUENCE_OUTSIDE)
    if name == "robust-direct":
        return ThresholdSetPredicate(ROBUST)
    if name == "dmaj":
        return DMajPredicate(_int_param(params, "d", 1), strict=bool(_int_param(params, "strict", 0)))
    if name == "target-set":
        return TargetSetPredicate(rounds=_int_param(params, "rounds", None))
    raise UnknownParameter(f"unknown parameter {name!r}; known: {', '.join(list(CATALOG) + list(DIRECT_PREDICATES))}")


def _bit_reverse(masks: np.ndarray, n: int) -> np.ndarray:
    out = np.zeros(masks.shape, dtype=np.int64)
    for i in range(n):
        out |= (masks >> i & 1) << (n - 1 - i)
    return out


def _lex_least(masks: np.ndarray, n: int) -> int:
    """Among equal-size masks, the one whose sorted members are lexicographically least.

    The first member where two such sets differ belongs to the lex-smaller
    one, so it wins on the bit-reversed value.
    """
    return int(masks[np.argmax(_bit_reverse(masks, n))])


def solve_extremal(g: Graph, predicate: SetPredicate, objective: str = MIN) -> SolveResult:
    if objective not in (MIN, MAX):
        raise BadParams(f"objective must be {MIN!r} or {MAX!r}, got {objective!r}")
    if g.n > EXHAUSTIVE_MAX_N:
        raise GraphTooLargeForExhaustive(f"exhaustive search is capped at n={EXHAUSTIVE_MAX_N}, graph has n={g.n}")
    start = time.perf_counter()
    total = 1 << g.n
    best_size: Optional[int] = None
    best_mask: Optional[int] = None
    for lo in range(0, total, CHUNK_SIZE):
        masks = np.arange(lo, min(lo + CHUNK_SIZE, total), dtype=np.int64)
        feasible = masks[predicate.table(g, masks)]
        if not len(feasible):
            continue
        sizes = popcount(feasible, g.n)
        size = int(sizes.min() if objective == MIN else sizes.max())
        better = best_size is None or (size < best_size if objective == MIN else size > best_size)
        if not better and size != best_size:
            continue
        candidate = _lex_least(feasible[sizes == size], g.n)
        if better:
            best_size, best_mask = size, candidate
        else:
            best_mask = _lex_least(np.array([best_mask, candidate], dtype=np.int64), g.n)
    elapsed = time.perf_counter() - start

    if best_mask is None:
        LOG.info(f"solve_extremal({predicate.name}, {objective}) n={g.n}: infeasible after {total} subsets")
        return SolveResult(False, None, None, total, elapsed)
    witness = VertexSet(g.n, best_mask)
    if not predicate.holds(g, witness):
        raise RuntimeError(f"witness {witness} failed re-check for {predicate.name}")
    LOG.info(f"solve_extremal({predicate.name}, {objective}) n={g.n}: size={best_size} elapsed={elapsed:.3f}s")
    return SolveResult(True, best_size, witness, total, elapsed)


def enumerate_satisfying(g: Graph, predicate: SetPredicate) -> List[VertexSet]:
    """All satisfying subsets, ordered by size and then lexicographically."""
    if g.n > ENUMERATE_MAX_N:
        raise GraphTooLargeForExhaustive(f"enumeration is capped at n={ENUMERATE_MAX_N}, graph has n={g.n}")
    masks = np.arange(1 << g.n, dtype=np.int64)
    found = [VertexSet(g.n, int(m)) for m in masks[predicate.table(g, masks)]]
    return sorted(found, key=lambda s: (len(s), s.members()))


def bb_min_alliance(g: Graph, spec: AllianceSpec) -> SolveResult:
    """Minimum global alliance by include/exclude branching.

    Vertices are branched in order of decreasing degree, include first.
    Alliance conditions are not monotone, so only domination and size
    prune; the D/O conditions are checked at complete assignments.
    """
    if not spec.is_global:
        raise NonGlobalSpecUnsupported("branch-and-bound prunes on domination and needs a global spec")
    start = time.perf_counter()
    n = g.n
    h = graph_power(g, spec.power) if spec.power > 1 else g
    neutral_mask = spec.neutrals.mask if spec.neutrals is not None else 0
    full = (1 << n) - 1
    must_dominate = full if spec.neutral_mode != NEUTRALS_REDUCED else full & ~neutral_mask
    closed = [h.masks[v] | 1 << v for v in range(n)]
    order = sorted((v for v in range(n) if not neutral_mask >> v & 1), key=lambda v: (-len(h.adjacency[v]), v))
    # avail[i]: vertices still open to inclusion once order[:i] is decided
    avail = [0] * (len(order) + 1)
    for i in range(len(order) - 1, -1, -1):
        avail[i] = avail[i + 1] | 1 << order[i]

    best_size = n + 1
    best_mask: Optional[int] = None
    if not neutral_mask and check_alliance(g, VertexSet.full(n), spec):
        best_size, best_mask = n, full
    leaves = 0

    def lower_bound(undominated: int, open_mask: int) -> Optional[int]:
        if not undominated:
            return 0
        packed, used = 0, 0
        widest = 0
        rest = undominated
        while rest:
            low = rest & -rest
            rest ^= low
            u = low.bit_length() - 1
            candidates = closed[u] & open_mask
            if not candidates:
                return None
            if not candidates & used:
                packed += 1
                used |= candidates
        rest = open_mask
        while rest:
            low = rest & -rest
            rest ^= low
            widest = max(widest, (closed[low.bit_length() - 1] & undominated).bit_count())
        covering = -(-undominated.bit_count() // widest)
        return max(packed, covering)

    def search(i: int, chosen: int, size: int, dominated: int) -> None:
        nonlocal best_size, best_mask, leaves
        if size >= best_size:
            return
        bound = lower_bound(must_dominate & ~dominated, avail[i])
        if bound is None or size + bound >= best_size:
            return
        if i == len(order):
            leaves += 1
            if check_alliance(g, VertexSet(n, chosen), spec):
                LOG.debug(f"bb incumbent {size} -> {VertexSet(n, chosen)}")
                best_size, best_mask = size, chosen
            return
        v = order[i]
        search(i + 1, chosen | 1 << v, size + 1, dominated | closed[v])
        search(i + 1, chosen, size, dominated)

    search(0, 0, 0, 0)
    elapsed = time.perf_counter() - start
    if best_mask is None:
        LOG.info(f"bb_min_alliance({spec.describe()}) n={n}: infeasible, {leaves} leaves")
        return SolveResult(False, None, None, leaves, elapsed)
    witness = VertexSet(n, best_mask)
    if not check_alliance(g, witness, spec):
        raise RuntimeError(f"witness {witness} failed re-check for {spec.describe()}")
    LOG.info(f"bb_min_alliance({spec.describe()}) n={n}: size={best_size} leaves={leaves} elapsed={elapsed:.3f}s")
    return SolveResult(True, best_size, witness, leaves, elapsed)


EXHAUSTIVE = "exhaustive"
BRANCH_AND_BOUND = "bb"
AUTO = "auto"


def solve(g: Graph, predicate: SetPredicate, objective: str = MIN, method: str = AUTO) -> SolveResult:
    """Dispatch to branch-and-bound when it applies, otherwise the exhaustive oracle."""
    if method not in (AUTO, EXHAUSTIVE, BRANCH_AND_BOUND):
        raise BadParams(f"unknown solve method {method!r}")
    bb_applies = isinstance(predicate, AlliancePredicate) and predicate.spec.is_global and objective == MIN
    if method == BRANCH_AND_BOUND:
        if not isinstance(predicate, AlliancePredicate) or objective != MIN:
            raise BadParams("branch-and-bound solves minimum alliance specs only")
        return bb_min_alliance(g, predicate.spec)
    if method == AUTO and bb_applies and g.n > 12:
        return bb_min_alliance(g, predicate.spec)
    return solve_extremal(g, predicate, objective)
