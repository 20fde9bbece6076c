# app/harness.py
"""Equivalence harness: direct definitions against their alliance forms.

Every proposition pairs a predicate built from the parameter's own
definition with the framework predicate from the catalog, and both are
tabulated over every candidate set of every graph in a family. Graphs
are processed in chunks (optionally on a process pool) and the chunk
reports are merged in submission order, so a report never depends on
the worker count.
"""
from __future__ import annotations

import logging
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Dict, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from app.alliance import AllianceSpec, SigmaRho, alliance_table, sigma_rho_spec, sigma_rho_translate
from app.catalog import catalog_entry, catalog_spec, int_param
from app.direct import (
    CLOSED,
    DOMINATING,
    EFFICIENT,
    EFFICIENT_K,
    FULL,
    HALF,
    INDEPENDENT,
    PARTIAL,
    POSITIVE_INFLUENCE,
    POSITIVE_INFLUENCE_OUTSIDE,
    ROBUST,
    TOTAL,
)
from app.errors import BadParams, IsolatedVertexOutsideApplicability, UnknownProposition
from app.graph import (
    LABELED_FAMILIES,
    Graph,
    VertexSet,
    family_slice,
    labeled_graph_count,
    popcount,
    serialize_edge_list,
)
from app.intset import all_ints, finite
from app.solvers import (
    AlliancePredicate,
    AlphaPredicate,
    ComplementPredicate,
    DMajPredicate,
    MonopolyPredicate,
    SetPredicate,
    SignedPredicate,
    ThresholdSetPredicate,
    entry_predicate,
    enumerate_satisfying,
    predicate_for,
    solve_extremal,
)

LOG = logging.getLogger("app.harness")

VERIFY_MAX_N = 7
ERRATA_MAX_N = 6
CHUNK_GRAPHS = 1 << 12

Params = Mapping[str, object]
# (set label, direct verdict, framework verdict)
Disagreement = Tuple[str, bool, bool]


@dataclass(frozen=True)
class Counterexample:
    graph_edgelist: str
    set: str
    direct: bool
    framework: bool

    def to_dict(self) -> Dict:
        return {"graph_edgelist": self.graph_edgelist, "set": self.set, "direct": self.direct, "framework": self.framework}


@dataclass
class PropositionReport:
    proposition_id: str
    family: str
    n_max: int
    graphs_checked: int = 0
    sets_checked: int = 0
    agreements: int = 0
    counterexamples: List[Counterexample] = field(default_factory=list)

    def merge(self, other: "PropositionReport") -> "PropositionReport":
        self.graphs_checked += other.graphs_checked
        self.sets_checked += other.sets_checked
        self.agreements += other.agreements
        self.counterexamples.extend(other.counterexamples)
        return self

    @property
    def holds(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> Dict:
        return {
            "proposition_id": self.proposition_id,
            "family": self.family,
            "n_max": self.n_max,
            "graphs_checked": self.graphs_checked,
            "sets_checked": self.sets_checked,
            "agreements": self.agreements,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
        }


def _all_masks(n: int) -> np.ndarray:
    return np.arange(1 << n, dtype=np.int64)


def _disagreements(g: Graph, masks: np.ndarray, a: np.ndarray, b: np.ndarray, prefix: str = "") -> List[Disagreement]:
    return [(f"{prefix}{VertexSet(g.n, int(masks[i]))}", bool(a[i]), bool(b[i])) for i in np.flatnonzero(a != b)]


def _table_disagreements(g: Graph, direct: SetPredicate, framework: SetPredicate) -> Tuple[int, List[Disagreement]]:
    masks = _all_masks(g.n)
    a, b = direct.table(g, masks), framework.table(g, masks)
    return len(masks), _disagreements(g, masks, a, b)


Compare = Callable[[Graph, Params], Optional[Tuple[int, List[Disagreement]]]]


def _pair(direct: Callable[[Params], SetPredicate], framework: Callable[[Params], SetPredicate]) -> Compare:
    def compare(g: Graph, params: Params) -> Tuple[int, List[Disagreement]]:
        return _table_disagreements(g, direct(params), framework(params))

    return compare


def _k(params: Params, default: int = 1) -> int:
    return int_param(params, "k", default)


def _r(params: Params, default: int = 1) -> int:
    return int_param(params, "r", default)


def _efficient(params: Params) -> SetPredicate:
    k = _k(params)
    return SignedPredicate(1, EFFICIENT) if k == 1 else SignedPredicate(k, EFFICIENT_K)


def _compare_minus(g: Graph, params: Params) -> Tuple[int, List[Disagreement]]:
    """Per S: some zero set Z makes f minus k-dominating vs some neutral set N makes S an alliance."""
    k = _k(params)
    spec = catalog_spec("minus-dominating", {"k": k})
    masks = _all_masks(g.n)
    direct = np.zeros(masks.shape, dtype=bool)
    framework = np.zeros(masks.shape, dtype=bool)
    for z in range(1 << g.n):
        disjoint = (masks & z) == 0
        ok = disjoint.copy()
        for v in range(g.n):
            closed = g.masks[v] | 1 << v
            # +1 for S, 0 for Z, -1 for the rest of N[v]
            weight = 2 * popcount(masks & closed, g.n) + (closed & z).bit_count() - closed.bit_count()
            ok &= weight >= k
        direct |= ok
        framework |= alliance_table(g, spec.with_neutrals(VertexSet(g.n, z)), masks)
    return len(masks), _disagreements(g, masks, direct, framework)


def _regular_degree(g: Graph) -> Optional[int]:
    return g.degree(0) if g.n and g.is_regular() else None


def _sigma_rho_pairs(r: int, params: Params) -> Iterator[SigmaRho]:
    if "sr" in params:
        yield params["sr"]
        return
    subsets = [c for size in range(r + 2) for c in combinations(range(r + 1), size)]
    for sigma in subsets:
        for rho in subsets:
            yield SigmaRho.of(sigma, rho)


def _sigma_rho_table(g: Graph, sr: SigmaRho, masks: np.ndarray) -> np.ndarray:
    ok = np.ones(masks.shape, dtype=bool)
    sigma, rho = sorted(sr.sigma), sorted(sr.rho)
    for v in range(g.n):
        inside = popcount(masks & g.masks[v], g.n)
        member = (masks >> v & 1).astype(bool)
        ok &= np.where(member, np.isin(inside, sigma), np.isin(inside, rho))
    return ok


def _compare_sigma_rho(literal: bool) -> Compare:
    def compare(g: Graph, params: Params) -> Optional[Tuple[int, List[Disagreement]]]:
        r = _regular_degree(g)
        if r is None or ("r" in params and _r(params) != r):
            return None
        if "sr" in params and any(x > r for x in params["sr"].sigma | params["sr"].rho):
            return None
        masks = _all_masks(g.n)
        checked, out = 0, []
        for sr in _sigma_rho_pairs(r, params):
            if literal:
                D, O = sigma_rho_translate(sr, r)
                spec = AllianceSpec(D, O)
            else:
                spec = sigma_rho_spec(sr, r)
            a, b = _sigma_rho_table(g, sr, masks), alliance_table(g, spec, masks)
            checked += len(masks)
            out.extend(_disagreements(g, masks, a, b, prefix=f"{sr} S="))
        return checked, out

    return compare


def _remark_pair(params: Params) -> Tuple[SetPredicate, SetPredicate]:
    r = _r(params, 0)
    left = AlliancePredicate(AllianceSpec(finite([r]), all_ints(), is_global=True))
    right = ComplementPredicate(AlliancePredicate(AllianceSpec(all_ints(), finite([-r]), is_global=True)))
    return left, right


@dataclass(frozen=True)
class Proposition:
    prop_id: str
    description: str
    compare: Compare
    family: str = "all-min-degree-1"
    # parameter settings errata_scan runs
    grid: Tuple[Dict[str, int], ...] = ({},)


PROPOSITIONS: Dict[str, Proposition] = {
    p.prop_id: p
    for p in (
        Proposition(
            "signed-dom",
            "f is signed k-dominating <=> f^-1(+1) is a global (>=k-1, >=k+1)-alliance",
            _pair(lambda p: SignedPredicate(_k(p), CLOSED), lambda p: predicate_for("signed-dominating", {"k": _k(p)})),
            family="all",
            grid=({"k": 1}, {"k": 2}, {"k": 3}),
        ),
        Proposition(
            "signed-total",
            "f is signed total k-dominating <=> f^-1(+1) is a global (>=k, >=k)-alliance",
            _pair(lambda p: SignedPredicate(_k(p), TOTAL), lambda p: predicate_for("signed-total-dominating", {"k": _k(p)})),
            grid=({"k": 1}, {"k": 2}, {"k": 3}),
        ),
        Proposition(
            "minus",
            "f is minus k-dominating <=> f^-1(+1) is a global (>=k-1, >=k+1)-alliance with neutrals f^-1(0)",
            _compare_minus,
            grid=({"k": 1}, {"k": 2}, {"k": 3}),
        ),
        Proposition(
            "efficient",
            "f is efficient signed k-dominating <=> f^-1(+1) is a global ({k-1}, {k+1})-alliance",
            _pair(_efficient, lambda p: predicate_for("signed-efficient", {"k": _k(p)})),
            family="all",
            grid=({"k": 1}, {"k": 2}),
        ),
        Proposition(
            "efficient-paper",
            "published form: f is efficient signed k-dominating <=> f^-1(+1) is a global ({k}, {k+2})-alliance",
            _pair(_efficient, lambda p: predicate_for("signed-efficient-paper", {"k": _k(p)})),
            family="all",
            grid=({"k": 1},),
        ),
        Proposition(
            "partial-monopoly",
            "X is a partial monopoly (in the r-th power) <=> X is a global (Z, >=1)-alliance there",
            _pair(lambda p: MonopolyPredicate(PARTIAL, _r(p)), lambda p: predicate_for("partial-monopoly", {"r": _r(p)})),
            family="all",
            grid=({"r": 1}, {"r": 2}),
        ),
        Proposition(
            "monopoly",
            "X is a monopoly <=> X is a global (>=-1, >=1)-alliance",
            _pair(lambda p: MonopolyPredicate(FULL, _r(p)), lambda p: predicate_for("monopoly", {"r": _r(p)})),
            family="all",
            grid=({"r": 1}, {"r": 2}),
        ),
        Proposition(
            "monopoly-paper",
            "published form: X is a monopoly <=> X is a global (>=-2, >=1)-alliance",
            _pair(lambda p: MonopolyPredicate(FULL, _r(p)), lambda p: predicate_for("monopoly-paper", {"r": _r(p)})),
            family="all",
        ),
        Proposition(
            "half-dom",
            "X is 1/2-dominating <=> X is a global offensive 0-alliance",
            _pair(lambda p: AlphaPredicate(HALF, DOMINATING), lambda p: predicate_for("half-dominating")),
        ),
        Proposition(
            "half-ind",
            "X is 1/2-independent <=> V - X is a global offensive 0-alliance",
            _pair(lambda p: AlphaPredicate(HALF, INDEPENDENT), lambda p: predicate_for("half-independent-complement")),
        ),
        Proposition(
            "positive-influence",
            "X is positive influence dominating <=> X is a global (>=0, >=0)-alliance",
            _pair(lambda p: ThresholdSetPredicate(POSITIVE_INFLUENCE), lambda p: predicate_for("positive-influence")),
        ),
        Proposition(
            "positive-influence-outside",
            "the positive influence condition on V - X only <=> X is a global offensive 0-alliance",
            _pair(
                lambda p: ThresholdSetPredicate(POSITIVE_INFLUENCE_OUTSIDE),
                lambda p: predicate_for("positive-influence-outside"),
            ),
        ),
        Proposition(
            "maj1",
            "MAJ(P) = V <=> P is a global offensive 0-alliance",
            _pair(lambda p: DMajPredicate(1), lambda p: predicate_for("maj1")),
        ),
        Proposition(
            "robust",
            "X is robust under majority thresholds <=> X is a (<0, <0)-alliance",
            _pair(lambda p: ThresholdSetPredicate(ROBUST), lambda p: predicate_for("robust-majority")),
        ),
        Proposition(
            "remark",
            "S is a global ({r}, Z)-alliance <=> V - S is a global (Z, {-r})-alliance",
            lambda g, p: _table_disagreements(g, *_remark_pair(p)),
            family="all",
            grid=({"r": 0}, {"r": 1}, {"r": 2}),
        ),
        Proposition(
            "sigma-rho",
            "[sigma,rho]-set on an r-regular graph <=> (2*sigma-r, 2*rho-r)-alliance, global iff 0 not in rho",
            _compare_sigma_rho(literal=False),
            family="regular",
        ),
        Proposition(
            "sigma-rho-paper",
            "published form: [sigma,rho]-set on an r-regular graph <=> plain (2*sigma-r, 2*rho-r)-alliance",
            _compare_sigma_rho(literal=True),
            family="regular",
        ),
    )
}


def _label(prop_id: str, params: Params) -> str:
    shown = {k: v for k, v in params.items() if k != "sr"}
    if "sr" in params:
        shown["sr"] = str(params["sr"])
    if not shown:
        return prop_id
    return f"{prop_id}({','.join(f'{k}={v}' for k, v in sorted(shown.items()))})"


def _run_unit(task: Tuple[str, Dict, str, int, int, Optional[int], int]) -> PropositionReport:
    """Worker entry point: one proposition over one chunk of one family."""
    prop_id, params, family, n, lo, hi, n_max = task
    prop = PROPOSITIONS[prop_id]
    report = PropositionReport(_label(prop_id, params), family, n_max)
    for g in family_slice(family, n, lo, hi):
        result = prop.compare(g, params)
        if result is None:
            continue
        checked, disagreements = result
        report.graphs_checked += 1
        report.sets_checked += checked
        report.agreements += checked - len(disagreements)
        if disagreements:
            edgelist = serialize_edge_list(g)
            report.counterexamples.extend(Counterexample(edgelist, s, d, f) for s, d, f in disagreements)
    return report


def _units(family: str, n_max: int) -> Iterator[Tuple[int, int, Optional[int]]]:
    for n in range(1, n_max + 1):
        if family in LABELED_FAMILIES:
            total = labeled_graph_count(n)
            for lo in range(0, total, CHUNK_GRAPHS):
                yield n, lo, min(lo + CHUNK_GRAPHS, total)
        else:
            yield n, 0, None


def _map(fn: Callable, tasks: Sequence, workers: int) -> Iterable:
    if workers <= 1 or len(tasks) <= 1:
        return map(fn, tasks)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, tasks))


def verify_characterization(
    prop_id: str,
    family: Optional[str] = None,
    n_max: int = 5,
    params: Optional[Params] = None,
    workers: int = 1,
) -> PropositionReport:
    prop = PROPOSITIONS.get(prop_id)
    if prop is None:
        raise UnknownProposition(f"unknown proposition {prop_id!r}; known: {', '.join(PROPOSITIONS)}")
    family = family or prop.family
    if family in LABELED_FAMILIES and n_max > VERIFY_MAX_N:
        raise BadParams(f"labeled-graph families are capped at n_max={VERIFY_MAX_N}, got {n_max}")
    params = dict(params or {})
    for key in ("k", "r"):
        if key in params:
            params[key] = int_param(params, key)
    tasks = [(prop_id, params, family, n, lo, hi, n_max) for n, lo, hi in _units(family, n_max)]
    report = PropositionReport(_label(prop_id, params), family, n_max)
    for part in _map(_run_unit, tasks, workers):
        report.merge(part)
    log = LOG.info if report.holds else LOG.warning
    log(
        f"{report.proposition_id} on {family} n<={n_max}: graphs={report.graphs_checked} "
        f"sets={report.sets_checked} counterexamples={len(report.counterexamples)}"
    )
    return report


def errata_scan(n_max: int = 4, workers: int = 1) -> List[PropositionReport]:
    """Every proposition at every grid setting, over all labeled graphs with and without isolated vertices."""
    if n_max > ERRATA_MAX_N:
        raise BadParams(f"errata_scan is capped at n_max={ERRATA_MAX_N}, got {n_max}")
    reports = []
    for prop in PROPOSITIONS.values():
        for params in prop.grid:
            for family in ("all", "all-min-degree-1"):
                reports.append(verify_characterization(prop.prop_id, family, n_max, params, workers))
    return reports


class GallaiResult(NamedTuple):
    min_half_dom: int
    max_half_ind: int
    holds: bool
    outside_applicability: bool  # the graph has an isolated vertex


GALLAI_FRAMEWORK = "framework"
GALLAI_DIRECT = "direct"
GALLAI_READINGS = (GALLAI_FRAMEWORK, GALLAI_DIRECT)


def gallai_check(g: Graph, reading: str = GALLAI_FRAMEWORK) -> GallaiResult:
    """Minimum 1/2-dominating plus maximum 1/2-independent set size against n.

    `framework` minimises over the global offensive 0-alliance form,
    `direct` over the set definition; the two differ only at isolated
    vertices.
    """
    if reading not in GALLAI_READINGS:
        raise BadParams(f"gallai reading must be one of {', '.join(GALLAI_READINGS)}, got {reading!r}")
    flagged = g.min_degree() < 1
    if flagged:
        warnings.warn(
            f"graph with an isolated vertex is outside the identity's applicability: {g.edges}",
            IsolatedVertexOutsideApplicability,
        )
    dominating = (
        entry_predicate(catalog_entry("half-dominating")) if reading == GALLAI_FRAMEWORK else AlphaPredicate(HALF, DOMINATING)
    )
    low = solve_extremal(g, dominating, "min")
    high = solve_extremal(g, AlphaPredicate(HALF, INDEPENDENT), "max")
    # V is always 1/2-dominating and {} always 1/2-independent
    holds = low.size + high.size == g.n
    return GallaiResult(low.size, high.size, holds, flagged)


@dataclass
class ScanReport:
    name: str
    graphs_checked: int = 0
    failures: List[str] = field(default_factory=list)
    flagged: int = 0

    def merge(self, other: "ScanReport") -> "ScanReport":
        self.graphs_checked += other.graphs_checked
        self.failures.extend(other.failures)
        self.flagged += other.flagged
        return self

    @property
    def holds(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict:
        return {
            "name": self.name,
            "graphs_checked": self.graphs_checked,
            "failures": list(self.failures),
            "flagged": self.flagged,
        }


def _gallai_unit(task: Tuple[str, int, int, Optional[int], str]) -> ScanReport:
    family, n, lo, hi, reading = task
    report = ScanReport(f"gallai[{reading}]")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IsolatedVertexOutsideApplicability)
        for g in family_slice(family, n, lo, hi):
            result = gallai_check(g, reading)
            report.graphs_checked += 1
            report.flagged += result.outside_applicability
            if not result.holds:
                report.failures.append(serialize_edge_list(g))
    return report


def gallai_scan(
    n_max: int,
    family: str = "all-min-degree-1",
    reading: str = GALLAI_FRAMEWORK,
    workers: int = 1,
) -> ScanReport:
    if family in LABELED_FAMILIES and n_max > VERIFY_MAX_N:
        raise BadParams(f"labeled-graph families are capped at n_max={VERIFY_MAX_N}, got {n_max}")
    tasks = [(family, n, lo, hi, reading) for n, lo, hi in _units(family, n_max)]
    report = ScanReport(f"gallai[{reading}] on {family} n<={n_max}")
    for part in _map(_gallai_unit, tasks, workers):
        report.merge(part)
    LOG.info(f"{report.name}: graphs={report.graphs_checked} failures={len(report.failures)} flagged={report.flagged}")
    return report


def constant_weight_check(g: Graph, k: int = 1) -> Tuple[Tuple[int, ...], bool]:
    """Sizes of all efficient signed k-dominating sets; they should all agree."""
    sets = enumerate_satisfying(g, predicate_for("signed-efficient", {"k": k}))
    sizes = tuple(sorted({len(s) for s in sets}))
    return sizes, len(sizes) <= 1


def constant_weight_scan(graphs: Iterable[Graph], k: int = 1) -> ScanReport:
    report = ScanReport(f"constant-weight(k={k})")
    for g in graphs:
        _, holds = constant_weight_check(g, k)
        report.graphs_checked += 1
        if not holds:
            report.failures.append(serialize_edge_list(g))
    LOG.info(f"{report.name}: graphs={report.graphs_checked} failures={len(report.failures)}")
    return report


REPORT_COLUMNS = ["proposition_id", "family", "n_max", "graphs_checked", "sets_checked", "agreements", "counterexamples", "verdict"]


def reports_frame(reports: Iterable[PropositionReport]) -> pd.DataFrame:
    rows = [
        {
            "proposition_id": r.proposition_id,
            "family": r.family,
            "n_max": r.n_max,
            "graphs_checked": r.graphs_checked,
            "sets_checked": r.sets_checked,
            "agreements": r.agreements,
            "counterexamples": len(r.counterexamples),
            "verdict": "agrees" if r.holds else "ERRATUM",
        }
        for r in reports
    ]
    return pd.DataFrame(rows, columns=REPORT_COLUMNS)


def _compact(edgelist: str) -> str:
    lines = edgelist.strip().splitlines()
    n = lines[0].split()[0]
    edges = " ".join("-".join(ln.split()) for ln in lines[1:])
    return f"n={n} edges=[{edges}]"


def render_errata(reports: Sequence[PropositionReport], examples: int = 3) -> str:
    frame = reports_frame(reports)
    failing = [r for r in reports if not r.holds]
    lines = ["Equivalence report", "", frame.to_string(index=False) if len(frame) else "(no reports)", ""]
    if not failing:
        lines.append("No counterexamples.")
        return "\n".join(lines) + "\n"
    lines.append(f"Counterexamples ({len(failing)} proposition/family pairs):")
    for r in failing:
        lines.append(f"- {r.proposition_id} on {r.family} n<={r.n_max}: {len(r.counterexamples)} counterexample(s)")
        for c in r.counterexamples[:examples]:
            lines.append(f"    {_compact(c.graph_edgelist)} set={c.set} direct={c.direct} framework={c.framework}")
    return "\n".join(lines) + "\n"
