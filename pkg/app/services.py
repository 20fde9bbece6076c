# app/services.py
"""Orchestration shared by the CLI, the HTTP routes and the dashboard.

Functions here take already-parsed inputs, call into the library and
return plain dicts (with a "warnings" list where something was flagged)
that both front ends serialize unchanged.
"""
from __future__ import annotations

import logging
import os
import warnings as pywarnings
from dataclasses import replace
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Sequence

from dotenv import load_dotenv

from app.alliance import NEUTRALS_BOTH, AllianceSpec, SigmaRho
from app.catalog import CATALOG, catalog_entry, list_catalog
from app.direct import ThresholdMap, propagate
from app.errors import BadParams, IsolatedVertexOutsideApplicability, ParseError
from app.graph import Graph, VertexSet, generate, parse_edge_list, parse_vertex_list
from app.harness import GALLAI_FRAMEWORK, errata_scan, gallai_check, render_errata, verify_characterization
from app.intset import parse_intset
from app.solvers import AUTO, MIN, AlliancePredicate, SetPredicate, predicate_for, solve

load_dotenv()

LOG = logging.getLogger("app.services")
LOG.setLevel(os.getenv("ALLIANCE_LOG_LEVEL", "INFO").upper())
if not LOG.handlers:
    ch = logging.StreamHandler()
    ch.setFormatter(logging.Formatter("%(asctime)s - %(levelname)s - %(message)s"))
    LOG.addHandler(ch)

DATA_DIR = Path("data")


def configured_workers() -> int:
    raw = os.getenv("ALLIANCE_WORKERS")
    if not raw:
        return os.cpu_count() or 1
    try:
        return max(1, int(raw))
    except ValueError:
        LOG.warning(f"ALLIANCE_WORKERS={raw!r} is not an integer; using 1 worker")
        return 1


def parse_graph_spec(text: str, seed: Optional[int] = None) -> Graph:
    """'kind:p1,p2,...', e.g. 'cycle:6', 'complete-bipartite:2,3', 'random-gnp:10,1,2'."""
    kind, _, rest = text.partition(":")
    try:
        params = [int(tok) for tok in rest.split(",") if tok.strip()]
    except ValueError:
        raise ParseError(f"graph spec parameters must be integers, got {text!r}")
    return generate(kind.strip(), params, seed)


def load_graph(
    path: Optional[str] = None,
    text: Optional[str] = None,
    graph_spec: Optional[str] = None,
    seed: Optional[int] = None,
) -> Graph:
    sources = [x for x in (path, text, graph_spec) if x is not None]
    if len(sources) != 1:
        raise BadParams("give exactly one graph source: a file, edge-list text or a generator spec")
    if graph_spec is not None:
        return parse_graph_spec(graph_spec, seed)
    if path is not None:
        p = Path(path)
        if not p.exists() and (DATA_DIR / p).exists():
            p = DATA_DIR / p
        try:
            text = p.read_text(encoding="utf-8")
        except UnicodeDecodeError as e:
            raise ParseError(f"graph file {path} is not UTF-8 text: {e.reason} at byte {e.start}")
        except OSError as e:
            raise BadParams(f"cannot read graph file {path}: {e}")
    g = parse_edge_list(text)
    LOG.debug(f"loaded graph n={g.n} m={g.m}")
    return g


def parse_params(pairs: Sequence[str]) -> Dict[str, object]:
    """'key=value' pairs; integers stay integers, sigma/rho become a SigmaRho under 'sr'."""
    params: Dict[str, object] = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or not key.strip():
            raise ParseError(f"parameters look like key=value, got {pair!r}")
        key, value = key.strip(), value.strip()
        try:
            params[key] = int(value)
        except ValueError:
            params[key] = value
    if "sigma" in params or "rho" in params:
        params["sr"] = SigmaRho.parse(str(params.pop("sigma", "{}")), str(params.pop("rho", "{}")))
    return params


def resolve_predicate(
    name: Optional[str] = None,
    params: Optional[Mapping[str, object]] = None,
    D: Optional[str] = None,
    O: Optional[str] = None,
    is_global: bool = False,
    nonempty: bool = False,
    neutrals: Optional[VertexSet] = None,
    power: int = 1,
    neutral_mode: str = NEUTRALS_BOTH,
) -> SetPredicate:
    """A catalog/direct name with params, or a raw (D,O) spec; never both."""
    raw = D is not None or O is not None
    if raw == (name is not None):
        raise BadParams("give exactly one of a parameter name or a raw --D/--O spec")
    if raw:
        if D is None or O is None:
            raise BadParams("a raw spec needs both D and O")
        spec = AllianceSpec(
            parse_intset(D),
            parse_intset(O),
            is_global=is_global,
            neutrals=neutrals,
            require_nonempty=nonempty,
            power=power,
            neutral_mode=neutral_mode,
        )
        return AlliancePredicate(spec)
    if neutrals is not None:
        if name not in CATALOG:
            raise BadParams(f"neutral sets apply to catalog alliance entries, not {name!r}")
        entry = catalog_entry(name, params)
        if entry.complement or entry.neutral_search:
            raise BadParams(f"{entry.name} does not take an explicit neutral set")
        spec = replace(entry.spec, neutrals=neutrals, neutral_mode=neutral_mode)
        return AlliancePredicate(spec, entry.name)
    return predicate_for(name, params)


def _applicability_warnings(g: Graph, name: Optional[str], params: Optional[Mapping[str, object]]) -> List[str]:
    if name in CATALOG and g.min_degree() < 1 and catalog_entry(name, params).min_degree_one:
        return [f"{name} characterization assumes no isolated vertices; graph has one"]
    return []


def run_check(g: Graph, s: VertexSet, predicate: SetPredicate, name: Optional[str] = None, params=None) -> Dict:
    result = predicate.holds(g, s)
    LOG.info(f"check {predicate.name} on n={g.n} set={s}: {result}")
    notes = _applicability_warnings(g, name, params)
    for note in notes:
        LOG.warning(note)
    return {"result": result, "warnings": notes}


def run_solve(
    g: Graph,
    predicate: SetPredicate,
    objective: str = MIN,
    method: str = AUTO,
    stats: bool = False,
) -> Dict:
    result = solve(g, predicate, objective, method)
    return result.to_dict(stats)


def run_propagate(
    g: Graph,
    seeds: VertexSet,
    rounds: Optional[int] = None,
    thresholds: Optional[str] = None,
    strict: bool = False,
) -> Dict:
    tmap = ThresholdMap.parse(g, thresholds) if thresholds else None
    result = propagate(g, seeds, rounds, tmap, strict)
    return result.to_dict()


def run_verify(
    n_max: int,
    prop: Optional[str] = None,
    family: Optional[str] = None,
    params: Optional[Mapping[str, object]] = None,
    workers: Optional[int] = None,
) -> Dict:
    workers = workers or configured_workers()
    if prop is None:
        reports = errata_scan(n_max, workers)
    else:
        reports = [verify_characterization(prop, family, n_max, params, workers)]
    failing = sum(1 for r in reports if not r.holds)
    LOG.info(f"verify n_max={n_max}: {len(reports)} reports, {failing} with counterexamples")
    return {"reports": [r.to_dict() for r in reports], "text": render_errata(reports)}


def run_gallai(g: Graph, reading: str = GALLAI_FRAMEWORK) -> Dict:
    with pywarnings.catch_warnings(record=True) as caught:
        pywarnings.simplefilter("always", IsolatedVertexOutsideApplicability)
        result = gallai_check(g, reading)
    out = result._asdict()
    out["warnings"] = [str(w.message) for w in caught if issubclass(w.category, IsolatedVertexOutsideApplicability)]
    return out


def catalog_listing() -> List[Dict]:
    return [entry.to_dict() for entry in list_catalog()]


def parse_set(text: Optional[str], g: Graph) -> VertexSet:
    return parse_vertex_list(text or "", g.n)

