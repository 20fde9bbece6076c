# app/catalog.py
"""Named graph parameters expressed as (D,O)-alliance specs.

Each entry records where the characterization comes from, whether the
equivalence harness confirms it, and when it only applies to graphs with
no isolated vertex.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List, Mapping, Optional, Tuple

from app.alliance import AllianceSpec, SigmaRho, sigma_rho_spec, sigma_rho_translate
from app.errors import BadParams, UnknownParameter
from app.intset import all_ints, at_least, at_most, finite

STATUS_DEFINITION = "definition"  # the entry is the alliance notion itself
STATUS_VERIFIED = "verified"  # harness finds no counterexample in its applicability range
STATUS_PAPER_ERRATUM = "paper-erratum"  # published characterization, refuted by the harness


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    spec: AllianceSpec
    provenance: str
    status: str = STATUS_DEFINITION
    min_degree_one: bool = False
    complement: bool = False  # the spec applies to V - X, not X
    neutral_search: bool = False  # X qualifies if SOME neutral set N makes the spec hold

    def to_dict(self) -> Dict:
        return {
            "name": self.name,
            "spec": self.spec.describe(),
            "status": self.status,
            "provenance": self.provenance,
            "min_degree_one": self.min_degree_one,
            "complement": self.complement,
            "neutral_search": self.neutral_search,
        }


Params = Mapping[str, object]


def int_param(params: Params, key: str, default: Optional[int] = None, minimum: Optional[int] = None) -> int:
    if key not in params:
        if default is None:
            raise BadParams(f"missing parameter {key!r}")
        return default
    try:
        value = int(params[key])
    except (TypeError, ValueError):
        raise BadParams(f"parameter {key!r} must be an integer, got {params[key]!r}")
    if minimum is not None and value < minimum:
        raise BadParams(f"parameter {key!r} must be >= {minimum}, got {value}")
    return value


def _flag(params: Params, key: str, default: bool) -> bool:
    return bool(int_param(params, key, int(default))) if key in params else default


def _defensive(p: Params) -> CatalogEntry:
    r = int_param(p, "r")
    return CatalogEntry(
        f"defensive({r})",
        AllianceSpec(at_least(r), all_ints(), is_global=_flag(p, "global", True)),
        "defensive r-alliance: every member has at least r more neighbors inside than outside",
    )


def _offensive(p: Params) -> CatalogEntry:
    r = int_param(p, "r")
    return CatalogEntry(
        f"offensive({r})",
        AllianceSpec(all_ints(), at_least(r), is_global=_flag(p, "global", True), require_nonempty=True),
        "offensive r-alliance: every boundary vertex has at least r more neighbors in S; S nonempty",
    )


def _powerful(p: Params) -> CatalogEntry:
    r = int_param(p, "r")
    return CatalogEntry(
        f"powerful({r})",
        AllianceSpec(at_least(r), at_least(r + 2), is_global=_flag(p, "global", True), require_nonempty=True),
        "powerful r-alliance: defensive r-alliance that is also an offensive (r+2)-alliance",
    )


def _boundary_defensive(p: Params) -> CatalogEntry:
    r = int_param(p, "r")
    return CatalogEntry(
        f"boundary-defensive({r})",
        AllianceSpec(finite([r]), all_ints(), is_global=_flag(p, "global", False)),
        "boundary defensive r-alliance: ({r}, Z)-alliance",
    )


def _boundary_offensive(p: Params) -> CatalogEntry:
    r = int_param(p, "r")
    return CatalogEntry(
        f"boundary-offensive({r})",
        AllianceSpec(all_ints(), finite([r]), is_global=_flag(p, "global", False), require_nonempty=True),
        "boundary offensive r-alliance: (Z, {r})-alliance",
    )


def _boundary_powerful(p: Params) -> CatalogEntry:
    r = int_param(p, "r")
    return CatalogEntry(
        f"boundary-powerful({r})",
        AllianceSpec(finite([r]), finite([r + 2]), is_global=_flag(p, "global", False)),
        "boundary powerful r-alliance: ({r}, {r+2})-alliance",
    )


def _general(p: Params) -> CatalogEntry:
    k, l = int_param(p, "k"), int_param(p, "l")
    return CatalogEntry(
        f"general({k},{l})",
        AllianceSpec(at_least(k), at_least(l), is_global=_flag(p, "global", True)),
        "(>=k, >=l)-alliance; l = k+2 gives the powerful k-alliance",
    )


def _signed_dominating(p: Params) -> CatalogEntry:
    k = int_param(p, "k", 1, minimum=1)
    return CatalogEntry(
        f"signed-dominating({k})",
        AllianceSpec(at_least(k - 1), at_least(k + 1), is_global=True),
        "signed k-dominating set <=> global (>=k-1, >=k+1)-alliance",
        status=STATUS_VERIFIED,
    )


def _signed_total_dominating(p: Params) -> CatalogEntry:
    k = int_param(p, "k", 1, minimum=0)
    return CatalogEntry(
        f"signed-total-dominating({k})",
        AllianceSpec(at_least(k), at_least(k), is_global=True),
        "signed total k-dominating set <=> global (>=k, >=k)-alliance; k = 0 needs min degree >= 1",
        status=STATUS_VERIFIED,
        min_degree_one=k == 0,
    )


def _minus_dominating(p: Params) -> CatalogEntry:
    k = int_param(p, "k", 1, minimum=1)
    if k == 1:
        provenance, status = (
            "minus dominating set <=> global (>=0, >=2)-alliance with some neutral set N disjoint from S; both sides reduce to domination",
            STATUS_VERIFIED,
        )
    else:
        # neutral vertices carry no closed-neighborhood condition of their own
        provenance, status = (
            f"published minus {k}-dominating characterization via neutral sets; "
            "refuted at k=2 by the star with center 0 and leaves 1, 2: S = {0,1}, N = {2} passes, but f(N[2]) <= 1",
            STATUS_PAPER_ERRATUM,
        )
    return CatalogEntry(
        f"minus-dominating({k})" if k != 1 else "minus-dominating",
        AllianceSpec(at_least(k - 1), at_least(k + 1), is_global=True),
        provenance,
        status=status,
        neutral_search=True,
    )


def _signed_efficient(p: Params) -> CatalogEntry:
    k = int_param(p, "k", 1, minimum=1)
    return CatalogEntry(
        f"signed-efficient({k})" if k != 1 else "signed-efficient",
        AllianceSpec(finite([k - 1]), finite([k + 1]), is_global=True),
        "efficient signed k-dominating set (f(N[v]) = k) <=> global ({k-1}, {k+1})-alliance",
        status=STATUS_VERIFIED,
    )


def _signed_efficient_paper(p: Params) -> CatalogEntry:
    k = int_param(p, "k", 1, minimum=1)
    return CatalogEntry(
        f"signed-efficient-paper({k})" if k != 1 else "signed-efficient-paper",
        AllianceSpec(finite([k]), finite([k + 2]), is_global=True),
        "published form: efficient signed k-dominating set <=> global boundary powerful k-alliance ({k}, {k+2}); "
        "one off from its own k=1 case, K1 with X = {0} refutes it",
        status=STATUS_PAPER_ERRATUM,
    )


def _partial_monopoly(p: Params) -> CatalogEntry:
    r = int_param(p, "r", 1, minimum=1)
    return CatalogEntry(
        f"partial-monopoly(r={r})" if r != 1 else "partial-monopoly",
        AllianceSpec(all_ints(), at_least(1), is_global=True, power=r),
        "partial monopoly (in the r-th power) <=> global (Z, >=1)-alliance (in the r-th power)",
        status=STATUS_VERIFIED,
    )


def _monopoly(p: Params) -> CatalogEntry:
    r = int_param(p, "r", 1, minimum=1)
    return CatalogEntry(
        f"monopoly(r={r})" if r != 1 else "monopoly",
        AllianceSpec(at_least(-1), at_least(1), is_global=True, power=r),
        "monopoly <=> global (>=-1, >=1)-alliance: |N[v] & X| = delta_X(v)+1 for members gives d >= -1",
        status=STATUS_VERIFIED,
    )


def _monopoly_paper(p: Params) -> CatalogEntry:
    r = int_param(p, "r", 1, minimum=1)
    return CatalogEntry(
        f"monopoly-paper(r={r})" if r != 1 else "monopoly-paper",
        AllianceSpec(at_least(-2), at_least(1), is_global=True, power=r),
        "published monopoly characterization with D = (>=-2); C4 with X = {0,2} refutes it",
        status=STATUS_PAPER_ERRATUM,
    )


def _half_dominating(p: Params) -> CatalogEntry:
    return CatalogEntry(
        "half-dominating",
        AllianceSpec(all_ints(), at_least(0), is_global=True),
        "1/2-dominating set <=> global offensive 0-alliance",
        status=STATUS_VERIFIED,
        min_degree_one=True,
    )


def _half_independent_complement(p: Params) -> CatalogEntry:
    return CatalogEntry(
        "half-independent-complement",
        AllianceSpec(all_ints(), at_least(0), is_global=True),
        "X is 1/2-independent <=> V - X is a global offensive 0-alliance",
        status=STATUS_VERIFIED,
        min_degree_one=True,
        complement=True,
    )


def _positive_influence(p: Params) -> CatalogEntry:
    return CatalogEntry(
        "positive-influence",
        AllianceSpec(at_least(0), at_least(0), is_global=True),
        "positive influence dominating set <=> global (>=0, >=0)-alliance",
        status=STATUS_VERIFIED,
        min_degree_one=True,
    )


def _positive_influence_outside(p: Params) -> CatalogEntry:
    return CatalogEntry(
        "positive-influence-outside",
        AllianceSpec(all_ints(), at_least(0), is_global=True),
        "positive influence condition on V - X only <=> global offensive 0-alliance",
        status=STATUS_VERIFIED,
        min_degree_one=True,
    )


def _robust_majority(p: Params) -> CatalogEntry:
    return CatalogEntry(
        "robust-majority",
        AllianceSpec(at_most(-1), at_most(-1)),
        "robust set with majority thresholds <=> (<0, <0)-alliance",
        status=STATUS_VERIFIED,
        min_degree_one=True,
    )


def _maj1(p: Params) -> CatalogEntry:
    return CatalogEntry(
        "maj1",
        AllianceSpec(all_ints(), at_least(0), is_global=True),
        "MAJ(P) = V after one majority round <=> P is a global offensive 0-alliance",
        status=STATUS_VERIFIED,
        min_degree_one=True,
    )


def _sigma_rho(p: Params) -> CatalogEntry:
    r = int_param(p, "r", minimum=0)
    sr = p.get("sr")
    if not isinstance(sr, SigmaRho):
        raise BadParams("sigma-rho needs a SigmaRho under 'sr'")
    return CatalogEntry(
        f"sigma-rho({sr}, r={r})",
        sigma_rho_spec(sr, r),
        "[sigma,rho]-set on an r-regular graph <=> (D,O)-alliance with d = 2s - r, global iff 0 not in rho",
        status=STATUS_VERIFIED,
    )


def _sigma_rho_paper(p: Params) -> CatalogEntry:
    r = int_param(p, "r", minimum=0)
    sr = p.get("sr")
    if not isinstance(sr, SigmaRho):
        raise BadParams("sigma-rho-paper needs a SigmaRho under 'sr'")
    D, O = sigma_rho_translate(sr, r)
    return CatalogEntry(
        f"sigma-rho-paper({sr}, r={r})",
        AllianceSpec(D, O),
        "published regular-graph translation read as a plain (D,O)-alliance; S = {} with rho = {1} refutes it",
        status=STATUS_PAPER_ERRATUM,
    )


CATALOG: Dict[str, Callable[[Params], CatalogEntry]] = {
    "defensive": _defensive,
    "offensive": _offensive,
    "powerful": _powerful,
    "boundary-defensive": _boundary_defensive,
    "boundary-offensive": _boundary_offensive,
    "boundary-powerful": _boundary_powerful,
    "general": _general,
    "signed-dominating": _signed_dominating,
    "signed-total-dominating": _signed_total_dominating,
    "minus-dominating": _minus_dominating,
    "signed-efficient": _signed_efficient,
    "signed-efficient-paper": _signed_efficient_paper,
    "partial-monopoly": _partial_monopoly,
    "monopoly": _monopoly,
    "monopoly-paper": _monopoly_paper,
    "half-dominating": _half_dominating,
    "half-independent-complement": _half_independent_complement,
    "positive-influence": _positive_influence,
    "positive-influence-outside": _positive_influence_outside,
    "robust-majority": _robust_majority,
    "maj1": _maj1,
    "sigma-rho": _sigma_rho,
    "sigma-rho-paper": _sigma_rho_paper,
}

# parameters shown when listing the catalog
LISTING_DEFAULTS: Tuple[Tuple[str, Dict[str, int]], ...] = (
    ("defensive", {"r": 0}),
    ("offensive", {"r": 1}),
    ("powerful", {"r": 0}),
    ("boundary-defensive", {"r": 0}),
    ("boundary-offensive", {"r": 0}),
    ("boundary-powerful", {"r": 0}),
    ("general", {"k": 0, "l": 1}),
    ("signed-dominating", {"k": 1}),
    ("signed-total-dominating", {"k": 1}),
    ("minus-dominating", {}),
    ("signed-efficient", {}),
    ("signed-efficient-paper", {}),
    ("partial-monopoly", {}),
    ("monopoly", {}),
    ("monopoly-paper", {}),
    ("half-dominating", {}),
    ("half-independent-complement", {}),
    ("positive-influence", {}),
    ("positive-influence-outside", {}),
    ("robust-majority", {}),
    ("maj1", {}),
)


def catalog_entry(name: str, params: Optional[Params] = None) -> CatalogEntry:
    builder = CATALOG.get(name)
    if builder is None:
        raise UnknownParameter(f"unknown parameter {name!r}; known: {', '.join(CATALOG)}")
    return builder(params or {})


def catalog_spec(name: str, params: Optional[Params] = None) -> AllianceSpec:
    return catalog_entry(name, params).spec


def list_catalog() -> List[CatalogEntry]:
    return [catalog_entry(name, params) for name, params in LISTING_DEFAULTS]
