# app/alliance.py
"""The (D,O)-alliance predicate and the [sigma,rho] translation.

A set S is a (D,O)-alliance when every v in S has
delta_S(v) - delta_{V-S}(v) in D and every v in N(S)-S has it in O.
The O-condition looks only at the boundary N(S)-S, never at
vertices with no neighbor in S.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from typing import FrozenSet, Iterable, Optional, Tuple

import numpy as np

from app.errors import BadParams, NeutralsOverlapSet, ParseError, SigmaRhoOutOfRange, VertexOutOfRange
from app.graph import Graph, VertexSet, graph_power, popcount
from app.intset import IntSet, contains, contains_array, finite, format_intset, parse_intset

LOG = logging.getLogger("app.alliance")

# where the domination requirement of a with-neutrals check is evaluated
NEUTRALS_BOTH = "both"  # D/O in G-N, domination in G-N and in G
NEUTRALS_HOST = "host"  # D/O in G-N, domination in G
NEUTRALS_REDUCED = "reduced"  # everything in G-N
NEUTRAL_MODES = (NEUTRALS_BOTH, NEUTRALS_HOST, NEUTRALS_REDUCED)


@dataclass(frozen=True)
class AllianceSpec:
    D: IntSet
    O: IntSet
    is_global: bool = False
    neutrals: Optional[VertexSet] = None
    require_nonempty: bool = False
    power: int = 1
    neutral_mode: str = NEUTRALS_BOTH

    def __post_init__(self) -> None:
        if self.power < 1:
            raise BadParams(f"alliance power must be >= 1, got {self.power}")
        if self.neutral_mode not in NEUTRAL_MODES:
            raise BadParams(f"unknown neutral mode {self.neutral_mode!r}; known: {', '.join(NEUTRAL_MODES)}")

    def with_neutrals(self, neutrals: Optional[VertexSet]) -> "AllianceSpec":
        return replace(self, neutrals=neutrals)

    def describe(self) -> str:
        parts = [f"D={format_intset(self.D)}", f"O={format_intset(self.O)}"]
        if self.is_global:
            parts.append("global")
        if self.require_nonempty:
            parts.append("nonempty")
        if self.power > 1:
            parts.append(f"power={self.power}")
        if self.neutrals is not None:
            parts.append(f"neutrals={self.neutrals} ({self.neutral_mode})")
        return " ".join(parts)


def _host(g: Graph, spec: AllianceSpec) -> Graph:
    return graph_power(g, spec.power) if spec.power > 1 else g


def _removed_mask(g: Graph, spec: AllianceSpec) -> int:
    if spec.neutrals is None:
        return 0
    if spec.neutrals.n != g.n:
        raise VertexOutOfRange(f"neutral set is over {spec.neutrals.n} vertices, graph has {g.n}")
    return spec.neutrals.mask


def check_alliance(g: Graph, s: VertexSet, spec: AllianceSpec) -> bool:
    if s.n != g.n:
        raise VertexOutOfRange(f"candidate set is over {s.n} vertices, graph has {g.n}")
    removed = _removed_mask(g, spec)
    if s.mask & removed:
        raise NeutralsOverlapSet(f"neutrals {spec.neutrals} intersect candidate set {s}")
    if spec.require_nonempty and not s.mask:
        return False

    h = _host(g, spec)
    alive = ((1 << g.n) - 1) & ~removed
    neutral_needs_domination = spec.is_global and spec.neutral_mode != NEUTRALS_REDUCED
    for v in range(g.n):
        if removed >> v & 1:
            # neutral vertices carry no D/O condition
            if neutral_needs_domination and not h.masks[v] & s.mask:
                return False
            continue
        nbrs = h.masks[v] & alive
        inside = (nbrs & s.mask).bit_count()
        d = 2 * inside - nbrs.bit_count()
        if s.mask >> v & 1:
            if not contains(spec.D, d):
                return False
        elif inside:
            if not contains(spec.O, d):
                return False
        elif spec.is_global:
            return False
    return True


def alliance_table(g: Graph, spec: AllianceSpec, masks: np.ndarray) -> np.ndarray:
    """check_alliance evaluated for every bitmask in `masks` at once.

    Masks that meet the neutral set are reported infeasible instead of
    raising, so the table can cover the whole subset space.
    """
    masks = np.asarray(masks, dtype=np.int64)
    removed = _removed_mask(g, spec)
    h = _host(g, spec)
    alive = ((1 << g.n) - 1) & ~removed
    neutral_needs_domination = spec.is_global and spec.neutral_mode != NEUTRALS_REDUCED

    ok = np.ones(masks.shape, dtype=bool)
    if removed:
        ok &= (masks & removed) == 0
    if spec.require_nonempty:
        ok &= masks != 0
    for v in range(g.n):
        if removed >> v & 1:
            if neutral_needs_domination:
                ok &= (masks & h.masks[v]) != 0
            continue
        nbrs = h.masks[v] & alive
        inside = popcount(masks & nbrs, g.n)
        d = 2 * inside - nbrs.bit_count()
        member = (masks >> v & 1).astype(bool)
        ok &= np.where(member, contains_array(spec.D, d), (inside == 0) | contains_array(spec.O, d))
        if spec.is_global:
            ok &= member | (inside > 0)
    return ok


@dataclass(frozen=True)
class SigmaRho:
    sigma: FrozenSet[int]
    rho: FrozenSet[int]

    @classmethod
    def of(cls, sigma: Iterable[int], rho: Iterable[int]) -> "SigmaRho":
        sigma, rho = frozenset(int(x) for x in sigma), frozenset(int(x) for x in rho)
        if any(x < 0 for x in sigma | rho):
            raise SigmaRhoOutOfRange("sigma and rho hold non-negative degrees only")
        return cls(sigma, rho)

    @classmethod
    def parse(cls, sigma: str, rho: str) -> "SigmaRho":
        sets = []
        for text in (sigma, rho):
            parsed = parse_intset(text)
            if parsed.variant != "finite":
                raise ParseError(f"sigma/rho must be finite sets like {{0,1}}, got {text!r}")
            sets.append(parsed.values)
        return cls.of(*sets)

    def __str__(self) -> str:
        return f"sigma={{{','.join(map(str, sorted(self.sigma)))}}} rho={{{','.join(map(str, sorted(self.rho)))}}}"


def sigma_rho_translate(sr: SigmaRho, r: int) -> Tuple[IntSet, IntSet]:
    """On an r-regular graph d = 2*delta_S(v) - r, so s in sigma maps to 2s - r."""
    if r < 0:
        raise SigmaRhoOutOfRange(f"regular degree must be >= 0, got {r}")
    out_of_range = sorted(x for x in sr.sigma | sr.rho if not 0 <= x <= r)
    if out_of_range:
        raise SigmaRhoOutOfRange(f"members {out_of_range} exceed the regular degree {r}")
    return finite(2 * s - r for s in sr.sigma), finite(2 * s - r for s in sr.rho)


def sigma_rho_spec(sr: SigmaRho, r: int) -> AllianceSpec:
    """Alliance spec equivalent to the [sigma,rho] condition on r-regular graphs.

    A [sigma,rho]-set also constrains vertices outside N[S] (they have
    delta_S = 0), which the O-condition never sees; when 0 is not in rho
    that constraint is exactly domination.
    """
    D, O = sigma_rho_translate(sr, r)
    return AllianceSpec(D, O, is_global=0 not in sr.rho)


def check_sigma_rho(g: Graph, s: VertexSet, sr: SigmaRho) -> bool:
    if s.n != g.n:
        raise VertexOutOfRange(f"candidate set is over {s.n} vertices, graph has {g.n}")
    for v in range(g.n):
        inside = (g.masks[v] & s.mask).bit_count()
        if inside not in (sr.sigma if s.mask >> v & 1 else sr.rho):
            return False
    return True
