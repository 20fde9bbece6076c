# app/graph.py
"""Simple undirected graphs over vertices 0..n-1, vertex sets, and the
primitives every other module reads: degree splits, domination, powers.

Vertex sets are bitmasks so the solvers and the harness can walk all 2^n
subsets cheaply; the Graph keeps both frozenset adjacency (for readable
code) and per-vertex neighbor masks (for the hot loops).
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from app.errors import (
    BadParams,
    DuplicateEdge,
    MalformedHeader,
    ParseError,
    SelfLoop,
    UnknownFamily,
    VertexOutOfRange,
)

LOG = logging.getLogger("app.graph")

FAMILIES = ("path", "cycle", "complete", "complete-bipartite", "star", "random-gnp")


@dataclass(frozen=True)
class VertexSet:
    """Subset of 0..n-1 stored as a bitmask; bit v set means v is a member."""

    n: int
    mask: int = 0

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask >> self.n:
            raise VertexOutOfRange(f"vertex mask {self.mask:#x} has members outside 0..{self.n - 1}")

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in members:
            v = int(v)
            if not 0 <= v < n:
                raise VertexOutOfRange(f"vertex {v} not in 0..{n - 1}")
            mask |= 1 << v
        return cls(n, mask)

    @classmethod
    def empty(cls, n: int) -> "VertexSet":
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.mask >> v & 1)

    def __iter__(self) -> Iterator[int]:
        mask = self.mask
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __str__(self) -> str:
        return "{" + ",".join(str(v) for v in self) + "}"

    def members(self) -> Tuple[int, ...]:
        return tuple(self)

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, ((1 << self.n) - 1) ^ self.mask)

    def union(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.n, self.mask | other.mask)

    def difference(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.n, self.mask & ~other.mask)

    def isdisjoint(self, other: "VertexSet") -> bool:
        return not self.mask & other.mask

    def issubset(self, other: "VertexSet") -> bool:
        return not self.mask & ~other.mask


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: Tuple[frozenset, ...]
    masks: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adjacency) != self.n:
            raise BadParams(f"adjacency has {len(self.adjacency)} rows for n={self.n}")
        masks = []
        for v, nbrs in enumerate(self.adjacency):
            mask = 0
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise VertexOutOfRange(f"neighbor {u} of {v} not in 0..{self.n - 1}")
                if u == v:
                    raise SelfLoop(f"self-loop at vertex {v}")
                if v not in self.adjacency[u]:
                    raise BadParams(f"adjacency not symmetric on edge {{{v},{u}}}")
                mask |= 1 << u
            masks.append(mask)
        object.__setattr__(self, "masks", tuple(masks))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        adjacency: List[set] = [set() for _ in range(n)]
        for u, v in edges:
            for w in (u, v):
                if not 0 <= w < n:
                    raise VertexOutOfRange(f"vertex {w} not in 0..{n - 1}")
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            if v in adjacency[u]:
                raise DuplicateEdge(f"edge {{{min(u, v)},{max(u, v)}}} listed twice")
            adjacency[u].add(v)
            adjacency[v].add(u)
        return cls(n, tuple(frozenset(a) for a in adjacency))

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        nodes = sorted(g.nodes())
        if nodes != list(range(len(nodes))):
            g = nx.convert_node_labels_to_integers(g, ordering="sorted")
        return cls.from_edges(g.number_of_nodes(), g.edges())

    @property
    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adjacency[u]) if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adjacency[v])

    def degrees(self) -> List[int]:
        return [len(a) for a in self.adjacency]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def is_regular(self, r: Optional[int] = None) -> bool:
        degs = set(self.degrees())
        if len(degs) > 1:
            return False
        return r is None or not degs or degs == {r}

    def neighbors(self, v: int) -> frozenset:
        self._check_vertex(v)
        return self.adjacency[v]

    def vertex_set(self, members: Iterable[int] = ()) -> VertexSet:
        return VertexSet.of(self.n, members)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(f"vertex {v} not in 0..{self.n - 1}")


def parse_edge_list(text: str) -> Graph:
    """Parse "n m" followed by m lines "u v". Blank lines and '#' comments are skipped."""
    lines = [ln.split() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln[0].startswith("#")]
    if not lines:
        raise MalformedHeader("empty input; expected header 'n m'")
    header = lines[0]
    try:
        n, m = (int(tok) for tok in header)
    except ValueError:
        raise MalformedHeader(f"header must be two integers 'n m', got {' '.join(header)!r}")
    if n < 0 or m < 0:
        raise MalformedHeader(f"header values must be non-negative, got n={n} m={m}")
    body = lines[1:]
    if len(body) != m:
        raise MalformedHeader(f"header declares {m} edges but {len(body)} edge lines follow")
    edges = []
    for ln in body:
        try:
            u, v = (int(tok) for tok in ln)
        except ValueError:
            raise ParseError(f"edge line must be two integers 'u v', got {' '.join(ln)!r}")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def serialize_edge_list(g: Graph) -> str:
    edges = g.edges
    lines = [f"{g.n} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_vertex_list(text: str, n: int) -> VertexSet:
    """'0,2', '{0,2}', '0 2' or '' (empty set)."""
    body = text.strip().strip("{}").replace(",", " ").split()
    try:
        members = [int(tok) for tok in body]
    except ValueError:
        raise ParseError(f"vertex list must contain integers, got {text!r}")
    return VertexSet.of(n, members)


class Lcg64:
    """64-bit linear congruential generator (Knuth's MMIX constants).

    Output is the high 32 bits of the state after each step, so random-gnp
    graphs are reproducible from (n, num, den, seed) in any language.
    """

    MULTIPLIER = 6364136223846793005
    INCREMENT = 1442695040888963407
    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next(self) -> int:
        self.state = (self.MULTIPLIER * self.state + self.INCREMENT) & self.MASK
        return self.state >> 32


def random_gnp(n: int, num: int, den: int, seed: int) -> Graph:
    if n < 0 or den <= 0 or not 0 <= num <= den:
        raise BadParams(f"random-gnp needs n>=0 and 0<=num<=den, den>0; got n={n} p={num}/{den}")
    rng = Lcg64(seed)
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.next() % den < num]
    return Graph.from_edges(n, edges)


def generate(kind: str, params: Sequence[int], seed: Optional[int] = None) -> Graph:
    params = [int(p) for p in params]
    expected = {"path": 1, "cycle": 1, "complete": 1, "complete-bipartite": 2, "star": 1, "random-gnp": 3}
    if kind not in expected:
        raise UnknownFamily(f"unknown graph family {kind!r}; known: {', '.join(FAMILIES)}")
    if len(params) != expected[kind] or any(p < 0 for p in params):
        raise BadParams(f"{kind} takes {expected[kind]} non-negative integer parameter(s), got {params}")

    if kind == "path":
        return Graph.from_networkx(nx.path_graph(params[0]))
    if kind == "cycle":
        if params[0] < 3:
            raise BadParams(f"cycle needs n>=3, got {params[0]}")
        return Graph.from_networkx(nx.cycle_graph(params[0]))
    if kind == "complete":
        return Graph.from_networkx(nx.complete_graph(params[0]))
    if kind == "complete-bipartite":
        return Graph.from_networkx(nx.complete_bipartite_graph(params[0], params[1]))
    if kind == "star":
        # center 0, leaves 1..k
        return Graph.from_networkx(nx.star_graph(params[0]))
    if seed is None:
        raise BadParams("random-gnp requires a seed")
    n, num, den = params
    return random_gnp(n, num, den, seed)


def graph_power(g: Graph, r: int) -> Graph:
    """Edge {u,v} iff 1 <= d_g(u,v) <= r; distances by BFS from every vertex."""
    if r < 1:
        raise BadParams(f"graph power needs r>=1, got {r}")
    if r == 1:
        return g
    nxg = g.to_networkx()
    adjacency = []
    for v in range(g.n):
        reach = nx.single_source_shortest_path_length(nxg, v, cutoff=r)
        adjacency.append(frozenset(u for u in reach if u != v))
    return Graph(g.n, tuple(adjacency))


def degree_split(g: Graph, s: VertexSet, v: int) -> Tuple[int, int]:
    """(delta_S(v), delta_{V-S}(v))."""
    g._check_vertex(v)
    inside = (g.masks[v] & s.mask).bit_count()
    return inside, len(g.adjacency[v]) - inside


def is_dominating(g: Graph, s: VertexSet) -> bool:
    covered = s.mask
    for v in s:
        covered |= g.masks[v]
    return covered == (1 << g.n) - 1


@lru_cache(maxsize=16)
def _pairs(n: int) -> Tuple[Tuple[int, int], ...]:
    return tuple(combinations(range(n), 2))


def labeled_graph_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def labeled_graph(n: int, bits: int) -> Graph:
    """The labeled graph whose edge set is `bits` over the lexicographic pair list."""
    pairs = _pairs(n)
    return Graph.from_edges(n, (pairs[i] for i in range(len(pairs)) if bits >> i & 1))


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every simple graph on vertices 0..n-1, edge subsets in increasing bitmask order."""
    for bits in range(labeled_graph_count(n)):
        yield labeled_graph(n, bits)


GRAPH_FAMILIES = ("all", "all-min-degree-1", "cycles", "paths", "complete", "stars", "regular")
LABELED_FAMILIES = ("all", "all-min-degree-1", "regular")


def family_slice(family: str, n: int, lo: int = 0, hi: Optional[int] = None) -> Iterator[Graph]:
    """Members of `family` on exactly n vertices.

    Labeled families are restricted to edge bitmasks in [lo, hi), so a
    family can be split into independent chunks.
    """
    if family not in GRAPH_FAMILIES:
        raise UnknownFamily(f"unknown graph family {family!r}; known: {', '.join(GRAPH_FAMILIES)}")
    if family in LABELED_FAMILIES:
        hi = labeled_graph_count(n) if hi is None else hi
        for bits in range(lo, hi):
            g = labeled_graph(n, bits)
            if family == "all" or (family == "regular" and g.is_regular()) or (
                family == "all-min-degree-1" and g.min_degree() >= 1
            ):
                yield g
    elif family == "cycles" and n >= 3:
        yield generate("cycle", [n])
    elif family == "paths":
        yield generate("path", [n])
    elif family == "complete":
        yield generate("complete", [n])
    elif family == "stars" and n >= 2:
        yield generate("star", [n - 1])


def family_graphs(family: str, n_max: int, n_min: int = 1) -> Iterator[Graph]:
    for n in range(n_min, n_max + 1):
        yield from family_slice(family, n)


@lru_cache(maxsize=32)
def _popcount_table(n: int) -> np.ndarray:
    table = np.zeros(1 << n, dtype=np.uint8)
    for i in range(n):
        table[1 << i: 1 << (i + 1)] = table[: 1 << i] + 1
    return table


def popcount(values: np.ndarray, n: int) -> np.ndarray:
    """Bit counts of non-negative masks below 2^n."""
    return _popcount_table(n)[values].astype(np.int64)
