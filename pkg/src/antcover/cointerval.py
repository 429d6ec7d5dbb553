"""Co-interval and threshold machinery: sigma-subgraphs, big ants, recognition."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .blocks import block_decomposition, is_block_graph
from .errors import InputError, NotBlockGraphError
from .graph import Edge, Graph, norm_edge
from .recognition import cointerval_order_and_intervals, prefix_neighbourhood_order_ok


@dataclass(frozen=True)
class EdgeSubgraph:
    """A subgraph given by explicit vertex and edge sets of a host graph."""

    host: Graph = field(compare=False, repr=False)
    vertices: frozenset[int]
    edges: frozenset[Edge]


@dataclass(frozen=True)
class BigAnt:
    """The subgraph spanned by a clique plus the full stars of two apexes.

    The realized edge set is E(Q) together with every host edge incident
    to apex_u or apex_v; apex_u == apex_v gives the one-apex form, which
    is a threshold graph.
    """

    host: Graph = field(compare=False, repr=False)
    block: frozenset[int]
    apex_u: int
    apex_v: int
    vertices: frozenset[int]
    edges: frozenset[Edge]


@dataclass(frozen=True)
class IntervalRepresentation:
    """Closed integer intervals; disjointness encodes adjacency."""

    intervals: dict[int, tuple[int, int]]

    def satisfies(self, vertices: Iterable[int], edges: frozenset[Edge]) -> bool:
        """True iff intervals are disjoint exactly on the given edges."""
        vs = sorted(vertices)
        for i, u in enumerate(vs):
            lu, hu = self.intervals[u]
            for v in vs[i + 1:]:
                lv, hv = self.intervals[v]
                disjoint = hu < lv or hv < lu
                if disjoint != (norm_edge(u, v) in edges):
                    return False
        return True

    def serialize(self) -> str:
        lines = [f"{v} {lo} {hi}" for v, (lo, hi) in sorted(self.intervals.items())]
        return "\n".join(lines) + "\n"

    @classmethod
    def parse(cls, text: str) -> "IntervalRepresentation":
        intervals = {}
        for ln in text.splitlines():
            if not ln.strip():
                continue
            v, lo, hi = (int(x) for x in ln.split())
            intervals[v] = (lo, hi)
        return cls(intervals)


def _clique_edges(block: Iterable[int]) -> set[Edge]:
    members = sorted(block)
    return {(u, v) for i, u in enumerate(members) for v in members[i + 1:]}


def sigma_subgraph(g: Graph, sigma: Sequence[int]) -> EdgeSubgraph:
    """Subgraph grown by the shrinking-neighbourhood recursion over sigma.

    Working set i equals the common neighbourhood of the first i ordered
    vertices; step i contributes the edges from sigma[i] into that set.
    The result is always co-interval.
    """
    order = tuple(sigma)
    if len(order) != g.vertex_count or set(order) != set(g.vertices):
        raise InputError("sigma must be a permutation of the vertex set")
    verts: set[int] = set()
    edges: set[Edge] = set()
    current: set[int] | None = None
    for v in order:
        current = set(g.neighbors(v)) if current is None else current & g.neighbors(v)
        if not current:
            break
        verts.add(v)
        verts |= current
        edges.update(norm_edge(v, w) for w in current)
    return EdgeSubgraph(g, frozenset(verts), frozenset(edges))


def big_ant(g: Graph, q: Iterable[int], u: int, v: int) -> BigAnt:
    """The big ant over clique q with apexes u and v (possibly equal)."""
    block = frozenset(q)
    if u not in block or v not in block:
        raise InputError("apexes must lie in the clique")
    members = sorted(block)
    for i, a in enumerate(members):
        nbrs = g.neighbors(a)
        for b in members[i + 1:]:
            if b not in nbrs:
                raise InputError(f"vertex set is not a clique: missing edge ({a}, {b})")
    edges = _clique_edges(block)
    edges.update(norm_edge(u, w) for w in g.neighbors(u))
    edges.update(norm_edge(v, w) for w in g.neighbors(v))
    vertices = block | g.neighbors(u) | g.neighbors(v)
    a, b = (u, v) if u <= v else (v, u)
    return BigAnt(g, block, a, b, frozenset(vertices), frozenset(edges))


def is_cointerval(h: Graph) -> tuple[int, ...] | None:
    """An ordering witnessing that h is co-interval, or None.

    The witness satisfies the prefix-neighbourhood contract: for positions
    i < j < k, an edge at (j, k) forces an edge at (i, k).
    """
    result = cointerval_order_and_intervals(h)
    return None if result is None else result[0]


def cointerval_representation(h: Graph) -> IntervalRepresentation:
    """Integer interval model of a co-interval graph (disjoint iff edge)."""
    result = cointerval_order_and_intervals(h)
    if result is None:
        raise InputError("graph is not co-interval")
    return IntervalRepresentation(result[1])


def ant_interval_representation(ant: BigAnt) -> IntervalRepresentation:
    """Direct layout for a big ant: clique spread out, apexes at the ends.

    Clique intervals are pairwise disjoint with apex_u leftmost and (when
    distinct) apex_v rightmost; each outside neighbour gets an interval
    meeting everything except the apex intervals it is adjacent to.
    """
    block = sorted(ant.block)
    s = len(block)
    u, v = ant.apex_u, ant.apex_v
    middle = [x for x in block if x not in (u, v)]
    layout = [u] + middle + ([v] if v != u else [])
    intervals: dict[int, tuple[int, int]] = {}
    for i, x in enumerate(layout):
        intervals[x] = (4 * i + 1, 4 * i + 2)
    right_end = 4 * s
    before_last = 4 * (s - 1)  # just left of the final clique interval
    for w in sorted(ant.vertices - ant.block):
        adj_u = w in ant.host.neighbors(u)
        adj_v = w in ant.host.neighbors(v)
        if u == v or (adj_u and not adj_v):
            intervals[w] = (3, right_end)
        elif adj_v and not adj_u:
            intervals[w] = (0, before_last)
        else:
            intervals[w] = (3, before_last)
    return IntervalRepresentation(intervals)


def is_threshold(h: Graph) -> bool:
    """Iterated peeling of isolated and universal vertices empties h."""
    adj = {v: set(h.neighbors(v)) for v in h.vertices}
    while adj:
        n = len(adj)
        peel = [v for v, nbrs in adj.items() if not nbrs or len(nbrs) == n - 1]
        if not peel:
            return False
        for v in peel:
            for w in adj[v]:
                adj[w].discard(v)
            del adj[v]
    return True


def _maximal_ants(g: Graph, candidates: Iterable[tuple[frozenset[int], int, int]]) -> list[BigAnt]:
    """Build ants, drop edge-dominated ones, dedupe equal edge sets."""
    ants = [big_ant(g, q, u, v) for q, u, v in candidates]
    by_edges: dict[frozenset[Edge], BigAnt] = {}
    for ant in ants:
        key = ant.edges
        prev = by_edges.get(key)
        if prev is None or (min(ant.block), ant.apex_u, ant.apex_v) < (
            min(prev.block), prev.apex_u, prev.apex_v
        ):
            by_edges[key] = ant
    distinct = list(by_edges.values())
    keep = []
    for ant in distinct:
        if not any(other is not ant and ant.edges < other.edges for other in distinct):
            keep.append(ant)
    return sorted(keep, key=lambda a: (min(a.block), a.apex_u, a.apex_v))


def maximal_cointerval_subgraphs(g: Graph) -> list[BigAnt]:
    """All maximal co-interval subgraphs of a block graph, as big ants."""
    if not is_block_graph(g):
        raise NotBlockGraphError("maximal co-interval enumeration needs a block graph")
    bd = block_decomposition(g)
    candidates = []
    for b in bd.blocks:
        if len(b) < 2:
            continue
        members = sorted(b)
        for i, u in enumerate(members):
            for v in members[i:]:
                candidates.append((b, u, v))
    return _maximal_ants(g, candidates)


def maximal_threshold_subgraphs(g: Graph) -> list[BigAnt]:
    """All maximal threshold subgraphs of a block graph: one-apex big ants."""
    if not is_block_graph(g):
        raise NotBlockGraphError("maximal threshold enumeration needs a block graph")
    bd = block_decomposition(g)
    candidates = []
    for b in bd.blocks:
        if len(b) < 2:
            continue
        for u in sorted(b):
            candidates.append((b, u, u))
    return _maximal_ants(g, candidates)


def check_cointerval_order(edges: frozenset[Edge], order: Sequence[int]) -> bool:
    """Public wrapper for the ordering contract used throughout the tests."""
    return prefix_neighbourhood_order_ok(edges, tuple(order))
