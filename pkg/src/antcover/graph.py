"""Simple undirected graphs with stable integer vertex ids."""

from __future__ import annotations

import json
from typing import Iterable

from .errors import InputError

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    """Canonical (min, max) form of an undirected edge."""
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph.

    Vertex ids are non-negative integers that survive deletions unchanged,
    so graphs derived from a host keep referring to the host's labels.
    The sets returned by neighbors() are internal state; callers must not
    mutate them.
    """

    __slots__ = ("_adj", "_edges")

    def __init__(self, adj: dict[int, set[int]]):
        self._adj = adj
        self._edges: frozenset[Edge] | None = None

    @classmethod
    def from_data(cls, vertices: Iterable[int], edges: Iterable[Edge]) -> Graph:
        adj: dict[int, set[int]] = {int(v): set() for v in vertices}
        for u, v in edges:
            if u == v:
                raise InputError(f"loop at vertex {u}")
            if u not in adj or v not in adj:
                raise InputError(f"edge ({u}, {v}) has an endpoint outside the vertex set")
            adj[u].add(v)
            adj[v].add(u)
        return cls(adj)

    @property
    def vertices(self):
        """Set-like view of the vertex ids (no copy)."""
        return self._adj.keys()

    @property
    def vertex_count(self) -> int:
        return len(self._adj)

    @property
    def edges(self) -> frozenset[Edge]:
        if self._edges is None:
            self._edges = frozenset(
                (u, v) for u, nbrs in self._adj.items() for v in nbrs if u < v
            )
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> set[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise InputError(f"unknown vertex {v}") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_vertex(self, v: int) -> bool:
        return v in self._adj

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self._adj.get(u)
        return nbrs is not None and v in nbrs

    def induced(self, keep: Iterable[int]) -> Graph:
        """Induced subgraph on the given vertices (ids preserved)."""
        keep_set = set(keep)
        unknown = keep_set - self._adj.keys()
        if unknown:
            raise InputError(f"unknown vertices {sorted(unknown)}")
        adj = {v: self._adj[v] & keep_set for v in keep_set}
        return Graph(adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj.keys() == other._adj.keys() and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((frozenset(self._adj), self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.vertex_count}, m={self.edge_count})"


def build_graph(n: int, edge_list: Iterable[Edge]) -> Graph:
    """Graph on vertices 0..n-1 with the given edges; duplicates collapse.

    Raises InputError on loops or endpoints outside range.
    """
    if n < 0:
        raise InputError("vertex count must be non-negative")
    adj: dict[int, set[int]] = {v: set() for v in range(n)}
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise InputError(f"loop at vertex {u}")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(adj)


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the connected components, sorted by minimum vertex id."""
    seen: set[int] = set()
    comps = []
    for root in sorted(g.vertices):
        if root in seen:
            continue
        comp = {root}
        stack = [root]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def remove_vertices(g: Graph, s: Iterable[int]) -> Graph:
    """Induced subgraph after deleting the vertices in s (ids preserved)."""
    s_set = set(s)
    unknown = s_set - g.vertices
    if unknown:
        raise InputError(f"unknown vertices {sorted(unknown)}")
    return g.induced(g.vertices - s_set)


def shape_check(g: Graph) -> str:
    """Classify a connected graph with at least one edge.

    Returns "clique" when all pairs are adjacent, "star" when one center
    is adjacent to all others and no other pair is adjacent, else
    "neither". Ties go to clique, so K2 reports clique.
    """
    n = g.vertex_count
    if g.edge_count == 0:
        raise InputError("shape_check requires at least one edge")
    if len(connected_components(g)) != 1:
        raise InputError("shape_check requires a connected graph")
    if all(g.degree(v) == n - 1 for v in g.vertices):
        return "clique"
    centers = [v for v in g.vertices if g.degree(v) == n - 1]
    if centers:
        center = centers[0]
        if all(g.degree(v) == 1 for v in g.vertices if v != center):
            return "star"
    return "neither"


def relabel_offset(g: Graph, offset: int) -> Graph:
    """Copy of g with every vertex id shifted by offset."""
    return Graph.from_data(
        (v + offset for v in g.vertices),
        ((u + offset, v + offset) for u, v in g.edges),
    )


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union; g2 is shifted past g1's largest id."""
    offset = max(g1.vertices, default=-1) + 1
    shifted = relabel_offset(g2, offset)
    return Graph.from_data(
        list(g1.vertices) + list(shifted.vertices),
        list(g1.edges) + list(shifted.edges),
    )


def _require_contiguous(g: Graph) -> int:
    n = g.vertex_count
    if set(g.vertices) != set(range(n)):
        raise InputError("serialization requires contiguous vertex ids 0..n-1")
    return n


def serialize_edgelist(g: Graph) -> str:
    """Canonical edge-list text: 'n m' then one sorted 'u v' line per edge."""
    n = _require_contiguous(g)
    lines = [f"{n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows or len(rows[0]) != 2:
        raise InputError("edge-list input must start with a 'n m' line")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise InputError(f"malformed edge-list input: {exc}") from None
    if len(edges) != m:
        raise InputError(f"header declares {m} edges, found {len(edges)}")
    return build_graph(n, edges)


def serialize_structured(g: Graph) -> str:
    """Structured-text form: {"n": ..., "edges": [[u, v], ...]}."""
    n = _require_contiguous(g)
    payload = {"n": n, "edges": [list(e) for e in sorted(g.edges)]}
    return json.dumps(payload) + "\n"


def parse_structured(text: str) -> Graph:
    try:
        payload = json.loads(text)
        n = int(payload["n"])
        edges = [(int(a), int(b)) for a, b in payload["edges"]]
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed structured input: {exc}") from None
    return build_graph(n, edges)
