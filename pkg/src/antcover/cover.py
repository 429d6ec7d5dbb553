"""Minimum co-interval and threshold covers of block graphs.

The loop peels one big ant per iteration off a connected component of the
residual graph: whole cliques and stars first, then leaf blocks with at
least three vertices, then near-leaf blocks with two apexes (one apex in
the threshold variant). The number of elements equals the co-boxicity
(respectively the threshold co-dimension) of the input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blocks import block_decomposition, is_block_graph
from .cointerval import (
    BigAnt,
    EdgeSubgraph,
    IntervalRepresentation,
    cointerval_representation,
    is_cointerval,
    is_threshold,
)
from .errors import InputError, NotBlockGraphError
from .graph import Edge, Graph, norm_edge
from .peel import COINTERVAL, THRESHOLD, IterationTrace, peel_cover

__all__ = [
    "Cover",
    "IterationTrace",
    "BoxRepresentation",
    "VerificationReport",
    "min_cointerval_cover",
    "min_threshold_cover",
    "coboxicity",
    "cothdim",
    "verify_cover",
    "validate_run",
    "cover_to_box_representation",
    "path_coboxicity",
    "is_structural_big_ant",
    "cover_to_dict",
    "cover_from_dict",
    "box_to_dict",
]


@dataclass(frozen=True)
class Cover:
    host: Graph
    elements: tuple
    kind: str  # "cointerval" or "threshold"


@dataclass(frozen=True)
class VerificationReport:
    not_subgraphs: tuple[int, ...]
    recognition_failures: tuple[int, ...]
    uncovered: frozenset[Edge]

    @property
    def valid(self) -> bool:
        return not (self.not_subgraphs or self.recognition_failures or self.uncovered)


@dataclass(frozen=True)
class BoxRepresentation:
    """Axis-parallel integer boxes; disjointness encodes host adjacency."""

    dimension: int
    boxes: dict[int, tuple[tuple[int, int], ...]]

    def satisfies(self, g: Graph) -> bool:
        verts = sorted(g.vertices)
        for i, u in enumerate(verts):
            bu = self.boxes[u]
            for v in verts[i + 1:]:
                bv = self.boxes[v]
                disjoint = any(
                    hu < lv or hv < lu for (lu, hu), (lv, hv) in zip(bu, bv)
                )
                if disjoint != g.has_edge(u, v):
                    return False
        return True


def _checked_block_graph(g: Graph):
    bd = block_decomposition(g)
    for b in bd.blocks:
        members = sorted(b)
        for i, u in enumerate(members):
            nbrs = g.neighbors(u)
            for v in members[i + 1:]:
                if v not in nbrs:
                    raise NotBlockGraphError(
                        f"block containing {u} and {v} is not a clique"
                    )
    return bd


def min_cointerval_cover(
    g: Graph, trace_components: bool = True
) -> tuple[Cover, list[IterationTrace]]:
    """Minimum co-interval cover of a block graph, with per-iteration traces.

    Free choices (component, block, cut-vertex) are resolved by minimum
    vertex id, so the output is deterministic. Set trace_components=False
    on very large inputs to skip the per-iteration component snapshots.
    """
    bd = _checked_block_graph(g)
    elements, traces = peel_cover(g, bd, COINTERVAL, trace_components)
    return Cover(g, tuple(elements), COINTERVAL), traces


def min_threshold_cover(
    g: Graph, trace_components: bool = True
) -> tuple[Cover, list[IterationTrace]]:
    """Minimum threshold cover of a block graph; elements are one-apex ants."""
    bd = _checked_block_graph(g)
    elements, traces = peel_cover(g, bd, THRESHOLD, trace_components)
    return Cover(g, tuple(elements), THRESHOLD), traces


def coboxicity(g: Graph) -> int:
    """Minimum number of co-interval subgraphs covering all edges of g."""
    cover, _ = min_cointerval_cover(g, trace_components=False)
    return len(cover.elements)


def cothdim(g: Graph) -> int:
    """Minimum number of threshold subgraphs covering all edges of g."""
    cover, _ = min_threshold_cover(g, trace_components=False)
    return len(cover.elements)


def path_coboxicity(n: int) -> int:
    """Closed form for paths: ceil((n - 1) / 3)."""
    if n < 1:
        raise InputError("paths need at least one vertex")
    return (n + 1) // 3


def _element_graph(element) -> Graph:
    return Graph.from_data(element.vertices, element.edges)


def verify_cover(g: Graph, c: Cover) -> VerificationReport:
    """Check subgraph containment, per-element recognition and coverage."""
    not_subgraphs = []
    recognition_failures = []
    covered: set[Edge] = set()
    for i, el in enumerate(c.elements):
        if not (el.vertices <= set(g.vertices) and el.edges <= g.edges):
            not_subgraphs.append(i)
            continue
        covered |= el.edges
        eg = _element_graph(el)
        if c.kind == THRESHOLD:
            ok = is_threshold(eg)
        else:
            ok = is_cointerval(eg) is not None
        if not ok:
            recognition_failures.append(i)
    uncovered = g.edges - covered
    return VerificationReport(
        tuple(not_subgraphs), tuple(recognition_failures), frozenset(uncovered)
    )


def validate_run(g: Graph, cover: Cover, traces: list[IterationTrace]) -> None:
    """Replay a run and check its progress and covering invariants.

    Every iteration must delete a nonempty vertex set, delete at least one
    residual edge, and its element must contain every residual edge at
    every deleted vertex. Raises InputError on the first violation.
    """
    alive = set(g.vertices)
    for t, trace in enumerate(traces):
        if not trace.removed:
            raise InputError(f"iteration {t} removed nothing")
        if not trace.removed <= alive:
            raise InputError(f"iteration {t} removed vertices twice")
        if trace.component is not None and not trace.removed <= trace.component:
            raise InputError(f"iteration {t} removed outside its component")
        element = cover.elements[trace.added_element_index]
        progress = False
        for r in sorted(trace.removed):
            for x in g.neighbors(r):
                if x in alive:
                    progress = True
                    if norm_edge(r, x) not in element.edges:
                        raise InputError(
                            f"iteration {t}: residual edge ({r}, {x}) not in its element"
                        )
        if not progress:
            raise InputError(f"iteration {t} deleted no residual edge")
        alive -= trace.removed
    covered = set()
    for el in cover.elements:
        covered |= el.edges
    if covered != g.edges:
        raise InputError("cover does not cover the host's edges")


def is_structural_big_ant(g: Graph, element) -> bool:
    """Element is a big ant over some clique of g: a block's clique plus
    all element edges hanging off its two apexes."""
    block = getattr(element, "block", None)
    if block is None:
        return False
    u, v = element.apex_u, element.apex_v
    if u not in block or v not in block:
        return False
    members = sorted(block)
    for i, a in enumerate(members):
        nbrs = g.neighbors(a)
        for b in members[i + 1:]:
            if b not in nbrs:
                return False
            if norm_edge(a, b) not in element.edges:
                return False
    for a, b in element.edges:
        if a in block and b in block:
            continue
        if u not in (a, b) and v not in (a, b):
            return False
    touched = set(block)
    for e in element.edges:
        touched.update(e)
    return touched == set(element.vertices)


def cover_to_box_representation(g: Graph, c: Cover) -> BoxRepresentation:
    """Stack one co-interval representation per element into boxes.

    Vertices absent from an element get the full range in that dimension,
    so a pair of boxes is disjoint exactly when some element covers the
    pair as an edge, which happens exactly on the edges of g.
    """
    report = verify_cover(g, c)
    if not report.valid:
        raise InputError("box representation requires a valid cover")
    dims: list[dict[int, tuple[int, int]]] = []
    for el in c.elements:
        rep = cointerval_representation(_element_graph(el))
        dims.append(rep.intervals)
    if not dims:
        dims = [{}]
    boxes: dict[int, list[tuple[int, int]]] = {v: [] for v in g.vertices}
    for intervals in dims:
        top = max((hi for _, hi in intervals.values()), default=0)
        for v in g.vertices:
            boxes[v].append(intervals.get(v, (0, top)))
    return BoxRepresentation(len(dims), {v: tuple(bs) for v, bs in boxes.items()})


# -- serialization -------------------------------------------------------


def cover_to_dict(c: Cover, traces: list[IterationTrace] | None = None) -> dict:
    payload = {
        "kind": c.kind,
        "size": len(c.elements),
        "elements": [
            {
                "block": sorted(el.block) if getattr(el, "block", None) else None,
                "u": getattr(el, "apex_u", None),
                "v": getattr(el, "apex_v", None),
                "vertices": sorted(el.vertices),
                "edges": [list(e) for e in sorted(el.edges)],
            }
            for el in c.elements
        ],
    }
    if traces is not None:
        payload["traces"] = [
            {
                "component": sorted(t.component) if t.component is not None else None,
                "case": t.case_taken,
                "block": sorted(t.chosen_block) if t.chosen_block is not None else None,
                "protected": t.protected_vertex,
                "apexes": list(t.apexes),
                "removed": sorted(t.removed),
                "element": t.added_element_index,
            }
            for t in traces
        ]
    return payload


def cover_from_dict(g: Graph, payload: dict) -> Cover:
    try:
        kind = payload["kind"]
        if kind not in (COINTERVAL, THRESHOLD):
            raise InputError(f"unknown cover kind {kind!r}")
        elements = []
        for entry in payload["elements"]:
            vertices = frozenset(int(v) for v in entry["vertices"])
            edges = frozenset(norm_edge(int(a), int(b)) for a, b in entry["edges"])
            stray = {v for e in edges for v in e} - vertices
            if stray:
                raise InputError(f"element edges use undeclared vertices {sorted(stray)}")
            if entry.get("block") is not None:
                elements.append(
                    BigAnt(
                        g,
                        frozenset(int(v) for v in entry["block"]),
                        int(entry["u"]),
                        int(entry["v"]),
                        vertices,
                        edges,
                    )
                )
            else:
                elements.append(EdgeSubgraph(g, vertices, edges))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed cover payload: {exc}") from None
    return Cover(g, tuple(elements), kind)


def box_to_dict(rep: BoxRepresentation) -> dict:
    return {
        "d": rep.dimension,
        "boxes": {str(v): [list(iv) for iv in rep.boxes[v]] for v in sorted(rep.boxes)},
    }

