"""Shared test utilities: slow reference implementations and graph builders."""

from __future__ import annotations

import itertools
import random

from antcover.blocks import block_decomposition, find_near_leaf_block
from antcover.graph import Graph, build_graph, connected_components, norm_edge, shape_check
from antcover.cover import min_cointerval_cover, min_threshold_cover


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_graph(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return build_graph(n, edges)


def spider_graph() -> Graph:
    """Triangle 0,1,2 with one pendant edge at each triangle vertex."""
    return build_graph(6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)])


def brute_is_cointerval(g: Graph) -> bool:
    """Try every vertex ordering against the prefix-neighbourhood condition."""
    verts = sorted(g.vertices)
    for perm in itertools.permutations(verts):
        pos = {v: i for i, v in enumerate(perm)}
        ok = True
        for v in verts:
            ps = sorted(pos[u] for u in g.neighbors(v) if pos[u] < pos[v])
            if ps and ps[-1] != len(ps) - 1:
                ok = False
                break
        if ok:
            return True
    return False


def has_forbidden_threshold_subgraph(g: Graph) -> bool:
    """Induced P4, C4 or 2K2 detection by scanning 4-subsets."""
    verts = sorted(g.vertices)
    for quad in itertools.combinations(verts, 4):
        edges = [
            (a, b) for a, b in itertools.combinations(quad, 2) if g.has_edge(a, b)
        ]
        if len(edges) == 2:
            (a, b), (c, d) = edges
            if {a, b}.isdisjoint({c, d}):
                return True  # 2K2
        elif len(edges) in (3, 4):
            deg = {v: 0 for v in quad}
            for a, b in edges:
                deg[a] += 1
                deg[b] += 1
            degs = sorted(deg.values())
            if len(edges) == 3 and degs == [1, 1, 2, 2]:
                return True  # P4
            if len(edges) == 4 and degs == [2, 2, 2, 2]:
                return True  # C4
    return False


def near_leaf_candidates(g: Graph) -> list[tuple[int, int | None]]:
    """All (block index, anchor) pairs satisfying the near-leaf definition."""
    bd = block_decomposition(g)
    internal = {i for i, cuts in enumerate(bd.block_cuts) if len(cuts) >= 2}
    found = []
    for i in internal:
        hits = []
        for v in sorted(bd.blocks[i]):
            if any(j != i and j in internal for j in bd.blocks_at(v)):
                hits.append(v)
        if len(hits) <= 1:
            found.append((i, hits[0] if hits else None))
    return found


def _clique_edges(block):
    members = sorted(block)
    return {(a, b) for i, a in enumerate(members) for b in members[i + 1:]}


def naive_cover(g: Graph, kind: str):
    """Slow reference for the cover loop: fresh decomposition every step.

    Returns element tuples and trace tuples in the engine's shapes so runs
    can be compared field by field.
    """
    alive = set(g.vertices)
    stack = [set(c) for c in sorted(connected_components(g), key=min, reverse=True) if len(c) >= 2]
    elements, traces = [], []
    while stack:
        region = stack.pop() & alive
        h = g.induced(region)
        region = {v for v in h.vertices if h.degree(v) > 0}
        if not region:
            continue
        h = g.induced(region)
        bd = block_decomposition(h)
        shape = shape_check(h)
        if shape == "clique":
            bl = frozenset(region)
            u = min(bl)
            el = (bl, u, u, frozenset(region), frozenset(_clique_edges(bl)))
            case, chosen, prot, apex, removed = "1", None, None, (u,), set(region)
        elif shape == "star":
            center = max(h.vertices, key=h.degree)
            leaves = region - {center}
            bl = frozenset({center, min(leaves)})
            eset = frozenset(norm_edge(center, leaf) for leaf in leaves)
            el = (bl, center, center, frozenset(region), eset)
            case, chosen, prot, apex, removed = "1", None, None, (center,), set(region)
        else:
            big = [
                (min(b), i)
                for i, (b, cuts) in enumerate(zip(bd.blocks, bd.block_cuts))
                if len(cuts) == 1 and len(b) >= 3
            ]
            if big:
                _, qi = min(big)
                bl = bd.blocks[qi]
                v = bd.block_cuts[qi][0]
                nres = set(h.neighbors(v))
                eset = frozenset(_clique_edges(bl) | {norm_edge(v, w) for w in nres})
                el = (bl, v, v, frozenset(bl | nres), eset)
                case, chosen, prot, apex, removed = "2", bl, None, (v,), set(bl)
            else:
                nl = find_near_leaf_block(h)
                bl = bd.blocks[nl.block_index]
                cuts = list(bd.block_cuts[nl.block_index])
                v = nl.anchor if nl.anchor is not None else cuts[0]
                if kind == "cointerval":
                    if len(cuts) == 2:
                        u = next(c for c in cuts if c != v)
                        eset = (
                            _clique_edges(bl)
                            | {norm_edge(u, w) for w in h.neighbors(u)}
                            | {norm_edge(v, w) for w in h.neighbors(v)}
                        )
                        vs = frozenset(bl | set(h.neighbors(u)) | set(h.neighbors(v)))
                        el = (bl, min(u, v), max(u, v), vs, frozenset(eset))
                        case, chosen, prot, apex = "3a", bl, v, (u, v)
                        removed = set(bl) | set(h.neighbors(u))
                    else:
                        rest = [c for c in cuts if c != v]
                        u, w = rest[0], rest[1]
                        eset = (
                            _clique_edges(bl)
                            | {norm_edge(u, x) for x in h.neighbors(u)}
                            | {norm_edge(w, x) for x in h.neighbors(w)}
                        )
                        vs = frozenset(bl | set(h.neighbors(u)) | set(h.neighbors(w)))
                        el = (bl, min(u, w), max(u, w), vs, frozenset(eset))
                        case, chosen, prot, apex = "3b", bl, v, (u, w)
                        if len(cuts) == 3:
                            removed = (set(bl) | set(h.neighbors(u)) | set(h.neighbors(w))) - {v}
                        else:
                            s_u = {x for x in h.neighbors(u) if h.degree(x) == 1}
                            s_w = {x for x in h.neighbors(w) if h.degree(x) == 1}
                            removed = s_u | s_w | {u, w}
                else:
                    u = next(c for c in cuts if c != v)
                    eset = _clique_edges(bl) | {norm_edge(u, x) for x in h.neighbors(u)}
                    el = (bl, u, u, frozenset(bl | set(h.neighbors(u))), frozenset(eset))
                    apex = (u,)
                    chosen, prot = bl, v
                    if len(cuts) == 2:
                        case = "3*-2cuts"
                        removed = (set(bl) | set(h.neighbors(u))) - {v}
                    else:
                        case = "3*-many"
                        removed = {x for x in h.neighbors(u) if h.degree(x) == 1} | {u}
        elements.append(el)
        traces.append((frozenset(region), case, chosen, prot, tuple(apex), frozenset(removed)))
        alive -= removed
        rest = region - removed
        if rest:
            pieces = [p for p in connected_components(g.induced(rest)) if len(p) >= 2]
            for piece in sorted(pieces, key=min, reverse=True):
                stack.append(set(piece))
    return elements, traces


def engine_run_tuples(g: Graph, kind: str):
    """The production run, flattened into the naive twin's tuple shapes."""
    cover, traces = (
        min_cointerval_cover(g) if kind == "cointerval" else min_threshold_cover(g)
    )
    els = [(e.block, e.apex_u, e.apex_v, e.vertices, e.edges) for e in cover.elements]
    trs = [
        (t.component, t.case_taken, t.chosen_block, t.protected_vertex, t.apexes, t.removed)
        for t in traces
    ]
    return els, trs


def free_trees_upto(max_order: int):
    import networkx as nx

    out = []
    for order in range(2, max_order + 1):
        for t in nx.nonisomorphic_trees(order):
            mapping = {v: i for i, v in enumerate(sorted(t.nodes))}
            out.append(build_graph(order, [(mapping[a], mapping[b]) for a, b in t.edges]))
    return out
