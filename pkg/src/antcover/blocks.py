"""Block decomposition, block-cut tree, block classes, core, near-leaf blocks."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError
from .graph import Graph, connected_components, remove_vertices, shape_check


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks and cut-vertices of a graph.

    Blocks are maximal 2-connected components; a bridge edge is a block of
    its own and an isolated vertex forms a singleton block. block_cuts[i]
    lists the cut-vertices inside blocks[i], which together give the
    bipartite incidence of the block-cut tree.
    """

    host: Graph
    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    block_cuts: tuple[tuple[int, ...], ...]

    def blocks_at(self, v: int) -> tuple[int, ...]:
        """Indices of the blocks containing vertex v."""
        return tuple(i for i, b in enumerate(self.blocks) if v in b)


@dataclass(frozen=True)
class BlockClass:
    kind: str  # "isolated", "leaf" or "internal"
    is_edge_block: bool
    cut_vertices_of_block: frozenset[int]


@dataclass(frozen=True)
class NearLeafResult:
    block_index: int
    anchor: int | None
    non_anchor_cut_vertices: tuple[int, ...]


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Iterative depth-first search for blocks and articulation vertices.

    Blocks are listed by (minimum vertex id, sorted vertex tuple) so the
    output is deterministic regardless of traversal.
    """
    adj = {v: sorted(g.neighbors(v)) for v in g.vertices}
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    counter = 0
    cut: set[int] = set()
    raw_blocks: list[frozenset[int]] = []
    estack: list[tuple[int, int]] = []

    for root in sorted(adj):
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        root_children = 0
        stack: list[tuple[int, int | None, int]] = [(root, None, 0)]
        while stack:
            v, parent, idx = stack[-1]
            if idx < len(adj[v]):
                stack[-1] = (v, parent, idx + 1)
                w = adj[v][idx]
                if w not in disc:
                    estack.append((v, w))
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append((w, v, 0))
                elif w != parent and disc[w] < disc[v]:
                    estack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
                continue
            stack.pop()
            if parent is None:
                continue
            if low[v] < low[parent]:
                low[parent] = low[v]
            if low[v] >= disc[parent]:
                if parent == root:
                    root_children += 1
                else:
                    cut.add(parent)
                members: set[int] = set()
                while True:
                    a, b = estack.pop()
                    members.add(a)
                    members.add(b)
                    if (a, b) == (parent, v):
                        break
                raw_blocks.append(frozenset(members))
        if root_children >= 2:
            cut.add(root)

    for v in sorted(adj):
        if not adj[v]:
            raw_blocks.append(frozenset([v]))

    blocks = tuple(sorted(raw_blocks, key=lambda b: (min(b), tuple(sorted(b)))))
    cut_frozen = frozenset(cut)
    block_cuts = tuple(tuple(sorted(b & cut_frozen)) for b in blocks)
    return BlockDecomposition(g, blocks, cut_frozen, block_cuts)


def classify_blocks(bd: BlockDecomposition) -> list[BlockClass]:
    """One BlockClass per block, aligned with bd.blocks."""
    out = []
    for b, cuts in zip(bd.blocks, bd.block_cuts):
        k = len(cuts)
        kind = "isolated" if k == 0 else ("leaf" if k == 1 else "internal")
        out.append(BlockClass(kind, len(b) == 2, frozenset(cuts)))
    return out


def is_block_graph(g: Graph) -> bool:
    """True iff every block induces a clique."""
    bd = block_decomposition(g)
    for b in bd.blocks:
        members = sorted(b)
        for i, u in enumerate(members):
            nbrs = g.neighbors(u)
            for v in members[i + 1:]:
                if v not in nbrs:
                    return False
    return True


def is_pointed(g: Graph) -> bool:
    """True iff every leaf block is an edge block (vacuous without leaf blocks)."""
    bd = block_decomposition(g)
    return all(
        len(b) == 2 for b, cuts in zip(bd.blocks, bd.block_cuts) if len(cuts) == 1
    )


def core(g: Graph) -> Graph:
    """Delete every isolated block and every leaf block except its cut-vertex."""
    bd = block_decomposition(g)
    doomed: set[int] = set()
    for b, cuts in zip(bd.blocks, bd.block_cuts):
        if len(cuts) == 0:
            doomed |= b
        elif len(cuts) == 1:
            doomed |= b - {cuts[0]}
    return remove_vertices(g, doomed)


def _internal_attachments(bd: BlockDecomposition, internal: set[int], i: int) -> list[int]:
    """Vertices of block i lying in some other internal block."""
    hits = []
    for v in sorted(bd.blocks[i]):
        for j in bd.blocks_at(v):
            if j != i and j in internal:
                hits.append(v)
                break
    return hits


def find_near_leaf_block(h: Graph) -> NearLeafResult:
    """Pick the near-leaf block of h with minimum contained vertex id.

    A near-leaf block is an internal block whose internal block neighbours
    all attach at one shared cut-vertex (the anchor), or whose neighbours
    are all leaf blocks (no anchor). Requires h connected, pointed, more
    than one block and not a star.
    """
    if len(connected_components(h)) != 1:
        raise InputError("near-leaf search requires a connected graph")
    bd = block_decomposition(h)
    if len(bd.blocks) <= 1:
        raise InputError("near-leaf search requires more than one block")
    if shape_check(h) == "star":
        raise InputError("near-leaf search is undefined on stars")
    if not is_pointed(h):
        raise InputError("near-leaf search requires a pointed graph")

    internal = {i for i, cuts in enumerate(bd.block_cuts) if len(cuts) >= 2}
    best: NearLeafResult | None = None
    best_key: int | None = None
    for i in sorted(internal, key=lambda i: min(bd.blocks[i])):
        hits = _internal_attachments(bd, internal, i)
        if len(hits) > 1:
            continue
        anchor = hits[0] if hits else None
        key = min(bd.blocks[i])
        if best is None or key < best_key:
            non_anchor = tuple(v for v in bd.block_cuts[i] if v != anchor)
            best = NearLeafResult(i, anchor, non_anchor)
            best_key = key
    if best is None:
        raise InputError("graph has no near-leaf block")
    return best


def block_cut_tree_dot(bd: BlockDecomposition) -> str:
    """DOT text of the block-cut tree: block nodes B<i>, cut-vertex nodes c<v>."""
    lines = ["graph blockcut {"]
    for i, b in enumerate(bd.blocks):
        label = ",".join(str(v) for v in sorted(b))
        lines.append(f'  B{i} [shape=box, label="B{i}: {{{label}}}"];')
    for v in sorted(bd.cut_vertices):
        lines.append(f'  c{v} [label="c{v}"];')
    for i, cuts in enumerate(bd.block_cuts):
        for v in cuts:
            lines.append(f"  B{i} -- c{v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
