"""Blocks, bridges, relative connectivity, and small cut searches."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmptyS, NotAPath, PreconditionFailed
from .plane import (
    Edge,
    PlaneGraph,
    SubgraphRef,
    WalkSeq,
    edge_key,
    induced_subgraph,
)


# ---------------------------------------------------------------------------
# Bridges of a subgraph
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BridgeRec:
    """One bridge of a subgraph H: either a chord of H, or a component of
    G - V(H) together with its connecting edges."""

    vertex_set: frozenset[int]
    edge_set: frozenset[Edge]
    attachments: frozenset[int]
    trivial: bool

    def key(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edge_set))

    @property
    def internal(self) -> frozenset[int]:
        return self.vertex_set - self.attachments


def bridges_of(g: PlaneGraph, h: SubgraphRef) -> list[BridgeRec]:
    """All H-bridges of g, sorted by their canonical edge-set key."""
    hv = h.vertices
    out: list[BridgeRec] = []
    for e in sorted(g.edge_set - h.edges):
        u, v = e
        if u in hv and v in hv:
            out.append(BridgeRec(frozenset(e), frozenset((e,)),
                                 frozenset(e), True))
    seen: set[int] = set()
    for s in g.vertices:
        if s in hv or s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.rot[u]:
                if w not in hv and w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        edges = set()
        att = set()
        for u in comp:
            for w in g.rot[u]:
                edges.add(edge_key(u, w))
                if w in hv:
                    att.add(w)
        out.append(BridgeRec(frozenset(comp | att), frozenset(edges),
                             frozenset(att), False))
    out.sort(key=lambda b: b.key())
    return out


def attachments_of(g: PlaneGraph, h: SubgraphRef) -> frozenset[int]:
    """Vertices of H incident with an edge of g outside H."""
    att = set()
    for b in bridges_of(g, h):
        att |= b.attachments
    return frozenset(att)


# ---------------------------------------------------------------------------
# Block decomposition
# ---------------------------------------------------------------------------


def _block_sets(g: PlaneGraph) -> tuple[list[tuple[frozenset[int], frozenset[Edge]]], set[int]]:
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    cuts: set[int] = set()
    blocks: list[tuple[frozenset[int], frozenset[Edge]]] = []
    counter = 0
    for root in g.vertices:
        if root in disc:
            continue
        if g.degree(root) == 0:
            blocks.append((frozenset((root,)), frozenset()))
            disc[root] = counter
            counter += 1
            continue
        root_children = 0
        edge_stack: list[Edge] = []
        disc[root] = low[root] = counter
        counter += 1
        work: list[tuple[int, int, int]] = [(root, -1, 0)]
        while work:
            u, parent, idx = work.pop()
            nbrs = sorted(g.rot[u])
            if idx < len(nbrs):
                work.append((u, parent, idx + 1))
                w = nbrs[idx]
                if w == parent:
                    continue
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    edge_stack.append((u, w))
                    work.append((w, u, 0))
                elif disc[w] < disc[u]:
                    edge_stack.append((u, w))
                    low[u] = min(low[u], disc[w])
            else:
                if parent != -1:
                    low[parent] = min(low[parent], low[u])
                    if low[u] >= disc[parent]:
                        if parent == root:
                            root_children += 1
                        else:
                            cuts.add(parent)
                        es = set()
                        while edge_stack:
                            a, b = edge_stack.pop()
                            es.add(edge_key(a, b))
                            if (a, b) == (parent, u):
                                break
                        vs = {x for e in es for x in e}
                        blocks.append((frozenset(vs), frozenset(es)))
        if root_children > 1:
            cuts.add(root)
    blocks.sort(key=lambda be: tuple(sorted(be[1])))
    return blocks, cuts


def blocks(g: PlaneGraph) -> tuple[list[PlaneGraph], set[int]]:
    """Standard block/cutvertex decomposition; blocks inherit the embedding."""
    raw, cuts = _block_sets(g)
    return [induced_subgraph(g, vs, es) for vs, es in raw], cuts


# ---------------------------------------------------------------------------
# Chains of blocks
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BlockChain:
    """Blocks B_1..B_n lined up along shared cutvertices b_0..b_n.

    n == 0 encodes the single-vertex chain b_0."""

    cuts: tuple[int, ...]
    blocks: tuple[PlaneGraph, ...]

    @property
    def n(self) -> int:
        return len(self.blocks)

    @property
    def a(self) -> int:
        return self.cuts[0]

    @property
    def b(self) -> int:
        return self.cuts[-1]

    def vertices(self) -> frozenset[int]:
        out = set(self.cuts[:1])
        for blk in self.blocks:
            out |= set(blk.vertices)
        return frozenset(out)

    def edges(self) -> frozenset[Edge]:
        out: set[Edge] = set()
        for blk in self.blocks:
            out |= blk.edge_set
        return frozenset(out)

    def as_subgraph(self) -> SubgraphRef:
        return SubgraphRef(self.vertices(), self.edges())

    def covers(self, g: PlaneGraph) -> bool:
        return self.vertices() == frozenset(g.vertices) and self.edges() == g.edge_set

    def reversed(self) -> "BlockChain":
        return BlockChain(tuple(reversed(self.cuts)), tuple(reversed(self.blocks)))

    def check(self) -> None:
        assert len(self.cuts) == len(self.blocks) + 1
        for i, blk in enumerate(self.blocks):
            assert self.cuts[i] in blk and self.cuts[i + 1] in blk
        for i in range(len(self.blocks) - 1):
            shared = frozenset(self.blocks[i].vertices) & frozenset(self.blocks[i + 1].vertices)
            assert shared == {self.cuts[i + 1]}, f"bad junction {shared}"


def chain_along_path(g: PlaneGraph, p: WalkSeq) -> BlockChain:
    """Minimal union of blocks of g containing the path p, in chain order."""
    if not p.is_path():
        raise NotAPath("chain_along_path needs a simple path")
    if len(p) == 1:
        return BlockChain((p.start,), ())
    for u, v in zip(p.verts, p.verts[1:]):
        if not g.has_edge(u, v):
            raise NotAPath(f"path step {(u, v)} is not an edge")
    raw, _ = _block_sets(g)
    edge_to_block = {}
    for i, (_, es) in enumerate(raw):
        for e in es:
            edge_to_block[e] = i
    order: list[int] = []
    for e in p.edges():
        i = edge_to_block[e]
        if not order or order[-1] != i:
            order.append(i)
    if len(set(order)) != len(order):
        raise NotAPath("path re-enters a block; not a simple path of g")
    chain_blocks = [induced_subgraph(g, *raw[i]) for i in order]
    cuts = [p.start]
    for b1, b2 in zip(chain_blocks, chain_blocks[1:]):
        shared = frozenset(b1.vertices) & frozenset(b2.vertices)
        if len(shared) != 1:
            raise NotAPath(f"consecutive blocks share {sorted(shared)}")
        cuts.append(next(iter(shared)))
    cuts.append(p.end)
    chain = BlockChain(tuple(cuts), tuple(chain_blocks))
    chain.check()
    return chain


def chain_decomposition(g: PlaneGraph, a: int, b: int) -> BlockChain:
    """Decompose all of g as a chain of blocks from a to b."""
    chain = chain_along_path(g, g.bfs_path(a, b))
    if not chain.covers(g):
        raise PreconditionFailed(
            "graph is not a chain of blocks between the endpoints",
            witness=sorted(frozenset(g.vertices) - chain.vertices()))
    return chain


# ---------------------------------------------------------------------------
# Relative connectivity
# ---------------------------------------------------------------------------


def _fan_count(g: PlaneGraph, v: int, targets: frozenset[int], cap: int) -> int:
    """Max number of v-to-targets paths pairwise disjoint except at v,
    computed as unit-capacity vertex-splitting max flow, stopping at cap."""
    SRC, SINK = ("s", -1), ("t", -1)
    res: dict[tuple, dict[tuple, int]] = {SRC: {}, SINK: {}}

    def add(x, y, c):
        res.setdefault(x, {}).setdefault(y, 0)
        res.setdefault(y, {}).setdefault(x, 0)
        res[x][y] += c

    for w in g.vertices:
        if w == v:
            continue
        if w in targets:
            add(("i", w), SINK, 1)
        else:
            add(("i", w), ("o", w), 1)
    for u, w in g.edge_set:
        if u == v:
            add(SRC, ("i", w), 1)
        elif w == v:
            add(SRC, ("i", u), 1)
        else:
            add(("o", u), ("i", w), 1)
            add(("o", w), ("i", u), 1)

    flow = 0
    while flow < cap:
        prev = {SRC: SRC}
        frontier = [SRC]
        while frontier and SINK not in prev:
            nxt = []
            for x in frontier:
                for y, c in res[x].items():
                    if c > 0 and y not in prev:
                        prev[y] = x
                        nxt.append(y)
            frontier = nxt
        if SINK not in prev:
            break
        y = SINK
        while y != SRC:
            x = prev[y]
            res[x][y] -= 1
            res[y][x] += 1
            y = x
        flow += 1
    return flow


def is_ks_connected(g: PlaneGraph, k: int, s: Iterable[int]) -> bool:
    """True iff deleting any fewer than k vertices leaves every component
    with a vertex of s."""
    ss = frozenset(s)
    if not ss:
        raise EmptyS("target set must be nonempty")
    if not ss <= frozenset(g.vertices):
        raise EmptyS(f"target set has vertices outside the graph: {sorted(ss - set(g.vertices))}")
    for comp in g.components:
        if not comp & ss:
            return False
    for v in g.vertices:
        if v in ss:
            continue
        if _fan_count(g, v, ss, k) < k:
            return False
    return True


def ks_connected_witness(g: PlaneGraph, k: int, s: Iterable[int]) -> frozenset[int] | None:
    """A set T, |T| < k, stranding a component from s, or None."""
    ss = frozenset(s)
    vs = list(g.vertices)
    for size in range(k):
        for t in itertools.combinations(vs, size):
            ts = frozenset(t)
            remaining = [v for v in vs if v not in ts]
            seen: set[int] = set()
            for r in remaining:
                if r in seen:
                    continue
                comp = {r}
                stack = [r]
                while stack:
                    u = stack.pop()
                    for w in g.rot[u]:
                        if w not in ts and w not in comp:
                            comp.add(w)
                            stack.append(w)
                seen |= comp
                if not comp & ss:
                    return ts
    return None


def is_ks_connected_bruteforce(g: PlaneGraph, k: int, s: Iterable[int]) -> bool:
    """Subset-enumeration oracle for is_ks_connected (small graphs only)."""
    ss = frozenset(s)
    if not ss:
        raise EmptyS("target set must be nonempty")
    return ks_connected_witness(g, k, ss) is None


def require_ks_connected(g: PlaneGraph, k: int, s: Iterable[int], what: str) -> None:
    ss = frozenset(s)
    if not is_ks_connected(g, k, ss):
        raise PreconditionFailed(f"{what} is not ({k},S)-connected",
                                 witness=sorted(ss)[:8])


# ---------------------------------------------------------------------------
# Small cut searches
# ---------------------------------------------------------------------------


def _components_without(g: PlaneGraph, removed: frozenset[int]) -> list[set[int]]:
    comps = []
    seen: set[int] = set()
    for v in g.vertices:
        if v in removed or v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            u = stack.pop()
            for w in g.rot[u]:
                if w not in removed and w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(comp)
    return comps


def find_small_cut_containing(g: PlaneGraph, v: int, max_size: int) -> frozenset[int] | None:
    """Smallest cutset through v of size <= max_size, id-lexicographic
    among equals; None when no such cutset exists."""
    others = [w for w in g.vertices if w != v]
    for size in range(1, max_size + 1):
        for extra in itertools.combinations(others, size - 1):
            cut = frozenset((v,) + extra)
            if len(_components_without(g, cut)) >= 2:
                return cut
    return None


def internal_3cuts(g: PlaneGraph) -> list[frozenset[int]]:
    """All 3-cuts with a component disjoint from the outer walk."""
    from .plane import outer_walk  # local import to avoid cycle at module load

    xg = frozenset(outer_walk(g).boundary.verts)
    out = []
    for t in itertools.combinations(g.vertices, 3):
        cut = frozenset(t)
        comps = _components_without(g, cut)
        if len(comps) >= 2 and any(not (c & xg) for c in comps):
            out.append(cut)
    return out


def min_degree(g: PlaneGraph) -> int:
    return min((g.degree(v) for v in g.vertices), default=0)
