"""Circuit graphs, circuit blocks, and plane chains of circuit blocks."""

from __future__ import annotations

from dataclasses import dataclass

from .connectivity import BlockChain, chain_along_path, is_ks_connected, ks_connected_witness
from .errors import CycleNotFacial, NotACycle, NotAPath, NotConnected, PreconditionFailed
from .plane import PlaneGraph, WalkSeq, delete_vertices, edge_key, outer_walk


def is_facial_cycle(g: PlaneGraph, c: WalkSeq) -> bool:
    if not c.is_cycle():
        raise NotACycle("facial test needs a cycle")
    ce = frozenset(c.edges())
    for darts in g.faces_darts:
        if len(darts) == len(ce):
            if frozenset(edge_key(*d) for d in darts) == ce:
                return True
    return False


def is_circuit_graph(g: PlaneGraph, c: WalkSeq) -> bool:
    """(g, c) with c a facial cycle of the stored embedding and g
    3-connected relative to c."""
    if not is_facial_cycle(g, c):
        raise CycleNotFacial(f"cycle through {c.verts[:4]}... does not bound a face")
    return is_ks_connected(g, 3, c.verts)


def is_circuit_block(g: PlaneGraph) -> bool:
    """True when g is a single edge, or a circuit graph on its outer cycle."""
    if not g.is_connected():
        raise NotConnected("circuit blocks are connected")
    if g.num_vertices() == 2 and g.num_edges() == 1:
        return True
    if g.num_vertices() < 3:
        return False
    w = outer_walk(g).boundary
    if not w.is_cycle():
        return False
    return is_ks_connected(g, 3, w.verts)


@dataclass(frozen=True)
class CircuitChain:
    """A chain of blocks in which every nontrivial block has been verified
    to be a circuit graph on its own outer cycle."""

    chain: BlockChain

    @property
    def n(self) -> int:
        return self.chain.n

    @property
    def cuts(self) -> tuple[int, ...]:
        return self.chain.cuts

    @property
    def blocks(self) -> tuple[PlaneGraph, ...]:
        return self.chain.blocks

    def vertices(self) -> frozenset[int]:
        return self.chain.vertices()

    def edges(self):
        return self.chain.edges()

    def as_subgraph(self):
        return self.chain.as_subgraph()

    def reversed(self) -> "CircuitChain":
        return CircuitChain(self.chain.reversed())


def certify_chain(chain: BlockChain) -> CircuitChain:
    for i, blk in enumerate(chain.blocks):
        if not is_circuit_block(blk):
            raise PreconditionFailed(
                f"chain block {i + 1} is not a circuit block",
                witness=sorted(blk.vertices)[:8])
    return CircuitChain(chain)


def chain_of_circuit_blocks(g: PlaneGraph, p: WalkSeq, c: int | None = None) -> CircuitChain:
    """Decompose g (or g - c) as a plane chain of circuit blocks along the
    outer-walk path p.

    3-connectivity relative to the path (plus c) guarantees success; when
    the decomposition fails, the raised error carries the connectivity
    witness that must exist in that case.
    """
    xg = outer_walk(g).boundary
    x_edges = frozenset(xg.edges())
    if len(p) > 1 and not frozenset(p.edges()) <= x_edges:
        raise PreconditionFailed("path does not run along the outer walk")
    if len(p) == 1 and p.start not in xg.verts:
        raise PreconditionFailed("path vertex not on the outer walk")

    targets = set(p.verts)
    if c is None:
        host = g
    else:
        if c in targets or c not in xg.verts:
            raise PreconditionFailed("deleted vertex must be on the outer walk off the path")
        targets.add(c)
        host = delete_vertices(g, (c,))

    def connectivity_witness():
        if is_ks_connected(g, 3, targets):
            return None
        return ks_connected_witness(g, 3, targets) if g.num_vertices() <= 12 else "large-instance"

    try:
        chain = chain_along_path(host, p)
    except (NotAPath, NotConnected) as exc:
        raise PreconditionFailed(f"no chain along the path ({exc})",
                                 witness=connectivity_witness())
    uncovered = frozenset(host.vertices) - chain.vertices()
    if uncovered or chain.edges() != host.edge_set:
        raise PreconditionFailed("chain of blocks along the path does not exhaust the graph",
                                 witness=connectivity_witness() or sorted(uncovered)[:8])
    try:
        return certify_chain(chain)
    except PreconditionFailed:
        raise PreconditionFailed("a chain block is not a circuit block",
                                 witness=connectivity_witness())
