"""Tutte subgraphs: verification, exact path search, standard pieces.

A T-bridge with more than three attachments, or one carrying a context
edge with more than two, disqualifies T.  `find_tutte_path` is an exact
backtracking oracle over small circuit blocks; the sp1/sp2/sp3 builders
assemble larger certified pieces out of oracle calls, and `jigsaw` is
the checked union of pieces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .circuit import CircuitChain, certify_chain
from .connectivity import (
    BridgeRec,
    bridges_of,
    chain_along_path,
    chain_decomposition,
    is_ks_connected,
    ks_connected_witness,
)
from .errors import (
    CertificationFailed,
    OverlapViolation,
    PreconditionFailed,
    SdrCollision,
    SearchExhausted,
)
from .plane import (
    Edge,
    PlaneGraph,
    SubgraphRef,
    WalkSeq,
    clockwise_segment,
    concat_paths,
    delete_vertices,
    edge_key,
    outer_walk,
    subdivide_edge,
    union_all,
)

BridgeKey = tuple[Edge, ...]


# ---------------------------------------------------------------------------
# SDR assignments and certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SdrAssign:
    """Injective assignment of a representative vertex to each nontrivial
    bridge, keyed by the bridge's sorted edge set."""

    pairs: tuple[tuple[BridgeKey, int], ...] = ()

    @staticmethod
    def from_dict(d: dict[BridgeKey, int]) -> "SdrAssign":
        return SdrAssign(tuple(sorted(d.items())))

    def as_dict(self) -> dict[BridgeKey, int]:
        return dict(self.pairs)

    def reps(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.pairs)

    def rep_set(self) -> frozenset[int]:
        return frozenset(self.reps())

    def __len__(self) -> int:
        return len(self.pairs)


def merge_sdrs(parts: Iterable[SdrAssign]) -> SdrAssign:
    combined: dict[BridgeKey, int] = {}
    used: dict[int, BridgeKey] = {}
    for sdr in parts:
        for key, rep in sdr.pairs:
            if key in combined:
                raise SdrCollision(f"bridge assigned twice: {key[:2]}...")
            if rep in used:
                raise SdrCollision(f"representative {rep} used by two bridges")
            combined[key] = rep
            used[rep] = key
    return SdrAssign.from_dict(combined)


@dataclass(frozen=True)
class TutteCert:
    """Bridge inventory for a claimed Tutte subgraph; empty violations
    means the attachment bounds hold."""

    t: SubgraphRef
    x: SubgraphRef
    bridges: tuple[BridgeRec, ...]
    violations: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_tutte(g: PlaneGraph, x: SubgraphRef, t: SubgraphRef) -> TutteCert:
    """Check the attachment bounds of every t-bridge of g against context x."""
    brs = tuple(bridges_of(g, t))
    bad = []
    for br in brs:
        natt = len(br.attachments)
        if natt > 3:
            bad.append(f"bridge {br.key()[:2]}... has {natt} attachments")
        elif natt > 2 and br.edge_set & x.edges:
            bad.append(f"bridge {br.key()[:2]}... carries a context edge "
                       f"with {natt} attachments")
    return TutteCert(t, x, brs, tuple(bad))


def require_tutte(g: PlaneGraph, x: SubgraphRef, t: SubgraphRef) -> TutteCert:
    cert = verify_tutte(g, x, t)
    if not cert.ok:
        raise CertificationFailed("; ".join(cert.violations))
    return cert


def verify_sdr(g: PlaneGraph, t: SubgraphRef, sdr: SdrAssign) -> bool:
    """Injectivity, membership, and completeness over nontrivial t-bridges."""
    nontrivial = {br.key(): br for br in bridges_of(g, t) if not br.trivial}
    d = sdr.as_dict()
    if set(d) != set(nontrivial):
        return False
    if len(set(d.values())) != len(d):
        return False
    for key, rep in d.items():
        if rep not in nontrivial[key].attachments:
            return False
    return True


# ---------------------------------------------------------------------------
# Exact Tutte-path search
# ---------------------------------------------------------------------------


def _sdr_matching(bridges: Sequence[BridgeRec], forbidden: frozenset[int]) -> dict[BridgeKey, int] | None:
    """Greedy-with-augmenting injective choice of representatives avoiding
    the forbidden vertices; None when no system exists."""
    keys = [br.key() for br in bridges]
    allowed = [sorted(br.attachments - forbidden) for br in bridges]
    rep_of: dict[int, int] = {}  # vertex -> bridge index

    def try_place(i: int, seen: set[int]) -> bool:
        for v in allowed[i]:
            if v in seen:
                continue
            seen.add(v)
            if v not in rep_of or try_place(rep_of[v], seen):
                rep_of[v] = i
                return True
        return False

    for i in range(len(bridges)):
        if not try_place(i, set()):
            return None
    return {keys[rep_of[v]]: v for v in rep_of}


def _complete_candidate(g: PlaneGraph, x_edges: frozenset[Edge], path: list[int],
                        v_avoid: int) -> tuple[WalkSeq, SdrAssign] | None:
    p = WalkSeq(tuple(path), False)
    cert = verify_tutte(g, SubgraphRef(frozenset(), x_edges), p.subgraph())
    if not cert.ok:
        return None
    nontrivial = [br for br in cert.bridges if not br.trivial]
    matched = _sdr_matching(nontrivial, frozenset((v_avoid,)))
    if matched is None:
        return None
    return p, SdrAssign.from_dict(matched)


def find_tutte_path(g: PlaneGraph, x: int, y: int, u: int,
                    v_avoid: int) -> tuple[WalkSeq, SdrAssign]:
    """Exact search for an outer-walk-Tutte xy-path through u with an SDR
    avoiding v_avoid, in id-lexicographic order.

    On a certified circuit block existence is guaranteed, so exhausting
    the search raises SearchExhausted (a bug detector, not a result).
    """
    if x == y:
        raise PreconditionFailed("path endpoints must differ")
    if v_avoid not in (x, u):
        raise PreconditionFailed("excluded representative must be the start or the through-vertex")
    if g.num_vertices() == 2:
        if not g.has_edge(x, y):
            raise PreconditionFailed("two-vertex instance must be the edge xy")
        return WalkSeq((x, y), False), SdrAssign()
    xw = outer_walk(g).boundary
    if x not in xw.verts or u not in xw.verts:
        raise PreconditionFailed("x and u must lie on the outer walk")
    x_edges = frozenset(xw.edges())

    def viable(on_path: set[int], last: int) -> bool:
        seen: set[int] = set()
        for s in g.vertices:
            if s in on_path or s in seen:
                continue
            comp = {s}
            stack = [s]
            while stack:
                a = stack.pop()
                for w in g.rot[a]:
                    if w not in on_path and w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            if any(last in g.rot[v] for v in comp):
                continue  # still reachable from the path tip
            if y in comp or (u not in on_path and u in comp):
                return False
            att = {w for v in comp for w in g.rot[v] if w in on_path}
            if len(att) > 3:
                return False
            if len(att) > 2 and any(edge_key(a, b) in x_edges
                                    for v in comp for a, b in ((v, w) for w in g.rot[v])):
                return False
        return True

    path = [x]
    on_path = {x}
    stack = [iter(sorted(g.rot[x]))]
    while stack:
        w = next(stack[-1], None)
        if w is None:
            stack.pop()
            on_path.discard(path.pop())
            continue
        if w in on_path:
            continue
        path.append(w)
        on_path.add(w)
        if w == y:
            if u in on_path:
                done = _complete_candidate(g, x_edges, path, v_avoid)
                if done is not None:
                    return done
            on_path.discard(path.pop())
            continue
        if viable(on_path, w):
            stack.append(iter(sorted(g.rot[w])))
        else:
            on_path.discard(path.pop())
    raise SearchExhausted(
        f"no Tutte {x}-{y} path through {u} avoiding rep {v_avoid} in "
        f"{g.num_vertices()}-vertex block; instance should be reported")


def find_tutte_path_through_edge(g: PlaneGraph, x: int, y: int,
                                 e: Edge) -> tuple[WalkSeq, SdrAssign]:
    """Tutte xy-path through the outer-walk edge e, SDR avoiding x;
    realized by subdividing e and searching through the new vertex."""
    xw = outer_walk(g).boundary
    if x not in xw.verts:
        raise PreconditionFailed("x must lie on the outer walk")
    if edge_key(*e) not in frozenset(xw.edges()):
        raise PreconditionFailed("e must be an outer-walk edge")
    g2, m = subdivide_edge(g, *e)
    p2, sdr = find_tutte_path(g2, x, y, m, v_avoid=x)
    verts = list(p2.verts)
    i = verts.index(m)
    del verts[i]
    return WalkSeq(tuple(verts), False), sdr


# ---------------------------------------------------------------------------
# Jigsaw combination
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class JigsawPart:
    graph: SubgraphRef
    x: SubgraphRef
    t: SubgraphRef
    sdr: SdrAssign
    label: str = ""


def jigsaw(parts: Sequence[JigsawPart]) -> tuple[SubgraphRef, SubgraphRef, SdrAssign]:
    """Checked union of Tutte pieces: edge-disjoint hosts meeting only
    where their Tutte subgraphs meet, with pairwise disjoint SDRs."""
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            pi, pj = parts[i], parts[j]
            shared_edges = pi.graph.edges & pj.graph.edges
            if shared_edges:
                raise OverlapViolation(
                    f"parts {pi.label or i} and {pj.label or j} share edges {sorted(shared_edges)[:3]}")
            gv = pi.graph.vertices & pj.graph.vertices
            tv = pi.t.vertices & pj.t.vertices
            if gv != tv:
                raise OverlapViolation(
                    f"parts {pi.label or i} and {pj.label or j} meet at {sorted(gv - tv)[:4]} "
                    "outside their Tutte subgraphs")
    try:
        sdr = merge_sdrs([p.sdr for p in parts])
    except SdrCollision as exc:
        raise SdrCollision(f"{exc} (while combining {len(parts)} parts)")
    t = union_all([p.t for p in parts])
    x = union_all([p.x for p in parts])
    return t, x, sdr


# ---------------------------------------------------------------------------
# SDR standard pieces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SpResult:
    """A path piece plus pinned isolated vertices forming a Tutte subgraph
    of the piece's host, with its SDR and any representative transfers."""

    path: WalkSeq
    pins: frozenset[int]
    sdr: SdrAssign
    reassigned: tuple[tuple[BridgeKey, BridgeKey], ...] = ()

    def tutte_subgraph(self) -> SubgraphRef:
        base = self.path.subgraph()
        return SubgraphRef(base.vertices | self.pins, base.edges)


def sp1(chain: CircuitChain, u: int) -> SpResult:
    """Tutte path from chain end to chain end through u, SDR avoiding the
    first chain end; per-block oracle calls glued with the jigsaw."""
    cuts, blks = chain.cuts, chain.blocks
    if chain.n == 0:
        return SpResult(WalkSeq((cuts[0],), False), frozenset(), SdrAssign())
    segs: list[WalkSeq] = []
    parts: list[JigsawPart] = []
    for i, blk in enumerate(blks):
        a_i, b_i = cuts[i], cuts[i + 1]
        u_i = u if (u in blk and u not in (a_i, b_i)) else a_i
        p_i, sdr_i = find_tutte_path(blk, a_i, b_i, u_i, v_avoid=a_i)
        segs.append(p_i)
        x_i = (outer_walk(blk).boundary.subgraph() if blk.num_vertices() > 2
               else blk.as_subgraph())
        parts.append(JigsawPart(blk.as_subgraph(), x_i, p_i.subgraph(), sdr_i, f"block{i + 1}"))
    _, _, sdr = jigsaw(parts)
    return SpResult(concat_paths(segs), frozenset(), sdr)


def _transfer_reps(host: PlaneGraph, t: SubgraphRef, pins: frozenset[int],
                   base_sdr: SdrAssign, what: str
                   ) -> tuple[dict[BridgeKey, int], list[tuple[BridgeKey, BridgeKey]],
                              list[BridgeRec]]:
    """Recompute bridges against t (path plus pins) in the host and carry
    representatives over from the pin-free bridges.

    Returns (new assignment, transfer log, bridges now attaching at every
    pin) — the caller decides what to do with the all-pins bridges."""
    base = base_sdr.as_dict()
    out: dict[BridgeKey, int] = {}
    log: list[tuple[BridgeKey, BridgeKey]] = []
    full_pin_bridges: list[BridgeRec] = []
    for br in bridges_of(host, t):
        if br.trivial:
            continue
        pin_hits = br.attachments & pins
        if pins and pin_hits == pins and len(pins) > 1:
            full_pin_bridges.append(br)
            continue
        inner = frozenset(e for e in br.edge_set
                          if e[0] not in pins and e[1] not in pins)
        key = br.key()
        inner_key = tuple(sorted(inner))
        if inner_key == key:
            if key not in base:
                raise PreconditionFailed(f"{what}: unassigned bridge appeared", witness=key[:2])
            out[key] = base[key]
        else:
            if inner_key not in base:
                raise PreconditionFailed(f"{what}: bridge gained a pin but has no inherited "
                                         "representative", witness=key[:2])
            if len(br.attachments - pin_hits) > 2:
                raise PreconditionFailed(f"{what}: bridge gained a pin with more than two "
                                         "prior attachments", witness=key[:2])
            out[key] = base[inner_key]
            log.append((inner_key, key))
    return out, log, full_pin_bridges


def sp2(k: PlaneGraph, a: int, b: int, c: int, exclude: str = "a") -> SpResult:
    """ab-path avoiding c whose union with the pinned c is Tutte for the
    clockwise outer segment from a to b; SDR avoids c and the chosen end."""
    xw = outer_walk(k)
    seg = clockwise_segment(xw, a, b)
    if c in seg.verts:
        raise PreconditionFailed("clockwise segment from a to b must avoid c")
    h = delete_vertices(k, (c,))
    chain = certify_chain(chain_decomposition(h, a, b))
    if exclude == "b":
        chain = chain.reversed()
    res = sp1(chain, u=chain.cuts[0])
    path = res.path if res.path.start == a else res.path.reversed()

    t = SubgraphRef(frozenset(path.verts) | {c}, frozenset(path.edges()))
    assignment, log, leftovers = _transfer_reps(k, t, frozenset((c,)), res.sdr, "sp2")
    if leftovers:
        raise PreconditionFailed("sp2: unexpected bridge shape", witness=leftovers[0].key()[:2])
    return SpResult(path, frozenset((c,)), SdrAssign.from_dict(assignment), tuple(log))


def sp3(k: PlaneGraph, a: int, b: int, c: int, d: int, x: int,
        exclude: str = "a") -> SpResult:
    """ab-path avoiding c and d, Tutte with both pinned, SDR avoiding the
    chosen end and the requested vertex x of {c, d}."""
    if c == d:
        raise PreconditionFailed("c and d must differ")
    if x not in (c, d):
        raise PreconditionFailed("x must be one of c, d")
    xw = outer_walk(k)
    seg = clockwise_segment(xw, a, b)
    if c in seg.verts or d in seg.verts:
        raise PreconditionFailed("clockwise segment from a to b must avoid c and d")
    targets = frozenset(seg.verts) | {c, d}
    if not is_ks_connected(k, 3, targets):
        witness = ks_connected_witness(k, 3, targets) if k.num_vertices() <= 12 else None
        raise PreconditionFailed("not 3-connected relative to the segment plus {c,d}",
                                 witness=witness)
    h = delete_vertices(k, (c, d))
    chain = certify_chain(chain_along_path(h, seg))

    # locate the single possible bridge hanging on both c and d
    hooked = [br for br in bridges_of(k, SubgraphRef(chain.vertices() | {c, d}, chain.edges()))
              if not br.trivial]
    for br in hooked:
        if not ({c, d} <= br.attachments and len(br.attachments) == 3):
            raise PreconditionFailed("sp3: bridge of the chain with unexpected attachments",
                                     witness=sorted(br.attachments))
    if len(hooked) > 1:
        raise PreconditionFailed("sp3: more than one bridge attaching at both c and d")
    through = next(iter(hooked[0].attachments - {c, d})) if hooked else None

    if exclude == "b":
        chain = chain.reversed()
    res = sp1(chain, u=through if through is not None else chain.cuts[0])
    path = res.path if res.path.start == a else res.path.reversed()

    t = SubgraphRef(frozenset(path.verts) | {c, d}, frozenset(path.edges()))
    assignment, log, both = _transfer_reps(k, t, frozenset((c, d)), res.sdr, "sp3")
    y = d if x == c else c
    if len(both) > 1:
        raise PreconditionFailed("sp3: several bridges attach at both c and d")
    for br in both:
        assignment[br.key()] = y
    return SpResult(path, frozenset((c, d)), SdrAssign.from_dict(assignment), tuple(log))
