"""Finite simple plane graphs as rotation systems.

A graph is stored as a clockwise cyclic neighbor order per vertex plus a
designated outer face.  Faces are traced combinatorially: the dart (u, v)
is followed by (v, w) where w succeeds u in the rotation at v.  With
clockwise rotations this traces the outer face clockwise (region on the
left of each dart is the face being traced).

Everything downstream (bridges, chains, net truncations, Tutte-path
pieces) manipulates subgraphs of one host; `induced_subgraph` keeps the
inherited embedding and re-derives the designated outer face by walking
face adjacencies of the host.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import (
    AmbiguousEndpoint,
    EmbeddingInvalid,
    NotACycle,
    NotConnected,
    PlanewalksError,
)

Dart = tuple[int, int]
Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


# ---------------------------------------------------------------------------
# Walks and subgraph references
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WalkSeq:
    """A vertex sequence; consecutive vertices must be adjacent in the host.

    For closed walks the last vertex is implicitly joined back to the
    first (the first vertex is not repeated at the end).
    """

    verts: tuple[int, ...]
    closed: bool = False

    def __len__(self) -> int:
        return len(self.verts)

    def __iter__(self):
        return iter(self.verts)

    @property
    def start(self) -> int:
        return self.verts[0]

    @property
    def end(self) -> int:
        return self.verts[-1]

    def edges(self) -> list[Edge]:
        out = [edge_key(a, b) for a, b in zip(self.verts, self.verts[1:])]
        if self.closed and len(self.verts) > 1:
            out.append(edge_key(self.verts[-1], self.verts[0]))
        return out

    def darts(self) -> list[Dart]:
        out = list(zip(self.verts, self.verts[1:]))
        if self.closed and len(self.verts) > 1:
            out.append((self.verts[-1], self.verts[0]))
        return out

    def is_path(self) -> bool:
        return not self.closed and len(set(self.verts)) == len(self.verts)

    def is_cycle(self) -> bool:
        return self.closed and len(self.verts) >= 3 and len(set(self.verts)) == len(self.verts)

    def reversed(self) -> "WalkSeq":
        if self.closed:
            return WalkSeq((self.verts[0],) + tuple(reversed(self.verts[1:])), True)
        return WalkSeq(tuple(reversed(self.verts)), False)

    def subgraph(self) -> "SubgraphRef":
        return SubgraphRef(frozenset(self.verts), frozenset(self.edges()))


@dataclass(frozen=True)
class FaceWalk:
    """One traced face: a closed boundary walk plus the outer flag."""

    boundary: WalkSeq
    is_outer: bool = False

    def __len__(self) -> int:
        return len(self.boundary.verts)


@dataclass(frozen=True)
class SubgraphRef:
    """A subgraph of some host given by its vertex and edge sets."""

    vertices: frozenset[int]
    edges: frozenset[Edge]

    @staticmethod
    def empty() -> "SubgraphRef":
        return SubgraphRef(frozenset(), frozenset())

    @staticmethod
    def of_vertices(vs: Iterable[int]) -> "SubgraphRef":
        return SubgraphRef(frozenset(vs), frozenset())

    def union(self, other: "SubgraphRef") -> "SubgraphRef":
        return SubgraphRef(self.vertices | other.vertices, self.edges | other.edges)

    def contains(self, other: "SubgraphRef") -> bool:
        return other.vertices <= self.vertices and other.edges <= self.edges

    def has_vertex(self, v: int) -> bool:
        return v in self.vertices


def union_all(parts: Iterable[SubgraphRef]) -> SubgraphRef:
    vs: set[int] = set()
    es: set[Edge] = set()
    for p in parts:
        vs |= p.vertices
        es |= p.edges
    return SubgraphRef(frozenset(vs), frozenset(es))


def concat_paths(parts: Sequence[WalkSeq]) -> WalkSeq:
    """Join open paths end-to-start; consecutive parts must share exactly
    their junction vertex."""
    verts: list[int] = []
    for part in parts:
        if part.closed:
            raise PlanewalksError("cannot concatenate closed walks")
        if not verts:
            verts.extend(part.verts)
            continue
        if part.verts[0] != verts[-1]:
            raise PlanewalksError(
                f"path junction mismatch: {verts[-1]} vs {part.verts[0]}")
        verts.extend(part.verts[1:])
    if len(set(verts)) != len(verts):
        raise PlanewalksError("concatenated parts revisit a vertex")
    return WalkSeq(tuple(verts), False)


# ---------------------------------------------------------------------------
# PlaneGraph
# ---------------------------------------------------------------------------


class PlaneGraph:
    """Immutable finite simple plane graph.

    `rot[v]` lists v's neighbors in clockwise order.  `outer_dart` is one
    directed edge whose traced face is the designated unbounded face
    (None only for edgeless graphs, where each isolated vertex bounds a
    trivial face and the lone face of the designated vertex is outer).
    """

    __slots__ = ("vertices", "rot", "outer_dart", "__dict__")

    def __init__(self, rot: Mapping[int, Sequence[int]], outer_dart: Dart | None):
        self.vertices: tuple[int, ...] = tuple(sorted(rot))
        self.rot: dict[int, tuple[int, ...]] = {v: tuple(rot[v]) for v in self.vertices}
        self.outer_dart = outer_dart

    # -- basic structure ----------------------------------------------------

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(edge_key(u, v) for u in self.vertices for v in self.rot[u])

    @cached_property
    def adj(self) -> dict[int, frozenset[int]]:
        return {v: frozenset(self.rot[v]) for v in self.vertices}

    def __contains__(self, v: int) -> bool:
        return v in self.rot

    def num_vertices(self) -> int:
        return len(self.vertices)

    def num_edges(self) -> int:
        return len(self.edge_set)

    def has_edge(self, u: int, v: int) -> bool:
        return edge_key(u, v) in self.edge_set

    def degree(self, v: int) -> int:
        return len(self.rot[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.rot[v]

    def as_subgraph(self) -> SubgraphRef:
        return SubgraphRef(frozenset(self.vertices), self.edge_set)

    # -- connectivity helpers ----------------------------------------------

    @cached_property
    def components(self) -> tuple[frozenset[int], ...]:
        seen: set[int] = set()
        comps = []
        for s in self.vertices:
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            while stack:
                u = stack.pop()
                for w in self.rot[u]:
                    if w not in comp:
                        comp.add(w)
                        stack.append(w)
            seen |= comp
            comps.append(frozenset(comp))
        return tuple(comps)

    def is_connected(self) -> bool:
        return len(self.components) <= 1

    def bfs_path(self, a: int, b: int) -> WalkSeq:
        """Shortest a-b path, ties broken by smallest neighbor id."""
        if a == b:
            return WalkSeq((a,), False)
        prev: dict[int, int] = {a: a}
        frontier = [a]
        while frontier and b not in prev:
            nxt = []
            for u in frontier:
                for w in sorted(self.rot[u]):
                    if w not in prev:
                        prev[w] = u
                        nxt.append(w)
            frontier = nxt
        if b not in prev:
            raise NotConnected(f"no path from {a} to {b}")
        path = [b]
        while path[-1] != a:
            path.append(prev[path[-1]])
        return WalkSeq(tuple(reversed(path)), False)

    # -- face tracing ---------------------------------------------------------

    def next_dart(self, u: int, v: int) -> Dart:
        r = self.rot[v]
        i = r.index(u)
        return (v, r[(i + 1) % len(r)])

    @cached_property
    def _face_data(self) -> tuple[tuple[tuple[Dart, ...], ...], dict[Dart, int]]:
        faces: list[tuple[Dart, ...]] = []
        face_of: dict[Dart, int] = {}
        for u in self.vertices:
            for v in self.rot[u]:
                if (u, v) in face_of:
                    continue
                cycle = [(u, v)]
                face_of[(u, v)] = len(faces)
                d = self.next_dart(u, v)
                while d != (u, v):
                    face_of[d] = len(faces)
                    cycle.append(d)
                    d = self.next_dart(*d)
                faces.append(tuple(cycle))
        for v in self.vertices:
            if not self.rot[v]:  # isolated vertex bounds its own trivial face
                faces.append(((v, v),))
        return tuple(faces), face_of

    @property
    def faces_darts(self) -> tuple[tuple[Dart, ...], ...]:
        return self._face_data[0]

    def face_index_of(self, dart: Dart) -> int:
        return self._face_data[1][dart]

    @cached_property
    def outer_face_index(self) -> int:
        if self.outer_dart is not None:
            return self.face_index_of(self.outer_dart)
        if self.num_edges() == 0 and self.num_vertices() >= 1:
            return 0
        raise EmbeddingInvalid("no outer face designated")

    def face_walk(self, idx: int) -> FaceWalk:
        darts = self.faces_darts[idx]
        if darts[0][0] == darts[0][1]:  # isolated-vertex face
            verts = (darts[0][0],)
        else:
            verts = tuple(d[0] for d in darts)
        return FaceWalk(WalkSeq(_normalize_closed(verts), True), idx == self.outer_face_index)


def _normalize_closed(verts: tuple[int, ...]) -> tuple[int, ...]:
    """Rotate a closed walk to a canonical starting point."""
    if len(verts) <= 1:
        return verts
    best = None
    m = min(verts)
    for i, v in enumerate(verts):
        if v == m:
            cand = verts[i:] + verts[:i]
            if best is None or cand < best:
                best = cand
    return best


# ---------------------------------------------------------------------------
# Core operations
# ---------------------------------------------------------------------------


def validate(g: PlaneGraph) -> list[str]:
    """Return all violated invariants; an empty list means valid."""
    problems: list[str] = []
    for v in g.vertices:
        if v in g.rot[v]:
            problems.append(f"simple: loop at {v}")
        if len(set(g.rot[v])) != len(g.rot[v]):
            problems.append(f"simple: repeated neighbor in rotation of {v}")
    for v in g.vertices:
        for w in g.rot[v]:
            if w not in g.rot or v not in g.rot[w]:
                problems.append(f"rotation-consistent: {v}->{w} not mirrored")
    if problems:
        return problems
    if g.num_edges() > 0:
        if g.outer_dart is None:
            problems.append("outer face: no dart designated")
        else:
            u, v = g.outer_dart
            if u not in g.rot or v not in g.rot.get(u, ()):
                problems.append("outer face: designated dart not an edge")
    faces, _ = g._face_data
    for comp in g.components:
        ne = sum(1 for e in g.edge_set if e[0] in comp)
        nf = sum(1 for f in faces if f[0][0] in comp)
        if len(comp) - ne + nf != 2:
            problems.append(
                f"planar as embedded: component of {min(comp)} has "
                f"V-E+F = {len(comp)}-{ne}+{nf} != 2")
    return problems


def check_valid(g: PlaneGraph) -> PlaneGraph:
    problems = validate(g)
    if problems:
        raise EmbeddingInvalid("; ".join(problems))
    return g


def trace_faces(g: PlaneGraph) -> list[FaceWalk]:
    """All faces of the embedding; each directed edge is used exactly once."""
    problems = validate(g)
    if problems:
        raise EmbeddingInvalid("; ".join(problems))
    return [g.face_walk(i) for i in range(len(g.faces_darts))]


def outer_walk(g: PlaneGraph) -> FaceWalk:
    """The closed walk bounding the designated unbounded face, clockwise."""
    if not g.is_connected():
        raise NotConnected("outer walk requires a connected graph")
    return g.face_walk(g.outer_face_index)


def outer_cycle(g: PlaneGraph) -> WalkSeq:
    w = outer_walk(g).boundary
    if len(g.vertices) > 2 and not w.is_cycle():
        raise NotACycle("outer walk has repeated vertices")
    return w


def clockwise_segment(w: FaceWalk | WalkSeq, x: int, y: int) -> WalkSeq:
    """The contiguous subwalk of a closed walk from x clockwise to y.

    x and y must each occur exactly once; x == y yields the single vertex.
    """
    walk = w.boundary if isinstance(w, FaceWalk) else w
    verts = walk.verts
    for z in (x, y):
        if verts.count(z) != 1:
            raise AmbiguousEndpoint(f"vertex {z} occurs {verts.count(z)} times on walk")
    i = verts.index(x)
    if x == y:
        return WalkSeq((x,), False)
    j = verts.index(y)
    if i <= j:
        seg = verts[i:j + 1]
    else:
        seg = verts[i:] + verts[:j + 1]
    return WalkSeq(seg, False)


# ---------------------------------------------------------------------------
# Induced plane subgraphs
# ---------------------------------------------------------------------------


def _face_reach(g: PlaneGraph, blocked_edges: frozenset[Edge]) -> set[int]:
    """Face indices reachable from the outer face crossing only edges
    outside `blocked_edges`."""
    faces, face_of = g._face_data
    start = g.outer_face_index
    seen = {start}
    stack = [start]
    while stack:
        f = stack.pop()
        for d in faces[f]:
            u, v = d
            if u == v or edge_key(u, v) in blocked_edges:
                continue
            other = face_of[(v, u)]
            if other not in seen:
                seen.add(other)
                stack.append(other)
    return seen


def induced_subgraph(g: PlaneGraph, vertices: Iterable[int],
                     edges: Iterable[Edge] | None = None) -> PlaneGraph:
    """Subgraph with the inherited rotation; the outer face is the face
    whose region contains the host's outer face.

    The subgraph must be connected (a disconnected plane subgraph has no
    single well-defined boundary walk).
    """
    vs = frozenset(vertices)
    if edges is None:
        es = frozenset(e for e in g.edge_set if e[0] in vs and e[1] in vs)
    else:
        es = frozenset(edges)
        for u, v in es:
            if u not in vs or v not in vs or edge_key(u, v) not in g.edge_set:
                raise PlanewalksError(f"edge {(u, v)} not available in host")
    rot = {v: tuple(w for w in g.rot[v] if w in vs and edge_key(v, w) in es)
           for v in sorted(vs)}

    if not es:
        if len(vs) != 1:
            raise NotConnected("edgeless induced subgraph must be a single vertex")
        return PlaneGraph(rot, None)

    # connectivity of the subgraph
    start = next(iter(sorted(vs)))
    comp = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in rot[u]:
            if w not in comp:
                comp.add(w)
                stack.append(w)
    if comp != vs:
        raise NotConnected("induced subgraph is not connected")

    reach = _face_reach(g, es)
    face_of = g._face_data[1]
    outer = None
    for u in sorted(vs):
        for v in rot[u]:
            if face_of[(u, v)] in reach:
                outer = (u, v)
                break
        if outer:
            break
    if outer is None:
        raise EmbeddingInvalid("could not locate outer face of subgraph")
    return PlaneGraph(rot, outer)


def delete_vertices(g: PlaneGraph, drop: Iterable[int]) -> PlaneGraph:
    ds = set(drop)
    return induced_subgraph(g, (v for v in g.vertices if v not in ds))


def inside_subgraph(g: PlaneGraph, c: WalkSeq) -> PlaneGraph:
    """The cycle c together with everything embedded inside it (away from
    the designated outer face); c becomes the outer walk of the result."""
    if not c.is_cycle():
        raise NotACycle("inside_subgraph needs a cycle")
    c_edges = frozenset(c.edges())
    for e in c_edges:
        if e not in g.edge_set:
            raise NotACycle(f"cycle edge {e} not in host")
    if not g.is_connected():
        raise NotConnected("inside_subgraph requires a connected host")

    outside = _face_reach(g, c_edges)
    faces, face_of = g._face_data
    keep_edges = set(c_edges)
    for e in g.edge_set:
        if e in c_edges:
            continue
        if face_of[(e[0], e[1])] not in outside:
            keep_edges.add(e)
    keep_vertices = set(c.verts)
    for u, v in keep_edges:
        keep_vertices.add(u)
        keep_vertices.add(v)

    sub = induced_subgraph(g, keep_vertices, keep_edges)
    # sanity: the reported outer walk of the result is the cycle itself
    if frozenset(outer_walk(sub).boundary.edges()) != c_edges:
        raise EmbeddingInvalid("inside_subgraph: boundary of result is not the given cycle")
    return sub


# ---------------------------------------------------------------------------
# Small surgeries (used by constructions and generators)
# ---------------------------------------------------------------------------


def subdivide_edge(g: PlaneGraph, u: int, v: int, new_id: int | None = None) -> tuple[PlaneGraph, int]:
    """Replace edge uv by a path u-m-v; returns (graph, m)."""
    if not g.has_edge(u, v):
        raise PlanewalksError(f"no edge {(u, v)} to subdivide")
    m = max(g.vertices) + 1 if new_id is None else new_id
    rot = {w: list(g.rot[w]) for w in g.vertices}
    rot[u][rot[u].index(v)] = m
    rot[v][rot[v].index(u)] = m
    rot[m] = [u, v]
    outer = g.outer_dart
    if outer == (u, v):
        outer = (u, m)
    elif outer == (v, u):
        outer = (v, m)
    return PlaneGraph(rot, outer), m


def add_outer_chord(g: PlaneGraph, u: int, v: int, outer_hint: Dart) -> PlaneGraph:
    """Insert edge uv drawn inside the current outer face.

    u and v must each occur once on the outer walk.  The chord splits the
    outer face; `outer_hint` is a dart of the old outer walk that must
    stay on the unbounded side, and it becomes the new outer dart.
    """
    if g.has_edge(u, v):
        raise PlanewalksError(f"edge {(u, v)} already present")
    idx = g.outer_face_index
    darts = g.faces_darts[idx]
    if outer_hint not in darts:
        raise PlanewalksError("outer_hint is not on the outer walk")

    def corner_pred(vertex: int) -> int:
        hits = [d for d in darts if d[1] == vertex]
        if len(hits) != 1:
            raise AmbiguousEndpoint(f"vertex {vertex} occurs {len(hits)} times on outer walk")
        return hits[0][0]

    pu, pv = corner_pred(u), corner_pred(v)
    rot = {w: list(g.rot[w]) for w in g.vertices}
    rot[u].insert(rot[u].index(pu) + 1, v)
    rot[v].insert(rot[v].index(pv) + 1, u)
    return PlaneGraph(rot, outer_hint)


def remove_edge(g: PlaneGraph, u: int, v: int, outer_hint: Dart | None = None) -> PlaneGraph:
    """Drop edge uv, keeping all vertices.  If the outer dart dies, use
    `outer_hint` (or re-designate from the merged face)."""
    if not g.has_edge(u, v):
        raise PlanewalksError(f"no edge {(u, v)} to remove")
    rot = {w: [x for x in g.rot[w] if not (w in (u, v) and x in (u, v))]
           for w in g.vertices}
    outer = g.outer_dart
    if outer in ((u, v), (v, u)):
        if outer_hint is not None:
            outer = outer_hint
        else:
            # any other dart of the old outer face survives on the outer side
            cands = [d for d in g.faces_darts[g.outer_face_index]
                     if d not in ((u, v), (v, u))]
            if not cands:
                other = g.face_index_of((v, u)) if outer == (u, v) else g.face_index_of((u, v))
                cands = [d for d in g.faces_darts[other] if d not in ((u, v), (v, u))]
            outer = cands[0] if cands else None
    return PlaneGraph(rot, outer)


# ---------------------------------------------------------------------------
# Geometric construction helper for generators
# ---------------------------------------------------------------------------


def plane_graph_from_coords(coords: Mapping[int, tuple[float, float]],
                            edges: Iterable[Edge]) -> PlaneGraph:
    """Build the rotation system of a straight-line drawing.

    Rotations are bearings sorted clockwise from north; the outer dart is
    found at the lexicographically lowest point of the drawing.
    """
    es = {edge_key(u, v) for u, v in edges}
    nbrs: dict[int, list[int]] = {v: [] for v in coords}
    for u, v in es:
        nbrs[u].append(v)
        nbrs[v].append(u)

    def bearing(a: int, b: int) -> float:
        ax, ay = coords[a]
        bx, by = coords[b]
        t = math.atan2(bx - ax, by - ay)  # clockwise from north
        return t + 2 * math.pi if t < 0 else t

    rot = {v: tuple(sorted(ws, key=lambda w: bearing(v, w))) for v, ws in nbrs.items()}
    if not es:
        if len(coords) != 1:
            raise NotConnected("coordinate graph without edges must be a single vertex")
        return PlaneGraph(rot, None)

    vmin = min(coords, key=lambda v: (coords[v][1], coords[v][0], v))
    # outer boundary leaves the bottom-most vertex sweeping clockwise from south
    w0 = min(rot[vmin], key=lambda w: ((bearing(vmin, w) - math.pi) % (2 * math.pi)))
    return PlaneGraph(rot, (vmin, w0))


# ---------------------------------------------------------------------------
# Serialization
# ---------------------------------------------------------------------------


def to_json_dict(g: PlaneGraph) -> dict:
    out: dict = {
        "schema": 1,
        "vertices": list(g.vertices),
        "rotation": {str(v): list(g.rot[v]) for v in g.vertices},
    }
    if g.num_edges() > 0:
        out["outer_face"] = list(outer_walk(g).boundary.verts) if g.is_connected() else None
        if out["outer_face"] is None:
            out["outer_dart"] = list(g.outer_dart)
            del out["outer_face"]
    else:
        out["outer_face"] = list(g.vertices[:1])
    return out


def from_json_dict(data: Mapping) -> PlaneGraph:
    rot = {int(v): tuple(ws) for v, ws in data["rotation"].items()}
    for v in data["vertices"]:
        rot.setdefault(int(v), ())
    if "outer_dart" in data:
        g = PlaneGraph(rot, tuple(data["outer_dart"]))
        return check_valid(g)
    walk = data.get("outer_face")
    probe = PlaneGraph(rot, None)
    if probe.num_edges() == 0:
        return check_valid(probe)
    if not walk or len(walk) < 2:
        raise EmbeddingInvalid("outer_face walk missing")
    target = _normalize_closed(tuple(walk))
    for u in probe.vertices:
        for v in probe.rot[u]:
            g = PlaneGraph(rot, (u, v))
            darts = g.faces_darts[g.face_index_of((u, v))]
            verts = tuple(d[0] for d in darts)
            if _normalize_closed(verts) == target:
                return check_valid(g)
    raise EmbeddingInvalid("outer_face walk does not match any traced face")


def dumps(g: PlaneGraph) -> str:
    return json.dumps(to_json_dict(g), sort_keys=True, separators=(",", ":"))


def loads(text: str) -> PlaneGraph:
    return from_json_dict(json.loads(text))


def to_dot(g: PlaneGraph) -> str:
    """DOT text with one comment line per traced face."""
    lines = ["graph G {"]
    for v in g.vertices:
        lines.append(f"  {v};")
    for u, v in sorted(g.edge_set):
        lines.append(f"  {u} -- {v};")
    for i in range(len(g.faces_darts)):
        fw = g.face_walk(i)
        tag = " (outer)" if fw.is_outer else ""
        lines.append(f"  // face {i}{tag}: {'-'.join(map(str, fw.boundary.verts))}")
    lines.append("}")
    return "\n".join(lines) + "\n"
