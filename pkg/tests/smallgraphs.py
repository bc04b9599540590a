"""Small fixed graphs used as oracles across the test suite."""

from __future__ import annotations

import math

from planewalks.plane import PlaneGraph, plane_graph_from_coords


def ring_coords(n: int, radius: float, offset_deg: float = 90.0) -> list[tuple[float, float]]:
    # clockwise placement starting at the top
    out = []
    for i in range(n):
        a = math.radians(offset_deg - 360.0 * i / n)
        out.append((radius * math.cos(a), radius * math.sin(a)))
    return out


def single_vertex() -> PlaneGraph:
    return plane_graph_from_coords({0: (0.0, 0.0)}, [])


def single_edge() -> PlaneGraph:
    return plane_graph_from_coords({0: (0.0, 0.0), 1: (1.0, 0.0)}, [(0, 1)])


def path_graph(n: int) -> PlaneGraph:
    coords = {i: (float(i), 0.0) for i in range(n)}
    return plane_graph_from_coords(coords, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> PlaneGraph:
    coords = dict(enumerate(ring_coords(n, 2.0)))
    return plane_graph_from_coords(coords, [(i, (i + 1) % n) for i in range(n)])


def triangle() -> PlaneGraph:
    return cycle_graph(3)


def k4() -> PlaneGraph:
    coords = dict(enumerate(ring_coords(3, 2.0)))
    coords[3] = (0.0, 0.0)
    edges = [(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)]
    return plane_graph_from_coords(coords, edges)


def wheel(n: int) -> PlaneGraph:
    """Rim 0..n-1 clockwise plus hub n."""
    coords = dict(enumerate(ring_coords(n, 2.0)))
    coords[n] = (0.0, 0.0)
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, n) for i in range(n)]
    return plane_graph_from_coords(coords, edges)


def cube() -> PlaneGraph:
    """Q3: outer square 0..3, inner square 4..7, straight spokes."""
    outer = ring_coords(4, 2.0, offset_deg=45.0)
    inner = ring_coords(4, 1.0, offset_deg=45.0)
    coords = {i: outer[i] for i in range(4)}
    coords.update({4 + i: inner[i] for i in range(4)})
    edges = [(i, (i + 1) % 4) for i in range(4)]
    edges += [(4 + i, 4 + (i + 1) % 4) for i in range(4)]
    edges += [(i, 4 + i) for i in range(4)]
    return plane_graph_from_coords(coords, edges)


def octahedron() -> PlaneGraph:
    """Antiprism embedding: outer triangle 0..2, inner triangle 3..5."""
    outer = ring_coords(3, 2.0)
    inner = ring_coords(3, 1.0, offset_deg=30.0)
    coords = {i: outer[i] for i in range(3)}
    coords.update({3 + i: inner[i] for i in range(3)})
    edges = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]
    edges += [(3, 0), (3, 1), (4, 1), (4, 2), (5, 2), (5, 0)]
    return plane_graph_from_coords(coords, edges)


def two_triangles_shared_vertex() -> PlaneGraph:
    """Triangles 0-1-2 and 2-3-4 glued at vertex 2."""
    coords = {0: (-2.0, 1.0), 1: (-2.0, -1.0), 2: (0.0, 0.0),
              3: (2.0, 1.0), 4: (2.0, -1.0)}
    edges = [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]
    return plane_graph_from_coords(coords, edges)


def nested_triangles_matching() -> PlaneGraph:
    """Outer triangle 0..2, inner triangle 3..5, three spokes."""
    outer = ring_coords(3, 2.0)
    inner = ring_coords(3, 1.0)
    coords = {i: outer[i] for i in range(3)}
    coords.update({3 + i: inner[i] for i in range(3)})
    edges = [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]
    return plane_graph_from_coords(coords, edges)


def theta_graph() -> PlaneGraph:
    coords = {0: (-2.0, 0.0), 1: (2.0, 0.0), 2: (0.0, 1.5), 3: (0.0, -1.5)}
    edges = [(0, 1), (0, 2), (2, 1), (0, 3), (3, 1)]
    return plane_graph_from_coords(coords, edges)


def star(leaves: int) -> PlaneGraph:
    coords = {0: (0.0, 0.0)}
    pts = ring_coords(leaves, 2.0)
    for i in range(leaves):
        coords[i + 1] = pts[i]
    return plane_graph_from_coords(coords, [(0, i + 1) for i in range(leaves)])


def k5_flat_rotation() -> PlaneGraph:
    """K5 with an arbitrary rotation; not embeddable, fails the Euler check."""
    rot = {v: tuple(w for w in range(5) if w != v) for v in range(5)}
    return PlaneGraph(rot, (0, 1))


def grid(w: int, h: int) -> PlaneGraph:
    """(w+1) x (h+1) grid of unit cells; ids row-major from the bottom."""
    def vid(x, y):
        return y * (w + 1) + x
    coords = {vid(x, y): (float(x), float(y)) for y in range(h + 1) for x in range(w + 1)}
    edges = []
    for y in range(h + 1):
        for x in range(w + 1):
            if x < w:
                edges.append((vid(x, y), vid(x + 1, y)))
            if y < h:
                edges.append((vid(x, y), vid(x, y + 1)))
    return plane_graph_from_coords(coords, edges)
