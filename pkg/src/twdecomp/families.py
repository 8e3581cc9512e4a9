"""Fixed graphs and deterministic constructions used as patterns and hosts.

Petersen: outer 5-cycle 0-1-2-3-4, spokes i-(i+5), inner pentagram
(i+5)-((i+2) mod 5 + 5).

Heawood: 14-cycle 0-1-...-13 plus chords i-(i+5 mod 14) for even i
(LCF notation [5, -5]^7); the incidence graph of the Fano plane.

Wall (t x t): start from rows r = 0..t and columns c = 0..2t+1, join
consecutive vertices of each row, join (r, c)-(r+1, c) when c = r (mod 2),
then strip degree-1 vertices until none remain.  Vertex ids follow
row-major coordinate order among the survivors.  wall(1) is the hexagon.
"""
from __future__ import annotations

from functools import lru_cache

from .graph import Graph, GraphInputError, complete_graph, cycle_graph, line_graph


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(i + 5, (i + 2) % 5 + 5) for i in range(5)]
    return Graph.from_edges(10, edges)


def heawood() -> Graph:
    edges = [(i, (i + 1) % 14) for i in range(14)]
    edges += [(i, (i + 5) % 14) for i in range(0, 14, 2)]
    return Graph.from_edges(14, edges)


PETERSEN = petersen()
HEAWOOD = heawood()
HOSTS = {"petersen": PETERSEN, "heawood": HEAWOOD}


@lru_cache(maxsize=None)
def wall_with_coordinates(t: int) -> tuple[Graph, tuple[tuple[int, int], ...]]:
    if t < 1:
        raise GraphInputError("wall size must be at least 1")
    cols = 2 * t + 2
    nodes = {(r, c) for r in range(t + 1) for c in range(cols)}
    edges = set()
    for r in range(t + 1):
        for c in range(cols - 1):
            edges.add(((r, c), (r, c + 1)))
    for r in range(t):
        for c in range(cols):
            if c % 2 == r % 2:
                edges.add(((r, c), (r + 1, c)))
    while True:
        deg = {v: 0 for v in nodes}
        for a, b in edges:
            deg[a] += 1
            deg[b] += 1
        drop = {v for v, d in deg.items() if d <= 1}
        if not drop:
            break
        nodes -= drop
        edges = {e for e in edges if e[0] in nodes and e[1] in nodes}
    coords = tuple(sorted(nodes))
    index = {v: i for i, v in enumerate(coords)}
    return Graph.from_edges(len(coords), ((index[a], index[b]) for a, b in edges)), coords


def wall(t: int) -> Graph:
    return wall_with_coordinates(t)[0]


def prism() -> Graph:
    """Triangles 0-1-2 and 3-4-5 joined by the matching i-(i+3); this is L(K_{2,3})."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def octahedron() -> Graph:
    """K_{2,2,2}, which is L(K4)."""
    return line_graph(complete_graph(4))[0]


def subdivide_all(g: Graph, times: int = 1) -> Graph:
    """Replace every edge by a path with ``times`` interior vertices."""
    n = g.n
    edges = []
    for u, v in g.edges():
        prev = u
        for _ in range(times):
            edges.append((prev, n))
            prev = n
            n += 1
        edges.append((prev, v))
    return Graph.from_edges(n, edges)


def wheel_graph(k: int) -> Graph:
    """Hole of length k plus a hub adjacent to all of it."""
    rim = cycle_graph(k)
    edges = rim.edges() + [(i, k) for i in range(k)]
    return Graph.from_edges(k + 1, edges)
