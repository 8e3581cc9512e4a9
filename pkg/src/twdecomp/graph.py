"""Immutable simple graphs on dense vertex identifiers.

Adjacency is held as one Python int bitmask per vertex, so neighbourhood
queries and set intersections are word-parallel.  Every construction returns
a new graph; nothing is mutated after ``__post_init__``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence


class GraphInputError(ValueError):
    """Raised when an operation receives vertices or sets it cannot accept."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is the bitmask of neighbours of ``v``.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise GraphInputError("adjacency length must equal n")
        full = (1 << self.n) - 1
        for v, a in enumerate(self.adj):
            if a & ~full:
                raise GraphInputError(f"vertex {v} has a neighbour out of range")
            if a >> v & 1:
                raise GraphInputError(f"self-loop at {v}")
            for u in bits(a):
                if not self.adj[u] >> v & 1:
                    raise GraphInputError(f"asymmetric adjacency {v}-{u}")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise GraphInputError(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    # -- queries ----------------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    @property
    def max_degree(self) -> int:
        return max((a.bit_count() for a in self.adj), default=0)

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def is_clique(self, mask: int) -> bool:
        for v in bits(mask):
            if (mask & ~(1 << v)) & ~self.adj[v]:
                return False
        return True

    def is_stable(self, mask: int) -> bool:
        return all(not (self.adj[v] & mask) for v in bits(mask))

    def check_vertices(self, vertices: Iterable[int]) -> int:
        mask = 0
        for v in vertices:
            if not isinstance(v, int) or not 0 <= v < self.n:
                raise GraphInputError(f"vertex {v!r} not in graph on {self.n} vertices")
            mask |= 1 << v
        return mask

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# -- elementary constructions ---------------------------------------------


def induced_subgraph(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Return ``g[s]`` and the map from new identifiers to old ones.

    New identifiers follow the increasing order of the old ones.
    """
    mask = g.check_vertices(s)
    old = tuple(bits(mask))
    index = {v: i for i, v in enumerate(old)}
    adj = []
    for v in old:
        row = 0
        for u in bits(g.adj[v] & mask):
            row |= 1 << index[u]
        adj.append(row)
    return Graph(len(old), tuple(adj)), old


def induced_mask(g: Graph, mask: int) -> tuple[Graph, tuple[int, ...]]:
    return induced_subgraph(g, bits(mask))


def remove_vertices(g: Graph, s: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    return induced_mask(g, g.full & ~g.check_vertices(s))


def add_vertex(g: Graph, neighbours: Iterable[int]) -> Graph:
    """Append vertex ``n`` adjacent to ``neighbours``."""
    mask = g.check_vertices(neighbours)
    w = g.n
    adj = [a | (1 << w) if mask >> v & 1 else a for v, a in enumerate(g.adj)]
    adj.append(mask)
    return Graph(g.n + 1, tuple(adj))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    g.check_vertices((u, v))
    if u == v:
        raise GraphInputError("self-loop")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(g.n, tuple(adj))


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise GraphInputError(f"{u}{v} is not an edge")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj))


def subdivide_edge(g: Graph, u: int, v: int) -> Graph:
    """Replace edge ``uv`` by a path ``u-w-v``; ``w`` gets identifier ``n``."""
    g.check_vertices((u, v))
    if not g.has_edge(u, v):
        raise GraphInputError(f"{u}{v} is not an edge")
    return add_vertex(remove_edge(g, u, v), (u, v))


def line_graph(g: Graph) -> tuple[Graph, tuple[tuple[int, int], ...]]:
    """Line graph of ``g`` and the map from its vertices to edges of ``g``."""
    edges = tuple(g.edges())
    at: list[int] = [0] * g.n
    for i, (u, v) in enumerate(edges):
        at[u] |= 1 << i
        at[v] |= 1 << i
    adj = [(at[u] | at[v]) & ~(1 << i) for i, (u, v) in enumerate(edges)]
    return Graph(len(edges), tuple(adj)), edges


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.n
    return Graph(g.n + h.n, g.adj + tuple(a << shift for a in h.adj))


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph(g.n, tuple(full & ~a & ~(1 << v) for v, a in enumerate(g.adj)))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    return Graph.from_edges(g.n, ((perm[u], perm[v]) for u, v in g.edges()))


# -- connectivity -----------------------------------------------------------


def reach(g: Graph, start: int, within: int) -> int:
    """Mask of vertices reachable from ``start`` inside ``within``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nb = 0
        for v in bits(frontier):
            nb |= g.adj[v]
        frontier = nb & within & ~seen
        seen |= frontier
    return seen


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Components of ``g[within]`` ordered by minimum vertex."""
    left = g.full if within is None else within
    out = []
    while left:
        c = reach(g, lowest(left), left)
        out.append(c)
        left &= ~c
    return out


def components(g: Graph) -> list[frozenset[int]]:
    return [frozenset(bits(c)) for c in component_masks(g)]


def is_connected(g: Graph, within: int | None = None) -> bool:
    """Connectivity of ``g[within]``; the null graph counts as connected."""
    return len(component_masks(g, within)) <= 1


def _disjoint(g: Graph, x: Iterable[int], y: Iterable[int]) -> tuple[int, int]:
    xm, ym = g.check_vertices(x), g.check_vertices(y)
    if xm & ym:
        raise GraphInputError("sets must be disjoint")
    return xm, ym


def is_complete_to(g: Graph, x: Iterable[int], y: Iterable[int]) -> bool:
    xm, ym = _disjoint(g, x, y)
    return all(g.adj[v] & ym == ym for v in bits(xm))


def is_anticomplete(g: Graph, x: Iterable[int], y: Iterable[int]) -> bool:
    xm, ym = _disjoint(g, x, y)
    return all(not g.adj[v] & ym for v in bits(xm))


# -- paths -----------------------------------------------------------------


def is_path(g: Graph, seq: Sequence[int]) -> bool:
    """Distinct vertices with consecutive pairs adjacent."""
    if len(set(seq)) != len(seq):
        return False
    g.check_vertices(seq)
    return all(g.has_edge(a, b) for a, b in zip(seq, seq[1:]))


def is_induced_path(g: Graph, seq: Sequence[int]) -> bool:
    if not is_path(g, seq):
        return False
    pos = {v: i for i, v in enumerate(seq)}
    return all(abs(pos[a] - pos[b]) == 1 for a, b in combinations(seq, 2) if g.has_edge(a, b))


# -- named small graphs -----------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphInputError("cycles have at least three vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def star(k: int) -> Graph:
    return complete_bipartite(1, k)
