"""Seeded generators for the graph families used by the verification suites.

``generate(GeneratorSpec(...))`` is deterministic: the same family, params
and seed give the same graph, and each family re-checks its postcondition.
Graph-valued params may be Graph objects, graph6 strings, or nested specs.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Sequence

from .codecs import read_graph6
from .cutsets import compose_one_join, find_proper_one_join, find_two_cutsets
from .detect import detect_clique
from .families import HEAWOOD, PETERSEN, subdivide_all, wall
from .graph import (Graph, GraphInputError, bits, component_masks, is_connected, line_graph,
                    subdivide_edge, to_mask)

FAMILIES = ("wall", "subdivided", "line-of", "petersen", "heawood", "long-rich-square",
            "strongly-2-bipartite", "glue-clique", "glue-2cut", "compose-1join", "random")


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    params: dict = field(default_factory=dict, compare=False)
    seed: int = 0

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise GraphInputError(f"unknown family {self.family!r}")
        if not 0 <= self.seed < 1 << 64:
            raise GraphInputError("seed must fit in 64 bits")


def _graph(x: Any) -> Graph:
    if isinstance(x, Graph):
        return x
    if isinstance(x, GeneratorSpec):
        return generate(x)
    if isinstance(x, (str, bytes)):
        return read_graph6(x)
    raise GraphInputError(f"cannot read a graph from {type(x).__name__}")


def _need(params: dict, key: str):
    if key not in params:
        raise GraphInputError(f"missing parameter {key!r}")
    return params[key]


# -- families ------------------------------------------------------------------------


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    if n < 0 or not 0 <= p <= 1:
        raise GraphInputError("need n >= 0 and 0 <= p <= 1")
    return Graph.from_edges(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def subdivided(g: Graph, rule: str, rng: random.Random, edge: Sequence[int] | None = None) -> Graph:
    """``all``: every edge once; ``edge``: one given edge once; ``random``: each edge 0-2 times."""
    if rule == "all":
        return subdivide_all(g, 1)
    if rule == "edge":
        if edge is None:
            if not g.m:
                raise GraphInputError("graph has no edges")
            edge = rng.choice(g.edges())
        return subdivide_edge(g, *edge)
    if rule == "random":
        h = g
        for u, v in g.edges():
            for _ in range(rng.randrange(3)):
                h = subdivide_edge(h, u, v)
                # continue subdividing the half that still ends at v
                u = h.n - 1
        return h
    raise GraphInputError(f"unknown subdivision rule {rule!r}")


def long_rich_square(paths: Sequence[Sequence[int]]) -> Graph:
    """Square 0-1-2-3 plus one path per (k, orientation) entry.

    Orientation 0 pins p1 to {0, 1} and pk to {2, 3}; orientation 1 pins p1
    to {0, 3} and pk to {1, 2}.  Path vertices are numbered from 4 on.
    """
    edges = [(0, 1), (1, 2), (2, 3), (3, 0)]
    n = 4
    for k, orient in paths:
        if k < 2 or orient not in (0, 1):
            raise GraphInputError("paths need k >= 2 and orientation 0 or 1")
        ids = list(range(n, n + k))
        n += k
        edges += list(zip(ids, ids[1:]))
        first, last = ((0, 1), (2, 3)) if orient == 0 else ((0, 3), (1, 2))
        edges += [(ids[0], u) for u in first] + [(ids[-1], u) for u in last]
    return Graph.from_edges(n, edges)


def strongly_2bipartite(ny: int, extra: int, rng: random.Random) -> Graph:
    """Subdivide every edge of a random connected graph of minimum degree >= 3 on ``ny`` vertices."""
    if ny < 4:
        raise GraphInputError("need at least 4 branch vertices")
    order = list(range(ny))
    rng.shuffle(order)
    pairs = {tuple(sorted(p)) for p in zip(order, order[1:])}
    deg = [0] * ny
    for u, v in pairs:
        deg[u] += 1
        deg[v] += 1
    missing = [(u, v) for u, v in combinations(range(ny), 2) if (u, v) not in pairs]
    rng.shuffle(missing)
    for u, v in missing:
        if deg[u] < 3 or deg[v] < 3 or extra > 0:
            if deg[u] >= 3 and deg[v] >= 3:
                extra -= 1
            pairs.add((u, v))
            deg[u] += 1
            deg[v] += 1
    h = Graph.from_edges(ny, sorted(pairs))
    if min(deg) < 3:
        raise GraphInputError("could not reach minimum degree 3")
    return subdivide_all(h, 1)


def _first_clique(g: Graph, k: int) -> list[int]:
    det = detect_clique(g, k)
    if not det.found:
        raise GraphInputError(f"graph has no clique of size {k}")
    return det.witness.roles["clique"]


def glue_clique(g1: Graph, g2: Graph, k: int, rng: random.Random | None = None,
                c1: Sequence[int] | None = None, c2: Sequence[int] | None = None) -> Graph:
    """Identify a k-clique of g2 with a k-clique of g1 (the first ones unless given)."""
    c1 = list(c1) if c1 is not None else _first_clique(g1, k)
    c2 = list(c2) if c2 is not None else _first_clique(g2, k)
    if len(c1) != k or len(c2) != k or not g1.is_clique(to_mask(c1)) or not g2.is_clique(to_mask(c2)):
        raise GraphInputError(f"glue sets must be {k}-cliques")
    if rng is not None:
        rng.shuffle(c2)
    ident = dict(zip(c2, c1))
    rest = [v for v in g2.vertices if v not in ident]
    label = {v: ident.get(v) for v in g2.vertices}
    for i, v in enumerate(rest):
        label[v] = g1.n + i
    edges = g1.edges() + [(label[u], label[v]) for u, v in g2.edges()]
    return Graph.from_edges(g1.n + len(rest), {tuple(sorted(e)) for e in edges})


def glue_two_cut(g1: Graph, g2: Graph, e1: Sequence[int] | None = None, e2: Sequence[int] | None = None,
                 keep_edge: bool = False) -> tuple[Graph, tuple[int, int]]:
    """Identify edge e2 = xy of g2 with edge e1 = uv of g1 (x to u, y to v).

    The first edge of each graph is used by default.  Unless ``keep_edge``,
    the identified edge is deleted, so C4 glued to C4 gives C6.
    """
    u, v = e1 if e1 is not None else g1.edges()[0]
    x, y = e2 if e2 is not None else g2.edges()[0]
    if not g1.has_edge(u, v) or not g2.has_edge(x, y):
        raise GraphInputError("glue edges must be edges")
    label = {x: u, y: v}
    nxt = g1.n
    for w in g2.vertices:
        if w not in label:
            label[w] = nxt
            nxt += 1
    edges = {tuple(sorted(e)) for e in g1.edges()}
    edges |= {tuple(sorted((label[a], label[b]))) for a, b in g2.edges()}
    if not keep_edge:
        edges.discard(tuple(sorted((u, v))))
    return Graph.from_edges(nxt, sorted(edges)), (min(u, v), max(u, v))


# -- dispatch ----------------------------------------------------------------------------


def generate(spec: GeneratorSpec) -> Graph:
    rng = random.Random(spec.seed)
    p = spec.params
    fam = spec.family
    if fam == "wall":
        t = int(_need(p, "t"))
        g = wall(t)
        assert g.max_degree <= 3 and is_connected(g)
    elif fam == "subdivided":
        base = _graph(_need(p, "g"))
        g = subdivided(base, p.get("rule", "all"), rng, p.get("edge"))
        assert g.n >= base.n and g.m - g.n == base.m - base.n
    elif fam == "line-of":
        base = _graph(_need(p, "g"))
        g = line_graph(base)[0]
        assert g.n == base.m
    elif fam == "petersen":
        g = PETERSEN
        assert g.n == 10 and g.m == 15 and all(g.degree(v) == 3 for v in g.vertices)
    elif fam == "heawood":
        g = HEAWOOD
        assert g.n == 14 and g.m == 21 and all(g.degree(v) == 3 for v in g.vertices)
    elif fam == "long-rich-square":
        g = long_rich_square(_need(p, "paths"))
    elif fam == "strongly-2-bipartite":
        g = strongly_2bipartite(int(p.get("ny", 4)), int(p.get("extra", 0)), rng)
    elif fam == "glue-clique":
        g1, g2 = _graph(_need(p, "g1")), _graph(_need(p, "g2"))
        k = int(_need(p, "k"))
        g = glue_clique(g1, g2, k, rng if p.get("shuffle") else None, p.get("c1"), p.get("c2"))
        assert g.n == g1.n + g2.n - k
    elif fam == "glue-2cut":
        g1, g2 = _graph(_need(p, "g1")), _graph(_need(p, "g2"))
        g, pair = glue_two_cut(g1, g2, p.get("e1"), p.get("e2"), bool(p.get("keep_edge", False)))
        if g1.n >= 3 and g2.n >= 3:
            assert any(f.cut == frozenset(pair) for f in find_two_cutsets(g))
    elif fam == "compose-1join":
        g1, g2 = _graph(_need(p, "g1")), _graph(_need(p, "g2"))
        g, join = compose_one_join(g1, g2, _need(p, "A"), _need(p, "B"))
        if join.kind == "proper-one-join":
            assert find_proper_one_join(g) is not None
    else:
        g = random_graph(int(_need(p, "n")), float(p.get("p", 0.5)), rng)
    return g


def random_connected(n: int, p: float, rng: random.Random) -> Graph:
    """Random G(n, p) made connected by linking its components along a random order."""
    g = random_graph(n, p, rng)
    comps = component_masks(g)
    if len(comps) <= 1:
        return g
    edges = set(g.edges())
    reps = [rng.choice(list(bits(c))) for c in comps]
    for a, b in zip(reps, reps[1:]):
        edges.add((min(a, b), max(a, b)))
    return Graph.from_edges(n, sorted(edges))


def random_two_connected(n: int, rng: random.Random, chords: int = 2) -> Graph:
    """A cycle through all vertices in random order plus ``chords`` random chords."""
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted(e)) for e in zip(order, order[1:] + order[:1])}
    missing = [e for e in combinations(range(n), 2) if e not in edges]
    rng.shuffle(missing)
    edges |= set(missing[:chords])
    return Graph.from_edges(n, sorted(edges))

