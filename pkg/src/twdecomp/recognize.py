"""Recognizers for the basic graph classes that end the two structure theorems.

Each recognizer returns a witness that is re-checked against the class
definition before it is handed back.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .budget import Budget, resolve
from .families import HOSTS
from .graph import (Graph, GraphInputError, bits, component_masks, is_connected,
                    reach, to_mask)
from .width import TreeDecomposition, treewidth_exact, validate_tree_decomposition

SERIES_PARALLEL = "series-parallel"
LINE_OF_CHORDLESS_SUBCUBIC = "line-of-chordless-subcubic"
COMPLETE_BIPARTITE = "complete-bipartite"
LONG_RICH_SQUARE = "long-rich-square"
STRONGLY_2_BIPARTITE = "strongly-2-bipartite"
HOLE_7 = "hole-≥7"
CLIQUE = "clique"
PETERSEN_EMBEDDED = "petersen-embedded"
HEAWOOD_EMBEDDED = "heawood-embedded"
NONE = "none"


@dataclass(frozen=True)
class ClassLabel:
    name: str
    witness: dict = field(default_factory=dict, compare=False)
    root: Graph | None = None

    def to_json(self) -> dict:
        out = {"class": self.name, "witness": self.witness}
        if self.root is not None:
            out["root"] = {"n": self.root.n, "edges": [list(e) for e in self.root.edges()]}
        return out


# -- series-parallel ----------------------------------------------------------------


def is_series_parallel(g: Graph, budget: Budget | None = None) -> tuple[bool, TreeDecomposition | None]:
    """Treewidth at most 2, which holds iff it holds on every block.

    The witness is a tree decomposition of width <= 2 when the answer is yes.
    """
    res = treewidth_exact(g, budget)
    if res.width > 2:
        return False, None
    rep = validate_tree_decomposition(g, res.decomposition)
    assert rep.valid and rep.width <= 2
    return True, res.decomposition


# -- line graphs of chordless subcubic graphs ------------------------------------


def is_chordless(h: Graph) -> bool:
    """No cycle has a chord: no edge xy has two internally disjoint x-y paths avoiding it."""
    for x, y in h.edges():
        adj = list(h.adj)
        adj[x] &= ~(1 << y)
        adj[y] &= ~(1 << x)
        hx = Graph(h.n, tuple(adj))
        if not reach(hx, x, hx.full) >> y & 1:
            continue
        separated = False
        for z in h.vertices:
            if z in (x, y):
                continue
            if not reach(hx, x, hx.full & ~(1 << z)) >> y & 1:
                separated = True
                break
        if not separated:
            return False
    return True


def _root_from_cliques(g: Graph, cliques: list[int]) -> tuple[Graph, dict[int, tuple[int, int]]]:
    """Root graph whose vertices are the cliques plus one private vertex per uncovered half."""
    where: dict[int, list[int]] = {v: [] for v in g.vertices}
    for i, c in enumerate(cliques):
        for v in bits(c):
            where[v].append(i)
    k = len(cliques)
    edge_of = {}
    edges = []
    for v in g.vertices:
        ends = list(where[v])
        while len(ends) < 2:
            ends.append(k)
            k += 1
        edge_of[v] = (ends[0], ends[1])
        edges.append(edge_of[v])
    return Graph.from_edges(k, edges), edge_of


def _check_line_root(g: Graph, root: Graph, edge_of: dict[int, tuple[int, int]]) -> None:
    assert len(set(map(frozenset, edge_of.values()))) == g.n == root.m
    for u, v in combinations(g.vertices, 2):
        share = bool(set(edge_of[u]) & set(edge_of[v]))
        assert share == g.has_edge(u, v)


def recognize_line_of_chordless_subcubic(g: Graph, budget: Budget | None = None) -> ClassLabel | None:
    """Krausz search: partition E(g) into cliques of size <= 3, each vertex in <= 2 of them.

    Triangles are tried before single edges, so K3 gets the root K_{1,3}.
    Every partition is a candidate root; the first chordless one is returned.
    """
    if g.n == 0 or not is_connected(g):
        raise GraphInputError("expected a connected graph")
    meter = resolve(budget).meter("line-graph root")
    edges = g.edges()
    covered: set[tuple[int, int]] = set()
    count = [0] * g.n
    cliques: list[int] = []

    def key(u, v):
        return (u, v) if u < v else (v, u)

    def go(i: int) -> ClassLabel | None:
        while i < len(edges) and edges[i] in covered:
            i += 1
        if i == len(edges):
            root, edge_of = _root_from_cliques(g, cliques)
            meter.tick(root.n)
            if root.max_degree <= 3 and is_chordless(root):
                _check_line_root(g, root, edge_of)
                return ClassLabel(LINE_OF_CHORDLESS_SUBCUBIC,
                                  {"edge_of": {v: list(e) for v, e in edge_of.items()}}, root)
            return None
        u, v = edges[i]
        options = [w for w in sorted(bits(g.adj[u] & g.adj[v]))
                   if key(u, w) not in covered and key(v, w) not in covered]
        for w in options + [None]:
            meter.tick()
            members = (u, v) if w is None else (u, v, w)
            if any(count[x] >= 2 for x in members):
                continue
            new = [key(a, b) for a, b in combinations(members, 2)]
            covered.update(new)
            for x in members:
                count[x] += 1
            cliques.append(to_mask(members))
            found = go(i + 1)
            cliques.pop()
            for x in members:
                count[x] -= 1
            covered.difference_update(new)
            if found is not None:
                return found
        return None

    if not edges:
        root = Graph.from_edges(2, [(0, 1)])
        return ClassLabel(LINE_OF_CHORDLESS_SUBCUBIC, {"edge_of": {0: [0, 1]}}, root)
    return go(0)


# -- complete bipartite and long rich squares --------------------------------------


def complete_bipartite_sides(g: Graph) -> tuple[list[int], list[int]] | None:
    """Sides (X, Y) if g is K_{a,b} with a, b >= 1."""
    if g.n < 2:
        return None
    x = g.full & ~g.adj[0]
    y = g.adj[0]
    if not y or not g.is_stable(x) or not g.is_stable(y):
        return None
    if any(g.adj[v] != y for v in bits(x)) or any(g.adj[v] != x for v in bits(y)):
        return None
    return list(bits(x)), list(bits(y))


def _induced_squares(g: Graph):
    for a, c in combinations(g.vertices, 2):
        if g.has_edge(a, c):
            continue
        for b, d in combinations(bits(g.adj[a] & g.adj[c]), 2):
            if b < a or g.has_edge(b, d):
                continue
            yield (a, b, c, d)


def _path_order(g: Graph, mask: int) -> list[int] | None:
    """Vertices of g[mask] in path order if g[mask] is a path, else None."""
    verts = list(bits(mask))
    if len(verts) == 1:
        return verts
    degs = {v: (g.adj[v] & mask).bit_count() for v in verts}
    ends = [v for v in verts if degs[v] == 1]
    if len(ends) != 2 or any(d > 2 for d in degs.values()):
        return None
    order = [ends[0]]
    prev = -1
    while len(order) < len(verts):
        nxt = [x for x in bits(g.adj[order[-1]] & mask) if x != prev]
        if len(nxt) != 1:
            return None
        prev = order[-1]
        order.append(nxt[0])
    return order if order[-1] == ends[1] else None


def long_rich_square_witness(g: Graph, square: tuple[int, int, int, int]) -> list[list[int]] | None:
    """Paths of g - S if ``square`` (in cyclic order) is a central square of g."""
    s = to_mask(square)
    sides = [frozenset(square[i] for i in (k, (k + 1) % 4)) for k in range(4)]
    opposite = {frozenset((sides[0], sides[2])), frozenset((sides[1], sides[3]))}
    paths = []
    for comp in component_masks(g, g.full & ~s):
        order = _path_order(g, comp)
        if order is None or len(order) < 2:
            return None
        if any(g.adj[p] & s for p in order[1:-1]):
            return None
        n1 = frozenset(bits(g.adj[order[0]] & s))
        nk = frozenset(bits(g.adj[order[-1]] & s))
        if frozenset((n1, nk)) not in opposite or n1 == nk:
            return None
        paths.append(order)
    return paths


def recognize_long_rich_square(g: Graph) -> ClassLabel | None:
    for sq in _induced_squares(g):
        paths = long_rich_square_witness(g, sq)
        if paths is not None:
            return ClassLabel(LONG_RICH_SQUARE, {"square": list(sq), "paths": paths})
    return None


# -- strongly 2-bipartite ----------------------------------------------------------------


def _has_square(g: Graph) -> bool:
    return next(_induced_squares(g), None) is not None


def is_strongly_2bipartite(g: Graph) -> tuple[list[int], list[int]] | None:
    """Bipartition (X, Y): X all of degree 2, Y all of degree >= 3; g bipartite and C4-free."""
    if g.n == 0:
        return None
    colour: dict[int, int] = {}
    for start in g.vertices:
        if start in colour:
            continue
        colour[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for u in g.neighbors(v):
                if u not in colour:
                    colour[u] = 1 - colour[v]
                    stack.append(u)
                elif colour[u] == colour[v]:
                    return None
    if _has_square(g):
        return None
    x: list[int] = []
    y: list[int] = []
    for comp in component_masks(g):
        part = [[v for v in bits(comp) if colour[v] == c] for c in (0, 1)]
        for xs, ys in (part, part[::-1]):
            if all(g.degree(v) == 2 for v in xs) and all(g.degree(v) >= 3 for v in ys):
                x += xs
                y += ys
                break
        else:
            return None
    return sorted(x), sorted(y)


# -- holes, cliques, fixed hosts ----------------------------------------------------


def hole_order(g: Graph) -> list[int] | None:
    """Cyclic order if g itself is a chordless cycle."""
    if g.n < 3 or any(g.degree(v) != 2 for v in g.vertices) or not is_connected(g):
        return None
    order = [0, g.neighbors(0)[0]]
    while len(order) < g.n:
        order.append(next(u for u in g.neighbors(order[-1]) if u != order[-2]))
    return order


def embeds_in_fixed_host(g: Graph, host: Graph | str, budget: Budget | None = None) -> dict[int, int] | None:
    """Injective map V(g) -> V(host) preserving adjacency and non-adjacency."""
    if isinstance(host, str):
        try:
            host = HOSTS[host]
        except KeyError:
            raise GraphInputError(f"unknown host {host!r}; expected one of {sorted(HOSTS)}") from None
    if g.n > host.n:
        return None
    meter = resolve(budget).meter("host embedding")
    # place vertices so that each one after the first in its component has a placed neighbour
    order: list[int] = []
    seen = 0
    for comp in component_masks(g):
        frontier = [min(bits(comp))]
        seen |= 1 << frontier[0]
        while frontier:
            v = frontier.pop(0)
            order.append(v)
            for u in g.neighbors(v):
                if not seen >> u & 1:
                    seen |= 1 << u
                    frontier.append(u)
    phi: dict[int, int] = {}
    used = 0

    def go(i: int) -> bool:
        nonlocal used
        if i == len(order):
            return True
        v = order[i]
        cand = host.full & ~used
        for u, hu in phi.items():
            cand &= host.adj[hu] if g.has_edge(u, v) else ~host.adj[hu]
        for h in bits(cand):
            meter.tick()
            if host.degree(h) < g.degree(v):
                continue
            phi[v] = h
            used |= 1 << h
            if go(i + 1):
                return True
            used &= ~(1 << h)
            del phi[v]
        return False

    if not go(0):
        return None
    for u, v in combinations(g.vertices, 2):
        assert g.has_edge(u, v) == host.has_edge(phi[u], phi[v])
    return dict(sorted(phi.items()))


# -- the two basic-class tests ------------------------------------------------------


def recognize_basic_isk4(g: Graph, budget: Budget | None = None) -> ClassLabel:
    """First matching basic class of the (ISK4, wheel)-free structure theorem, tightest bound first."""
    if g.n == 0 or not is_connected(g):
        raise GraphInputError("expected a connected graph")
    ok, td = is_series_parallel(g, budget)
    if ok:
        return ClassLabel(SERIES_PARALLEL, {"decomposition": td.to_json()})
    sides = complete_bipartite_sides(g)
    if sides is not None:
        return ClassLabel(COMPLETE_BIPARTITE, {"sides": list(sides)})
    lrs = recognize_long_rich_square(g)
    if lrs is not None:
        return lrs
    # last, since its bound is the weakest (the prism is both L(K_{2,3}) and a long rich square)
    line = recognize_line_of_chordless_subcubic(g, budget)
    if line is not None:
        return line
    return ClassLabel(NONE)


def recognize_basic_unique_chord(g: Graph, budget: Budget | None = None) -> ClassLabel:
    """First matching basic class of the unique-chord-free structure theorem."""
    if g.n == 0 or not is_connected(g):
        raise GraphInputError("expected a connected graph")
    bip = is_strongly_2bipartite(g)
    if bip is not None:
        return ClassLabel(STRONGLY_2_BIPARTITE, {"X": bip[0], "Y": bip[1]})
    order = hole_order(g)
    if order is not None and g.n >= 7:
        return ClassLabel(HOLE_7, {"cycle": order})
    if g.is_clique(g.full):
        return ClassLabel(CLIQUE, {"clique": list(g.vertices)})
    for name, label in (("petersen", PETERSEN_EMBEDDED), ("heawood", HEAWOOD_EMBEDDED)):
        phi = embeds_in_fixed_host(g, name, budget)
        if phi is not None:
            return ClassLabel(label, {"embedding": phi})
    return ClassLabel(NONE)
