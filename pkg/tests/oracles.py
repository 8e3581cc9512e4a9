"""Naive reference implementations used to cross-check the package.

Nothing here calls into the algorithms under test; graphs come in as
networkx graphs or as plain (n, edges) pairs.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher


def to_nx(g) -> nx.Graph:
    """Package Graph -> networkx graph on 0..n-1."""
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def _elim_width(adj: dict, order) -> int:
    adj = {v: set(ns) for v, ns in adj.items()}
    width = 0
    for v in order:
        ns = adj.pop(v)
        width = max(width, len(ns))
        for a in ns:
            adj[a] |= ns - {a}
            adj[a].discard(v)
    return width


def treewidth_by_permutations(h: nx.Graph) -> int:
    """Minimum elimination width over every vertex order.  Only for n <= 7."""
    if h.number_of_nodes() == 0:
        return -1
    adj = {v: set(h[v]) for v in h}
    return min(_elim_width(adj, order) for order in permutations(h))


def treewidth_by_eliminated_sets(h: nx.Graph) -> int:
    """Elimination search where the state is the set already eliminated.

    The graph left after eliminating S does not depend on the order, so the
    cost of removing v next is |Q(S, v)|: vertices outside S reachable from v
    through S.
    """
    nodes = list(h)
    if not nodes:
        return -1
    full = frozenset(nodes)

    def q(s: frozenset, v) -> int:
        seen, stack, out = {v}, [v], set()
        while stack:
            x = stack.pop()
            for y in h[x]:
                if y in seen:
                    continue
                seen.add(y)
                if y in s:
                    stack.append(y)
                else:
                    out.add(y)
        return len(out)

    @lru_cache(maxsize=None)
    def best(s: frozenset) -> int:
        if s == full:
            return 0
        return min(max(q(s, v), best(s | {v})) for v in full - s)

    return best(frozenset())


def _gf2_rank(rows: list[list[int]]) -> int:
    rows = [r[:] for r in rows]
    rank, ncols = 0, len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                rows[i] = [a ^ b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def cut_rank(h: nx.Graph, a) -> int:
    a = sorted(a)
    b = sorted(set(h) - set(a))
    if not a or not b:
        return 0
    return _gf2_rank([[int(h.has_edge(x, y)) for y in b] for x in a])


def rankwidth_brute(h: nx.Graph) -> int:
    """Rankwidth by recursive bipartition over all subsets; n <= 8 or so."""
    nodes = frozenset(h)
    if len(nodes) <= 1:
        return 0

    @lru_cache(maxsize=None)
    def cr(s: frozenset) -> int:
        return cut_rank(h, s)

    @lru_cache(maxsize=None)
    def sub(s: frozenset) -> int:
        # best width of a rooted binary tree with leaf set s, counting the cuts inside it
        if len(s) == 1:
            return 0
        items = sorted(s)
        first, rest = items[0], items[1:]
        best = None
        for r in range(len(rest)):
            for part in combinations(rest, r):
                left = frozenset((first,) + part)
                right = s - left
                w = max(cr(left), cr(right), sub(left), sub(right))
                best = w if best is None else min(best, w)
        return best

    items = sorted(nodes)
    best = None
    for r in range(1, len(items)):
        for part in combinations(items, r):
            a = frozenset(part)
            w = max(cr(a), sub(a), sub(nodes - a))
            best = w if best is None else min(best, w)
    return best


def _induced(h: nx.Graph, s) -> nx.Graph:
    return h.subgraph(s).copy()


def _suppress_degree_two(k: nx.Graph) -> nx.MultiGraph | None:
    m = nx.MultiGraph(k)
    for v in list(m):
        if m.degree(v) == 2 and len(set(m[v])) == 2:
            a, b = list(m[v])
            m.remove_node(v)
            m.add_edge(a, b)
    return m


def has_isk4(h: nx.Graph) -> bool:
    """Some vertex subset induces a subdivision of K4."""
    for r in range(4, h.number_of_nodes() + 1):
        for s in combinations(h, r):
            k = _induced(h, s)
            degs = sorted(d for _, d in k.degree())
            if degs.count(3) != 4 or any(d not in (2, 3) for d in degs) or not nx.is_connected(k):
                continue
            m = _suppress_degree_two(k)
            if m.number_of_nodes() == 4 and m.number_of_edges() == 6 and nx.number_of_selfloops(m) == 0 \
                    and all(m.number_of_edges(a, b) == 1 for a, b in combinations(m, 2)):
                return True
    return False


def has_unique_chord_cycle(h: nx.Graph) -> bool:
    """Some subset induces a Hamiltonian cycle plus exactly one chord."""
    for r in range(4, h.number_of_nodes() + 1):
        for s in combinations(h, r):
            k = _induced(h, s)
            if k.number_of_edges() != r + 1:
                continue
            ends = [v for v, d in k.degree() if d == 3]
            if len(ends) != 2 or any(d not in (2, 3) for _, d in k.degree()) or not k.has_edge(*ends):
                continue
            k.remove_edge(*ends)
            if nx.is_connected(k) and all(d == 2 for _, d in k.degree()):
                return True
    return False


def _is_hole(h: nx.Graph, s, min_length: int = 4) -> bool:
    if len(s) < min_length:
        return False
    k = _induced(h, s)
    return all(d == 2 for _, d in k.degree()) and nx.is_connected(k)


def has_wheel(h: nx.Graph) -> bool:
    """A hole of length >= 4 plus a vertex with at least three neighbours on it."""
    for r in range(4, h.number_of_nodes()):
        for s in combinations(h, r):
            if not _is_hole(h, s):
                continue
            ss = set(s)
            if any(len(ss & set(h[v])) >= 3 for v in h if v not in ss):
                return True
    return False


def has_hole(h: nx.Graph, min_length: int = 4) -> bool:
    return any(_is_hole(h, s, min_length) for r in range(min_length, h.number_of_nodes() + 1)
               for s in combinations(h, r))


def has_clique(h: nx.Graph, t: int) -> bool:
    return any(all(h.has_edge(a, b) for a, b in combinations(s, 2)) for s in combinations(h, t))


def has_induced_biclique(h: nx.Graph, t: int) -> bool:
    for s in combinations(h, 2 * t):
        k = _induced(h, s)
        if k.number_of_edges() == t * t and nx.is_bipartite(k) and nx.is_connected(k):
            left, right = nx.bipartite.sets(k)
            if len(left) == t and len(right) == t:
                return True
    return False


def ramsey_number_3() -> int:
    """Smallest n with every graph on n vertices holding a triangle or a stable triple."""
    n = 2
    while True:
        pairs = list(combinations(range(n), 2))
        ok = True
        for mask in range(1 << len(pairs)):
            e = {p for i, p in enumerate(pairs) if mask >> i & 1}
            if not any({(a, b), (a, c), (b, c)} <= e or not ({(a, b), (a, c), (b, c)} & e)
                       for a, b, c in combinations(range(n), 3)):
                ok = False
                break
        if ok:
            return n
        n += 1


def has_proper_one_join(h: nx.Graph) -> bool:
    """Every bipartition (X, Y) with |X|, |Y| >= 2: A and B are the vertices with
    cross neighbours; proper when A is complete to B, both stable of size >= 2."""
    nodes = sorted(h)
    n = len(nodes)
    for mask in range(1, 1 << (n - 1)):
        x = {nodes[i] for i in range(n) if mask >> i & 1}
        y = set(nodes) - x
        if len(x) < 2 or len(y) < 2:
            continue
        a = {v for v in x if set(h[v]) & y}
        b = {v for v in y if set(h[v]) & x}
        if len(a) < 2 or len(b) < 2:
            continue
        if not all(h.has_edge(u, v) for u in a for v in b):
            continue
        if any(h.has_edge(u, v) for u, v in combinations(a, 2)) or \
                any(h.has_edge(u, v) for u, v in combinations(b, 2)):
            continue
        return True
    return False


def induced_in(h: nx.Graph, host: nx.Graph) -> bool:
    return GraphMatcher(host, h).subgraph_is_isomorphic()


def connected_graphs_up_to(n: int):
    from networkx.generators.atlas import graph_atlas_g
    return [g for g in graph_atlas_g()[1:] if g.number_of_nodes() <= n and nx.is_connected(g)]


def all_graphs_up_to(n: int):
    from networkx.generators.atlas import graph_atlas_g
    return [g for g in graph_atlas_g() if g.number_of_nodes() <= n]
