"""Exact treewidth and rankwidth at desk scale, with auditable witnesses.

Treewidth is computed over elimination orderings by the subset dynamic
programme TW(S) = min_v max(TW(S - v), |Q(S - v, v)|), where Q(S, v) is the
set of vertices outside S + v reachable from v through S.  States whose
value reaches the incumbent upper bound are dropped, and any state S also
certifies the upper bound max(TW(S), n - |S| - 1).

Rankwidth is the minimum over subcubic trees with leaves V(G) of the largest
GF(2) cut-rank across a tree edge.  Rooting such a tree at an edge turns it
into a binary hierarchy of vertex subsets, which a subset DP enumerates.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .budget import Budget, BudgetExhausted, Meter, resolve
from .graph import Graph, GraphInputError, bits, component_masks, induced_mask, lowest

# -- tree decompositions ---------------------------------------------------------


@dataclass(frozen=True)
class TreeDecomposition:
    bags: tuple[frozenset[int], ...]
    tree_edges: tuple[tuple[int, int], ...]

    @property
    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def to_json(self) -> dict:
        return {
            "width": self.width,
            "bags": [sorted(b) for b in self.bags],
            "tree_edges": [list(e) for e in self.tree_edges],
        }

    @classmethod
    def from_json(cls, data: dict) -> "TreeDecomposition":
        return cls(tuple(frozenset(b) for b in data["bags"]),
                   tuple(tuple(e) for e in data["tree_edges"]))


@dataclass(frozen=True)
class DecompositionReport:
    is_tree: bool
    covers_vertices: bool
    covers_edges: bool
    subtrees_connected: bool
    width: int
    missing_vertex: int | None = None
    missing_edge: tuple[int, int] | None = None
    broken_vertex: int | None = None

    @property
    def valid(self) -> bool:
        return self.is_tree and self.covers_vertices and self.covers_edges and self.subtrees_connected


def _tree_components(k: int, edges: Sequence[tuple[int, int]], keep: set[int]) -> int:
    """Number of components of the forest restricted to node set ``keep``."""
    parent = {x: x for x in keep}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = len(keep)
    for a, b in edges:
        if a in keep and b in keep:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
                count -= 1
    return count


def validate_tree_decomposition(g: Graph, td: TreeDecomposition) -> DecompositionReport:
    """Check the three tree-decomposition properties and report the first violation of each."""
    k = len(td.bags)
    for b in td.bags:
        g.check_vertices(b)
    for a, b in td.tree_edges:
        if not (0 <= a < k and 0 <= b < k) or a == b:
            raise GraphInputError(f"tree edge {a}-{b} does not join two bag nodes")
    is_tree = k >= 1 and len(set(map(frozenset, td.tree_edges))) == len(td.tree_edges) == k - 1 \
        and _tree_components(k, td.tree_edges, set(range(k))) == 1

    covered = set().union(*td.bags) if td.bags else set()
    missing_vertex = next((v for v in g.vertices if v not in covered), None)
    missing_edge = next((e for e in g.edges() if not any(e[0] in b and e[1] in b for b in td.bags)), None)
    broken = None
    for v in g.vertices:
        nodes = {i for i, b in enumerate(td.bags) if v in b}
        if nodes and _tree_components(k, td.tree_edges, nodes) != 1:
            broken = v
            break
    return DecompositionReport(
        is_tree=is_tree,
        covers_vertices=missing_vertex is None,
        covers_edges=missing_edge is None,
        subtrees_connected=broken is None,
        width=td.width,
        missing_vertex=missing_vertex,
        missing_edge=missing_edge,
        broken_vertex=broken,
    )


def decomposition_from_order(g: Graph, order: Sequence[int]) -> TreeDecomposition:
    """Tree decomposition induced by eliminating vertices in ``order``."""
    if sorted(order) != list(g.vertices):
        raise GraphInputError("order must be a permutation of the vertices")
    adj = list(g.adj)
    alive = g.full
    pos = {v: i for i, v in enumerate(order)}
    bags = []
    parent: list[int | None] = []
    for v in order:
        alive &= ~(1 << v)
        nb = adj[v] & alive
        for u in bits(nb):
            adj[u] |= nb & ~(1 << u)
        bags.append(frozenset(bits(nb | 1 << v)))
        parent.append(min((pos[u] for u in bits(nb)), default=None))
    edges = []
    roots = []
    for i, p in enumerate(parent):
        if p is None:
            roots.append(i)
        else:
            edges.append((i, p))
    edges.extend(zip(roots, roots[1:]))
    if not bags:
        bags.append(frozenset())
    return TreeDecomposition(tuple(bags), tuple(edges))


def elimination_width(g: Graph, order: Sequence[int]) -> int:
    adj = list(g.adj)
    alive = g.full
    width = -1
    for v in order:
        alive &= ~(1 << v)
        nb = adj[v] & alive
        width = max(width, nb.bit_count())
        for u in bits(nb):
            adj[u] |= nb & ~(1 << u)
    return width


# -- treewidth ---------------------------------------------------------------------


@dataclass(frozen=True)
class TreewidthResult:
    width: int
    order: tuple[int, ...]
    decomposition: TreeDecomposition

    def to_json(self) -> dict:
        return {"tw": self.width, "order": list(self.order), "decomposition": self.decomposition.to_json()}


def _greedy_order(n: int, adj: Sequence[int], fill: bool) -> tuple[int, list[int]]:
    adj = list(adj)
    alive = (1 << n) - 1
    order = []
    width = -1
    while alive:
        best = None
        for v in bits(alive):
            nb = adj[v] & alive
            if fill:
                missing = sum((nb & ~adj[u] & ~(1 << u)).bit_count() for u in bits(nb))
                key = (missing, nb.bit_count(), v)
            else:
                key = (nb.bit_count(), v)
            if best is None or key < best[0]:
                best = (key, v)
        v = best[1]
        alive &= ~(1 << v)
        nb = adj[v] & alive
        width = max(width, nb.bit_count())
        for u in bits(nb):
            adj[u] |= nb & ~(1 << u)
        order.append(v)
    return width, order


def _minor_min_width(n: int, adj: Sequence[int]) -> int:
    """Lower bound: contract a min-degree vertex into its min-degree neighbour."""
    adj = list(adj)
    alive = (1 << n) - 1
    lb = 0
    while alive & (alive - 1):
        v = min(bits(alive), key=lambda x: ((adj[x] & alive).bit_count(), x))
        nb = adj[v] & alive
        lb = max(lb, nb.bit_count())
        alive &= ~(1 << v)
        if not nb:
            continue
        u = min(bits(nb), key=lambda x: ((adj[x] & alive).bit_count(), x))
        adj[u] |= nb & ~(1 << u)
        for w in bits(nb & ~(1 << u)):
            adj[w] |= 1 << u
    return lb


def _q_size(adj: Sequence[int], s: int, x: int) -> int:
    comp = frontier = 1 << x
    nb = 0
    while frontier:
        low = frontier & -frontier
        frontier ^= low
        a = adj[low.bit_length() - 1]
        nb |= a
        new = a & s & ~comp
        comp |= new
        frontier |= new
    return (nb & ~s & ~(1 << x)).bit_count()


def _tw_dp(n: int, adj: Sequence[int], lb: int, ub: int, ub_order: list[int],
           meter: Meter) -> tuple[int, list[int]]:
    full = (1 << n) - 1
    best, best_order = ub, list(ub_order)
    layer: dict[int, int] = {0: -1}
    parent: dict[int, tuple[int, int]] = {}

    def prefix(s: int) -> list[int]:
        out = []
        while s:
            s, x = parent[s]
            out.append(x)
        return out[::-1]

    for size in range(n + 1):
        nxt: dict[int, int] = {}
        for s, val in layer.items():
            if best <= lb:
                return best, best_order
            bound = max(val, n - size - 1)
            if bound < best:
                best = bound
                head = prefix(s)
                best_order = head + [v for v in range(n) if not s >> v & 1]
            for x in bits(full & ~s):
                meter.tick()
                r = max(val, _q_size(adj, s, x))
                if r >= best:
                    continue
                t = s | 1 << x
                old = nxt.get(t)
                if old is None or r < old:
                    nxt[t] = r
                    parent[t] = (s, x)
        layer = nxt
        if not layer:
            break
    return best, best_order


_TW_CACHE: dict[tuple[int, ...], tuple[int, tuple[int, ...]]] = {}


def _tw_connected(adj: tuple[int, ...], meter: Meter) -> tuple[int, list[int]]:
    """Exact treewidth of a connected graph given as a mask tuple, plus an optimal order."""
    hit = _TW_CACHE.get(adj)
    if hit is not None:
        return hit[0], list(hit[1])
    n = len(adj)
    work = list(adj)
    alive = (1 << n) - 1
    head: list[int] = []
    low = 0
    # simplicial vertices can always be eliminated first
    changed = True
    while changed and alive:
        changed = False
        for v in bits(alive):
            nb = work[v] & alive
            if all(not (nb & ~work[u] & ~(1 << u)) for u in bits(nb)):
                low = max(low, nb.bit_count())
                alive &= ~(1 << v)
                head.append(v)
                changed = True
    if not alive:
        result = (low if n else -1, head)
        _TW_CACHE[adj] = (result[0], tuple(head))
        return result
    sub = tuple(bits(alive))
    index = {v: i for i, v in enumerate(sub)}
    small = []
    for v in sub:
        row = 0
        for u in bits(work[v] & alive):
            row |= 1 << index[u]
        small.append(row)
    k = len(sub)
    ub1, o1 = _greedy_order(k, small, fill=True)
    ub2, o2 = _greedy_order(k, small, fill=False)
    ub, order = (ub1, o1) if ub1 <= ub2 else (ub2, o2)
    lb = max(low, _minor_min_width(k, small))
    if lb < ub:
        try:
            ub, order = _tw_dp(k, small, lb, ub, order, meter)
        except BudgetExhausted as exc:
            raise BudgetExhausted("treewidth", max(lb, low), max(ub, low)) from exc
    width = max(low, ub)
    full_order = head + [sub[i] for i in order]
    _TW_CACHE[adj] = (width, tuple(full_order))
    return width, full_order


def treewidth_exact(g: Graph, budget: Budget | None = None) -> TreewidthResult:
    """Exact treewidth with an optimal elimination order and its decomposition.

    Raises BudgetExhausted carrying certified lower/upper bounds on timeout.
    The null graph has width -1.
    """
    meter = resolve(budget).meter("treewidth")
    width = -1
    order: list[int] = []
    comps = component_masks(g)
    for i, comp in enumerate(comps):
        h, old = induced_mask(g, comp)
        try:
            w, o = _tw_connected(h.adj, meter)
        except BudgetExhausted as exc:
            # components not reached yet are bounded by their size
            rest = max((c.bit_count() - 1 for c in comps[i + 1:]), default=-1)
            upper = None if exc.upper is None else max(width, exc.upper, rest)
            raise BudgetExhausted("treewidth", max(width, exc.lower), upper) from None
        width = max(width, w)
        order.extend(old[i] for i in o)
    return TreewidthResult(width, tuple(order), decomposition_from_order(g, order))


def treewidth(g: Graph, budget: Budget | None = None) -> int:
    return treewidth_exact(g, budget).width


# -- cut-rank and rankwidth ---------------------------------------------------------------


def gf2_rank(rows: Iterable[int]) -> int:
    pivots: dict[int, int] = {}
    for x in rows:
        while x:
            h = x.bit_length() - 1
            p = pivots.get(h)
            if p is None:
                pivots[h] = x
                break
            x ^= p
    return len(pivots)


def _cut_rank_mask(g: Graph, s: int) -> int:
    rest = g.full & ~s
    side = s if s.bit_count() <= rest.bit_count() else rest
    other = g.full & ~side
    return gf2_rank(g.adj[v] & other for v in bits(side))


def cut_rank(g: Graph, s: Iterable[int]) -> int:
    """GF(2) rank of the adjacency matrix between ``s`` and its complement."""
    return _cut_rank_mask(g, g.check_vertices(s))


@dataclass(frozen=True)
class RankDecomposition:
    """Subcubic tree on nodes ``0..k-1``; ``leaf[v]`` is the node holding vertex ``v``."""

    n_nodes: int
    tree_edges: tuple[tuple[int, int], ...]
    leaf: tuple[int, ...]

    def edge_sides(self) -> list[frozenset[int]]:
        """Vertex set on one side of each tree edge, in ``tree_edges`` order."""
        nbrs: dict[int, list[int]] = {i: [] for i in range(self.n_nodes)}
        for a, b in self.tree_edges:
            nbrs[a].append(b)
            nbrs[b].append(a)
        owner = {node: v for v, node in enumerate(self.leaf)}
        sides = []
        for a, b in self.tree_edges:
            seen = {a}
            stack = [a]
            while stack:
                x = stack.pop()
                for y in nbrs[x]:
                    if y not in seen and not (x == a and y == b):
                        seen.add(y)
                        stack.append(y)
            sides.append(frozenset(owner[x] for x in seen if x in owner))
        return sides

    def width(self, g: Graph) -> int:
        return max((cut_rank(g, s) for s in self.edge_sides()), default=0)

    def check(self, g: Graph) -> None:
        if sorted(self.leaf) != sorted(set(self.leaf)) or len(self.leaf) != g.n:
            raise GraphInputError("leaf map must be a bijection onto the vertices")
        if g.n == 0:
            return
        deg = [0] * self.n_nodes
        for a, b in self.tree_edges:
            deg[a] += 1
            deg[b] += 1
        leaves = set(self.leaf)
        for node, d in enumerate(deg):
            want = {1} if node in leaves else {3}
            if g.n <= 2 and node in leaves:
                want = {0, 1}
            if d not in want:
                raise GraphInputError(f"tree node {node} has degree {d}")
        if len(self.tree_edges) != self.n_nodes - 1 or \
                _tree_components(self.n_nodes, self.tree_edges, set(range(self.n_nodes))) != 1:
            raise GraphInputError("rank decomposition is not a tree")

    def to_json(self) -> dict:
        return {"nodes": self.n_nodes, "tree_edges": [list(e) for e in self.tree_edges], "leaf": list(self.leaf)}


@dataclass(frozen=True)
class RankwidthResult:
    width: int
    decomposition: RankDecomposition

    def to_json(self) -> dict:
        return {"rw": self.width, "decomposition": self.decomposition.to_json()}


def _linear_upper(g: Graph) -> int:
    s = 0
    best = 0
    for v in range(g.n - 1):
        s |= 1 << v
        best = max(best, _cut_rank_mask(g, s))
    return best


_RW_CACHE: dict[tuple[int, ...], tuple[int, tuple[int, ...]]] = {}


def _rw_table(g: Graph, meter: Meter) -> tuple[int, list[int]]:
    n = g.n
    size = 1 << n
    cr = [0] * size
    for s in range(1, size - 1):
        if s < (size - 1) ^ s:
            cr[s] = cr[(size - 1) ^ s] = _cut_rank_mask(g, s)
    width = [0] * size
    choice = [0] * size
    for s in range(1, size):
        if not s & (s - 1):
            continue
        low = s & -s
        rest = s ^ low
        best = n + 1
        pick = 0
        sub = rest
        # A = low | sub with B = s - A non-empty; submasks walk down from rest
        while True:
            a = low | sub
            b = s ^ a
            if b:
                meter.tick()
                v = cr[a]
                if cr[b] > v:
                    v = cr[b]
                if width[a] > v:
                    v = width[a]
                if width[b] > v:
                    v = width[b]
                if v < best or (v == best and a < pick):
                    best, pick = v, a
            if not sub:
                break
            sub = (sub - 1) & rest
        width[s] = best
        choice[s] = pick
    return width[size - 1], choice


def _rank_tree(n: int, choice: Sequence[int]) -> RankDecomposition:
    edges: list[tuple[int, int]] = []
    leaf = list(range(n))
    counter = [n]

    def build(s: int) -> int:
        if not s & (s - 1):
            return lowest(s)
        node = counter[0]
        counter[0] += 1
        a = choice[s]
        for part in (a, s ^ a):
            edges.append((node, build(part)))
        return node

    full = (1 << n) - 1
    if n >= 2:
        a = choice[full]
        x, y = build(a), build(full ^ a)
        edges.append((x, y))
    return RankDecomposition(max(counter[0], n), tuple(edges), tuple(leaf))


def rankwidth_exact(g: Graph, budget: Budget | None = None) -> RankwidthResult:
    """Exact rankwidth with a witnessing subcubic tree; intended for n <= ~12."""
    meter = resolve(budget).meter("rankwidth")
    n = g.n
    if n <= 1:
        return RankwidthResult(0, RankDecomposition(max(n, 1), (), tuple(range(n))))
    hit = _RW_CACHE.get(g.adj)
    if hit is None:
        try:
            width, choice = _rw_table(g, meter)
        except BudgetExhausted:
            raise BudgetExhausted("rankwidth", 0 if g.m == 0 else 1, _linear_upper(g)) from None
        dec = _rank_tree(n, choice)
        _RW_CACHE[g.adj] = (width, tuple(choice))
    else:
        width = hit[0]
        dec = _rank_tree(n, hit[1])
    return RankwidthResult(width, dec)


def rankwidth(g: Graph, budget: Budget | None = None) -> int:
    return rankwidth_exact(g, budget).width


def witness_json(result: TreewidthResult | RankwidthResult) -> str:
    return json.dumps(result.to_json(), sort_keys=True)
