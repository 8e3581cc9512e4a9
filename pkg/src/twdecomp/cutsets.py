"""Clique cutsets, (proper) 2-cutsets, (proper) 1-joins and closures."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .budget import Budget, resolve
from .graph import (Graph, GraphInputError, add_edge, add_vertex, bits, component_masks,
                    induced_mask, is_connected, to_mask)

ONE_CUTSET = "one-cutset"
CLIQUE_CUTSET = "clique-cutset"
TWO_CUTSET = "two-cutset"
PROPER_TWO_CUTSET = "proper-two-cutset"
ONE_JOIN = "one-join"
PROPER_ONE_JOIN = "proper-one-join"


@dataclass(frozen=True)
class CutsetFinding:
    """A cutset or 1-join together with the sets that witness it.

    ``cut`` is the removed vertex set (empty for joins).  For 2-cutsets,
    ``sides`` is the grouping (X, Y) of the remaining components; for joins
    it is (X, Y) and ``join`` holds (A, B).  ``components`` lists the
    components left after removing ``cut``.
    """

    kind: str
    cut: frozenset[int]
    sides: tuple[frozenset[int], ...] = ()
    components: tuple[frozenset[int], ...] = ()
    join: tuple[frozenset[int], frozenset[int]] | None = None

    def check(self, g: Graph) -> None:
        """Re-verify the finding against ``g``; raises AssertionError otherwise."""
        if self.kind in (ONE_JOIN, PROPER_ONE_JOIN):
            x, y = self.sides
            a, b = self.join
            assert is_one_join(g, x, y, a, b, proper=self.kind == PROPER_ONE_JOIN), self
            return
        cut = to_mask(self.cut)
        comps = component_masks(g, g.full & ~cut)
        assert len(comps) >= 2, f"{self.kind} {sorted(self.cut)} does not disconnect"
        assert {frozenset(bits(c)) for c in comps} == set(self.components)
        if self.kind == CLIQUE_CUTSET:
            assert g.is_clique(cut)
        if self.kind == ONE_CUTSET:
            assert len(self.cut) == 1
        if self.kind in (TWO_CUTSET, PROPER_TWO_CUTSET):
            assert len(self.cut) == 2
        if self.kind == PROPER_TWO_CUTSET:
            x, y = (to_mask(s) for s in self.sides)
            assert x.bit_count() >= 2 and y.bit_count() >= 2 and not x & y
            assert x | y == g.full & ~cut
            assert all(not g.adj[v] & y for v in bits(x))

    def to_json(self, labels: Sequence | None = None) -> dict:
        def lab(s):
            return sorted(s) if labels is None else [labels[v] for v in sorted(s)]

        out = {"kind": self.kind, "cut": lab(self.cut),
               "components": [lab(c) for c in self.components]}
        if self.sides:
            out["sides"] = [lab(s) for s in self.sides]
        if self.join is not None:
            out["A"], out["B"] = lab(self.join[0]), lab(self.join[1])
        return out


def _fs(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise GraphInputError("graph must be connected")


# -- 1-cutsets ----------------------------------------------------------------


def find_one_cutsets(g: Graph) -> list[int]:
    """Articulation vertices of a connected graph, sorted."""
    _require_connected(g)
    return [v for v in g.vertices if len(component_masks(g, g.full & ~(1 << v))) >= 2]


def one_cutset_findings(g: Graph) -> list[CutsetFinding]:
    out = []
    for v in find_one_cutsets(g):
        comps = tuple(_fs(c) for c in component_masks(g, g.full & ~(1 << v)))
        out.append(CutsetFinding(ONE_CUTSET, frozenset([v]), components=comps))
    return out


# -- clique cutsets -----------------------------------------------------------


def minimal_separators(g: Graph, budget: Budget | None = None) -> list[frozenset[int]]:
    """All minimal separators, by closing neighbourhoods of components.

    Sorted by (size, members).
    """
    meter = resolve(budget).meter("minimal separators")
    seen: set[int] = set()
    queue: list[int] = []

    def collect(removed: int) -> None:
        for c in component_masks(g, g.full & ~removed):
            nb = 0
            for v in bits(c):
                nb |= g.adj[v]
            s = nb & ~c
            if s and s not in seen:
                seen.add(s)
                queue.append(s)

    for v in g.vertices:
        meter.tick()
        collect(g.adj[v] | 1 << v)
    i = 0
    while i < len(queue):
        s = queue[i]
        i += 1
        for x in bits(s):
            meter.tick()
            collect(s | g.adj[x])
    return sorted((_fs(s) for s in seen), key=lambda s: (len(s), sorted(s)))


def find_clique_cutset(g: Graph, budget: Budget | None = None) -> CutsetFinding | None:
    """Smallest (then lexicographically first) clique minimal separator, if any."""
    _require_connected(g)
    for s in minimal_separators(g, budget):
        mask = to_mask(s)
        if g.is_clique(mask):
            comps = tuple(_fs(c) for c in component_masks(g, g.full & ~mask))
            finding = CutsetFinding(CLIQUE_CUTSET, s, components=comps)
            finding.check(g)
            return finding
    return None


def has_clique_cutset(g: Graph, budget: Budget | None = None) -> bool:
    return find_clique_cutset(g, budget) is not None


def clique_cutset_atoms(g: Graph, budget: Budget | None = None) -> list[frozenset[int]]:
    """Vertex sets of pieces with no clique cutset from recursive clique-cutset splitting.

    Each piece is ``C + S`` for a clique cutset S and a component C; pieces
    that are contained in another piece are dropped.
    """
    _require_connected(g)
    out: set[frozenset[int]] = set()
    stack = [g.full]
    while stack:
        mask = stack.pop()
        h, old = induced_mask(g, mask)
        found = find_clique_cutset(h, budget) if h.n >= 2 else None
        if found is None:
            out.add(_fs(mask))
            continue
        cut = to_mask(old[v] for v in found.cut)
        for comp in found.components:
            stack.append(to_mask(old[v] for v in comp) | cut)
    kept = [a for a in out if not any(a < b for b in out)]
    return sorted(kept, key=lambda s: (len(s), sorted(s)))


def block_pieces(g: Graph) -> list[frozenset[int]]:
    """Pieces from recursive 1-cutset splitting (the blocks of ``g``)."""
    _require_connected(g)
    out: set[frozenset[int]] = set()
    stack = [g.full]
    while stack:
        mask = stack.pop()
        h, old = induced_mask(g, mask)
        cut = next((v for v in range(h.n) if h.n > 2 and len(component_masks(h, h.full & ~(1 << v))) >= 2), None)
        if cut is None:
            out.add(_fs(mask))
            continue
        for c in component_masks(h, h.full & ~(1 << cut)):
            stack.append(to_mask(old[v] for v in bits(c)) | 1 << old[cut])
    kept = [a for a in out if not any(a < b for b in out)]
    return sorted(kept, key=lambda s: (len(s), sorted(s)))


# -- 2-cutsets ------------------------------------------------------------------


def _group_sides(comps: Sequence[int]) -> tuple[int, int] | None:
    """Split components into two groups of at least two vertices each.

    Groupings are tried in increasing bitmask order over component indices
    with the first component always in X.
    """
    k = len(comps)
    total = sum(c.bit_count() for c in comps)
    for pick in range(1 << (k - 1)):
        sel = pick << 1 | 1
        if sel == (1 << k) - 1:
            continue
        x = 0
        for i in range(k):
            if sel >> i & 1:
                x |= comps[i]
        size = x.bit_count()
        if 2 <= size <= total - 2:
            y = 0
            for c in comps:
                if not c & x:
                    y |= c
            return x, y
    return None


def find_two_cutsets(g: Graph) -> list[CutsetFinding]:
    """Every pair whose removal disconnects ``g``; proper ones are tagged as such."""
    out = []
    for u, v in combinations(g.vertices, 2):
        cut = 1 << u | 1 << v
        comps = component_masks(g, g.full & ~cut)
        if len(comps) < 2:
            continue
        cfs = tuple(_fs(c) for c in comps)
        sides = _group_sides(comps)
        if sides is None:
            out.append(CutsetFinding(TWO_CUTSET, _fs(cut), components=cfs))
        else:
            out.append(CutsetFinding(PROPER_TWO_CUTSET, _fs(cut), (_fs(sides[0]), _fs(sides[1])), cfs))
    return out


def find_proper_two_cutsets(g: Graph) -> list[CutsetFinding]:
    _require_connected(g)
    out = [f for f in find_two_cutsets(g) if f.kind == PROPER_TWO_CUTSET]
    for f in out:
        f.check(g)
    return out


# -- closures -------------------------------------------------------------------


@dataclass(frozen=True)
class Closure:
    """cl(C) or cl*(C) of component C at the 2-cutset ``pair``.

    ``labels[i]`` is the host vertex of closure vertex ``i``; the marker of a
    strong closure is the last vertex and maps to None.
    """

    base: frozenset[int]
    pair: tuple[int, int]
    graph: Graph
    labels: tuple[int | None, ...]
    strong: bool

    @property
    def marker(self) -> int | None:
        return self.graph.n - 1 if self.strong else None


def _closure(g: Graph, pair: Iterable[int], c: Iterable[int], strong: bool) -> Closure:
    u, v = sorted(pair)
    cut = g.check_vertices((u, v))
    cmask = g.check_vertices(c)
    if u == v:
        raise GraphInputError("pair must be two distinct vertices")
    comps = component_masks(g, g.full & ~cut)
    if len(comps) < 2:
        raise GraphInputError(f"{{{u}, {v}}} is not a 2-cutset")
    if cmask not in comps:
        raise GraphInputError("c is not a component of g minus the pair")
    h, old = induced_mask(g, cmask | cut)
    iu, iv = old.index(u), old.index(v)
    if strong:
        if h.has_edge(iu, iv):
            adj = list(h.adj)
            adj[iu] &= ~(1 << iv)
            adj[iv] &= ~(1 << iu)
            h = Graph(h.n, tuple(adj))
        h = add_vertex(h, (iu, iv))
        labels: tuple = old + (None,)
    else:
        if not h.has_edge(iu, iv):
            h = add_edge(h, iu, iv)
        labels = old
    return Closure(frozenset(bits(cmask)), (u, v), h, labels, strong)


def closure(g: Graph, pair: Iterable[int], c: Iterable[int]) -> Closure:
    """``g[C + {u, v}]`` with the edge uv added."""
    return _closure(g, pair, c, strong=False)


def strong_closure(g: Graph, pair: Iterable[int], c: Iterable[int]) -> Closure:
    """The closure with uv subdivided once; the new vertex has degree 2."""
    return _closure(g, pair, c, strong=True)


# -- 1-joins -----------------------------------------------------------------------

_A, _XA, _B, _YB = range(4)
_SIDE_X = (True, True, False, False)


def _compatible(r1: int, r2: int, adjacent: bool, proper: bool) -> bool:
    if _SIDE_X[r1] == _SIDE_X[r2]:
        if adjacent and proper and r1 == r2 and r1 in (_A, _B):
            return False
        return True
    if {r1, r2} == {_A, _B}:
        return adjacent
    return not adjacent


def is_one_join(g: Graph, x: Iterable[int], y: Iterable[int], a: Iterable[int], b: Iterable[int],
                proper: bool = False) -> bool:
    xm, ym, am, bm = (g.check_vertices(s) for s in (x, y, a, b))
    if xm & ym or xm | ym != g.full or am & ~xm or bm & ~ym:
        return False
    if xm.bit_count() < 2 or ym.bit_count() < 2 or not am or not bm:
        return False
    for v in bits(am):
        if g.adj[v] & ym != bm:
            return False
    for v in bits(xm & ~am):
        if g.adj[v] & ym:
            return False
    if proper:
        return am.bit_count() >= 2 and bm.bit_count() >= 2 and g.is_stable(am) and g.is_stable(bm)
    return True


def _join_search(g: Graph, seed: dict[int, int], proper: bool, meter) -> dict[int, int] | None:
    n = g.n
    domains: dict[int, set[int]] = {z: {_A, _XA, _B, _YB} for z in range(n) if z not in seed}
    for z in domains:
        for s, r in seed.items():
            domains[z] = {q for q in domains[z] if _compatible(q, r, g.has_edge(z, s), proper)}
        if not domains[z]:
            return None
    order = sorted(domains)
    roles = dict(seed)

    def ok_sizes() -> bool:
        counts = [0] * 4
        for r in roles.values():
            counts[r] += 1
        x = counts[_A] + counts[_XA]
        y = counts[_B] + counts[_YB]
        return x >= 2 and y >= 2 and counts[_A] >= 1 and counts[_B] >= 1

    def go(i: int, doms: dict[int, set[int]]) -> bool:
        if i == len(order):
            return ok_sizes()
        z = order[i]
        for r in sorted(doms[z]):
            meter.tick()
            nxt = {}
            dead = False
            for w in order[i + 1:]:
                d = {q for q in doms[w] if _compatible(q, r, g.has_edge(z, w), proper)}
                if not d:
                    dead = True
                    break
                nxt[w] = d
            if dead:
                continue
            roles[z] = r
            if go(i + 1, nxt):
                return True
            del roles[z]
        return False

    return roles if go(0, domains) else None


def _join_finding(g: Graph, roles: dict[int, int], proper: bool) -> CutsetFinding:
    pick = lambda *rs: frozenset(v for v, r in roles.items() if r in rs)
    x, y = pick(_A, _XA), pick(_B, _YB)
    finding = CutsetFinding(PROPER_ONE_JOIN if proper else ONE_JOIN, frozenset(), (x, y),
                            join=(pick(_A), pick(_B)))
    finding.check(g)
    return finding


def find_proper_one_join(g: Graph, budget: Budget | None = None) -> CutsetFinding | None:
    """A proper 1-join, or None after exhausting every seed.

    Any proper 1-join contains an induced square a1-b1-a2-b2 with a1, a2 in A
    and b1, b2 in B; each such square seeds a role-assignment search with
    forward checking over the pairwise join constraints.
    """
    meter = resolve(budget).meter("proper 1-join")
    n = g.n
    if n < 4:
        return None
    for a1, a2 in combinations(range(n), 2):
        if g.has_edge(a1, a2):
            continue
        common = g.adj[a1] & g.adj[a2]
        for b1, b2 in combinations(bits(common), 2):
            if b1 < a1 or g.has_edge(b1, b2):
                continue
            meter.tick()
            roles = _join_search(g, {a1: _A, a2: _A, b1: _B, b2: _B}, True, meter)
            if roles is not None:
                return _join_finding(g, roles, True)
    return None


def find_one_join(g: Graph, budget: Budget | None = None) -> CutsetFinding | None:
    """Any 1-join (A, B need not be stable), seeded by an edge ab with a in A, b in B."""
    meter = resolve(budget).meter("1-join")
    for a, b in g.edges():
        meter.tick()
        roles = _join_search(g, {a: _A, b: _B}, False, meter)
        if roles is not None:
            return _join_finding(g, roles, False)
    return None


def one_join_blocks(g: Graph, j: CutsetFinding) -> tuple[tuple[Graph, tuple[int, ...]], tuple[Graph, tuple[int, ...]]]:
    """Blocks ``g[X + b]`` and ``g[Y + a]`` with a = min A and b = min B."""
    if j.kind not in (ONE_JOIN, PROPER_ONE_JOIN) or j.join is None:
        raise GraphInputError("not a 1-join finding")
    x, y = j.sides
    a, b = j.join
    if not is_one_join(g, x, y, a, b):
        raise GraphInputError("invalid 1-join for this graph")
    first = induced_mask(g, to_mask(x) | 1 << min(b))
    second = induced_mask(g, to_mask(y) | 1 << min(a))
    return first, second


def compose_one_join(g1: Graph, g2: Graph, a: Iterable[int], b: Iterable[int]) -> tuple[Graph, CutsetFinding]:
    """Disjoint union of g1 and g2 with A (in g1) made complete to B (in g2)."""
    am, bm = g1.check_vertices(a), g2.check_vertices(b)
    if not am or not bm:
        raise GraphInputError("A and B must be non-empty")
    shift = g1.n
    adj = [row | (bm << shift if am >> v & 1 else 0) for v, row in enumerate(g1.adj)]
    adj += [(row << shift) | (am if bm >> v & 1 else 0) for v, row in enumerate(g2.adj)]
    g = Graph(g1.n + g2.n, tuple(adj))
    x = frozenset(range(g1.n))
    y = frozenset(range(shift, g.n))
    A = _fs(am)
    B = _fs(bm << shift)
    proper = len(A) >= 2 and len(B) >= 2 and g.is_stable(am) and g.is_stable(bm << shift)
    finding = CutsetFinding(PROPER_ONE_JOIN if proper else ONE_JOIN, frozenset(), (x, y), join=(A, B))
    finding.check(g)
    return g, finding
