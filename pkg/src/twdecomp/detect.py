"""Budgeted detectors for induced patterns: subdivisions, holes, wheels, cliques.

Every detector returns a ``Detection`` whose status is ``found``, ``absent``
(the search completed) or ``unknown`` (the budget ran out).  Found witnesses
are re-verified against the host graph before they are returned.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .budget import Budget, BudgetExhausted, Meter, resolve
from .families import wall
from .graph import Graph, GraphInputError, bits, complete_graph, is_connected, to_mask

FOUND, ABSENT, UNKNOWN = "found", "absent", "unknown"


@dataclass(frozen=True)
class PatternWitness:
    """Host vertices of an induced pattern, the edges they must induce, and a role map."""

    kind: str
    vertices: frozenset[int]
    edges: frozenset[frozenset[int]]
    roles: dict = field(default_factory=dict, compare=False)

    def verify(self, g: Graph) -> bool:
        mask = g.check_vertices(self.vertices)
        induced = {frozenset((u, v)) for u in bits(mask) for v in bits(g.adj[u] & mask) if u < v}
        return induced == set(self.edges)

    def to_json(self) -> dict:
        return {"kind": self.kind, "vertices": sorted(self.vertices), "roles": _jsonable(self.roles)}


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (set, frozenset)):
        return sorted(_jsonable(v) for v in x)
    return x


@dataclass(frozen=True)
class Detection:
    status: str
    witness: PatternWitness | None = None

    @property
    def found(self) -> bool:
        return self.status == FOUND

    @property
    def exhaustive(self) -> bool:
        return self.status != UNKNOWN

    def to_json(self) -> dict:
        out = {"found": self.found, "exhaustive": self.exhaustive}
        if self.witness is not None:
            out["witness"] = self.witness.to_json()
        return out


def _found(g: Graph, witness: PatternWitness) -> Detection:
    if not witness.verify(g):
        raise AssertionError(f"{witness.kind} witness does not re-verify")
    return Detection(FOUND, witness)


def _edge_set(pairs: Iterable[tuple[int, int]]) -> frozenset[frozenset[int]]:
    return frozenset(frozenset(p) for p in pairs)


# -- induced subdivisions ---------------------------------------------------------


@dataclass(frozen=True)
class Chain:
    """A maximal pattern path between branch vertices with ``m`` interior vertices."""

    p: int
    q: int
    m: int
    rigid: bool
    inner: tuple[int, ...]


@dataclass(frozen=True)
class ReducedPattern:
    pattern: Graph
    branch: tuple[int, ...]
    chains: tuple[Chain, ...]
    schedule: tuple[int, ...]
    root: int | None


def reduce_pattern(pattern: Graph, rigid: Iterable[tuple[int, int]] = ()) -> ReducedPattern:
    """Collapse degree-2 vertices of a connected pattern into chains.

    Edges listed in ``rigid`` may not be subdivided; their ends become branch
    vertices.  A cycle gets vertex 0 as its only branch vertex.
    """
    if pattern.n and not is_connected(pattern):
        raise GraphInputError("pattern must be connected")
    rigid_set = {frozenset(e) for e in rigid}
    for e in rigid_set:
        a, b = tuple(e)
        if not pattern.has_edge(a, b):
            raise GraphInputError(f"rigid pair {a}{b} is not a pattern edge")
    branch = {v for v in pattern.vertices if pattern.degree(v) != 2}
    for e in rigid_set:
        branch |= e
    if not branch and pattern.n:
        branch = {0}
    chains = []
    used: set[frozenset[int]] = set()
    for b in sorted(branch):
        for x in pattern.neighbors(b):
            first = frozenset((b, x))
            if first in used:
                continue
            used.add(first)
            inner = []
            prev, cur = b, x
            while cur not in branch:
                inner.append(cur)
                nxt = next(y for y in pattern.neighbors(cur) if y != prev)
                used.add(frozenset((cur, nxt)))
                prev, cur = cur, nxt
            chains.append(Chain(b, cur, len(inner), not inner and first in rigid_set, tuple(inner)))
    # schedule: close chains as soon as both ends are placed, otherwise grow from placed ends
    root = None
    schedule: list[int] = []
    if branch:
        root = max(sorted(branch), key=lambda v: pattern.degree(v))
        placed = {root}
        left = list(range(len(chains)))
        while left:
            closing = [i for i in left if chains[i].p in placed and chains[i].q in placed]
            if closing:
                pick = min(closing, key=lambda i: (not chains[i].rigid, i))
            else:
                pick = min(i for i in left if chains[i].p in placed or chains[i].q in placed)
                ch = chains[pick]
                if ch.p not in placed:
                    chains[pick] = Chain(ch.q, ch.p, ch.m, ch.rigid, ch.inner[::-1])
                placed.add(chains[pick].q)
            schedule.append(pick)
            left.remove(pick)
    return ReducedPattern(pattern, tuple(sorted(branch)), tuple(chains), tuple(schedule), root)


class _Embedder:
    def __init__(self, g: Graph, rp: ReducedPattern, meter: Meter):
        self.g = g
        self.rp = rp
        self.meter = meter
        self.pdeg = [rp.pattern.degree(v) for v in rp.pattern.vertices]
        self.img: dict[int, int] = {}
        self.owner: dict[int, int] = {}
        self.W = 0
        self.consumed: set[int] = set()
        self.paths: dict[int, list[int]] = {}
        self.done: set[int] = set()

    def run(self) -> bool:
        rp, g = self.rp, self.g
        if rp.root is None:
            return True
        for h in g.vertices:
            self.meter.tick()
            if g.degree(h) < self.pdeg[rp.root]:
                continue
            self._place(rp.root, h)
            if self._solve(0):
                return True
            self._unplace(rp.root, h)
        return False

    def _place(self, q: int, h: int) -> None:
        self.img[q] = h
        self.owner[h] = q
        self.W |= 1 << h

    def _unplace(self, q: int, h: int) -> None:
        del self.img[q]
        del self.owner[h]
        self.W &= ~(1 << h)

    def _solve(self, k: int) -> bool:
        sched = self.rp.schedule
        if k == len(sched):
            return True
        ci = sched[k]
        if ci in self.consumed:
            return self._solve(k + 1)
        ch = self.rp.chains[ci]
        P = self.img[ch.p]
        self.done.add(ci)
        try:
            if ch.q in self.img:
                if ch.rigid:
                    return False
                need = max(ch.m, 2 if ch.p == ch.q else 1)
                return self._close(k, ci, P, [P], need)
            return self._grow(k, ci, P, [P])
        finally:
            self.done.discard(ci)

    def _close(self, k: int, ci: int, cur: int, path: list[int], need: int) -> bool:
        g = self.g
        Q = self.img[self.rp.chains[ci].q]
        count = len(path) - 1
        for y in bits(g.adj[cur] & ~self.W):
            self.meter.tick()
            nbw = g.adj[y] & self.W
            self.W |= 1 << y
            if Q != cur and nbw == (1 << cur | 1 << Q) and count + 1 >= need:
                self.paths[ci] = path + [y, Q]
                if self._solve(k + 1):
                    return True
                del self.paths[ci]
            if nbw == 1 << cur:
                if self._close(k, ci, y, path + [y], need):
                    return True
            self.W &= ~(1 << y)
        return False

    def _consume(self, q: int, ci: int, extra: int) -> list[int] | None:
        """Chains realised directly because the new image of q touches other branch images."""
        chains = self.rp.chains
        taken: list[int] = []
        for h in bits(extra):
            r = self.owner.get(h)
            if r is None:
                return None
            options = [i for i, c in enumerate(chains)
                       if i != ci and i not in self.done and i not in self.consumed and i not in taken
                       and c.m == 0 and {c.p, c.q} == {q, r} and q != r]
            if not options:
                return None
            options.sort(key=lambda i: (not chains[i].rigid, i))
            taken.append(options[0])
        touched = {self.owner[h] for h in bits(extra)}
        for i, c in enumerate(chains):
            if i == ci or i in self.done or i in taken or not c.rigid:
                continue
            other = c.q if c.p == q else c.p if c.q == q else None
            if other is not None and other in self.img and other not in touched:
                return None
        return taken

    def _grow(self, k: int, ci: int, cur: int, path: list[int]) -> bool:
        g, ch = self.g, self.rp.chains[ci]
        count = len(path) - 1
        for y in bits(g.adj[cur] & ~self.W):
            self.meter.tick()
            nbw = g.adj[y] & self.W
            if count >= ch.m and g.degree(y) >= self.pdeg[ch.q]:
                taken = self._consume(ch.q, ci, nbw & ~(1 << cur))
                if taken is not None:
                    self._place(ch.q, y)
                    self.consumed.update(taken)
                    self.paths[ci] = path + [y]
                    for i in taken:
                        c = self.rp.chains[i]
                        self.paths[i] = [self.img[c.p], self.img[c.q]]
                    if self._solve(k + 1):
                        return True
                    for i in taken:
                        del self.paths[i]
                    del self.paths[ci]
                    self.consumed.difference_update(taken)
                    self._unplace(ch.q, y)
            if nbw == 1 << cur and not ch.rigid:
                self.W |= 1 << y
                if self._grow(k, ci, y, path + [y]):
                    return True
                self.W &= ~(1 << y)
        return False


def _subdivision_witness(kind: str, rp: ReducedPattern, emb: _Embedder) -> PatternWitness:
    edges = []
    verts: set[int] = set(emb.img.values())
    for path in emb.paths.values():
        verts.update(path)
        edges.extend(zip(path, path[1:]))
    roles = {"branch": dict(emb.img),
             "paths": [{"pattern": [c.p, *c.inner, c.q], "host": emb.paths[i]}
                       for i, c in enumerate(rp.chains)]}
    return PatternWitness(kind, frozenset(verts), _edge_set(edges), roles)


def _check_subdivision(rp: ReducedPattern, w: PatternWitness) -> None:
    branch = w.roles["branch"]
    assert len(set(branch.values())) == len(branch) == len(rp.branch)
    interiors: list[int] = []
    for c, entry in zip(rp.chains, w.roles["paths"]):
        host = entry["host"]
        assert host[0] == branch[c.p] and host[-1] == branch[c.q]
        inner = host[1:-1]
        assert len(inner) >= c.m and not (c.rigid and inner)
        interiors.extend(inner)
    assert len(set(interiors)) == len(interiors) and not set(interiors) & set(branch.values())


def find_induced_subdivision(g: Graph, pattern: Graph, budget: Budget | None = None,
                             rigid: Iterable[tuple[int, int]] = (), kind: str = "subdivision") -> Detection:
    """Search for an induced subdivision of ``pattern`` in ``g``.

    Branch vertices are placed one at a time, each new one at the end of an
    induced path grown from an already placed one; every added vertex must see
    exactly its path neighbours among the vertices used so far.
    """
    rp = reduce_pattern(pattern, rigid)
    if pattern.n > g.n:
        return Detection(ABSENT)
    emb = _Embedder(g, rp, resolve(budget).meter(kind))
    try:
        ok = emb.run()
    except BudgetExhausted:
        return Detection(UNKNOWN)
    if not ok:
        return Detection(ABSENT)
    w = _subdivision_witness(kind, rp, emb)
    _check_subdivision(rp, w)
    return _found(g, w)


K4 = complete_graph(4)
DIAMOND = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])


def detect_isk4(g: Graph, budget: Budget | None = None) -> Detection:
    return find_induced_subdivision(g, K4, budget, kind="isk4")


def detect_unique_chord_cycle(g: Graph, budget: Budget | None = None) -> Detection:
    """A cycle whose vertex set induces exactly one chord.

    Such a vertex set induces a subdivision of the diamond in which the chord
    (the edge between the two degree-3 vertices) stays unsubdivided.
    """
    det = find_induced_subdivision(g, DIAMOND, budget, rigid=[(0, 1)], kind="unique-chord-cycle")
    if det.found:
        roles = det.witness.roles
        a, b = roles["branch"][0], roles["branch"][1]
        arcs = [e["host"] for e in roles["paths"] if len(e["host"]) > 2]
        first, second = (arc if arc[0] == a else arc[::-1] for arc in arcs)
        cycle = first + second[::-1][1:-1]
        roles["cycle"] = cycle
        roles["chord"] = [a, b]
    return det


# -- holes and wheels ---------------------------------------------------------------


def iter_holes(g: Graph, min_length: int = 4, meter: Meter | None = None) -> Iterator[list[int]]:
    """Each chordless cycle of length >= ``min_length`` exactly once.

    A hole is reported starting at its minimum vertex, with the second vertex
    smaller than the last.
    """
    for s in g.vertices:
        higher = g.full & ~((1 << (s + 1)) - 1)
        for p1 in bits(g.adj[s] & higher):
            yield from _holes_from(g, s, [s, p1], 1 << s | 1 << p1, higher, min_length, meter)


def _holes_from(g, s, path, used, higher, min_length, meter):
    last = path[-1]
    inner = used & ~(1 << s) & ~(1 << last)
    for x in bits(g.adj[last] & higher & ~used):
        if meter is not None:
            meter.tick()
        if g.adj[x] & inner:
            continue
        if g.adj[x] >> s & 1:
            if len(path) + 1 >= min_length and x > path[1] and len(path) >= 2:
                yield path + [x]
            continue
        yield from _holes_from(g, s, path + [x], used | 1 << x, higher, min_length, meter)


def _cycle_edges(cycle: Sequence[int]) -> list[tuple[int, int]]:
    return list(zip(cycle, list(cycle[1:]) + [cycle[0]]))


def detect_hole(g: Graph, min_length: int = 4, budget: Budget | None = None) -> Detection:
    meter = resolve(budget).meter("hole")
    try:
        for hole in iter_holes(g, min_length, meter):
            w = PatternWitness("hole", frozenset(hole), _edge_set(_cycle_edges(hole)), {"cycle": hole})
            return _found(g, w)
    except BudgetExhausted:
        return Detection(UNKNOWN)
    return Detection(ABSENT)


def detect_wheel(g: Graph, budget: Budget | None = None, triangle_holes: bool = False) -> Detection:
    """A hole plus an outside vertex with at least three neighbours on it.

    Holes have length >= 4 unless ``triangle_holes`` is set.
    """
    meter = resolve(budget).meter("wheel")
    try:
        for hole in iter_holes(g, 3 if triangle_holes else 4, meter):
            hm = to_mask(hole)
            for v in bits(g.full & ~hm):
                spokes = g.adj[v] & hm
                if spokes.bit_count() >= 3:
                    edges = _cycle_edges(hole) + [(v, u) for u in bits(spokes)]
                    w = PatternWitness("wheel", frozenset(hole) | {v}, _edge_set(edges),
                                       {"hole": hole, "hub": v, "spokes": list(bits(spokes))})
                    return _found(g, w)
    except BudgetExhausted:
        return Detection(UNKNOWN)
    return Detection(ABSENT)


# -- cliques and bicliques ---------------------------------------------------------


def _stable_sets(g: Graph, cand: int, t: int, meter: Meter) -> Iterator[list[int]]:
    if t == 0:
        yield []
        return
    for v in bits(cand):
        meter.tick()
        rest = cand & ~((1 << (v + 1)) - 1) & ~g.adj[v]
        if rest.bit_count() < t - 1:
            continue
        for tail in _stable_sets(g, rest, t - 1, meter):
            yield [v] + tail


def _cliques(g: Graph, cand: int, t: int, meter: Meter) -> Iterator[list[int]]:
    if t == 0:
        yield []
        return
    for v in bits(cand):
        meter.tick()
        rest = cand & ~((1 << (v + 1)) - 1) & g.adj[v]
        if rest.bit_count() < t - 1:
            continue
        for tail in _cliques(g, rest, t - 1, meter):
            yield [v] + tail


def detect_clique(g: Graph, t: int, budget: Budget | None = None) -> Detection:
    if t < 1:
        raise GraphInputError("t must be at least 1")
    meter = resolve(budget).meter("clique")
    try:
        for c in _cliques(g, g.full, t, meter):
            w = PatternWitness("clique", frozenset(c), _edge_set(combinations(c, 2)), {"clique": c})
            return _found(g, w)
    except BudgetExhausted:
        return Detection(UNKNOWN)
    return Detection(ABSENT)


def detect_biclique(g: Graph, t: int, budget: Budget | None = None) -> Detection:
    """An induced K_{t,t}: two stable t-sets complete to each other."""
    if t < 1:
        raise GraphInputError("t must be at least 1")
    meter = resolve(budget).meter("biclique")
    try:
        for a in _stable_sets(g, g.full, t, meter):
            common = g.full
            for v in a:
                common &= g.adj[v]
            if common.bit_count() < t:
                continue
            for b in _stable_sets(g, common & ~((1 << (a[0] + 1)) - 1), t, meter):
                edges = [(x, y) for x in a for y in b]
                w = PatternWitness("biclique", frozenset(a) | frozenset(b), _edge_set(edges),
                                   {"sides": [a, b]})
                return _found(g, w)
    except BudgetExhausted:
        return Detection(UNKNOWN)
    return Detection(ABSENT)


# -- walls and t-cleanness ----------------------------------------------------------


def line_wall_patterns(t: int) -> Iterator[tuple[Graph, list[tuple[int, int]]]]:
    """Patterns whose rigid-edge induced subdivisions are the line graphs of wall subdivisions.

    In L(S) for a subdivision S of the wall, each degree-3 wall vertex becomes
    a triangle and each wall chain with l edges becomes a path of at least l
    vertices between two triangle corners.  A chain that is a single wall edge
    either stays one shared corner or splits into two corners joined by a
    path, so the family has one pattern per choice of shared chains.
    """
    w = wall(t)
    rp = reduce_pattern(w)
    if all(w.degree(v) == 2 for v in w.vertices):
        yield w, []
        return
    chains = rp.chains
    single = [i for i, c in enumerate(chains) if c.m == 0]
    for shared in range(1 << len(single)):
        merged = {single[j] for j in range(len(single)) if shared >> j & 1}
        ids: dict[tuple[int, int], int] = {}
        count = 0
        for i, c in enumerate(chains):
            for end in (c.p, c.q):
                if (end, i) in ids:
                    continue
                if i in merged and (c.p, i) in ids:
                    ids[(end, i)] = ids[(c.p, i)]
                else:
                    ids[(end, i)] = count
                    count += 1
        edges: list[tuple[int, int]] = []
        rigid: list[tuple[int, int]] = []
        for b in rp.branch:
            corners = sorted({ids[(b, i)] for i, c in enumerate(chains) if b in (c.p, c.q)})
            for x, y in combinations(corners, 2):
                edges.append((x, y))
                rigid.append((x, y))
        for i, c in enumerate(chains):
            if i in merged:
                continue
            prev = ids[(c.p, i)]
            for _ in range(c.m - 1 if c.m else 0):
                edges.append((prev, count))
                prev = count
                count += 1
            edges.append((prev, ids[(c.q, i)]))
        yield Graph.from_edges(count, edges), rigid


def detect_wall(g: Graph, t: int, budget: Budget | None = None) -> Detection:
    return find_induced_subdivision(g, wall(t), budget, kind=f"wall-{t}")


def detect_line_wall(g: Graph, t: int, budget: Budget | None = None) -> Detection:
    w = wall(t)
    if g.n < w.m:
        return Detection(ABSENT)
    if t >= 2 and detect_clique(g, 3, budget).status == ABSENT:
        return Detection(ABSENT)
    status = ABSENT
    for pattern, rigid in line_wall_patterns(t):
        det = find_induced_subdivision(g, pattern, budget, rigid=rigid, kind=f"line-wall-{t}")
        if det.found:
            return det
        if det.status == UNKNOWN:
            status = UNKNOWN
    return Detection(status)


@dataclass(frozen=True)
class CleanReport:
    """``clean`` is True, False, or None when some search hit its budget."""

    clean: bool | None
    searches: dict[str, str]
    witness: PatternWitness | None = None

    def to_json(self) -> dict:
        return {"clean": self.clean, "searches": self.searches,
                "witness": None if self.witness is None else self.witness.to_json()}


def is_t_clean(g: Graph, t: int, budget: Budget | None = None) -> CleanReport:
    if t < 2:
        raise GraphInputError("t must be at least 2")
    searches: dict[str, str] = {}
    checks = [
        ("clique", lambda: detect_clique(g, t, budget)),
        ("biclique", lambda: detect_biclique(g, t, budget)),
        ("wall", lambda: detect_wall(g, t, budget)),
        ("line-wall", lambda: detect_line_wall(g, t, budget)),
    ]
    for name, run in checks:
        det = run()
        searches[name] = det.status
        if det.found:
            return CleanReport(False, searches, det.witness)
    clean = None if UNKNOWN in searches.values() else True
    return CleanReport(clean, searches)
