"""Seeded property suites for the width lemmas, and the two bounded-treewidth pipelines."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Callable

from .budget import Budget, BudgetExhausted
from .cutsets import (block_pieces, clique_cutset_atoms, closure, compose_one_join,
                      find_one_cutsets, find_proper_one_join, find_proper_two_cutsets, find_two_cutsets,
                      one_join_blocks, strong_closure)
from .detect import (ABSENT, K4, detect_biclique, detect_clique, detect_isk4,
                     detect_unique_chord_cycle, detect_wheel, is_t_clean)
from .families import prism, subdivide_all
from .generators import (glue_clique, glue_two_cut, long_rich_square, random_connected, random_graph,
                         random_two_connected, strongly_2bipartite)
from .graph import (Graph, GraphInputError, complete_bipartite, complete_graph, cycle_graph,
                    induced_subgraph, is_connected, line_graph, subdivide_edge)
from .prime import (ALL_GRAPHS, ISK4_WHEEL_FREE, UNIQUE_CHORD_FREE, ClassMembership,
                    DecompositionTrace, prime_decompose)
from .recognize import (CLIQUE, COMPLETE_BIPARTITE, HEAWOOD_EMBEDDED, HOLE_7,
                        LINE_OF_CHORDLESS_SUBCUBIC, LONG_RICH_SQUARE, NONE, PETERSEN_EMBEDDED,
                        SERIES_PARALLEL, STRONGLY_2_BIPARTITE, ClassLabel, is_strongly_2bipartite,
                        recognize_basic_isk4, recognize_basic_unique_chord)
from .width import rankwidth, treewidth

# -- Ramsey numbers ---------------------------------------------------------------------


@dataclass(frozen=True)
class RamseyBound:
    t: int
    upper: int


def ramsey_upper(t: int) -> RamseyBound:
    """C(2t-2, t-1), an upper bound on R(t, t)."""
    if t < 2:
        raise GraphInputError("t must be at least 2")
    return RamseyBound(t, comb(2 * t - 2, t - 1))


def has_clique_or_stable(g: Graph, t: int) -> bool:
    return detect_clique(g, t).found or detect_clique(_complement(g), t).found


def _complement(g: Graph) -> Graph:
    full = g.full
    return Graph(g.n, tuple(full & ~a & ~(1 << v) for v, a in enumerate(g.adj)))


# -- samplers -----------------------------------------------------------------------------


def _graphs_on(n: int):
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [e for i, e in enumerate(pairs) if mask >> i & 1])


def ramsey_exact_check(t: int = 3) -> dict:
    """Exhaustive check that ramsey_upper(t) is exact: some graph one vertex smaller avoids both."""
    r = ramsey_upper(t).upper
    if r > 6:
        raise GraphInputError("exhaustive check only for t <= 3")
    all_big = all(has_clique_or_stable(g, t) for g in _graphs_on(r))
    avoider = next((g for g in _graphs_on(r - 1) if not has_clique_or_stable(g, t)), None)
    return {"t": t, "upper": r, "all_have": all_big,
            "avoider": None if avoider is None else avoider.edges()}


def sample_tw_at_least_2(rng: random.Random, nmax: int = 10) -> Graph:
    while True:
        g = random_graph(rng.randint(4, nmax), rng.uniform(0.25, 0.6), rng)
        if treewidth(g) >= 2:
            return g


def _random_clique(g: Graph, k: int, rng: random.Random) -> list[int] | None:
    cliques = [list(c) for c in combinations(g.vertices, k) if g.is_clique(sum(1 << v for v in c))]
    return rng.choice(cliques) if cliques else None


def _piece(rng: random.Random) -> Graph:
    kind = rng.randrange(4)
    if kind == 0:
        return complete_graph(rng.randint(3, 4))
    if kind == 1:
        return cycle_graph(rng.randint(4, 6))
    return random_connected(rng.randint(3, 6), rng.uniform(0.3, 0.8), rng)


def sample_clique_glued(rng: random.Random, nmax: int = 14) -> Graph:
    """Connected pieces glued along cliques of size 1-3 until a clique cutset exists."""
    while True:
        g = _piece(rng)
        for _ in range(rng.randint(1, 3)):
            h = _piece(rng)
            k = rng.randint(1, 3)
            c1, c2 = _random_clique(g, k, rng), _random_clique(h, k, rng)
            if c1 is None or c2 is None or g.n + h.n - k > nmax:
                continue
            g = glue_clique(g, h, k, rng, c1, c2)
        if g.n >= 4 and len(clique_cutset_atoms(g)) > 1:
            return g


def sample_two_cutset(rng: random.Random, nmax: int = 12) -> Graph:
    """2-connected pieces glued on an edge; no 1-cutset and at least one 2-cutset."""
    while True:
        a, b = rng.randint(3, 7), rng.randint(3, 7)
        if a + b - 2 > nmax:
            continue
        g1 = random_two_connected(a, rng, rng.randint(0, 3))
        g2 = random_two_connected(b, rng, rng.randint(0, 3))
        g, _ = glue_two_cut(g1, g2, rng.choice(g1.edges()), rng.choice(g2.edges()), rng.random() < 0.5)
        if is_connected(g) and not find_one_cutsets(g) and find_two_cutsets(g):
            return g


def sample_one_join(rng: random.Random, nmax: int = 11) -> tuple[Graph, object]:
    n1 = rng.randint(2, nmax - 2)
    n2 = rng.randint(2, nmax - n1)
    g1 = random_graph(n1, rng.uniform(0.2, 0.7), rng)
    g2 = random_graph(n2, rng.uniform(0.2, 0.7), rng)
    a = [v for v in g1.vertices if rng.random() < 0.5] or [rng.randrange(n1)]
    b = [v for v in g2.vertices if rng.random() < 0.5] or [rng.randrange(n2)]
    return compose_one_join(g1, g2, a, b)


def _isk4_piece(rng: random.Random) -> Graph:
    kind = rng.randrange(6)
    if kind == 0:
        return cycle_graph(rng.randint(4, 7))
    if kind == 1:
        return complete_bipartite(rng.randint(2, 3), 3)
    if kind == 2:
        return prism()
    if kind == 3:
        return long_rich_square([(rng.randint(2, 3), rng.randrange(2))])
    return random_two_connected(rng.randint(4, 7), rng, rng.randint(0, 2))


def _uc_piece(rng: random.Random) -> Graph:
    kind = rng.randrange(5)
    if kind == 0:
        return cycle_graph(rng.randint(4, 7))
    if kind == 1:
        return complete_graph(rng.randint(3, 4))
    if kind == 2:
        return complete_bipartite(rng.randint(2, 3), 3)
    return random_two_connected(rng.randint(4, 7), rng, rng.randint(0, 2))


def sample_class_two_cutset(rng: random.Random, f: ClassMembership, nmax: int = 12) -> Graph:
    """A member of f with a 2-cutset and no 1-cutset, by gluing class pieces on an edge."""
    piece = _isk4_piece if f is ISK4_WHEEL_FREE else _uc_piece
    while True:
        g1, g2 = piece(rng), piece(rng)
        if g1.n + g2.n - 2 > nmax:
            continue
        g, _ = glue_two_cut(g1, g2, rng.choice(g1.edges()), rng.choice(g2.edges()), rng.random() < 0.5)
        if not is_connected(g) or find_one_cutsets(g) or not find_two_cutsets(g):
            continue
        if f(g):
            return g


def sample_composite(rng: random.Random, f: ClassMembership, nmax: int = 14) -> Graph:
    """Pieces glued along cliques and edges (2-cuts), kept only when the result lies in f."""
    piece = {ISK4_WHEEL_FREE.name: _isk4_piece, UNIQUE_CHORD_FREE.name: _uc_piece}.get(f.name, _piece)
    while True:
        g = piece(rng)
        for _ in range(rng.randint(1, 3)):
            h = piece(rng)
            if rng.random() < 0.5:
                k = rng.randint(1, 2)
                c1, c2 = _random_clique(g, k, rng), _random_clique(h, k, rng)
                if c1 is None or c2 is None or g.n + h.n - k > nmax:
                    continue
                cand = glue_clique(g, h, k, rng, c1, c2)
            else:
                if g.n + h.n - 2 > nmax:
                    continue
                cand, _ = glue_two_cut(g, h, rng.choice(g.edges()), rng.choice(h.edges()), rng.random() < 0.5)
            if is_connected(cand) and f(cand):
                g = cand
        if g.n >= 5 and f(g):
            return g


def sample_no_join_with_cut(rng: random.Random, restricted: bool = False, nmax: int = 11) -> Graph:
    """No proper 1-join, plus a 1-cutset or a proper 2-cutset.

    ``restricted`` asks for a proper 2-cutset of a graph without 1-cutsets.
    """
    while True:
        if restricted:
            g = random_two_connected(rng.randint(6, nmax), rng, rng.randint(1, 4))
        else:
            g = random_connected(rng.randint(5, nmax), rng.uniform(0.2, 0.5), rng)
        if restricted and (find_one_cutsets(g) or not find_proper_two_cutsets(g)):
            continue
        if not (find_one_cutsets(g) or find_proper_two_cutsets(g)):
            continue
        if find_proper_one_join(g) is None:
            return g


def sample_free_of(rng: random.Random, t: int, nmax: int = 10) -> Graph:
    """Random graph with no K_t and no induced K_{t,t}."""
    while True:
        g = random_graph(rng.randint(3, nmax), rng.uniform(0.2, 0.6), rng)
        if not detect_clique(g, t).found and not detect_biclique(g, t).found:
            return g


# -- lemma suites ----------------------------------------------------------------------------


def _subdivision_tw(rng, budget):
    g = sample_tw_at_least_2(rng)
    k = treewidth(g, budget)
    bad = [e for e in g.edges() if treewidth(subdivide_edge(g, *e), budget) != k]
    return not bad, {"n": g.n, "tw": k, "bad_edges": bad}


def _clique_cutset_tw(rng, budget):
    g = sample_clique_glued(rng)
    atoms = clique_cutset_atoms(g, budget)
    widths = [treewidth(induced_subgraph(g, a)[0], budget) for a in atoms]
    k = treewidth(g, budget)
    return k == max(widths), {"n": g.n, "tw": k, "atom_tw": widths}


def _two_cutset_closure_tw(rng, budget):
    g = sample_two_cutset(rng)
    k = treewidth(g, budget)
    bad = []
    for f in find_two_cutsets(g):
        pair = tuple(sorted(f.cut))
        weak = max(treewidth(closure(g, pair, c).graph, budget) for c in f.components)
        strong = max(treewidth(strong_closure(g, pair, c).graph, budget) for c in f.components)
        if weak != k or strong != k:
            bad.append({"pair": list(pair), "cl": weak, "cl*": strong})
    return not bad, {"n": g.n, "tw": k, "bad": bad}


def _one_join_rw(rng, budget):
    g, j = sample_one_join(rng)
    (b1, _), (b2, _) = one_join_blocks(g, j)
    r, r1, r2 = rankwidth(g, budget), rankwidth(b1, budget), rankwidth(b2, budget)
    return r == max(r1, r2), {"n": g.n, "rw": r, "blocks": [r1, r2]}


def _line_graph_tw(rng, budget):
    while True:
        g = random_graph(rng.randint(3, 10), rng.uniform(0.15, 0.45), rng)
        if 1 <= g.m <= 16:
            break
    lg = line_graph(g)[0]
    lhs = treewidth(lg, budget)
    rhs = (max(treewidth(g, budget), 0) + 1) * g.max_degree - 1
    return lhs <= rhs, {"n": g.n, "m": g.m, "tw_line": lhs, "bound": rhs}


def _one_join_preservation(rng, budget, restricted=False):
    """Blocks at 1-cutsets and strong closures at proper 2-cutsets keep 'no proper 1-join'.

    ``restricted`` checks the strong closures only where g has no 1-cutset,
    the pair is non-adjacent and the component has at least two vertices.
    """
    g = sample_no_join_with_cut(rng, restricted)
    bad = []
    for piece in block_pieces(g):
        if len(piece) < g.n and find_proper_one_join(induced_subgraph(g, piece)[0], budget):
            bad.append({"kind": "block", "block": sorted(piece)})
    no_one_cutset = not find_one_cutsets(g)
    for f in find_proper_two_cutsets(g):
        pair = tuple(sorted(f.cut))
        for c in f.components:
            if restricted and (not no_one_cutset or g.has_edge(*pair) or len(c) < 2):
                continue
            if find_proper_one_join(strong_closure(g, pair, c).graph, budget):
                bad.append({"kind": "strong-closure", "pair": list(pair), "component": sorted(c),
                            "adjacent": g.has_edge(*pair), "one_cutset": not no_one_cutset})
    return not bad, {"n": g.n, "edges": g.edges(), "bad": bad}


def _safe(f: ClassMembership, either: bool = False):
    """cl*(C) stays in f for every 2-cutset and component; with ``either``, cl(C) may stand in."""
    def run(rng, budget):
        g = sample_class_two_cutset(rng, f)
        bad = []
        for fd in find_two_cutsets(g):
            pair = tuple(sorted(fd.cut))
            for c in fd.components:
                if not f(strong_closure(g, pair, c).graph, budget) and not (
                        either and f(closure(g, pair, c).graph, budget)):
                    bad.append({"pair": list(pair), "adjacent": g.has_edge(*pair), "component": sorted(c),
                                "closure_in_class": f(closure(g, pair, c).graph, budget)})
        return not bad, {"n": g.n, "edges": g.edges(), "bad": bad}
    return run


def _strongly_2bipartite_partite(rng, budget):
    g = strongly_2bipartite(rng.randint(4, 6), rng.randint(0, 3), rng)
    s = [v for v in g.vertices if g.degree(v) >= 3]
    bip = is_strongly_2bipartite(g)
    ok = bip is not None and sorted(bip[1]) == s and g.is_stable(sum(1 << v for v in s))
    return ok, {"n": g.n, "S": s}


def _prime_base(f: ClassMembership):
    def run(rng, budget):
        g = sample_composite(rng, f)
        trace = prime_decompose(g, f, budget)
        if not trace.complete:
            raise BudgetExhausted("prime decomposition")
        widths = [s.tw if s.tw is not None else treewidth(s.graph, budget) for s in trace.steps]
        return len(set(widths)) == 1, {"n": g.n, "stepwise": widths}
    return run


def _ramsey_corollary(rng, budget):
    t = 3
    g = sample_free_of(rng, t)
    tw, rw = treewidth(g, budget), rankwidth(g, budget)
    bound = 3 * (ramsey_upper(t).upper - 1) * 2 ** (rw + 1) - 1
    return tw <= bound, {"n": g.n, "tw": tw, "rw": rw, "bound": bound}


LEMMAS: dict[str, Callable] = {
    "subdivision-tw": _subdivision_tw,
    "clique-cutset-tw": _clique_cutset_tw,
    "two-cutset-closure-tw": _two_cutset_closure_tw,
    "one-join-rw": _one_join_rw,
    "line-graph-tw": _line_graph_tw,
    "one-join-preservation": _one_join_preservation,
    "one-join-preservation-restricted": lambda rng, budget: _one_join_preservation(rng, budget, True),
    "isk4-2cutset-safe": _safe(ISK4_WHEEL_FREE),
    "isk4-2cutset-safe-either": _safe(ISK4_WHEEL_FREE, either=True),
    "unique-chord-2cutset-safe": _safe(UNIQUE_CHORD_FREE),
    "strongly-2bipartite-partite": _strongly_2bipartite_partite,
    "prime-base": _prime_base(ALL_GRAPHS),
    "prime-base-isk4": _prime_base(ISK4_WHEEL_FREE),
    "prime-base-unique-chord": _prime_base(UNIQUE_CHORD_FREE),
    "ramsey-corollary": _ramsey_corollary,
}


@dataclass
class SuiteReport:
    name: str
    trials: int
    seed: int
    passed: int = 0
    failures: list[dict] = field(default_factory=list)
    unknown: int = 0

    @property
    def ok(self) -> bool:
        return self.passed == self.trials

    def to_json(self) -> dict:
        return {"lemma": self.name, "trials": self.trials, "seed": self.seed, "passed": self.passed,
                "unknown": self.unknown, "failures": self.failures[:20], "failed": len(self.failures)}


def trial_rng(name: str, seed: int, i: int) -> random.Random:
    return random.Random(f"{name}/{seed}/{i}")


def verify_lemma(name: str, trials: int = 100, seed: int = 0, budget: Budget | None = None) -> SuiteReport:
    try:
        run = LEMMAS[name]
    except KeyError:
        raise GraphInputError(f"unknown lemma {name!r}; known: {', '.join(LEMMAS)}") from None
    if trials < 1:
        raise GraphInputError("trials must be positive")
    rep = SuiteReport(name, trials, seed)
    for i in range(trials):
        try:
            ok, detail = run(trial_rng(name, seed, i), budget)
        except BudgetExhausted as exc:
            rep.unknown += 1
            rep.failures.append({"trial": i, "budget": str(exc)})
            continue
        if ok:
            rep.passed += 1
        else:
            rep.failures.append({"trial": i, **detail})
    return rep


# -- pipelines ---------------------------------------------------------------------------

OK = "ok"
BOUND_VIOLATED = "bound-violated"
EQUALITY_VIOLATED = "equality-violated"
STRUCTURE_VIOLATION = "structure-theorem-violation"
UNKNOWN = "unknown"

ISK4_SYMBOLIC = "3*f(t) + 2"


def unique_chord_symbolic(t: int) -> str:
    r = ramsey_upper(t).upper if t >= 2 else 1
    return f"3*({r} - 1)*2^(2^(s+1) + 2) - 1 with s = max(f(t), 14)"


@dataclass
class BoundReport:
    cls: str
    t: int
    label: ClassLabel | None
    tw_base: int | None
    concrete_bound: int | None
    symbolic_bound: str
    tw_input: int | None
    verdict: str
    tw_reduced: int | None = None
    rw_chain: list[int] = field(default_factory=list)
    trace: DecompositionTrace | None = field(default=None, repr=False)
    note: str | None = None

    def to_json(self) -> dict:
        return {"class": self.cls, "t": self.t,
                "label": None if self.label is None else self.label.to_json(),
                "tw_base": self.tw_base, "concrete_bound": self.concrete_bound,
                "symbolic_bound": self.symbolic_bound, "tw_input": self.tw_input,
                "tw_reduced": self.tw_reduced, "rw_chain": self.rw_chain, "verdict": self.verdict,
                "base_n": None if self.trace is None else self.trace.base.n, "note": self.note}


ISK4_BOUNDS = {SERIES_PARALLEL: lambda t, label: 2, COMPLETE_BIPARTITE: lambda t, label: t,
               LONG_RICH_SQUARE: lambda t, label: 5}
UNIQUE_CHORD_BOUNDS = {CLIQUE: lambda t, label: t, HOLE_7: lambda t, label: 3,
                       PETERSEN_EMBEDDED: lambda t, label: 10, HEAWOOD_EMBEDDED: lambda t, label: 14}


def _line_bound(label: ClassLabel) -> int:
    root = label.root
    return (max(treewidth(root), 0) + 1) * root.max_degree - 1


def _require_clean(g: Graph, t: int, budget: Budget | None) -> None:
    if is_t_clean(g, t, budget).clean is False:
        raise GraphInputError(f"input is not {t}-clean")


def _verdict(tw_pre: int | None, tw_base: int | None, bound: int | None, label: ClassLabel) -> str:
    if label.name == NONE:
        return STRUCTURE_VIOLATION
    if tw_pre is None or tw_base is None:
        return UNKNOWN
    if tw_pre != tw_base:
        return EQUALITY_VIOLATED
    if bound is not None and tw_base > bound:
        return BOUND_VIOLATED
    return OK


def pipeline_isk4(g: Graph, t: int = 3, budget: Budget | None = None) -> BoundReport:
    if g.n == 0 or not is_connected(g):
        raise GraphInputError("expected a connected graph")
    if detect_isk4(g, budget).status != ABSENT or detect_wheel(g, budget).status != ABSENT:
        raise GraphInputError("input is not (ISK4, wheel)-free")
    _require_clean(g, t, budget)
    trace = prime_decompose(g, ISK4_WHEEL_FREE, budget)
    if not trace.complete:
        return BoundReport("isk4", t, None, None, None, ISK4_SYMBOLIC, None, UNKNOWN, trace=trace, note=trace.note)
    base = trace.base
    label = recognize_basic_isk4(base, budget)
    if label.name == LINE_OF_CHORDLESS_SUBCUBIC:
        bound = _line_bound(label)
    elif label.name in ISK4_BOUNDS:
        bound = ISK4_BOUNDS[label.name](t, label)
    else:
        bound = None
    tw_base, tw_in = trace.steps[-1].tw, trace.steps[0].tw
    return BoundReport("isk4", t, label, tw_base, bound, ISK4_SYMBOLIC, tw_in,
                       _verdict(tw_in, tw_base, bound, label), tw_reduced=tw_in, trace=trace)


def reduce_one_joins(g: Graph, budget: Budget | None = None) -> tuple[Graph, list[int], list[dict]]:
    """Replace g by the larger-rankwidth block of a proper 1-join until none is left.

    Ties keep the X-side block.  Returns the final graph, the rankwidth of
    each graph in the chain, and the joins used.
    """
    chain = [rankwidth(g, budget)]
    joins = []
    cur = g
    while True:
        j = find_proper_one_join(cur, budget)
        if j is None:
            break
        (bx, _), (by, _) = one_join_blocks(cur, j)
        rx, ry = rankwidth(bx, budget), rankwidth(by, budget)
        joins.append(j.to_json())
        cur = bx if rx >= ry else by
        chain.append(max(rx, ry))
    return cur, chain, joins


def pipeline_unique_chord(g: Graph, t: int = 3, budget: Budget | None = None,
                          one_cutsets_only: bool = False) -> BoundReport:
    if g.n == 0 or not is_connected(g):
        raise GraphInputError("expected a connected graph")
    if detect_unique_chord_cycle(g, budget).status != ABSENT:
        raise GraphInputError("input contains a cycle with a unique chord")
    _require_clean(g, t, budget)
    symbolic = unique_chord_symbolic(t)
    reduced, chain, joins = reduce_one_joins(g, budget)
    assert chain[0] <= chain[-1], "rankwidth chain decreased"
    trace = prime_decompose(reduced, UNIQUE_CHORD_FREE, budget, one_cutsets_only=one_cutsets_only)
    if not trace.complete:
        return BoundReport("unique-chord", t, None, None, None, symbolic, None, UNKNOWN,
                           rw_chain=chain, trace=trace, note=trace.note)
    label = recognize_basic_unique_chord(trace.base, budget)
    bound = UNIQUE_CHORD_BOUNDS[label.name](t, label) if label.name in UNIQUE_CHORD_BOUNDS else None
    tw_reduced, tw_base = trace.steps[0].tw, trace.steps[-1].tw
    tw_in = tw_reduced if reduced is g else treewidth(g, budget)
    note = None
    if label.name == STRONGLY_2_BIPARTITE:
        note = "bound f(t) is not explicit; only tw(reduced) = tw(base) is checked"
    if joins:
        note = (note + "; " if note else "") + f"{len(joins)} proper 1-join reductions"
    return BoundReport("unique-chord", t, label, tw_base, bound, symbolic, tw_in,
                       _verdict(tw_reduced, tw_base, bound, label), tw_reduced=tw_reduced,
                       rw_chain=chain, trace=trace, note=note)


PIPELINES = {"isk4": pipeline_isk4, "unique-chord": pipeline_unique_chord}


def curated_corpus(cls: str) -> list[tuple[str, Graph]]:
    """Basic-class generator outputs plus glued composites in the class, all with n <= 14."""
    rng = random.Random(f"corpus/{cls}")
    out: list[tuple[str, Graph]] = []
    if cls == "isk4":
        out += [(f"C{k}", cycle_graph(k)) for k in range(4, 9)]
        out += [("K33", complete_bipartite(3, 3)), ("K23", complete_bipartite(2, 3)), ("prism", prism())]
        out += [("lrs-1", long_rich_square([(2, 0)])), ("lrs-2", long_rich_square([(2, 0), (3, 1)])),
                ("lrs-3", long_rich_square([(3, 0), (2, 0), (2, 1)]))]
        out += [("line-K23-sub", line_graph(subdivide_all(complete_bipartite(2, 3), 1))[0])]
        f = ISK4_WHEEL_FREE
    else:
        from .families import HEAWOOD, PETERSEN
        out += [(f"C{k}", cycle_graph(k)) for k in range(4, 10)]
        out += [("K3", complete_graph(3)), ("petersen", PETERSEN), ("heawood", HEAWOOD),
                ("sub-K4", subdivide_all(K4, 1)), ("sub-K33", subdivide_all(complete_bipartite(3, 3), 1))]
        out += [(f"s2b-{i}", strongly_2bipartite(4, i, rng)) for i in range(2)]
        f = UNIQUE_CHORD_FREE
    for i in range(12):
        out.append((f"composite-{i}", sample_composite(rng, f)))
    return [(name, g) for name, g in out if g.n <= 14 and f(g)]


def corpus_t(g: Graph, t: int = 3) -> int:
    """Smallest t' >= t for which g is t'-clean; triangle-containing members need t' >= 4."""
    while is_t_clean(g, t).clean is False:
        t += 1
    return t
