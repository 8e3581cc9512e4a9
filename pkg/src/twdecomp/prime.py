"""Prime decompositions: alternate clique-cutset atoms and 2-cutset closures.

Odd steps keep a clique-cutset-free induced subgraph of maximum treewidth
(chosen among the atoms of a clique-cutset decomposition); even steps keep a
closure or strong closure at a proper 2-cutset, restricted to a class F, of
maximum treewidth.  The last graph has neither cutset kind.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .budget import Budget, BudgetExhausted
from .codecs import write_graph6
from .cutsets import (block_pieces, clique_cutset_atoms, closure, find_clique_cutset,
                      find_one_cutsets, find_proper_two_cutsets, strong_closure)
from .detect import detect_isk4, detect_unique_chord_cycle, detect_wheel
from .graph import Graph, GraphInputError, induced_subgraph, is_connected
from .width import treewidth

INITIAL = "initial"
ATOM = "clique-cutset-atom"
BLOCK = "one-cutset-block"
CLOSURE = "two-cutset-closure"
STRONG_CLOSURE = "two-cutset-strong-closure"


class NotCutsetSafe(Exception):
    """No closure at an even step belongs to the class."""

    def __init__(self, message: str, trace: "DecompositionTrace"):
        super().__init__(message)
        self.trace = trace


class ClassViolation(Exception):
    """A trace graph fell outside the class it was supposed to stay in."""


def _decided(det) -> bool:
    if not det.exhaustive:
        raise BudgetExhausted(det.witness.kind if det.witness else "class detector")
    return det.found


def _isk4_wheel_free(g: Graph, budget: Budget | None) -> bool:
    return not _decided(detect_isk4(g, budget)) and not _decided(detect_wheel(g, budget))


def _unique_chord_free(g: Graph, budget: Budget | None) -> bool:
    return not _decided(detect_unique_chord_cycle(g, budget))


@dataclass(frozen=True)
class ClassMembership:
    """A hereditary class given by a membership test; undecided tests raise BudgetExhausted."""

    name: str
    test: Callable[[Graph, Budget | None], bool] = field(compare=False)

    def __call__(self, g: Graph, budget: Budget | None = None) -> bool:
        return self.test(g, budget)


ISK4_WHEEL_FREE = ClassMembership("isk4-wheel-free", _isk4_wheel_free)
UNIQUE_CHORD_FREE = ClassMembership("unique-chord-free", _unique_chord_free)
ALL_GRAPHS = ClassMembership("all-graphs", lambda g, budget: True)
CLASSES = {c.name: c for c in (ISK4_WHEEL_FREE, UNIQUE_CHORD_FREE, ALL_GRAPHS)}


def graph_key(g: Graph) -> tuple:
    """Total order used for tie-breaks: size first, then the graph6 string."""
    return (g.n, g.m, write_graph6(g))


def is_prime(g: Graph, budget: Budget | None = None) -> bool:
    if g.n == 0 or not is_connected(g):
        raise GraphInputError("expected a connected graph")
    return find_clique_cutset(g, budget) is None and not find_proper_two_cutsets(g)


def _has_one_cutset_or_proper_two_cutset(g: Graph) -> bool:
    return bool(find_one_cutsets(g)) or bool(find_proper_two_cutsets(g))


def clique_cutset_atom_of_max_tw(g: Graph, budget: Budget | None = None,
                                 one_cutsets_only: bool = False) -> tuple[Graph, tuple[int, ...]]:
    """A clique-cutset-free induced subgraph of maximum treewidth and its vertex labels.

    Ties go to the smaller ``graph_key`` and then to the smaller vertex tuple.
    With ``one_cutsets_only`` the candidates are the blocks instead.
    """
    if g.n == 0 or not is_connected(g):
        raise GraphInputError("expected a connected graph")
    pieces = block_pieces(g) if one_cutsets_only else clique_cutset_atoms(g, budget)
    best = None
    for piece in pieces:
        h, old = induced_subgraph(g, piece)
        key = (-treewidth(h, budget), graph_key(h), old)
        if best is None or key < best[0]:
            best = (key, h, old)
    return best[1], best[2]


@dataclass
class TraceStep:
    rule: str
    graph: Graph
    labels: tuple  # original vertex per step vertex; None marks a subdivision vertex
    cutset: tuple | None = None
    component: tuple | None = None
    tw: int | None = None

    def to_json(self) -> dict:
        return {"rule": self.rule, "n": self.graph.n, "graph6": write_graph6(self.graph).decode(),
                "labels": list(self.labels), "cutset": None if self.cutset is None else list(self.cutset),
                "component": None if self.component is None else list(self.component), "tw": self.tw}


@dataclass
class DecompositionTrace:
    cls: str
    steps: list[TraceStep]
    one_cutsets_only: bool = False
    complete: bool = True
    note: str | None = None

    @property
    def base(self) -> Graph:
        return self.steps[-1].graph

    @property
    def parity(self) -> list[dict]:
        """For each step i >= 1: its parity and whether it removed the cutset kind that parity targets."""
        out = []
        for i, step in enumerate(self.steps[1:], 1):
            prev = self.steps[i - 1].graph
            out.append({"step": i, "odd": i % 2 == 1, "rule": step.rule,
                        "changed": step.graph != prev or step.rule in (CLOSURE, STRONG_CLOSURE)})
        return out

    def to_json(self) -> dict:
        return {"class": self.cls, "one_cutsets_only": self.one_cutsets_only, "complete": self.complete,
                "note": self.note, "length": len(self.steps), "parity": self.parity,
                "steps": [s.to_json() for s in self.steps]}


def _closure_choice(g: Graph, labels: tuple, f: ClassMembership, budget: Budget | None):
    """Choose among the closures at the first proper 2-cutset of g.

    Members of F with maximum treewidth win; among those strong closures,
    then more vertices, then the smaller ``graph_key``.
    """
    finding = find_proper_two_cutsets(g)[0]
    pair = tuple(sorted(finding.cut))
    best = None
    for comp in finding.components:
        for make, rule in ((strong_closure, STRONG_CLOSURE), (closure, CLOSURE)):
            cl = make(g, pair, comp)
            if not f(cl.graph, budget):
                continue
            w = treewidth(cl.graph, budget)
            key = (-w, rule != STRONG_CLOSURE, -cl.graph.n, graph_key(cl.graph), sorted(comp))
            if best is None or key < best[0]:
                new_labels = tuple(None if x is None else labels[x] for x in cl.labels)
                best = (key, TraceStep(rule, cl.graph, new_labels, tuple(labels[x] for x in pair),
                                       tuple(labels[x] for x in sorted(comp)), w))
    return None if best is None else best[1]


def prime_decompose(g: Graph, f: ClassMembership = ALL_GRAPHS, budget: Budget | None = None,
                    one_cutsets_only: bool = False, check_membership: bool = True) -> DecompositionTrace:
    """Build the alternating sequence G_0, G_1, ... ending at a prime graph.

    ``one_cutsets_only`` makes odd steps split on 1-cutsets only, and the
    sequence then stops once no 1-cutset and no proper 2-cutset remains.
    Budget exhaustion returns the partial trace with ``complete=False``.
    Raises NotCutsetSafe when an even step has no closure in F.
    """
    if g.n == 0 or not is_connected(g):
        raise GraphInputError("expected a connected graph")
    trace = DecompositionTrace(f.name, [TraceStep(INITIAL, g, tuple(g.vertices))], one_cutsets_only)
    try:
        if check_membership and f is not ALL_GRAPHS and not f(g, budget):
            raise GraphInputError(f"input is not in class {f.name}")
        trace.steps[0].tw = treewidth(g, budget)
        i = 1
        while True:
            cur = trace.steps[-1]
            h = cur.graph
            done = not _has_one_cutset_or_proper_two_cutset(h) if one_cutsets_only else is_prime(h, budget)
            if done:
                break
            if i % 2 == 1:
                sub, old = clique_cutset_atom_of_max_tw(h, budget, one_cutsets_only)
                labels = tuple(cur.labels[x] for x in old)
                trace.steps.append(TraceStep(BLOCK if one_cutsets_only else ATOM, sub, labels,
                                             tw=treewidth(sub, budget)))
            else:
                step = _closure_choice(h, cur.labels, f, budget)
                if step is None:
                    raise NotCutsetSafe(f"no closure of step {i - 1} lies in {f.name}", trace)
                trace.steps.append(step)
            if check_membership and f is not ALL_GRAPHS and not f(trace.steps[-1].graph, budget):
                raise ClassViolation(f"step {i} left class {f.name}")
            assert is_connected(trace.steps[-1].graph)
            assert len(trace.steps) - 1 <= 2 * g.n, "trace longer than 2n"
            i += 1
    except BudgetExhausted as exc:
        trace.complete = False
        trace.note = str(exc)
    return trace


@dataclass(frozen=True)
class PrimeBaseReport:
    tw_input: int
    tw_base: int
    length: int
    stepwise: tuple[int, ...]
    trace: DecompositionTrace = field(compare=False, repr=False)

    @property
    def holds(self) -> bool:
        return self.tw_input == self.tw_base and all(w == self.tw_input for w in self.stepwise)

    def to_json(self) -> dict:
        return {"tw_input": self.tw_input, "tw_base": self.tw_base, "length": self.length,
                "stepwise": list(self.stepwise), "holds": self.holds}


def verify_prime_base_theorem(g: Graph, f: ClassMembership = ALL_GRAPHS, budget: Budget | None = None,
                              one_cutsets_only: bool = False) -> PrimeBaseReport:
    trace = prime_decompose(g, f, budget, one_cutsets_only)
    if not trace.complete:
        raise BudgetExhausted("prime decomposition")
    widths = tuple(s.tw if s.tw is not None else treewidth(s.graph, budget) for s in trace.steps)
    return PrimeBaseReport(widths[0], widths[-1], len(trace.steps), widths, trace)
