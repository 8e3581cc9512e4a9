from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from oracles import has_proper_one_join, to_nx
from twdecomp.cutsets import (PROPER_ONE_JOIN, CutsetFinding, is_one_join, block_pieces, clique_cutset_atoms, closure,
                              compose_one_join, find_clique_cutset, find_one_cutsets, find_proper_one_join,
                              find_proper_two_cutsets, find_two_cutsets, one_join_blocks, strong_closure)
from twdecomp.families import PETERSEN
from twdecomp.graph import (Graph, GraphInputError, add_vertex, complete_bipartite, complete_graph, cycle_graph,
                            induced_subgraph, path_graph, remove_edge)
from twdecomp.width import rankwidth, treewidth

BOWTIE = Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
DIAMOND = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])
SIX = Graph.from_edges(6, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)])


def iso(g, h):
    return nx.is_isomorphic(to_nx(g), to_nx(h))


def test_one_cutset_examples():
    assert find_one_cutsets(BOWTIE) == [2]
    assert find_one_cutsets(cycle_graph(6)) == []
    assert find_one_cutsets(path_graph(4)) == [1, 2]
    with pytest.raises(GraphInputError):
        find_one_cutsets(Graph.empty(2))


@given(graphs(min_n=1, connected=True))
def test_one_cutsets_are_articulation_points(g):
    assert find_one_cutsets(g) == sorted(nx.articulation_points(to_nx(g)))


def test_clique_cutset_examples():
    f = find_clique_cutset(DIAMOND)
    assert f.cut == frozenset({1, 2})
    f.check(DIAMOND)
    assert find_clique_cutset(cycle_graph(5)) is None
    assert find_clique_cutset(complete_graph(4)) is None
    assert find_clique_cutset(PETERSEN) is None


@given(graphs(min_n=2, connected=True))
def test_clique_cutset_exists_iff_brute_force(g):
    h = to_nx(g)
    brute = any(all(h.has_edge(a, b) for a, b in combinations(s, 2))
                and not nx.is_connected(h.subgraph(set(h) - set(s)))
                for r in range(0, g.n - 1) for s in combinations(h, r))
    f = find_clique_cutset(g)
    assert (f is not None) == brute
    if f is not None:
        f.check(g)


@given(graphs(min_n=2, connected=True))
def test_atoms_cover_graph_and_keep_width(g):
    atoms = clique_cutset_atoms(g)
    assert set().union(*atoms) == set(g.vertices)
    for a in atoms:
        assert find_clique_cutset(induced_subgraph(g, a)[0]) is None
    assert treewidth(g) == max(treewidth(induced_subgraph(g, a)[0]) for a in atoms)


@given(graphs(min_n=1, connected=True))
def test_blocks_match_networkx(g):
    ours = {frozenset(b) for b in block_pieces(g)}
    theirs = {frozenset(b) for b in nx.biconnected_components(to_nx(g))} if g.n > 1 else {frozenset({0})}
    assert ours == theirs


def test_proper_two_cutset_examples():
    c6 = find_proper_two_cutsets(cycle_graph(6))
    assert sorted(tuple(sorted(f.cut)) for f in c6) == [(0, 3), (1, 4), (2, 5)]
    for f in c6:
        f.check(cycle_graph(6))
    assert find_proper_two_cutsets(cycle_graph(5)) == []
    assert find_proper_two_cutsets(complete_graph(4)) == []


@given(graphs(min_n=3, connected=True))
def test_two_cutsets_match_brute_force(g):
    h = to_nx(g)
    brute = {frozenset(p) for p in combinations(h, 2) if not nx.is_connected(h.subgraph(set(h) - set(p)))}
    found = find_two_cutsets(g)
    assert {f.cut for f in found} == brute
    for f in found + find_proper_two_cutsets(g):
        f.check(g)


def test_closure_examples():
    c6 = cycle_graph(6)
    weak, strong = closure(c6, (0, 3), {1, 2}), strong_closure(c6, (0, 3), {1, 2})
    assert iso(weak.graph, cycle_graph(4)) and iso(strong.graph, cycle_graph(5))
    assert strong.labels[-1] is None and strong.graph.degree(strong.graph.n - 1) == 2
    c8 = cycle_graph(8)
    assert iso(closure(c8, (0, 4), {1, 2, 3}).graph, cycle_graph(5))
    assert iso(strong_closure(c8, (0, 4), {1, 2, 3}).graph, cycle_graph(6))
    k4e = remove_edge(complete_graph(4), 0, 1)
    with pytest.raises(GraphInputError):
        closure(k4e, (0, 1), {2})
    with pytest.raises(GraphInputError):
        closure(c6, (0, 3), {1})


def join_finding(x, y, a, b):
    return CutsetFinding(PROPER_ONE_JOIN, frozenset(), (frozenset(x), frozenset(y)),
                         join=(frozenset(a), frozenset(b)))


def test_proper_one_join_examples():
    k33 = complete_bipartite(3, 3)
    assert is_one_join(k33, {0, 1, 2}, {3, 4, 5}, {0, 1, 2}, {3, 4, 5}, proper=True)
    find_proper_one_join(k33).check(k33)
    assert is_one_join(SIX, {0, 1, 2}, {3, 4, 5}, {1, 2}, {3, 4}, proper=True)
    find_proper_one_join(SIX).check(SIX)
    assert find_proper_one_join(cycle_graph(5)) is None


def test_one_join_blocks_of_named_joins():
    k33 = complete_bipartite(3, 3)
    (b1, old), (b2, _) = one_join_blocks(k33, join_finding({0, 1, 2}, {3, 4, 5}, {0, 1, 2}, {3, 4, 5}))
    claw = complete_bipartite(1, 3)
    assert iso(b1, claw) and iso(b2, claw) and 3 in old
    j = join_finding({0, 1, 2}, {3, 4, 5}, {1, 2}, {3, 4})
    (b1, _), (b2, _) = one_join_blocks(SIX, j)
    assert iso(b1, cycle_graph(4)) and iso(b2, cycle_graph(4))
    assert rankwidth(SIX) == max(rankwidth(b1), rankwidth(b2))
    with pytest.raises(GraphInputError):
        one_join_blocks(cycle_graph(6), j)


@settings(max_examples=40)
@given(graphs(min_n=4, max_n=8))
def test_proper_one_join_matches_oracle(g):
    j = find_proper_one_join(g)
    assert (j is not None) == has_proper_one_join(to_nx(g))
    if j is not None:
        j.check(g)


@given(graphs(min_n=2, max_n=5), graphs(min_n=2, max_n=5), st.data())
def test_compose_then_decompose(g1, g2, data):
    a = data.draw(st.lists(st.sampled_from(list(g1.vertices)), min_size=1, unique=True))
    b = data.draw(st.lists(st.sampled_from(list(g2.vertices)), min_size=1, unique=True))
    g, j = compose_one_join(g1, g2, a, b)
    (x, _), (y, _) = one_join_blocks(g, j)
    # each block is the input plus one marker vertex complete to the attachment set
    assert iso(x, add_vertex(g1, a))
    assert iso(y, add_vertex(g2, b))


def test_findings_serialize_with_labels():
    f = find_clique_cutset(DIAMOND)
    data = f.to_json(["a", "b", "c", "d"])
    assert sorted(data["cut"]) == ["b", "c"]
